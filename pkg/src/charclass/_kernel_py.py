"""Pure-Python reduction kernel (fallback for the compiled ``_kernel``).

Polynomials here are raw ``{exponent tuple: coeff}`` dicts.  Basis entries
are ``(lead, tail)`` pairs of a monic polynomial: ``lead`` is the leading
exponent and ``tail`` the list of remaining ``(exp, coeff)`` terms.
``p == 0`` selects rational arithmetic, otherwise arithmetic mod ``p``.
"""

from heapq import heapify, heappop, heappush

IMPLEMENTATION = "python"


class StepLimit(Exception):
    """Raised when a reduction exceeds its step allowance."""


def reduce(f, basis, neg_key, p, full=True, limit=-1, quot=None):
    """Reduce ``f`` modulo ``basis``; returns ``(remainder, steps)``.

    With ``full=False`` only the leading term is reduced (top reduction).
    When ``quot`` is a list, each step appends ``(basis index, shift, coeff)``.
    """
    f = dict(f)
    heap = [(neg_key(e), e) for e in f]
    heapify(heap)
    rem = {}
    steps = 0
    while heap:
        e = heappop(heap)[1]
        c = f.pop(e, None)
        if c is None:
            continue
        idx = 0
        for lead, tail in basis:
            for a, b in zip(e, lead):
                if a < b:
                    break
            else:
                break
            idx += 1
        else:
            rem[e] = c
            if not full:
                rem.update(f)
                break
            continue
        steps += 1
        if steps == limit:
            raise StepLimit(steps)
        shift = tuple([a - b for a, b in zip(e, lead)])
        if quot is not None:
            quot.append((idx, shift, c))
        for ge, gc in tail:
            m = tuple([a + b for a, b in zip(ge, shift)])
            old = f.get(m)
            if old is None:
                v = -c * gc
                if p:
                    v %= p
                f[m] = v
                heappush(heap, (neg_key(m), m))
            else:
                v = old - c * gc
                if p:
                    v %= p
                if v:
                    f[m] = v
                else:
                    del f[m]
    return rem, steps


def spoly(lead_f, tail_f, lead_g, tail_g, p):
    """S-polynomial of two monic polynomials given in (lead, tail) form."""
    lcm = tuple([a if a > b else b for a, b in zip(lead_f, lead_g)])
    sf = tuple([a - b for a, b in zip(lcm, lead_f)])
    sg = tuple([a - b for a, b in zip(lcm, lead_g)])
    out = {}
    for e, c in tail_f:
        out[tuple([a + b for a, b in zip(e, sf)])] = c
    for e, c in tail_g:
        m = tuple([a + b for a, b in zip(e, sg)])
        v = out.get(m, 0) - c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def divides(a, b):
    """True when monomial ``a`` divides monomial ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True
