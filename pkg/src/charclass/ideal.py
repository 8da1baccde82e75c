"""Ideals: quotients, saturation, dimension, Hilbert series and multidegrees."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .errors import GenericityError, PreconditionError, UsageError
from .groebner import GroebnerBasis, eliminate, groebner_basis, normal_form
from .ring import MonomialOrder, Polynomial, VarContext, random_form

__all__ = [
    "Ideal", "MultiDegree", "HilbertSeries", "intersect", "ideal_quotient",
    "quotient_element", "saturate", "saturate_element",
    "saturate_variable", "saturate_irrelevant",
    "krull_dim", "leading_ideal", "hilbert_series", "multidegree",
    "bidegrees_by_sections",
]


class Ideal:
    """Finitely generated ideal with a per-order Gröbner basis cache."""

    def __init__(self, gens, ctx: VarContext | None = None):
        gens = [g for g in gens]
        if ctx is None:
            if not gens:
                raise UsageError("an empty generator list needs an explicit context")
            ctx = gens[0].ctx
        for g in gens:
            if g.ctx.names != ctx.names or g.ctx.field != ctx.field:
                raise UsageError("generators live in different contexts")
        self.ctx = ctx
        self.gens = tuple(g for g in gens if not g.is_zero())
        self._gb = {}

    @classmethod
    def unit(cls, ctx):
        return cls([ctx.one()], ctx)

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ctx.grevlex()
        gb = self._gb.get(order)
        if gb is None:
            if not self.gens:
                gb = GroebnerBasis((), order, self.ctx, {})
            else:
                gb = groebner_basis(self.gens, order)
            self._gb[order] = gb
        return gb

    def reduced(self) -> "Ideal":
        """Same ideal, generated by its reduced grevlex basis."""
        out = Ideal(self.gb().generators, self.ctx)
        out._gb[self.ctx.grevlex()] = self.gb()
        return out

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not self.gens:
            return False
        return normal_form(f, self.gb()).is_zero()

    def __contains__(self, f):
        return self.contains(f)

    def is_subset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    __le__ = is_subset

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return (self.ctx.names == other.ctx.names
                and self.gb().generators == other.gb().generators)

    def __hash__(self):
        return hash((self.ctx.names, self.gb().generators))

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.gens + other.gens, self.ctx)
        return Ideal(self.gens + tuple(other), self.ctx)

    def __mul__(self, other: "Ideal"):
        return Ideal([f * g for f in self.gens for g in other.gens], self.ctx)

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and self.gb().is_unit

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gb().generators)

    def is_bihomogeneous(self) -> bool:
        return all(g.is_bihomogeneous() for g in self.gens)

    def map_to(self, ctx: VarContext, rename=None) -> "Ideal":
        return Ideal([g.map_to(ctx, rename) for g in self.gens], ctx)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"


def _fresh(ctx, stem="t"):
    name = "_" + stem
    while name in ctx.names:
        name += "_"
    return name


# ---------------------------------------------------------------------------
# intersection, quotient, saturation


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t·I + (1 - t)·J (t has weight zero)."""
    if I.is_zero or J.is_zero:
        return Ideal([], I.ctx)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    ctx = I.ctx
    t = _fresh(ctx)
    big = ctx.extend(front=[t])
    tv = big.gen(t)
    gens = [tv * g.map_to(big) for g in I.gens]
    gens += [(1 - tv) * g.map_to(big) for g in J.gens]
    kept = eliminate(gens, [t])
    return Ideal([g.map_to(ctx) for g in kept], ctx).reduced()


def _variable_index(g: Polynomial):
    if len(g.terms) != 1:
        return None
    (e, _), = g.terms.items()
    if sum(e) == 1:
        return e.index(1)
    return None


def quotient_element(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g)."""
    ctx = I.ctx
    if g.is_zero() or I.contains(g):
        return Ideal.unit(ctx)
    if I.is_zero:
        return Ideal([], ctx)
    v = _variable_index(g)
    if v is not None and I.is_homogeneous():
        # grevlex with v last: (I : v) is generated by the basis divided by v where possible
        gb = I.gb(MonomialOrder.grevlex(ctx.nvars, last=v))
        out = []
        for f in gb.generators:
            if all(e[v] for e in f.terms):
                out.append(Polynomial(ctx, {e[:v] + (e[v] - 1,) + e[v + 1:]: c for e, c in f.terms.items()}))
            else:
                out.append(f)
        return Ideal(out, ctx).reduced()
    inter = intersect(I, Ideal([g], ctx))
    return Ideal([h.div_exact(g) for h in inter.gens], ctx).reduced()


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of (I : g) over the generators g of J."""
    if I.ctx.names != J.ctx.names:
        raise UsageError("ideals live in different contexts")
    if J.is_zero:
        return Ideal.unit(I.ctx)
    result = None
    for g in J.gens:
        q = quotient_element(I, g)
        if result is None:
            result = q
        elif result.is_subset(q):
            continue
        elif q.is_subset(result):
            result = q
        else:
            result = intersect(result, q)
    return result


def saturate_element(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g^∞) by eliminating t from I + (1 - t·g).

    Leaves the graded world in the intermediate step; ``saturate`` is the
    graded route and this one serves as an independent check.
    """
    ctx = I.ctx
    if I.is_zero or I.is_unit:
        return I
    if g.is_zero():
        return Ideal.unit(ctx)
    v = _variable_index(g)
    if v is not None and I.is_homogeneous():
        return saturate_variable(I, v)
    t = _fresh(ctx)
    big = ctx.extend(front=[t])
    gens = [f.map_to(big) for f in I.gens] + [1 - big.gen(t) * g.map_to(big)]
    kept = eliminate(gens, [t])
    return Ideal([f.map_to(ctx) for f in kept], ctx).reduced()


def saturate(I: Ideal, J: Ideal, max_rounds: int = 1000) -> Ideal:
    """(I : J^∞) by iterated quotients, stopping when two successive bases agree.

    Every intermediate ideal stays (bi)homogeneous when I and J are.
    """
    if I.ctx.names != J.ctx.names:
        raise UsageError("ideals live in different contexts")
    current = I.reduced()
    for _ in range(max_rounds):
        nxt = ideal_quotient(current, J)
        if nxt == current:
            return current
        current = nxt
    raise PreconditionError("saturation did not stabilize")


def saturate_variable(I: Ideal, v) -> Ideal:
    """(I : x_v^∞)."""
    ctx = I.ctx
    v = ctx.index(v)
    if I.is_zero or I.is_unit:
        return I
    if I.is_homogeneous():
        gb = I.gb(MonomialOrder.grevlex(ctx.nvars, last=v))
        out = []
        for f in gb.generators:
            k = min(e[v] for e in f.terms)
            if k:
                f = Polynomial(ctx, {e[:v] + (e[v] - k,) + e[v + 1:]: c for e, c in f.terms.items()})
            out.append(f)
        return Ideal(out, ctx).reduced()
    return saturate(I, Ideal([ctx.gen(v)], ctx))


def saturate_irrelevant(I: Ideal, variables) -> Ideal:
    """(I : (x_i : i in variables)^∞) as the intersection of single-variable saturations."""
    ctx = I.ctx
    idx = [ctx.index(v) for v in variables]
    base = I.reduced()
    if base.is_zero or base.is_unit:
        return base
    sats = []
    for v in idx:
        s = saturate_variable(base, v)
        if s == base:
            return base
        sats.append(s)
    result = sats[0]
    for s in sats[1:]:
        if result.is_subset(s):
            continue
        if s.is_subset(result):
            result = s
        else:
            result = intersect(result, s)
    return result


# ---------------------------------------------------------------------------
# leading-term data


def leading_ideal(I: Ideal, order: MonomialOrder | None = None):
    """Minimal generators (exponent tuples) of the leading-term ideal."""
    if I.is_zero:
        return []
    gb = I.gb(order)
    return _minimalize(gb.leading_monomials())


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def krull_dim(I: Ideal) -> int:
    """Krull dimension of the quotient ring; -1 for the unit ideal."""
    if I.is_unit:
        return -1
    n = I.ctx.nvars
    if I.is_zero:
        return n
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in leading_ideal(I)]
    # largest variable set containing no leading-monomial support
    best = 0

    def search(i, chosen):
        nonlocal best
        if len(chosen) + (n - i) <= best:
            return
        if i == n:
            best = max(best, len(chosen))
            return
        trial = chosen | {i}
        if not any(s <= trial for s in supports):
            search(i + 1, trial)
        search(i + 1, chosen)

    search(0, frozenset())
    return best


# ---------------------------------------------------------------------------
# Hilbert series


def _poly_add(acc, other, sign=1):
    for k, v in other.items():
        s = acc.get(k, 0) + sign * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def _poly_shift(poly, w):
    return {tuple(a + b for a, b in zip(k, w)): v for k, v in poly.items()}


def _monomial_numerator(gens, weights, ngrades):
    """Numerator of the multigraded Hilbert series of S/(gens) (inclusion-exclusion pivots)."""
    zero = (0,) * ngrades

    def wdeg(m):
        return tuple(sum(a * w[g] for a, w in zip(m, weights)) for g in range(ngrades))

    def rec(gens):
        gens = _minimalize(gens)
        if not gens:
            return {zero: 1}
        # coprime generators: the numerator factors
        counts = [0] * len(weights)
        for m in gens:
            for i, a in enumerate(m):
                if a:
                    counts[i] += 1
        if max(counts) <= 1:
            result = {zero: 1}
            for m in gens:
                d = wdeg(m)
                result = _poly_add(dict(result), _poly_shift(result, d), -1)
            return result
        var = counts.index(max(counts))
        # exponents from mixed generators only: a minimal pure power of var
        # has a strictly larger exponent, so the pivot is a new generator
        exps = sorted(m[var] for m in gens if m[var] and sum(1 for a in m if a) > 1)
        a = exps[len(exps) // 2]
        pivot = tuple(a if i == var else 0 for i in range(len(weights)))
        plus = rec(gens + [pivot])
        colon = rec([tuple(max(x - y, 0) for x, y in zip(m, pivot)) for m in gens])
        return _poly_add(plus, _poly_shift(colon, wdeg(pivot)))

    return rec(list(gens))


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(h, k) / ((1-h)^a (1-k)^b); numerator as {(i, j): coeff}."""

    numerator: dict
    denominator: tuple

    def hilbert_function(self, h: int, k: int) -> int:
        a, b = self.denominator
        total = 0
        for (i, j), c in self.numerator.items():
            x, y = h - i, k - j
            if x < 0 or y < 0:
                continue
            fx = comb(x + a - 1, a - 1) if a else (1 if x == 0 else 0)
            fy = comb(y + b - 1, b - 1) if b else (1 if y == 0 else 0)
            total += c * fx * fy
        return total

    def over(self, a: int, b: int) -> dict:
        """Numerator with respect to the larger denominator (1-h)^a (1-k)^b."""
        a0, b0 = self.denominator
        if a < a0 or b < b0:
            raise UsageError("can only enlarge the denominator")
        num = dict(self.numerator)
        for _ in range(a - a0):
            num = _poly_add(dict(num), _poly_shift(num, (1, 0)), -1)
        for _ in range(b - b0):
            num = _poly_add(dict(num), _poly_shift(num, (0, 1)), -1)
        return num

    def same_series(self, other: "HilbertSeries") -> bool:
        """Equality as rational functions, whatever the denominators."""
        a = max(self.denominator[0], other.denominator[0])
        b = max(self.denominator[1], other.denominator[1])
        return self.over(a, b) == other.over(a, b)

    def __eq__(self, other):
        return (isinstance(other, HilbertSeries) and self.denominator == other.denominator
                and self.numerator == other.numerator)

    def __hash__(self):
        return hash((frozenset(self.numerator.items()), self.denominator))


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Bigraded Hilbert series of S/I from its grevlex leading-term ideal.

    For ideals that are not bihomogeneous this is the series of the
    leading-term ideal, i.e. of the degree filtration (an invariant of I for
    ideals homogeneous in the T-block).
    """
    ctx = I.ctx
    weights = ctx.weights
    if any(w not in ((1, 0), (0, 1)) for w in weights):
        raise UsageError("hilbert_series needs weights (1,0) or (0,1)")
    a = sum(1 for w in weights if w == (1, 0))
    b = len(weights) - a
    if I.is_unit:
        return HilbertSeries({}, (a, b))
    num = _monomial_numerator(leading_ideal(I), weights, 2)
    return HilbertSeries(num, (a, b))


# ---------------------------------------------------------------------------
# multidegrees


@dataclass(frozen=True)
class MultiDegree:
    """Class ``sum coeffs[(i, j)] h^i k^j`` of codimension ``codim`` (i + j == codim)."""

    codim: int
    coeffs: tuple  # sorted ((i, j), a) pairs with a != 0

    @classmethod
    def from_dict(cls, codim, coeffs):
        return cls(codim, tuple(sorted((k, v) for k, v in coeffs.items() if v)))

    def as_dict(self):
        return dict(self.coeffs)

    def coefficient(self, i, j) -> int:
        return self.as_dict().get((i, j), 0)

    def truncated(self, n: int, m: int) -> "MultiDegree":
        """Drop terms vanishing in the Chow ring of P^n x P^m."""
        return MultiDegree.from_dict(self.codim, {k: v for k, v in self.coeffs if k[0] <= n and k[1] <= m})

    def vector(self):
        """``[a_0, ..., a_D]`` with a_i the coefficient of h^i k^(D-i)."""
        d = self.as_dict()
        return [d.get((i, self.codim - i), 0) for i in range(self.codim + 1)]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), a in sorted(self.coeffs, reverse=True):
            mono = "*".join(s for s in (
                "" if i == 0 else ("h" if i == 1 else f"h^{i}"),
                "" if j == 0 else ("k" if j == 1 else f"k^{j}")) if s)
            parts.append(f"{a}*{mono}" if mono else str(a))
        return " + ".join(parts)


def _lowest_part_after_flip(num):
    """Lowest-degree part of num(1-h, 1-k)."""
    expanded = {}
    for (i, j), c in num.items():
        for a in range(i + 1):
            ca = comb(i, a) * (-1) ** a
            for b in range(j + 1):
                key = (a, b)
                v = expanded.get(key, 0) + c * ca * comb(j, b) * (-1) ** b
                if v:
                    expanded[key] = v
                else:
                    expanded.pop(key, None)
    if not expanded:
        return None, {}
    low = min(a + b for a, b in expanded)
    return low, {k: v for k, v in expanded.items() if sum(k) == low}


def multidegree(I: Ideal, truncate: bool = True) -> MultiDegree:
    """Multidegree of a bihomogeneous ideal in k[x_0..x_n, T_0..T_m].

    Computed from the K-polynomial of the grevlex leading-term ideal; with
    ``truncate`` the terms h^i (i > n) and k^j (j > m), which vanish on
    P^n x P^m, are dropped.
    """
    ctx = I.ctx
    if not I.is_bihomogeneous():
        raise UsageError("multidegree needs a bihomogeneous ideal")
    if I.is_unit:
        raise PreconditionError("multidegree of the unit ideal is undefined")
    hs = hilbert_series(I)
    codim, part = _lowest_part_after_flip(hs.numerator)
    md = MultiDegree.from_dict(codim, part)
    if truncate:
        a, b = hs.denominator
        md = md.truncated(a - 1, b - 1)
    return md


def _point_count(J: Ideal, max_s: int = 200) -> int:
    hs = hilbert_series(J)
    prev = hs.hilbert_function(0, 0)
    for s in range(1, max_s):
        cur = hs.hilbert_function(s, s)
        if cur == prev:
            return cur
        prev = cur
    raise GenericityError("Hilbert function of the section did not stabilize")


def bidegrees_by_sections(I: Ideal, dim: int, seed: int = 0, bound: int = 100,
                          retries: int = 4) -> MultiDegree:
    """Multidegree of V(I) ⊂ P^n x P^m of pure dimension ``dim`` via generic sections.

    For each split ``dim = i + j`` the variety is cut by ``i`` random
    (1,0)-forms and ``j`` random (0,1)-forms; after saturating by both
    irrelevant ideals the residue is a finite set of points whose count (with
    multiplicity) is the coefficient of h^(n-i) k^(m-j).
    """
    ctx = I.ctx
    xs = ctx.indices_with_weight((1, 0))
    ts = ctx.indices_with_weight((0, 1))
    if len(xs) + len(ts) != ctx.nvars:
        raise UsageError("bidegrees_by_sections needs a pure x/T bigrading")
    n, m = len(xs) - 1, len(ts) - 1
    base = saturate_irrelevant(saturate_irrelevant(I, xs), ts)
    if base.is_unit:
        raise PreconditionError("V(I) is empty in P^n x P^m (improper input)")
    rng = random.Random(seed)
    coeffs = {}
    for i in range(dim + 1):
        j = dim - i
        if i > n or j > m:
            continue
        for attempt in range(retries):
            forms = [random_form(ctx, (1, 0), rng.getrandbits(64), bound) for _ in range(i)]
            forms += [random_form(ctx, (0, 1), rng.getrandbits(64), bound) for _ in range(j)]
            J = base + forms
            J = saturate_irrelevant(saturate_irrelevant(J, xs), ts)
            if J.is_unit:
                count = 0
                break
            if krull_dim(J) == 2:
                count = _point_count(J)
                break
        else:
            raise GenericityError(
                f"section with {i} (1,0)-forms and {j} (0,1)-forms stayed positive-dimensional: "
                "not equidimensional as assumed")
        if count:
            coeffs[(n - i, m - j)] = count
    return MultiDegree.from_dict(n + m - dim, coeffs)
