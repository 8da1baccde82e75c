"""Buchberger's algorithm, normal forms, elimination and syzygies.

Pairs are pruned with the Gebauer-Möller criteria and selected by the normal
strategy (smallest lcm first, ties broken by insertion order), so results are
deterministic for a fixed input and order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from . import kernel
from .budget import ensure_budget
from .errors import BudgetExhausted, UsageError
from .ring import MonomialOrder, Polynomial, VarContext

__all__ = [
    "GroebnerBasis", "SyzygyGenerators", "groebner_basis", "normal_form",
    "eliminate", "syzygies", "is_groebner",
]


# ---------------------------------------------------------------------------
# raw helpers on {exp: coeff} dicts


def _split(terms, order):
    lead = min(terms, key=order.neg_key)
    tail = [(e, c) for e, c in terms.items() if e != lead]
    tail.sort(key=lambda t: order.neg_key(t[0]))
    return lead, tail


def _scale(terms, c, p):
    if p:
        return {e: v * c % p for e, v in terms.items()}
    return {e: v * c for e, v in terms.items()}


def _inv(c, p):
    if p:
        return pow(int(c), -1, p)
    return 1 / c


def _addmul(acc, terms, shift, coeff, p):
    """acc += coeff * x^shift * terms, in place."""
    for e, c in terms.items():
        m = tuple([a + b for a, b in zip(e, shift)])
        v = acc.get(m, 0) + coeff * c
        if p:
            v %= p
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _run_reduce(terms, basis, order, p, full=True, quot=None):
    with ensure_budget() as budget:
        try:
            rem, steps = kernel.reduce(terms, basis, order.neg_key, p, full, budget.remaining + 1, quot)
        except kernel.StepLimit:
            budget.charge(budget.remaining + 1)
            raise BudgetExhausted("step budget exhausted") from None
        budget.charge(steps)
    return rem


# ---------------------------------------------------------------------------
# Buchberger


class _Engine:
    """Mutable state of one Buchberger run (optionally tracking cofactors)."""

    def __init__(self, order, p, ninputs=0, track=False):
        self.order = order
        self.p = p
        self.track = track
        self.ninputs = ninputs
        self.polys = []     # (lead, tail) monic
        self.cofs = []      # per poly: list of dicts (one per input), when tracking
        self.active = []    # indices of the current minimal basis
        self.pairs = []     # (neg_key(lcm), i, j, lcm)
        self.stats = {"pairs": 0, "reductions": 0, "zero_reductions": 0, "pruned": 0}

    def basis(self):
        return [self.polys[i] for i in self.active]

    def reduce(self, terms, cof=None):
        quot = [] if self.track else None
        active = self.active
        rem = _run_reduce(terms, [self.polys[i] for i in active], self.order, self.p, True, quot)
        if self.track:
            cof = [dict(c) for c in cof]
            for idx, shift, c in quot:
                src = self.cofs[active[idx]]
                for j in range(self.ninputs):
                    if src[j]:
                        _addmul(cof[j], src[j], shift, -c, self.p)
        return rem, cof

    def add(self, terms, cof=None):
        """Insert a nonzero reduced polynomial and update pairs (Gebauer-Möller)."""
        lead, tail = _split(terms, self.order)
        c = terms[lead]
        if c != 1:
            inv = _inv(c, self.p)
            tail = [(e, (v * inv % self.p) if self.p else v * inv) for e, v in tail]
            if self.track:
                cof = [_scale(x, inv, self.p) for x in cof]
        h = len(self.polys)
        self.polys.append((lead, tail))
        self.cofs.append(cof)
        self._update(h)

    def _update(self, h):
        polys, order = self.polys, self.order
        lh = polys[h][0]
        cand = [(g, _lcm(polys[g][0], lh)) for g in self.active]
        kept = []
        for k, (g, l) in enumerate(cand):
            if _coprime(polys[g][0], lh):
                kept.append((g, l))
                continue
            redundant = False
            for g2, l2 in cand[k + 1:]:
                if kernel.divides(l2, l):
                    redundant = True
                    break
            if not redundant:
                for g2, l2 in kept:
                    if kernel.divides(l2, l):
                        redundant = True
                        break
            if not redundant:
                kept.append((g, l))
        new_pairs = []
        for g, l in kept:
            if _coprime(polys[g][0], lh):
                self.stats["pruned"] += 1
                continue
            new_pairs.append((order.neg_key(l), g, h, l))
        old = []
        for item in self.pairs:
            _, i, j, l = item
            if (kernel.divides(lh, l) and _lcm(polys[i][0], lh) != l
                    and _lcm(polys[j][0], lh) != l):
                self.stats["pruned"] += 1
                continue
            old.append(item)
        self.pairs = old + new_pairs
        self.active = [g for g in self.active if not kernel.divides(lh, polys[g][0])] + [h]

    def run(self):
        while self.pairs:
            # normal strategy: the smallest lcm has the largest neg_key
            best = max(range(len(self.pairs)),
                       key=lambda k: (self.pairs[k][0], -self.pairs[k][1], -self.pairs[k][2]))
            _, i, j, _ = self.pairs.pop(best)
            self.stats["pairs"] += 1
            (li, ti), (lj, tj) = self.polys[i], self.polys[j]
            s = kernel.spoly(li, ti, lj, tj, self.p)
            cof = None
            if self.track:
                lcm = _lcm(li, lj)
                si = tuple(a - b for a, b in zip(lcm, li))
                sj = tuple(a - b for a, b in zip(lcm, lj))
                cof = [dict() for _ in range(self.ninputs)]
                for k in range(self.ninputs):
                    if self.cofs[i][k]:
                        _addmul(cof[k], self.cofs[i][k], si, 1, self.p)
                    if self.cofs[j][k]:
                        _addmul(cof[k], self.cofs[j][k], sj, -1, self.p)
            self.stats["reductions"] += 1
            rem, cof = self.reduce(s, cof)
            if not rem:
                self.stats["zero_reductions"] += 1
                continue
            self.add(rem, cof)
            if self._is_unit():
                return

    def _is_unit(self):
        lead = self.polys[self.active[-1]][0]
        return not any(lead)

    def reduced_basis(self):
        """Interreduce the minimal basis; returns list of (terms, cof) sorted by lead."""
        order, p = self.order, self.p
        active = self.active
        if active and not any(self.polys[active[-1]][0]):
            unit = self.polys[active[-1]]
            return [({unit[0]: 1 if p else mpq(1)}, self.cofs[active[-1]])]
        out = []
        for pos, g in enumerate(active):
            lead, tail = self.polys[g]
            others = [self.polys[h] for h in active if h != g]
            quot = [] if self.track else None
            rem = _run_reduce(dict(tail), others, order, p, True, quot)
            cof = None
            if self.track:
                cof = [dict(c) for c in self.cofs[g]]
                other_idx = [h for h in active if h != g]
                for idx, shift, c in quot:
                    src = self.cofs[other_idx[idx]]
                    for j in range(self.ninputs):
                        if src[j]:
                            _addmul(cof[j], src[j], shift, -c, p)
            rem[lead] = 1 if p else mpq(1)
            out.append((rem, cof))
        out.sort(key=lambda t: order.neg_key(min(t[0], key=order.neg_key)))
        return out


def _prepare(gens, order):
    gens = list(gens)
    if not gens:
        raise UsageError("empty generator list")
    ctx = gens[0].ctx
    for g in gens:
        if g.ctx.names != ctx.names or g.ctx.field != ctx.field:
            raise UsageError("generators live in different contexts")
    if order is None:
        order = ctx.grevlex()
    if order.nvars != ctx.nvars:
        raise UsageError("order does not match the context")
    return ctx, order


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis with monic generators sorted by decreasing lead."""

    generators: tuple
    order: MonomialOrder
    ctx: VarContext
    stats: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(next(iter(self.generators[0].terms)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def leading_monomials(self):
        return [g.leading_term(self.order)[0] for g in self.generators]

    def _raw(self):
        raw = self.__dict__.get("_raw_cache")
        if raw is None:
            raw = [_split(g.terms, self.order) for g in self.generators]
            object.__setattr__(self, "_raw_cache", raw)
        return raw

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __contains__(self, f):
        return self.contains(f)


def groebner_basis(gens, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    ctx, order = _prepare(gens, order)
    p = ctx.field.p
    eng = _Engine(order, p)
    with ensure_budget():
        inputs = sorted((g.terms for g in gens if g.terms),
                        key=lambda t: order.neg_key(min(t, key=order.neg_key)), reverse=True)
        for terms in inputs:
            rem, _ = eng.reduce(terms)
            if rem:
                eng.add(rem)
                if eng._is_unit():
                    break
        else:
            eng.run()
        if eng.active and eng._is_unit():
            eng.pairs = []
        reduced = eng.reduced_basis()
    gens_out = tuple(Polynomial(ctx, terms) for terms, _ in reduced)
    return GroebnerBasis(gens_out, order, ctx, dict(eng.stats))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``gb`` (zero iff ``f`` is in the ideal)."""
    if f.ctx.names != gb.ctx.names or f.ctx.field != gb.ctx.field:
        raise UsageError("polynomial and basis live in different contexts")
    if not f.terms or not gb.generators:
        return f
    rem = _run_reduce(f.terms, gb._raw(), gb.order, f.ctx.field.p, True)
    return Polynomial(f.ctx, rem)


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger certificate: every S-polynomial reduces to zero."""
    raw = gb._raw()
    p = gb.ctx.field.p
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            s = kernel.spoly(raw[i][0], raw[i][1], raw[j][0], raw[j][1], p)
            if s and _run_reduce(s, raw, gb.order, p, True):
                return False
    return True


def eliminate(gens, variables) -> list:
    """Generators of ``<gens>`` intersected with the subring free of ``variables``.

    ``variables`` are names or indices; the block order puts them first.
    Results stay in the input context (they simply avoid the eliminated variables).
    """
    gens = [g for g in gens]
    ctx = gens[0].ctx
    idx = sorted({ctx.index(v) for v in variables})
    if not idx:
        return list(groebner_basis(gens).generators)
    order = MonomialOrder.elimination(ctx.nvars, idx)
    gb = groebner_basis(gens, order)
    out = []
    for g in gb.generators:
        if not any(e[i] for e in g.terms for i in idx):
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# syzygies


@dataclass(frozen=True)
class SyzygyGenerators:
    """Rows ``(a_0, ..., a_r)`` with ``sum a_i * gens[i] == 0``."""

    gens: tuple
    rows: tuple

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def check(self) -> bool:
        ctx = self.gens[0].ctx
        for row in self.rows:
            total = ctx.zero()
            for a, f in zip(row, self.gens):
                total = total + a * f
            if not total.is_zero():
                return False
        return True


def syzygies(gens, order: MonomialOrder | None = None) -> SyzygyGenerators:
    """Generating set of the syzygy module of ``gens``.

    The Gröbner basis is computed with cofactor tracking; Schreyer syzygies of
    the basis (one per pair) are transported back to the input generators,
    together with the rows expressing each input in terms of the basis.
    """
    gens = list(gens)
    ctx, order = _prepare(gens, order)
    p = ctx.field.p
    r = len(gens)
    zero_rows = []
    nonzero = []
    for i, g in enumerate(gens):
        if g.terms:
            nonzero.append(i)
        else:
            row = [ctx.zero()] * r
            row[i] = ctx.one()
            zero_rows.append(tuple(row))
    if not nonzero:
        return SyzygyGenerators(tuple(gens), tuple(zero_rows))
    m = len(nonzero)
    eng = _Engine(order, p, ninputs=m, track=True)
    with ensure_budget():
        for k, i in enumerate(nonzero):
            cof = [dict() for _ in range(m)]
            cof[k] = {(0,) * ctx.nvars: 1 if p else ctx.field(1)}
            rem, cof = eng.reduce(gens[i].terms, cof)
            if rem:
                eng.add(rem, cof)
        eng.run()
        reduced = eng.reduced_basis()
        basis = [_split(t, order) for t, _ in reduced]
        cofs = [c for _, c in reduced]
        rows = []

        def transport(vec):
            """Row over the inputs from a combination over the basis."""
            out = [dict() for _ in range(m)]
            for k, comb in vec.items():
                for j in range(m):
                    if cofs[k][j]:
                        for e, c in comb.items():
                            _addmul(out[j], cofs[k][j], e, c, p)
            return out

        nb = len(basis)
        for a in range(nb):
            for b in range(a + 1, nb):
                (la, ta), (lb, tb) = basis[a], basis[b]
                s = kernel.spoly(la, ta, lb, tb, p)
                lcm = _lcm(la, lb)
                vec = {a: {tuple(x - y for x, y in zip(lcm, la)): 1},
                       b: {tuple(x - y for x, y in zip(lcm, lb)): -1 % p if p else -1}}
                quot = []
                rem = _run_reduce(s, basis, order, p, True, quot)
                assert not rem
                for idx, shift, c in quot:
                    d = vec.setdefault(idx, {})
                    v = d.get(shift, 0) - c
                    if p:
                        v %= p
                    if v:
                        d[shift] = v
                    else:
                        d.pop(shift, None)
                rows.append(transport(vec))
        for k, i in enumerate(nonzero):
            quot = []
            rem = _run_reduce(gens[i].terms, basis, order, p, True, quot)
            assert not rem
            vec = {}
            for idx, shift, c in quot:
                d = vec.setdefault(idx, {})
                v = d.get(shift, 0) + c
                if p:
                    v %= p
                if v:
                    d[shift] = v
                else:
                    d.pop(shift, None)
            row = transport(vec)
            for j in range(m):
                row[j] = {e: (-c % p if p else -c) for e, c in row[j].items()}
            e0 = (0,) * ctx.nvars
            v = row[k].get(e0, 0) + 1
            if p:
                v %= p
            if v:
                row[k][e0] = v
            else:
                row[k].pop(e0, None)
            rows.append(row)
    out = list(zero_rows)
    seen = set()
    for raw in rows:
        if not any(raw):
            continue
        full = [ctx.zero()] * r
        for j, i in enumerate(nonzero):
            full[i] = Polynomial(ctx, {e: ctx.field(c) for e, c in raw[j].items() if c})
        key = tuple(full)
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    return SyzygyGenerators(tuple(gens), tuple(out))
