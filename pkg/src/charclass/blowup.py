"""Presentations of Rees, symmetric and quasi-symmetric blow-up algebras.

An algebra over ``A = R/K`` generated by ``f_0..f_m`` is presented as a
quotient of ``R[T_0..T_m]`` (x-variables of bidegree (1,0), T-variables of
bidegree (0,1)).  Affine inputs are supported; Proj-level comparisons
saturate by the T-irrelevant ideal, and additionally by the x-irrelevant
ideal when ``projective`` is set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, UsageError
from .groebner import eliminate, syzygies
from .ideal import Ideal, ideal_quotient, saturate_irrelevant
from .ring import Polynomial, VarContext

__all__ = [
    "BlowupPresentation", "presentation_context", "rees_ideal", "sym_ideal",
    "qsym_affine", "principal_transform", "proj_saturation", "XConditionVerdict",
    "xcondition_check", "weak_linearity_check",
]


@dataclass(frozen=True)
class BlowupPresentation:
    kind: str                 # "Rees", "Sym" or "QSym"
    ideal: Ideal              # in base ring [T_0..T_m]
    generators: tuple         # the f_i, in the base ring
    relations: tuple          # K, in the base ring
    generator_degrees: tuple  # total degree of each f_i (h-degree of T_i's image)

    @property
    def ctx(self) -> VarContext:
        return self.ideal.ctx

    def tvars(self):
        return self.ctx.block_indices(1)

    def xvars(self):
        return self.ctx.block_indices(0)


def presentation_context(base: VarContext, m: int, stem: str = "T") -> VarContext:
    """Bigraded context ``base[T_0..T_{m-1}]`` with fresh T names."""
    while any(f"{stem}{i}" in base.names for i in range(m)):
        stem += "_"
    return VarContext.bigraded(base.names, [f"{stem}{i}" for i in range(m)], base.field)


def _check(gens, relations):
    gens = list(gens)
    if not gens:
        raise UsageError("at least one ideal generator is required")
    base = gens[0].ctx
    for g in list(gens) + list(relations):
        if g.ctx.names != base.names or g.ctx.field != base.field:
            raise UsageError("generators and relations must share a context")
    return gens, list(relations), base


def _degrees(gens):
    return tuple(g.total_degree() for g in gens)


def rees_ideal(gens, relations=()) -> BlowupPresentation:
    """Kernel of ``(R/K)[T] -> (R/K)[t]``, ``T_i -> t f_i``, by eliminating t."""
    gens, relations, base = _check(gens, relations)
    ctx = presentation_context(base, len(gens))
    tname = "_t"
    while tname in ctx.names:
        tname += "_"
    big = ctx.extend(front=[tname])
    t = big.gen(tname)
    Ts = [big.gen(nm) for nm in ctx.names[base.nvars:]]
    system = [k.map_to(big) for k in relations]
    system += [T - t * f.map_to(big) for T, f in zip(Ts, gens)]
    kept = eliminate(system, [tname])
    ideal = Ideal([g.map_to(ctx) for g in kept], ctx)
    return BlowupPresentation("Rees", ideal, tuple(gens), tuple(relations), _degrees(gens))


def sym_ideal(gens, relations=()) -> BlowupPresentation:
    """Symmetric algebra of ``(f_0..f_m)`` over ``R/K``.

    Syzygies of the concatenated list ``f_0..f_m, K`` over R give the linear
    forms ``sum a_i T_i`` (K-cofactors dropped); K itself is added.
    """
    gens, relations, base = _check(gens, relations)
    ctx = presentation_context(base, len(gens))
    Ts = [ctx.gen(nm) for nm in ctx.names[base.nvars:]]
    out = [k.map_to(ctx) for k in relations]
    nonzero = [g for g in gens + relations if not g.is_zero()]
    if nonzero:
        syz = syzygies(gens + relations)
        for row in syz.rows:
            form = ctx.zero()
            for a, T in zip(row[:len(gens)], Ts):
                if not a.is_zero():
                    form = form + a.map_to(ctx) * T
            if not form.is_zero():
                out.append(form)
    ideal = Ideal(out, ctx).reduced()
    return BlowupPresentation("Sym", ideal, tuple(gens), tuple(relations), _degrees(gens))


def qsym_affine(gens, relations=()) -> BlowupPresentation:
    """Quasi-symmetric algebra of ``(f_0..f_m)`` over ``A = R/K`` relative to R.

    Sym over A plus the Rees relations of ``I = (f) + K`` in R, with the
    T-variables attached to the K-generators sent to zero.
    """
    gens, relations, base = _check(gens, relations)
    sym = sym_ideal(gens, relations)
    ctx = sym.ctx
    nonzero_rel = [k for k in relations if not k.is_zero()]
    rees_big = rees_ideal(gens + nonzero_rel)
    big = rees_big.ctx
    m = len(gens)
    extra = big.names[base.nvars + m:]
    rename = {big.names[base.nvars + i]: ctx.names[base.nvars + i] for i in range(m)}
    images = []
    for g in rees_big.ideal.gens:
        if extra:
            g = g.substitute({nm: 0 for nm in extra})
        if not g.is_zero():
            images.append(g.map_to(ctx, rename))
    ideal = Ideal(list(sym.ideal.gens) + images, ctx).reduced()
    return BlowupPresentation("QSym", ideal, tuple(gens), tuple(relations), _degrees(gens))


def proj_saturation(I: Ideal, projective: bool = True) -> Ideal:
    """Saturate by the T-irrelevant ideal, and by the x-irrelevant ideal if projective."""
    ctx = I.ctx
    out = saturate_irrelevant(I, ctx.block_indices(1))
    if projective:
        out = saturate_irrelevant(out, ctx.block_indices(0))
    return out


def principal_transform(F: Polynomial, ygens, projective: bool = True) -> Ideal:
    """Residual to the exceptional divisor in the total transform of V(F) in Bl_Y.

    ``((Rees(Y) + (F)) : (Y-gens)) `` saturated at the Proj level.
    """
    ygens = list(ygens)
    base = F.ctx
    Y = Ideal(ygens, base)
    if not Y.contains(F):
        raise PreconditionError("F does not lie in the ideal of Y", code="NOT_CONTAINED")
    rees = rees_ideal(ygens)
    ctx = rees.ctx
    total = rees.ideal + [F.map_to(ctx)]
    exceptional = Ideal([g.map_to(ctx) for g in ygens], ctx)
    residual = ideal_quotient(total, exceptional)
    return proj_saturation(residual, projective)


@dataclass(frozen=True)
class XConditionVerdict:
    holds: bool
    witness: Polynomial | None
    sym: Ideal     # saturated Sym presentation ideal
    qsym: Ideal    # saturated qSym presentation ideal

    def __bool__(self):
        return self.holds


def _singularity_generators(F: Polynomial):
    return [F.partial(i) for i in range(F.ctx.nvars)]


def xcondition_check(F: Polynomial, projective: bool = True) -> XConditionVerdict:
    """Decide whether Sym and qSym of the singularity ideal of V(F) agree on Proj.

    The ideal is generated over ``A = R/(F)`` by the images of the partials.
    On failure the witness is a basis element of the saturated qSym ideal
    missing from the saturated Sym ideal.
    """
    gens = _singularity_generators(F)
    sym = proj_saturation(sym_ideal(gens, [F]).ideal, projective)
    qsym = proj_saturation(qsym_affine(gens, [F]).ideal, projective)
    witness = None
    for g in qsym.gb().generators:
        if not sym.contains(g):
            witness = g
            break
    if witness is None:
        for g in sym.gb().generators:
            if not qsym.contains(g):
                witness = g
                break
    return XConditionVerdict(witness is None, witness, sym, qsym)


def weak_linearity_check(gens, projective: bool = False) -> bool:
    """True iff Sym(I) and Rees(I) of ``I = (gens)`` in a polynomial ring agree on Proj."""
    gens = list(gens)
    sym = proj_saturation(sym_ideal(gens).ideal, projective)
    rees = proj_saturation(rees_ideal(gens).ideal, projective)
    return sym == rees
