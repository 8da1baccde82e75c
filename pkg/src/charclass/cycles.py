"""Conormal and characteristic cycles of a projective hypersurface in P^n x P^n."""

from __future__ import annotations

from dataclasses import dataclass

from .blowup import principal_transform, proj_saturation, rees_ideal
from .errors import CrossCheckFailure, PreconditionError, UsageError
from .groebner import normal_form
from .ideal import Ideal, MultiDegree, krull_dim, multidegree, saturate
from .ring import Polynomial, VarContext

__all__ = [
    "HypersurfaceData", "CycleData", "CrossCheckReport", "make_hypersurface",
    "cycle_context", "conormal_ideal", "charcycle_ideal", "cycle_cross_check",
]


@dataclass(frozen=True)
class HypersurfaceData:
    F: Polynomial
    n: int
    d: int
    jacobian: Ideal

    @property
    def ctx(self) -> VarContext:
        return self.F.ctx

    @property
    def field(self):
        return self.F.ctx.field

    @property
    def partials(self):
        """All n+1 partial derivatives, zeros included (one T-variable each)."""
        return tuple(self.F.partial(i) for i in range(self.ctx.nvars))

    @property
    def is_smooth(self) -> bool:
        # the singular locus is empty iff the Jacobian ideal is irrelevant
        return krull_dim(self.jacobian) <= 0


def make_hypersurface(F: Polynomial) -> HypersurfaceData:
    """Validate F and attach its Jacobian ideal.

    Rejects zero, constant and non-homogeneous input, degrees divisible by the
    characteristic, and non-reduced hypersurfaces.
    """
    if F.is_zero():
        raise UsageError("the zero polynomial does not define a hypersurface", code="SHAPE")
    if not F.is_homogeneous():
        raise UsageError("polynomial is not homogeneous", code="SHAPE")
    d = F.total_degree()
    if d < 1:
        raise UsageError("constant polynomial does not define a hypersurface", code="SHAPE")
    p = F.ctx.field.characteristic
    if p and d % p == 0:
        raise PreconditionError("Euler relation unavailable: characteristic divides the degree",
                                code="EULER_UNAVAILABLE")
    ctx = F.ctx
    n = ctx.nvars - 1
    if n < 1:
        raise UsageError("need at least two homogeneous coordinates", code="SHAPE")
    jac = Ideal([F.partial(i) for i in range(ctx.nvars)], ctx)
    if not normal_form(F, jac.gb()).is_zero():
        raise AssertionError("Euler identity failed: F is not in its Jacobian ideal")
    if krull_dim(jac) > n - 1:
        raise PreconditionError("non-reduced hypersurface rejected: singular locus has codimension 1",
                                code="NON_REDUCED")
    return HypersurfaceData(F, n, d, jac)


@dataclass(frozen=True)
class CycleData:
    kind: str            # "Conormal" or "Characteristic"
    ideal: Ideal         # saturated, in x_0..x_n, T_0..T_n
    multidegree: MultiDegree

    @property
    def bidegrees(self):
        n = (self.ideal.ctx.nvars - 2) // 2
        return tuple(self.multidegree.coefficient(j + 1, n - j) for j in range(n))


def cycle_context(h: HypersurfaceData) -> VarContext:
    return rees_ideal(h.partials).ctx


def _cycle(kind, ideal):
    return CycleData(kind, ideal, multidegree(ideal))


def conormal_ideal(h: HypersurfaceData, method: str = "minors") -> CycleData:
    """Closure of {(x, grad F(x)) : x a smooth point of X}.

    ``method="minors"``: F plus the 2x2 minors of the matrix with rows T and
    grad F, saturated by the Jacobian ideal.  ``method="rees"``: the Rees
    ideal of the partials over R/(F).  Both are then saturated by the
    irrelevant ideals.
    """
    if method == "rees":
        pres = rees_ideal(h.partials, [h.F])
        return _cycle("Conormal", proj_saturation(pres.ideal))
    if method != "minors":
        raise UsageError(f"unknown conormal method {method!r}")
    ctx = cycle_context(h)
    nx = h.ctx.nvars
    Ts = [ctx.gen(i) for i in range(nx, 2 * nx)]
    grad = [g.map_to(ctx) for g in h.partials]
    gens = [h.F.map_to(ctx)]
    for i in range(nx):
        for j in range(i + 1, nx):
            m = Ts[i] * grad[j] - Ts[j] * grad[i]
            if not m.is_zero():
                gens.append(m)
    I = Ideal(gens, ctx)
    I = saturate(I, Ideal(grad, ctx))
    return _cycle("Conormal", proj_saturation(I))


def euler_form(ctx: VarContext, nx: int) -> Polynomial:
    out = ctx.zero()
    for i in range(nx):
        out = out + ctx.gen(i) * ctx.gen(nx + i)
    return out


def charcycle_ideal(h: HypersurfaceData) -> CycleData:
    """Proj of the quasi-symmetric blow-up: Rees ideal of the partials cut by sum x_i T_i."""
    pres = rees_ideal(h.partials)
    ctx = pres.ctx
    I = pres.ideal + [euler_form(ctx, h.ctx.nvars)]
    return _cycle("Characteristic", proj_saturation(I))


@dataclass(frozen=True)
class CrossCheckReport:
    agree: bool
    charcycle_bidegrees: tuple
    transform_bidegrees: tuple
    charcycle: CycleData
    transform: CycleData
    first_difference: Polynomial | None = None


def cycle_cross_check(h: HypersurfaceData, raise_on_mismatch: bool = True) -> CrossCheckReport:
    """Compare the characteristic-cycle ideal with the principal transform of X."""
    ch = charcycle_ideal(h)
    pt_ideal = principal_transform(h.F, h.partials)
    pt = _cycle("Characteristic", pt_ideal)
    diff = None
    for a, b in ((pt.ideal, ch.ideal), (ch.ideal, pt.ideal)):
        for g in a.gb().generators:
            if not b.contains(g):
                diff = g
                break
        if diff is not None:
            break
    agree = diff is None and ch.multidegree == pt.multidegree
    report = CrossCheckReport(agree, ch.bidegrees, pt.bidegrees, ch, pt, diff)
    if raise_on_mismatch and not agree:
        raise CrossCheckFailure(f"characteristic cycle and principal transform differ at {diff}")
    return report
