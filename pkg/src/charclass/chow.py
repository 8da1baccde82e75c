"""Chow rings of P^n and of projective bundles over it; characteristic classes.

Classes in A(P^n) are coefficient vectors ``c_0..c_n`` of ``sum c_j H^j``
(index = codimension).  Cycles in P^n x P^n arrive as multidegrees in h, k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cycles import CycleData, HypersurfaceData, charcycle_ideal, conormal_ideal
from .errors import UsageError

__all__ = [
    "ChowClass", "ProjBundleChowRing", "shadow", "segre_hat", "segre_ma_sm",
    "csm_class", "cmather_class", "fulton_class", "fulton_johnson_class",
    "euler_characteristic", "bundle_coefficients", "shadow_consistency",
    "tangent_chern", "cotangent_chern",
]


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class ChowClass:
    n: int
    coeffs: tuple

    def __post_init__(self):
        c = tuple(_num(x) for x in self.coeffs)[: self.n + 1]
        object.__setattr__(self, "coeffs", c + (0,) * (self.n + 1 - len(c)))

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def one(cls, n):
        return cls(n, (1,))

    @classmethod
    def hyperplane(cls, n, power=1):
        return cls(n, (0,) * power + (1,))

    def __getitem__(self, j):
        return self.coeffs[j]

    def __iter__(self):
        return iter(self.coeffs)

    def _other(self, other):
        if isinstance(other, ChowClass):
            if other.n != self.n:
                raise UsageError("classes on different projective spaces")
            return other
        return ChowClass(self.n, (other,))

    def __add__(self, other):
        o = self._other(other)
        return ChowClass(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.n + 1 - i):
                    out[i + j] += a * o.coeffs[j]
        return ChowClass(self.n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ChowClass.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = Fraction(self.coeffs[0])
        if not c0:
            raise ZeroDivisionError("class with zero degree-0 term is not invertible")
        out = [Fraction(0)] * (self.n + 1)
        out[0] = 1 / c0
        for k in range(1, self.n + 1):
            out[k] = -sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1)) / c0
        return ChowClass(self.n, tuple(out))

    def truncate(self, low: int):
        """Keep only components of codimension >= low."""
        return ChowClass(self.n, tuple(0 if j < low else a for j, a in enumerate(self.coeffs)))

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.coeffs)

    def integral(self):
        if not self.is_integral():
            raise ArithmeticError(f"non-integral class {self.coeffs}")
        return self

    def to_list(self):
        return [a if isinstance(a, int) else str(a) for a in self.coeffs]

    def __str__(self):
        parts = []
        for j, a in enumerate(self.coeffs):
            if a:
                mono = "" if j == 0 else ("H" if j == 1 else f"H^{j}")
                parts.append(f"{a}*{mono}" if mono else str(a))
        return " + ".join(parts) or "0"


def tangent_chern(n):
    """c(T P^n) = (1+H)^(n+1)."""
    return ChowClass(n, (1, 1)) ** (n + 1)


def cotangent_chern(n, twist=0):
    """c(T*P^n ⊗ O(twist)) from the twisted Euler sequence."""
    return ChowClass(n, (1, twist - 1)) ** (n + 1) * ChowClass(n, (1, twist)).inverse()


class ProjBundleChowRing:
    """A(P(E)) over A(P^n) for a bundle E of rank e+1, as polynomials of degree <= e in ξ.

    Elements are tuples ``(C_0, ..., C_e)`` of ChowClass meaning ``sum ξ^j ε^* C_j``.
    """

    def __init__(self, n: int, chern: ChowClass, rank: int):
        if rank < 1:
            raise UsageError("bundle rank must be positive")
        self.n = n
        self.chern = chern
        self.e = rank - 1

    def _c(self, i):
        return self.chern[i] if i <= self.n else 0

    def element(self, coeffs):
        return self.reduce(list(coeffs))

    def xi_power(self, j, alpha=None):
        """ξ^j ∩ ε^* alpha in normal form (alpha defaults to the fundamental class)."""
        alpha = ChowClass.one(self.n) if alpha is None else alpha
        coeffs = [ChowClass.zero(self.n)] * j + [alpha]
        return self.reduce(coeffs)

    def reduce(self, coeffs):
        """Normal form via the Grothendieck relation sum_i c_i(E) ξ^(e+1-i) = 0."""
        coeffs = [c if isinstance(c, ChowClass) else ChowClass(self.n, (c,)) for c in coeffs]
        e = self.e
        for top in range(len(coeffs) - 1, e, -1):
            c = coeffs[top]
            coeffs[top] = ChowClass.zero(self.n)
            if not any(c):
                continue
            # ξ^top = -sum_{i>=1} c_i ξ^(top-i)
            for i in range(1, e + 2):
                if self._c(i):
                    coeffs[top - i] = coeffs[top - i] - c * ci_class(self.n, self.chern, i)
        out = coeffs[: e + 1]
        return tuple(out + [ChowClass.zero(self.n)] * (e + 1 - len(out)))

    def multiply_xi(self, elem, k=1):
        coeffs = [ChowClass.zero(self.n)] * k + list(elem)
        return self.reduce(coeffs)

    def pushforward(self, elem):
        """ε_*: the coefficient of ξ^e in normal form."""
        return self.reduce(list(elem))[self.e]

    def shadow(self, elem):
        return shadow(self, elem)


def ci_class(n, chern, i):
    """The degree-i homogeneous piece of a total class."""
    return ChowClass(n, (0,) * i + (chern[i],)) if i <= n else ChowClass.zero(n)


def shadow(ring: ProjBundleChowRing, elem) -> ChowClass:
    """c(E) ∩ ε_*((sum_j ξ^j) ∩ C)."""
    total = ChowClass.zero(ring.n)
    for j in range(ring.n + ring.e + 1):
        total = total + ring.pushforward(ring.multiply_xi(elem, j))
    return ring.chern * total


# ---------------------------------------------------------------------------
# Segre classes from cycles in P^n x P^n


def _pushforward_powers(md, n, power):
    """pr_1*((h+k)^power ∩ [cycle]) as coefficients of H^a."""
    out = [0] * (n + 1)
    for (a, b), c in md.coeffs:
        need = n - b
        if 0 <= need <= power and a + power - need <= n:
            out[a + power - need] += c * comb(power, need)
    return out


def segre_hat(cy: CycleData, n: int) -> ChowClass:
    """pr_1* of sum_j (h+k)^j ∩ [cycle]."""
    total = [0] * (n + 1)
    for j in range(2 * n + 1):
        for a, c in enumerate(_pushforward_powers(cy.multidegree, n, j)):
            total[a] += c
    return ChowClass(n, tuple(total))


def segre_ma_sm(cy: CycleData, h: HypersurfaceData, kind: str) -> ChowClass:
    """Segre-type class s_Ma (conormal cycle) or s_SM (characteristic cycle).

    Components of codimension a in P^n get sign (-1)^(a-1), i.e. every other
    codimension in X flips.
    """
    expected = {"Ma": "Conormal", "SM": "Characteristic"}.get(kind)
    if expected is None:
        raise UsageError(f"unknown Segre kind {kind!r}")
    if cy.kind != expected:
        raise UsageError(f"kind {kind} needs the {expected} cycle, got {cy.kind}")
    hat = segre_hat(cy, h.n)
    return ChowClass(h.n, tuple(c if a % 2 else -c for a, c in enumerate(hat)))


def csm_class(h: HypersurfaceData, cy: CycleData | None = None) -> ChowClass:
    cy = charcycle_ideal(h) if cy is None else cy
    return (tangent_chern(h.n) * segre_ma_sm(cy, h, "SM")).integral()


def cmather_class(h: HypersurfaceData, cy: CycleData | None = None) -> ChowClass:
    cy = conormal_ideal(h) if cy is None else cy
    return (tangent_chern(h.n) * segre_ma_sm(cy, h, "Ma")).integral()


def _divisor_segre(n, d):
    """[X] ∩ c(O(d))^-1 for a degree-d hypersurface: dH/(1+dH)."""
    return ChowClass(n, (0, d)) * ChowClass(n, (1, d)).inverse()


def fulton_class(h: HypersurfaceData) -> ChowClass:
    """c(TP^n) ∩ s(X, P^n); the normal cone of a Cartier divisor is O(d)|_X."""
    return (tangent_chern(h.n) * _divisor_segre(h.n, h.d)).integral()


def fulton_johnson_class(h: HypersurfaceData) -> ChowClass:
    """c(TP^n) ∩ s(N_X P^n) with N_X P^n = O(d)|_X.

    Computed as c(N)^-1 ∩ [X] through the rank-one bundle ring, where
    ε_* ξ^i picks out the Segre classes of the normal bundle.
    """
    n, d = h.n, h.d
    ring = ProjBundleChowRing(n, ChowClass(n, (1, d)), 1)
    X = ChowClass(n, (0, d))
    s = ChowClass.zero(n)
    for i in range(n + 1):
        s = s + ring.pushforward(ring.xi_power(i, X))
    return (tangent_chern(n) * s).integral()


def euler_characteristic(h: HypersurfaceData, csm: ChowClass | None = None) -> int:
    csm = csm_class(h) if csm is None else csm
    return csm[h.n]


# ---------------------------------------------------------------------------
# bundle-basis coefficients and the shadow consistency check


def bundle_coefficients(cy: CycleData, n: int):
    """Coefficients ``C_0..C_e`` with [cycle] = sum ξ^j ε^* C_j in A(P(E)).

    E = T*P^n, rank n; P(E) sits in P^n x P^n with ξ restricted from h + k.  Uses
    ε_*(ξ^m ∩ C) = sum_j s_(m+j-e)(E) C_j, which is triangular in C.
    """
    e = n - 1
    segre = cotangent_chern(n).inverse()
    pushes = [ChowClass(n, tuple(_pushforward_powers(cy.multidegree, n, m))) for m in range(e + 1)]
    C = [None] * (e + 1)
    for m in range(e + 1):
        acc = pushes[m]
        for j in range(e - m + 1, e + 1):
            acc = acc - ci_class(n, segre, m + j - e) * C[j]
        C[e - m] = acc
    return C


def shadow_consistency(cy: CycleData, n: int):
    """Return (shadow via c(E) ∩ ε_*(sum ξ^j ∩ C), sum of bundle coefficients).

    Both are the shadow of the cycle; equality is a consistency certificate
    for the pushforward and Segre conventions.
    """
    ring = ProjBundleChowRing(n, cotangent_chern(n), n)
    coeffs = bundle_coefficients(cy, n)
    elem = ring.element(coeffs)
    direct = ChowClass.zero(n)
    for c in coeffs:
        direct = direct + c
    return shadow(ring, elem), direct
