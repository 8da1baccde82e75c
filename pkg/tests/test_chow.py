from fractions import Fraction

import pytest

from charclass.chow import (ChowClass, ProjBundleChowRing, bundle_coefficients, cmather_class,
                            cotangent_chern, csm_class, euler_characteristic, fulton_class,
                            fulton_johnson_class, segre_hat, segre_ma_sm, shadow_consistency,
                            tangent_chern)
from charclass.cycles import charcycle_ideal, conormal_ideal, make_hypersurface
from charclass.errors import UsageError

from corpus import ALL, CONIC, NODAL, PLANE_CURVES, QUADRIC_SURFACE, SINGULAR_CURVES


def ids(fixtures):
    return [f.name for f in fixtures]


# arithmetic in A(P^n) ---------------------------------------------------------

def test_class_arithmetic():
    H = ChowClass.hyperplane(2)
    assert tuple(H * H) == (0, 0, 1)
    assert tuple(H**3) == (0, 0, 0)
    assert tuple((1 + H) ** 3) == (1, 3, 3)
    assert tuple(tangent_chern(3)) == (1, 4, 6, 4)
    assert tuple(3 - H) == (3, -1, 0)


def test_inverse_and_integrality():
    a = ChowClass(3, (1, 2))
    assert tuple(a.inverse()) == (1, -2, 4, -8)
    assert tuple(a * a.inverse()) == (1, 0, 0, 0)
    half = ChowClass(2, (2,)).inverse()
    assert half[0] == Fraction(1, 2) and not half.is_integral()
    with pytest.raises(ArithmeticError):
        half.integral()
    with pytest.raises(ZeroDivisionError):
        ChowClass.hyperplane(2).inverse()
    assert half.to_list() == ["1/2", 0, 0]


def test_mixed_spaces_rejected():
    with pytest.raises(UsageError):
        ChowClass.one(2) + ChowClass.one(3)


def test_str_and_truncate():
    c = ChowClass(2, (1, 3, 3))
    assert str(c) == "1 + 3*H + 3*H^2"
    assert tuple(c.truncate(1)) == (0, 3, 3)
    assert str(ChowClass.zero(1)) == "0"


def test_cotangent_chern():
    # c(T*P^2) = (1-H)^3 ; the twist by O(1) gives (1+0H)^3/(1+H) = 1 - H + H^2
    assert tuple(cotangent_chern(2)) == (1, -3, 3)
    assert tuple(cotangent_chern(2, 1)) == (1, -1, 1)


# projective bundle ring -------------------------------------------------------

@pytest.mark.parametrize("twist", [0, 1, 2, 3])
def test_shadow_of_basis_powers(twist):
    ring = ProjBundleChowRing(2, cotangent_chern(2, twist), 2)
    for j in range(ring.e + 1):
        assert tuple(ring.shadow(ring.xi_power(j))) == (1, 0, 0)


@pytest.mark.parametrize("twist", [0, 2])
def test_shadow_past_the_rank(twist):
    # xi^(e+1) reduces through the Grothendieck relation; its shadow is 1 - c(E)
    ring = ProjBundleChowRing(2, cotangent_chern(2, twist), 2)
    expected = ChowClass.one(2) - ring.chern
    assert ring.shadow(ring.xi_power(ring.e + 1)) == expected


def test_grothendieck_relation():
    c = cotangent_chern(2, 1)
    ring = ProjBundleChowRing(2, c, 2)
    lhs = ring.xi_power(2)
    # xi^2 = -c1 xi - c2
    assert lhs[1] == ChowClass(2, (0, -c[1]))
    assert lhs[0] == ChowClass(2, (0, 0, -c[2]))


def test_line_bundle_pushforward_gives_segre():
    ring = ProjBundleChowRing(2, ChowClass(2, (1, 3)), 1)
    pushed = [tuple(ring.pushforward(ring.xi_power(i))) for i in range(3)]
    assert pushed == [(1, 0, 0), (0, -3, 0), (0, 0, 9)]


# Segre-type classes ----------------------------------------------------------

def test_conic_segre_classes():
    h = make_hypersurface(CONIC.F())
    con, ch = conormal_ideal(h), charcycle_ideal(h)
    assert tuple(segre_hat(con, 2)) == (0, 2, 4)
    assert tuple(segre_ma_sm(ch, h, "SM")) == (0, 2, -4)
    assert tuple(csm_class(h)) == (0, 2, 2)
    with pytest.raises(UsageError):
        segre_ma_sm(con, h, "SM")
    with pytest.raises(UsageError):
        segre_ma_sm(con, h, "Chern")


@pytest.mark.parametrize("fx", PLANE_CURVES, ids=ids(PLANE_CURVES))
def test_plane_curve_classes(fx):
    h = make_hypersurface(fx.F())
    csm = csm_class(h)
    assert tuple(csm) == fx.expected_csm()
    assert euler_characteristic(h, csm) == fx.expected_chi()
    cma = cmather_class(h)
    assert cma[1] == fx.d
    assert cma[2] - csm[2] == fx.expected_mather_minus_sm()


@pytest.mark.parametrize("fx", ALL, ids=ids(ALL))
def test_fulton_classes_agree_for_hypersurfaces(fx):
    h = make_hypersurface(fx.F())
    assert fulton_class(h) == fulton_johnson_class(h)
    assert fulton_class(h)[1] == fx.d


def test_quadric_surface_classes():
    h = make_hypersurface(QUADRIC_SURFACE.F())
    for c in (csm_class, cmather_class, fulton_class, fulton_johnson_class):
        assert tuple(c(h)) == (0, 2, 4, 4)


# shadows of the cycles -----------------------------------------------------

def _signed(cls, n):
    # flip every other codimension inside X (X has codimension 1)
    return ChowClass(n, tuple(c if a % 2 else -c for a, c in enumerate(cls)))


@pytest.mark.parametrize("fx", ALL, ids=ids(ALL))
def test_shadow_routes_agree(fx):
    h = make_hypersurface(fx.F())
    for cy in (conormal_ideal(h), charcycle_ideal(h)):
        via_ring, direct = shadow_consistency(cy, h.n)
        assert via_ring == direct


@pytest.mark.parametrize("fx", [NODAL, CONIC, QUADRIC_SURFACE] + SINGULAR_CURVES[1:],
                         ids=ids([NODAL, CONIC, QUADRIC_SURFACE] + SINGULAR_CURVES[1:]))
def test_shadow_is_signed_class(fx):
    # the shadow of the conormal (characteristic) cycle is the signed Mather (CSM) class
    h = make_hypersurface(fx.F())
    con, ch = conormal_ideal(h), charcycle_ideal(h)
    assert shadow_consistency(con, h.n)[1] == _signed(cmather_class(h, con), h.n)
    assert shadow_consistency(ch, h.n)[1] == _signed(csm_class(h, ch), h.n)


def test_bundle_coefficients_of_nodal_conormal():
    h = make_hypersurface(NODAL.F())
    C = bundle_coefficients(conormal_ideal(h), 2)
    assert [tuple(c) for c in C] == [(0, 0, -2), (0, 3, 0)]
