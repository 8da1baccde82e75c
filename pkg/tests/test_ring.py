from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass.errors import ParseError, UsageError
from charclass.ring import (GF, QQ, Field, MonomialOrder, VarContext, monomials_of_degree,
                            partial, poly_arith, random_form, substitute)

R = VarContext.bigraded(["x", "y", "z"], [])
x, y, z = R.gens()


def test_arith_examples():
    assert poly_arith(x + y, x - y, "add") == 2 * x
    assert poly_arith(x + y, x - y, "mul") == x**2 - y**2
    F5 = VarContext.bigraded(["x"], [], GF(5))
    X = F5.gen("x")
    assert (2 * X) * (3 * X) == X**2


def test_context_mismatch():
    S = VarContext.bigraded(["u", "v"], [])
    with pytest.raises(UsageError):
        poly_arith(x, S.gen("u"), "add")


def test_partials():
    assert partial(R.parse("x^3 - y^2*z"), "x") == 3 * x**2
    assert partial(x * y, 0) == y
    assert partial(R.parse("x^4+x^3*y^2+y^6"), "y") == R.parse("2*x^3*y + 6*y^5")


def test_substitute():
    assert substitute(x**2 + y**2, {"x": 1}) == 1 + y**2
    assert substitute(x * y, {"x": 0}).is_zero()
    F = x**3
    euler = sum((R.gen(i) * F.partial(i) for i in range(3)), R.zero())
    assert euler == 3 * x**3


def test_random_form_shape_and_determinism():
    C = VarContext.bigraded(["x0", "x1", "x2"], ["T0", "T1", "T2"])
    f = random_form(C, (1, 0), seed=7)
    assert len(f) == 3 and f.bidegree() == (1, 0)
    assert all(0 < abs(int(c)) <= 100 for c in f.terms.values())
    assert random_form(C, (1, 0), seed=7) == f
    g = random_form(C, (0, 1), seed=7)
    assert set(g.variables()) == {3, 4, 5}  # indices of T0, T1, T2
    with pytest.raises(UsageError):
        random_form(C, (1, 0), seed=1, bound=0)


def test_field_normalization():
    assert QQ(Fraction(6, -4)) == QQ(Fraction(-3, 2))
    assert GF(7)(-1) == 6
    assert Field.from_spec("fp:2147483647").p == 2**31 - 1
    with pytest.raises(UsageError):
        Field.from_spec("fp:12")
    with pytest.raises(UsageError):
        Field.from_spec("r")


def test_parse_roundtrip():
    f = R.parse("x^3 - 2*x*y^2*z + 1/2*z^3 + 7")
    assert R.parse(str(f)) == f
    assert R.parse("2x(y+1)") == 2 * x * y + 2 * x
    assert R.parse("x**2") == x**2
    with pytest.raises(ParseError):
        R.parse("x + ")
    with pytest.raises(UsageError):
        R.parse("w")


def test_euler_identity_fixed():
    F = R.parse("x^3 + y^3 - x*y*z")
    assert sum((R.gen(i) * F.partial(i) for i in range(3)), R.zero()) == 3 * F


# property-based --------------------------------------------------------------

coeffs = st.integers(-5, 5)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, max_size=5).map(lambda d: R.from_terms(d.items()))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == R.zero()


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(monos.filter(lambda e: sum(e) == 3), st.integers(-9, 9), min_size=1, max_size=6))
def test_euler_identity_random(terms):
    F = R.from_terms(terms.items())
    if F.is_zero():
        return
    assert sum((R.gen(i) * F.partial(i) for i in range(3)), R.zero()) == 3 * F


ORDERS = [MonomialOrder.grevlex(3), MonomialOrder.lex(3), MonomialOrder.elimination(3, [0])]


@settings(max_examples=80, deadline=None)
@given(monos, monos, monos)
def test_orders_multiplicative_and_well_founded(u, v, w):
    one = (0, 0, 0)
    for order in ORDERS:
        c = order.compare(u, v)
        uw = tuple(a + b for a, b in zip(u, w))
        vw = tuple(a + b for a, b in zip(v, w))
        assert order.compare(uw, vw) == c
        if u != one:
            assert order.compare(one, u) < 0
        assert (c == 0) == (u == v)


def test_monomials_of_degree():
    assert sorted(monomials_of_degree(2, 2)) == [(0, 2), (1, 1), (2, 0)]
