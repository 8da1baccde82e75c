import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass.budget import step_budget
from charclass.errors import BudgetExhausted
from charclass.groebner import eliminate, groebner_basis, is_groebner, normal_form, syzygies
from charclass.ideal import Ideal, hilbert_series
from charclass.ring import GF, MonomialOrder, VarContext

R = VarContext.bigraded(["x", "y"], [])
x, y = R.gens()


def test_basis_examples():
    assert groebner_basis([x]).generators == (x,)
    gb = groebner_basis([x**2 + y**2, x * y])
    assert set(gb.generators) == {x**2 + y**2, x * y, y**3}
    assert is_groebner(gb)
    assert groebner_basis([x - 1, x]).is_unit


def test_basis_is_reduced_and_monic():
    gb = groebner_basis([x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x])
    leads = gb.leading_monomials()
    for g in gb.generators:
        lead, c = g.leading_term(gb.order)
        assert c == 1
        for other in leads:
            if other != lead:
                assert not any(all(a <= b for a, b in zip(other, e)) for e in g.terms)
    assert is_groebner(gb)


def test_normal_form_examples():
    gb = groebner_basis([x])
    assert normal_form(x**2 + y**2, gb) == y**2
    gb = groebner_basis([x**2 + y**2, x * y])
    assert normal_form(x * (x * y), gb).is_zero()
    C = VarContext.bigraded(["x0", "x1", "x2"], [])
    F = C.parse("x0^3+x1^3-x0*x1*x2")
    jac = groebner_basis([F.partial(i) for i in range(3)])
    assert normal_form(F, jac).is_zero()


def test_eliminate_examples():
    B = VarContext.bigraded(["x", "y"], ["T0", "T1", "T2"])
    C = B.extend(front=["t"])
    t, X, Y, T0, T1, T2 = C.gens()
    assert eliminate([T0 - t * X], ["t"]) == []
    assert eliminate([T0 - t * X, T1 - t * Y], ["t"]) == [Y * T0 - X * T1]
    kept = Ideal(eliminate([T0 - t * X**2, T1 - t * X * Y, T2 - t * Y**2], ["t"]), C)
    claimed = Ideal([T0 * T2 - T1**2, Y * T0 - X * T1, Y * T1 - X * T2], C)
    assert kept == claimed
    assert hilbert_series(kept.map_to(B)) == hilbert_series(claimed.map_to(B))


def test_eliminate_empty_block_is_gb():
    gens = [x**2 + y**2, x * y]
    assert Ideal(eliminate(gens, []), R) == Ideal(gens, R)


def test_syzygy_examples():
    rows = syzygies([x, y]).rows
    assert len(rows) == 1 and rows[0] in ((y, -x), (-y, x))
    syz = syzygies([x**2, x * y, y**2])
    assert syz.check()
    T = VarContext.bigraded(["x", "y"], ["T0", "T1", "T2"])
    forms = Ideal([sum((a.map_to(T) * T.gen(2 + i) for i, a in enumerate(row)), T.zero())
                   for row in syz.rows], T)
    X, Y, T0, T1, T2 = T.gens()
    assert forms == Ideal([Y * T0 - X * T1, Y * T1 - X * T2], T)


def test_syzygies_over_quotient():
    syz = syzygies([x, y, x * y])
    assert syz.check()
    T = VarContext.bigraded(["x", "y"], ["T0", "T1"])
    X, Y, T0, T1 = T.gens()
    forms = Ideal([r[0].map_to(T) * T0 + r[1].map_to(T) * T1 for r in syz.rows] + [X * Y], T)
    assert forms.contains(Y * T0) and forms.contains(X * T1)


def test_budget_exhaustion_is_loud():
    C = VarContext.bigraded(["a", "b", "c", "d"], [])
    gens = [C.parse(s) for s in ("a^3-b*c*d", "b^3-a*c*d", "c^3-a*b*d", "d^3-a*b*c")]
    with pytest.raises(BudgetExhausted):
        with step_budget(3):
            groebner_basis(gens)


def test_order_determinism():
    gens = [x**3 - y, x * y**2 - 1]
    a = groebner_basis(gens, MonomialOrder.lex(2))
    b = groebner_basis(list(reversed(gens)), MonomialOrder.lex(2))
    assert a.generators == b.generators


# property-based --------------------------------------------------------------

S = VarContext.bigraded(["a", "b", "c"], [], GF(32003))
monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monos, st.integers(-20, 20), min_size=1, max_size=4).map(
    lambda d: S.from_terms(d.items()))


@settings(max_examples=30, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3), polys, polys)
def test_certificate_and_membership_linearity(gens, f, g):
    gens = [h for h in gens if not h.is_zero()]
    if not gens:
        return
    gb = groebner_basis(gens)
    assert is_groebner(gb)
    for h in gens:
        assert normal_form(h, gb).is_zero()
    lin = normal_form(f + g, gb) - normal_form(f, gb) - normal_form(g, gb)
    assert normal_form(lin, gb).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3))
def test_syzygies_annihilate(gens):
    assert syzygies(gens).check()
