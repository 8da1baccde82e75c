import pytest

from charclass.blowup import (principal_transform, proj_saturation, qsym_affine, rees_ideal,
                              sym_ideal, weak_linearity_check, xcondition_check)
from charclass.errors import PreconditionError, UsageError
from charclass.ideal import Ideal, krull_dim
from charclass.ring import VarContext

R = VarContext.bigraded(["x", "y"], [])
x, y = R.gens()


def _gens(pres):
    return pres.ctx.gens()


def test_rees_of_maximal_ideal():
    pres = rees_ideal([x, y])
    X, Y, T0, T1 = _gens(pres)
    assert pres.ideal == Ideal([Y * T0 - X * T1], pres.ctx)
    assert pres.generator_degrees == (1, 1)


def test_sym_and_qsym_of_node():
    # (x, y) over R/(xy): Sym misses T0*T1, which the Rees relations supply
    sym = sym_ideal([x, y], [x * y])
    X, Y, T0, T1 = _gens(sym)
    assert sym.ideal == Ideal([X * Y, Y * T0, X * T1], sym.ctx)
    rees = rees_ideal([x, y], [x * y])
    assert rees.ideal.contains(T0 * T1)
    assert not sym.ideal.contains(T0 * T1)
    q = qsym_affine([x, y], [x * y])
    assert sym.ideal.is_subset(q.ideal) and q.ideal.is_subset(rees.ideal)


def test_qsym_equals_rees_without_relations():
    for gens in ([x, y], [x**2, x * y, y**2], [x**2, y**3]):
        assert qsym_affine(gens).ideal == rees_ideal(gens).ideal


def test_complete_intersection_sym_is_rees():
    # regular sequences: Sym and Rees coincide even before saturation
    assert sym_ideal([x**2, y**3]).ideal == rees_ideal([x**2, y**3]).ideal
    C = VarContext.bigraded(["a", "b", "c"], [])
    a, b, c = C.gens()
    seq = [a, b**2, c + a * b]
    assert sym_ideal(seq).ideal == rees_ideal(seq).ideal
    assert qsym_affine(seq).ideal == sym_ideal(seq).ideal


def test_weak_linearity():
    assert weak_linearity_check([x, y])
    assert not weak_linearity_check([x**2, x * y, y**2])


def test_proj_saturation_removes_irrelevant_components():
    gens = [x**2, x * y, y**2]
    sym = sym_ideal(gens)
    rees = rees_ideal(gens)
    X, Y, T0, T1, T2 = _gens(sym)
    conic = T1**2 - T0 * T2
    affine = proj_saturation(sym.ideal, projective=False)
    assert affine.contains(X * conic) and not affine.contains(conic)
    assert affine != proj_saturation(rees.ideal, projective=False)
    # the discrepancy is supported on x = y = 0, so it disappears projectively
    assert proj_saturation(sym.ideal) == proj_saturation(rees.ideal)
    assert weak_linearity_check(gens, projective=True)


def test_principal_transform_examples():
    C = VarContext.bigraded(["x", "y", "z"], [])
    X, Y, Z = C.gens()
    node = Y**2 * Z - X**2 * (X + Z)
    strict = principal_transform(node, [X, Y], projective=False)
    # generic fibres are points, so only the T-scaling adds a dimension
    assert krull_dim(strict) == krull_dim(Ideal([node], C)) + 1
    with pytest.raises(PreconditionError) as err:
        principal_transform(X + 1, [X, Y])
    assert err.value.code == "NOT_CONTAINED"


def test_xcondition_on_nodal_cubic():
    C = VarContext.bigraded(["x0", "x1", "x2"], [])
    F = C.parse("x0^3+x1^3-x0*x1*x2")
    verdict = xcondition_check(F)
    assert bool(verdict) is verdict.holds
    if verdict.holds:
        assert verdict.witness is None and verdict.sym == verdict.qsym
    else:
        assert verdict.witness is not None


def test_generators_must_share_context():
    S = VarContext.bigraded(["u"], [])
    with pytest.raises(UsageError):
        rees_ideal([x, S.gen("u")])
    with pytest.raises(UsageError):
        sym_ideal([])


def test_fresh_t_names():
    C = VarContext.bigraded(["T0", "x"], [])
    pres = rees_ideal(list(C.gens()))
    assert len(set(pres.ctx.names)) == pres.ctx.nvars
    assert pres.tvars() and pres.xvars() == C.block_indices(0)
