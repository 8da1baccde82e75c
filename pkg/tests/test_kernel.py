"""The compiled and pure-Python reduction kernels must agree exactly."""

import os
import subprocess
import sys

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass import _kernel_py, kernel
from charclass.ring import MonomialOrder

compiled = pytest.importorskip("charclass._kernel")

ORDER = MonomialOrder.grevlex(3)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


def _monic_basis(polys, p):
    basis = []
    for terms in polys:
        lead = min(terms, key=ORDER.neg_key)
        c = terms[lead]
        inv = pow(c, -1, p) if p else 1 / c
        tail = sorted(((e, v * inv % p if p else v * inv) for e, v in terms.items() if e != lead),
                      key=lambda t: ORDER.neg_key(t[0]))
        basis.append((lead, tail))
    return basis


def _polys(p):
    coeff = st.integers(1, p - 1) if p else st.integers(-30, 30).filter(bool).map(mpq)
    return st.dictionaries(exps, coeff, min_size=1, max_size=5)


@pytest.mark.parametrize("p", [0, 32003, 2**31 - 1])
def test_reduce_parity(p):
    @settings(max_examples=60, deadline=None)
    @given(_polys(p), st.lists(_polys(p), min_size=1, max_size=4), st.booleans())
    def check(f, gens, full):
        basis = _monic_basis(gens, p)
        q1, q2 = [], []
        r1 = compiled.reduce(f, basis, ORDER.neg_key, p, full, -1, q1)
        r2 = _kernel_py.reduce(f, basis, ORDER.neg_key, p, full, -1, q2)
        assert r1 == r2
        assert q1 == q2

    check()


@pytest.mark.parametrize("p", [0, 32003])
def test_spoly_and_divides_parity(p):
    @settings(max_examples=60, deadline=None)
    @given(_polys(p), _polys(p), exps, exps)
    def check(f, g, a, b):
        (la, ta), (lb, tb) = _monic_basis([f, g], p)
        assert compiled.spoly(la, ta, lb, tb, p) == _kernel_py.spoly(la, ta, lb, tb, p)
        assert compiled.divides(a, b) == _kernel_py.divides(a, b)

    check()


def test_step_limit_parity():
    f = {(3, 0, 0): 1}
    basis = [((1, 0, 0), [((0, 1, 0), 1)])]
    for mod in (compiled, _kernel_py):
        with pytest.raises(mod.StepLimit):
            mod.reduce(f, basis, ORDER.neg_key, 7, True, 2, None)


def test_selected_kernel_is_compiled():
    if os.environ.get("CHARCLASS_PURE_PYTHON"):
        assert kernel.IMPLEMENTATION == "python"
    else:
        assert kernel.IMPLEMENTATION == "cython"


def test_fallback_pipeline_matches():
    code = ("from charclass import kernel;"
            "from charclass.ring import VarContext;"
            "from charclass.cycles import make_hypersurface;"
            "from charclass.chow import csm_class;"
            "h=make_hypersurface(VarContext.bigraded(['x0','x1','x2'],[]).parse('x0^3+x1^3-x0*x1*x2'));"
            "print(kernel.IMPLEMENTATION, list(csm_class(h)))")
    env = dict(os.environ, CHARCLASS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split(None, 1) == ["python", "[0, 3, 1]\n"]
