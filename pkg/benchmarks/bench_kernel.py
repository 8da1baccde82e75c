"""Compare the compiled and pure-Python reduction kernels.

Two measurements:

* raw ``reduce`` calls on random dense inputs, both kernels in-process;
* an end-to-end pipeline (Gröbner-heavy CSM computation) in two
  subprocesses, one with ``CHARCLASS_PURE_PYTHON=1``.

Usage: ``python benchmarks/bench_kernel.py [--repeat N] [--field 0|P]``
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from gmpy2 import mpq

from charclass import _kernel_py
from charclass.ring import MonomialOrder

try:
    from charclass import _kernel as _compiled
except ImportError:
    _compiled = None

NVARS = 4
ORDER = MonomialOrder.grevlex(NVARS)

PIPELINE = """
import time
from charclass import kernel
from charclass.ring import VarContext
from charclass.cycles import make_hypersurface
from charclass.chow import csm_class, cmather_class
ctx = VarContext.bigraded(['x0', 'x1', 'x2'], [])
start = time.perf_counter()
for text in {polys!r}:
    h = make_hypersurface(ctx.parse(text))
    csm_class(h), cmather_class(h)
print(kernel.IMPLEMENTATION, time.perf_counter() - start)
"""

CURVES = ["x0^3+x1^3-x0*x1*x2", "x1^2*x2-x0^3", "x0^4+x1^4+x2^4", "x0*x1*(x0+x1)"]


def _random_poly(rng, p, nterms, maxdeg):
    terms = {}
    while len(terms) < nterms:
        e = tuple(rng.randint(0, maxdeg) for _ in range(NVARS))
        terms[e] = rng.randint(1, p - 1) if p else mpq(rng.randint(-50, 50) or 1, rng.randint(1, 9))
    return terms


def _monic(terms, p):
    lead = min(terms, key=ORDER.neg_key)
    c = terms[lead]
    inv = pow(c, -1, p) if p else 1 / c
    tail = sorted(((e, v * inv % p if p else v * inv) for e, v in terms.items() if e != lead),
                  key=lambda t: ORDER.neg_key(t[0]))
    return lead, tail


def workload(p, seed=0, n=40):
    rng = random.Random(seed)
    basis = [_monic(_random_poly(rng, p, 6, 2), p) for _ in range(6)]
    targets = [_random_poly(rng, p, 25, 5) for _ in range(n)]
    return basis, targets


def bench_reduce(mod, basis, targets, p, repeat):
    def run():
        for f in targets:
            mod.reduce(f, basis, ORDER.neg_key, p, True, -1, None)
    return min(timeit.repeat(run, number=1, repeat=repeat))


def bench_pipeline(pure):
    env = dict(os.environ)
    env.pop("CHARCLASS_PURE_PYTHON", None)
    if pure:
        env["CHARCLASS_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", PIPELINE.format(polys=CURVES)], env=env,
                         capture_output=True, text=True, check=True)
    name, seconds = out.stdout.split()
    return name, float(seconds)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--field", type=int, default=2**31 - 1, help="0 for rationals, else a prime")
    args = ap.parse_args(argv)

    basis, targets = workload(args.field)
    t_py = bench_reduce(_kernel_py, basis, targets, args.field, args.repeat)
    print(f"reduce  python  {t_py * 1e3:9.2f} ms")
    if _compiled is None:
        print("reduce  cython  (extension not built)")
    else:
        t_cy = bench_reduce(_compiled, basis, targets, args.field, args.repeat)
        print(f"reduce  cython  {t_cy * 1e3:9.2f} ms   speedup {t_py / t_cy:5.2f}x")

    results = dict(bench_pipeline(pure) for pure in (True, False))
    for name, seconds in results.items():
        print(f"pipeline {name:7s}{seconds * 1e3:9.2f} ms")
    if len(results) == 2:
        print(f"pipeline speedup {results['python'] / results['cython']:5.2f}x")


if __name__ == "__main__":
    main()
