"""``charclass`` command line: characteristic classes and blow-up algebras of hypersurfaces.

JSON reports go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 mathematical precondition failure, 2 step budget exhausted, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from contextlib import contextmanager

from .blowup import (proj_saturation, qsym_affine, rees_ideal, sym_ideal,
                     weak_linearity_check, xcondition_check)
from .budget import step_budget
from .chow import (cmather_class, csm_class, euler_characteristic, fulton_class,
                   fulton_johnson_class)
from .cycles import charcycle_ideal, conormal_ideal, cycle_cross_check, make_hypersurface
from .errors import CharclassError, CrossCheckFailure, UsageError
from .ideal import bidegrees_by_sections
from .ring import Field, VarContext

SCHEMA_VERSION = 1

COMMANDS = ("csm", "cmather", "fulton", "fj", "conormal", "charcycle", "rees", "sym",
            "qsym", "xcond", "weaklin", "crosscheck", "report")
BLOWUP_COMMANDS = ("rees", "sym", "qsym", "xcond", "weaklin")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("-e", "--expr", required=True, help="polynomial, e.g. 'x0^3+x1^3-x0*x1*x2'")
        p.add_argument("--vars", help="comma-separated variables (default: as they appear, naturally sorted)")
        p.add_argument("--field", default="q", help="q (rationals) or fp:<prime>")
        p.add_argument("--seed", type=_u64, default=0, help="seed for randomized cross-checks")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--budget", type=_positive, help="reduction-step budget")
        p.add_argument("--no-timings", action="store_true", help="omit per-stage timings")
        if name in BLOWUP_COMMANDS:
            p.add_argument("--affine", action="store_true", help="treat the input as affine")
    return parser


def _u64(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def _natural_key(name):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def infer_variables(expr: str):
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", expr))
    return sorted(names, key=_natural_key)


def _ideal_json(ideal):
    return {"variables": list(ideal.ctx.names), "generators": [str(g) for g in ideal.gb().generators]}


class Run:
    """One invocation: parsed input, timings and the report being filled in."""

    def __init__(self, args):
        self.args = args
        names = [v.strip() for v in args.vars.split(",")] if args.vars else infer_variables(args.expr)
        if not names or any(not v for v in names):
            raise UsageError("no variables given")
        if len(set(names)) != len(names):
            raise UsageError("duplicate variable names")
        self.field = Field.from_spec(args.field)
        self.ctx = VarContext.bigraded(names, [], self.field)
        self.F = self.ctx.parse(args.expr)
        self.affine = bool(getattr(args, "affine", False))
        self.timings = {}
        self.report = {
            "schema": SCHEMA_VERSION,
            "command": args.command,
            "input": {
                "polynomial": args.expr,
                "variables": names,
                "field": args.field,
                "seed": args.seed,
                "affine": self.affine,
            },
            "bidegrees": {"conormal": None, "characteristic": None},
            "classes": {"csm": None, "cmather": None, "fulton": None, "fulton_johnson": None},
            "euler_characteristic": None,
            "verdicts": {"reduced": None, "xcondition": None, "weak_linearity": None,
                         "printran_crosscheck": None},
            "timings_ms": self.timings,
        }
        self._hyp = None
        self._cycles = {}

    @contextmanager
    def stage(self, name):
        start = time.perf_counter()
        yield
        if not self.args.no_timings:
            self.timings[name] = round((time.perf_counter() - start) * 1000, 3)

    # cached pipeline pieces

    def hypersurface(self):
        if self._hyp is None:
            with self.stage("validate"):
                self._hyp = make_hypersurface(self.F)
            self.report["verdicts"]["reduced"] = True
        return self._hyp

    def cycle(self, kind):
        if kind not in self._cycles:
            h = self.hypersurface()
            with self.stage(kind):
                cy = conormal_ideal(h) if kind == "conormal" else charcycle_ideal(h)
            self._cycles[kind] = cy
            self.report["bidegrees"][kind] = list(cy.bidegrees)
        return self._cycles[kind]

    def singular_generators(self):
        F = self.F
        parts = [F.partial(i) for i in range(self.ctx.nvars)]
        return ([F] + parts) if self.affine else parts

    # subcommands

    def csm(self):
        cy = self.cycle("characteristic")
        with self.stage("csm"):
            c = csm_class(self.hypersurface(), cy)
        self.report["classes"]["csm"] = c.to_list()
        self.report["euler_characteristic"] = euler_characteristic(self.hypersurface(), c)

    def cmather(self):
        cy = self.cycle("conormal")
        with self.stage("cmather"):
            c = cmather_class(self.hypersurface(), cy)
        self.report["classes"]["cmather"] = c.to_list()

    def fulton(self):
        with self.stage("fulton"):
            c = fulton_class(self.hypersurface())
        self.report["classes"]["fulton"] = c.to_list()

    def fj(self):
        with self.stage("fulton_johnson"):
            c = fulton_johnson_class(self.hypersurface())
        self.report["classes"]["fulton_johnson"] = c.to_list()

    def conormal(self):
        self.report["presentation"] = {"kind": "Conormal", **_ideal_json(self.cycle("conormal").ideal)}

    def charcycle(self):
        self.report["presentation"] = {"kind": "Characteristic",
                                       **_ideal_json(self.cycle("characteristic").ideal)}

    def _check_blowup_input(self):
        if self.F.is_zero():
            raise UsageError("the zero polynomial does not define a hypersurface", code="SHAPE")
        if not self.affine:
            self.hypersurface()

    def _presentation(self, pres):
        ideal = proj_saturation(pres.ideal, projective=not self.affine)
        self.report["presentation"] = {"kind": pres.kind, **_ideal_json(ideal)}

    def rees(self):
        self._check_blowup_input()
        with self.stage("rees"):
            pres = rees_ideal(self.singular_generators())
        self._presentation(pres)

    def sym(self):
        self._check_blowup_input()
        parts = [self.F.partial(i) for i in range(self.ctx.nvars)]
        with self.stage("sym"):
            pres = sym_ideal(parts, [self.F])
        self._presentation(pres)

    def qsym(self):
        self._check_blowup_input()
        parts = [self.F.partial(i) for i in range(self.ctx.nvars)]
        with self.stage("qsym"):
            pres = qsym_affine(parts, [self.F])
        self._presentation(pres)

    def xcond(self):
        self._check_blowup_input()
        with self.stage("xcondition"):
            verdict = xcondition_check(self.F, projective=not self.affine)
        self.report["verdicts"]["xcondition"] = verdict.holds
        self.report["witness"] = None if verdict.witness is None else str(verdict.witness)

    def weaklin(self):
        self._check_blowup_input()
        with self.stage("weak_linearity"):
            ok = weak_linearity_check(self.singular_generators(), projective=not self.affine)
        self.report["verdicts"]["weak_linearity"] = ok

    def crosscheck(self):
        h = self.hypersurface()
        with self.stage("crosscheck"):
            rep = cycle_cross_check(h, raise_on_mismatch=False)
        self.report["bidegrees"]["characteristic"] = list(rep.charcycle_bidegrees)
        self.report["verdicts"]["printran_crosscheck"] = rep.agree
        if not rep.agree:
            raise CrossCheckFailure(f"two-path mismatch: {rep.charcycle_bidegrees} vs "
                                    f"{rep.transform_bidegrees} (first difference {rep.first_difference})")

    def report_all(self):
        self.csm()
        self.cmather()
        self.fulton()
        self.fj()
        self.xcond()
        self.weaklin()
        self.crosscheck()
        h = self.hypersurface()
        with self.stage("sections"):
            for kind in ("conormal", "characteristic"):
                cy = self._cycles[kind]
                md = bidegrees_by_sections(cy.ideal, h.n - 1, seed=self.args.seed)
                if md != cy.multidegree:
                    raise CrossCheckFailure(f"{kind} cycle: multidegree {cy.multidegree} "
                                            f"but linear sections give {md}")

    def execute(self):
        action = {"report": self.report_all}.get(self.args.command) or getattr(self, self.args.command)
        if self.args.budget is not None:
            with step_budget(self.args.budget):
                action()
        else:
            action()
        return self.report


def render_text(report) -> str:
    lines = [f"command: {report['command']}",
             f"polynomial: {report['input']['polynomial']}",
             f"variables: {','.join(report['input']['variables'])}",
             f"field: {report['input']['field']}",
             f"seed: {report['input']['seed']}"]
    for kind, vec in report["bidegrees"].items():
        if vec is not None:
            lines.append(f"bidegrees[{kind}]: {' '.join(map(str, vec))}")
    for kind, vec in report["classes"].items():
        if vec is not None:
            lines.append(f"{kind}: {' '.join(map(str, vec))}")
    if report["euler_characteristic"] is not None:
        lines.append(f"euler_characteristic: {report['euler_characteristic']}")
    for kind, val in report["verdicts"].items():
        if val is not None:
            lines.append(f"{kind}: {str(val).lower()}")
    if report.get("witness"):
        lines.append(f"witness: {report['witness']}")
    pres = report.get("presentation")
    if pres:
        lines.append(f"presentation[{pres['kind']}] in {','.join(pres['variables'])}:")
        lines.extend(f"  {g}" for g in pres["generators"])
    for stage, ms in report["timings_ms"].items():
        lines.append(f"time[{stage}]: {ms} ms")
    return "\n".join(lines)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    command = next((a for a in argv if a in COMMANDS), None)
    fmt = "text" if "text" in argv and "--format" in argv else "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        report = Run(args).execute()
    except CharclassError as exc:
        print(f"charclass: error [{exc.code}]: {exc}", file=sys.stderr)
        if fmt == "json":
            print(json.dumps({"schema": SCHEMA_VERSION, "command": command,
                              "error": {"code": exc.code, "message": str(exc)}}))
        return exc.exit_code
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
