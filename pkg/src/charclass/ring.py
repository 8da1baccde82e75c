"""Exact coefficient fields, variable contexts, monomial orders and sparse polynomials.

Polynomials are immutable maps from exponent tuples to nonzero coefficients.
Rational coefficients are ``gmpy2.mpq`` values (always in lowest terms);
prime-field coefficients are plain ints reduced to ``[0, p)``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import gmpy2
from gmpy2 import mpq

from .errors import ParseError, UsageError

__all__ = [
    "Field", "QQ", "GF", "VarContext", "MonomialOrder", "Polynomial",
    "poly_arith", "partial", "substitute", "random_form", "parse_polynomial",
    "monomials_of_degree",
]


class Field:
    """Coefficient field: rationals (``p == 0``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        p = int(p)
        if p:
            if p >= 2**62:
                raise UsageError(f"prime {p} exceeds 2^62")
            if not gmpy2.is_prime(p):
                raise UsageError(f"{p} is not prime")
        self.p = p

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value):
        p = self.p
        if p == 0:
            if isinstance(value, str):
                return mpq(value)
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, (Fraction, type(mpq(0)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        if isinstance(value, type(gmpy2.mpz(0))):
            return int(value) % p
        raise TypeError(f"cannot convert {value!r} into {self}")

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(int(a), -1, self.p)
        return 1 / mpq(a)

    def to_python(self, a):
        """Plain int when integral, else a ``Fraction``; F_p values are ints."""
        if self.p:
            return int(a)
        a = mpq(a)
        if a.denominator == 1:
            return int(a.numerator)
        return Fraction(int(a.numerator), int(a.denominator))

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def from_spec(cls, text: str) -> "Field":
        """Parse ``q`` or ``fp:<prime>``."""
        text = text.strip().lower()
        if text in ("q", "qq"):
            return QQ
        if text.startswith("fp:"):
            try:
                return cls(int(text[3:]))
            except ValueError:
                raise UsageError(f"bad prime in field spec {text!r}") from None
        raise UsageError(f"unknown field {text!r} (expected q or fp:<prime>)")


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order given by ordered blocks of variables.

    Each block is ``(kind, indices)`` with kind ``"grevlex"`` or ``"lex"``;
    earlier blocks dominate.  ``neg_key(e)`` maps an exponent tuple to a tuple
    that sorts *ascending* exactly when the monomials sort *descending*, so a
    min-heap on ``neg_key`` pops the leading monomial first.
    """

    __slots__ = ("nvars", "blocks", "neg_key", "_id")

    def __init__(self, blocks, nvars: int):
        blocks = tuple((kind, tuple(idx)) for kind, idx in blocks)
        seen = sorted(i for _, idx in blocks for i in idx)
        if seen != list(range(nvars)):
            raise UsageError("order blocks must partition the variables")
        for kind, _ in blocks:
            if kind not in ("grevlex", "lex"):
                raise UsageError(f"unknown order kind {kind!r}")
        self.nvars = nvars
        self.blocks = blocks
        self._id = (nvars, blocks)
        self.neg_key = self._compile()

    def _compile(self):
        parts = []
        for kind, idx in self.blocks:
            if kind == "grevlex":
                parts.append("-(" + "+".join(f"e[{i}]" for i in idx) + ")")
                parts.extend(f"e[{i}]" for i in reversed(idx))
            else:
                parts.extend(f"-e[{i}]" for i in idx)
        return eval("lambda e: (" + ", ".join(parts) + ",)")  # noqa: S307

    @classmethod
    def grevlex(cls, nvars: int, last=None) -> "MonomialOrder":
        """Graded reverse lex in index order; ``last`` moves one variable to the end."""
        idx = list(range(nvars))
        if last is not None:
            idx.remove(last)
            idx.append(last)
        return cls([("grevlex", idx)], nvars)

    @classmethod
    def lex(cls, nvars: int) -> "MonomialOrder":
        return cls([("lex", range(nvars))], nvars)

    @classmethod
    def elimination(cls, nvars: int, eliminate) -> "MonomialOrder":
        """Block order eliminating the variables in ``eliminate`` (grevlex in each block)."""
        first = sorted(eliminate)
        rest = [i for i in range(nvars) if i not in set(first)]
        blocks = [("grevlex", first)]
        if rest:
            blocks.append(("grevlex", rest))
        return cls(blocks, nvars)

    def compare(self, a, b) -> int:
        ka, kb = self.neg_key(a), self.neg_key(b)
        return (ka < kb) - (ka > kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other._id == self._id

    def __hash__(self):
        return hash(self._id)

    def __repr__(self):
        return f"MonomialOrder({list(self.blocks)!r})"


# ---------------------------------------------------------------------------
# variable contexts


@dataclass(frozen=True)
class VarContext:
    """Ordered variable names, an elimination block partition and bidegree weights."""

    names: tuple
    field: Field = QQ
    blocks: tuple = None
    weights: tuple = None
    _index: dict = dc_field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                raise UsageError(f"bad variable name {nm!r}")
        blocks = self.blocks
        if blocks is None:
            blocks = (tuple(range(len(names))),)
        blocks = tuple(tuple(b) for b in blocks)
        if sorted(i for b in blocks for i in b) != list(range(len(names))):
            raise UsageError("blocks must partition the variables")
        object.__setattr__(self, "blocks", blocks)
        weights = self.weights
        if weights is None:
            weights = tuple((1, 0) for _ in names)
        weights = tuple(tuple(w) for w in weights)
        if len(weights) != len(names):
            raise UsageError("one weight per variable required")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", {nm: i for i, nm in enumerate(names)})

    @classmethod
    def bigraded(cls, xnames, tnames, field: Field = QQ) -> "VarContext":
        xnames, tnames = tuple(xnames), tuple(tnames)
        nx = len(xnames)
        return cls(
            xnames + tnames,
            field,
            blocks=(tuple(range(nx)), tuple(range(nx, nx + len(tnames)))),
            weights=((1, 0),) * nx + ((0, 1),) * len(tnames),
        )

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < len(self.names):
                raise UsageError(f"variable index {name} out of range")
            return name
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}") from None

    def block_indices(self, k: int):
        return self.blocks[k]

    def indices_with_weight(self, w):
        return tuple(i for i, wt in enumerate(self.weights) if wt == tuple(w))

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms) -> "Polynomial":
        """Build from an iterable of ``(exps, coeff)``, summing duplicates."""
        acc = {}
        f = self.field
        for e, c in terms:
            e = tuple(e)
            acc[e] = acc.get(e, 0) + f(c)
        if f.p:
            acc = {e: c % f.p for e, c in acc.items()}
        return Polynomial(self, {e: c for e, c in acc.items() if c})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_field(self, field: Field) -> "VarContext":
        return VarContext(self.names, field, self.blocks, self.weights)

    def extend(self, front=(), back=(), front_weights=None, back_weights=None) -> "VarContext":
        """New context with extra variables prepended/appended as their own blocks."""
        front, back = tuple(front), tuple(back)
        nf = len(front)
        blocks = []
        if front:
            blocks.append(tuple(range(nf)))
        blocks.extend(tuple(i + nf for i in b) for b in self.blocks)
        if back:
            start = nf + self.nvars
            blocks.append(tuple(range(start, start + len(back))))
        fw = tuple(front_weights) if front_weights else ((0, 0),) * nf
        bw = tuple(back_weights) if back_weights else ((0, 0),) * len(back)
        return VarContext(front + self.names + back, self.field, tuple(blocks), fw + self.weights + bw)

    def grevlex(self) -> MonomialOrder:
        return MonomialOrder.grevlex(self.nvars)

    def __repr__(self):
        return f"VarContext({', '.join(self.names)}; {self.field!r})"


# ---------------------------------------------------------------------------
# polynomials


def _clean(terms, p):
    if p:
        return {e: c % p for e, c in terms.items() if c % p}
    return {e: c for e, c in terms.items() if c}


class Polynomial:
    """Immutable sparse polynomial over a :class:`VarContext`."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VarContext, terms: dict):
        self.ctx = ctx
        self.terms = terms
        self._hash = None

    # -- basic protocol -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx.names == other.ctx.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self == self.ctx.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.names, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ctx.names != self.ctx.names or other.ctx.field != self.ctx.field:
                raise UsageError("polynomials live in different contexts")
            return other
        return self.ctx.const(other)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.ctx, _clean(acc, self.ctx.field.p))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.field.p
        return Polynomial(self.ctx, {e: (-c % p if p else -c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.ctx, _clean(acc, self.ctx.field.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative powers are not polynomials")
        result, base = self.ctx.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ctx.field(c)
        p = self.ctx.field.p
        return Polynomial(self.ctx, _clean({e: v * c for e, v in self.terms.items()}, p))

    def mul_monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.ctx.field(coeff)
        p = self.ctx.field.p
        out = {tuple([a + b for a, b in zip(e, exps)]): v * c for e, v in self.terms.items()}
        return Polynomial(self.ctx, _clean(out, p))

    # -- structure ----------------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degrees(self):
        """Set of bidegrees (h, k) of the terms under the context weights."""
        w = self.ctx.weights
        out = set()
        for e in self.terms:
            h = sum(a * wt[0] for a, wt in zip(e, w))
            k = sum(a * wt[1] for a, wt in zip(e, w))
            out.add((h, k))
        return out

    def bidegree(self):
        """The unique bidegree of a nonzero bihomogeneous polynomial, else None."""
        degs = self.weighted_degrees()
        return next(iter(degs)) if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_bihomogeneous(self) -> bool:
        return len(self.weighted_degrees()) <= 1

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return sorted(used)

    def leading_term(self, order: MonomialOrder | None = None):
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        order = order or self.ctx.grevlex()
        e = min(self.terms, key=order.neg_key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ctx.field.inv(c))

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ctx.nvars, self.ctx.field(0))

    def partial(self, var) -> "Polynomial":
        return partial(self, var)

    def substitute(self, assignment) -> "Polynomial":
        return substitute(self, assignment)

    def map_to(self, ctx: VarContext, rename=None) -> "Polynomial":
        """Re-express in ``ctx`` by variable name (``rename`` maps old->new names)."""
        rename = rename or {}
        pos = []
        for nm in self.ctx.names:
            target = rename.get(nm, nm)
            pos.append(ctx.index(target) if target in ctx.names else None)
        out = {}
        n = ctx.nvars
        for e, c in self.terms.items():
            ne = [0] * n
            for i, a in enumerate(e):
                if a:
                    if pos[i] is None:
                        raise UsageError(f"variable {self.ctx.names[i]!r} has no image in {ctx}")
                    ne[pos[i]] += a
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + ctx.field(self.ctx.field.to_python(c))
        return Polynomial(ctx, _clean(out, ctx.field.p))

    def div_exact(self, g: "Polynomial") -> "Polynomial":
        """Exact quotient ``self / g``; raises if ``g`` does not divide."""
        g = self._coerce(g)
        if not g.terms:
            raise ZeroDivisionError("division by zero polynomial")
        order = self.ctx.grevlex()
        ge, gc = g.leading_term(order)
        ginv = self.ctx.field.inv(gc)
        rem, q = self, {}
        while rem.terms:
            e, c = rem.leading_term(order)
            shift = tuple(a - b for a, b in zip(e, ge))
            if min(shift) < 0:
                raise UsageError("inexact polynomial division")
            coeff = c * ginv
            if self.ctx.field.p:
                coeff %= self.ctx.field.p
            q[shift] = coeff
            rem = rem - g.mul_monomial(shift, coeff)
        return Polynomial(self.ctx, q)

    # -- printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        order = self.ctx.grevlex()
        names = self.ctx.names
        pieces = []
        for e in sorted(self.terms, key=order.neg_key):
            c = self.ctx.field.to_python(self.terms[e])
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a
            )
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# free functions


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.ctx.names != b.ctx.names or a.ctx.field != b.ctx.field:
        raise UsageError("polynomials live in different contexts")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown operation {op!r}")


def partial(f: Polynomial, var) -> Polynomial:
    """Formal partial derivative with respect to a variable name or index."""
    i = f.ctx.index(var)
    p = f.ctx.field.p
    out = {}
    for e, c in f.terms.items():
        a = e[i]
        if a:
            ne = e[:i] + (a - 1,) + e[i + 1:]
            out[ne] = c * a
    return Polynomial(f.ctx, _clean(out, p))


def substitute(f: Polynomial, assignment) -> Polynomial:
    """Replace variables by polynomials (or scalars); unassigned variables stay.

    All targets must share one context, which is also the result's context;
    unassigned variables of ``f`` are carried over by name.
    """
    ctx = None
    targets = {}
    for var, val in assignment.items():
        i = f.ctx.index(var)
        targets[i] = val
        if isinstance(val, Polynomial):
            if ctx is not None and val.ctx.names != ctx.names:
                raise UsageError("substitution targets must share a context")
            ctx = val.ctx
    ctx = ctx or f.ctx
    for i, val in list(targets.items()):
        if not isinstance(val, Polynomial):
            targets[i] = ctx.const(val)
    keep = {}
    for i, nm in enumerate(f.ctx.names):
        if i not in targets:
            keep[i] = ctx.gen(nm)
    images = {**keep, **targets}
    powers = {}

    def power(i, a):
        key = (i, a)
        if key not in powers:
            powers[key] = images[i] ** a
        return powers[key]

    result = ctx.zero()
    for e, c in f.terms.items():
        term = ctx.const(f.ctx.field.to_python(c))
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        result = result + term
    return result


def monomials_of_degree(nvars: int, deg: int):
    """All exponent tuples of length ``nvars`` with total degree ``deg``."""
    for combo in itertools.combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def _monomials_of_bidegree(ctx: VarContext, bideg):
    h, k = bideg
    idx_by_weight = {}
    for i, w in enumerate(ctx.weights):
        if w not in ((1, 0), (0, 1)):
            raise UsageError("random_form needs weights (1,0) or (0,1) on every variable")
        idx_by_weight.setdefault(w, []).append(i)
    xs = idx_by_weight.get((1, 0), [])
    ts = idx_by_weight.get((0, 1), [])
    if (h and not xs) or (k and not ts):
        return []
    out = []
    for ex in monomials_of_degree(len(xs), h):
        for et in monomials_of_degree(len(ts), k):
            e = [0] * ctx.nvars
            for i, a in zip(xs, ex):
                e[i] = a
            for i, a in zip(ts, et):
                e[i] = a
            out.append(tuple(e))
    return out


def random_form(ctx: VarContext, bidegree, seed: int, bound: int = 100) -> Polynomial:
    """Form of the given bidegree with every monomial present and coefficients in
    ``[-bound, bound] \\ {0}``, drawn from a private PRNG seeded by ``seed``."""
    if bound < 1:
        raise UsageError("bound must be >= 1")
    rng = random.Random(seed)
    order = ctx.grevlex()
    monos = sorted(_monomials_of_bidegree(ctx, bidegree), key=order.neg_key)
    terms = {}
    for e in monos:
        c = rng.randint(1, bound) * rng.choice((1, -1))
        terms[e] = ctx.field(c)
    return Polynomial(ctx, _clean(terms, ctx.field.p))


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at {pos}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    # expr   := ['+'|'-'] term (('+'|'-') term)*
    # term   := factor (('*'|'/'|<juxtaposition>) factor)*
    # factor := atom ('^' int)?
    # atom   := int | ident | '(' expr ')'

    def __init__(self, tokens, ctx):
        self.toks = tokens
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                if len(d.terms) != 1 or any(next(iter(d.terms))):
                    raise ParseError("division is only allowed by nonzero constants")
                acc = acc.scale(self.ctx.field.inv(next(iter(d.terms.values()))))
            elif kind in ("num", "id") or (kind == "op" and val == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            return base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ctx.const(val)
        if kind == "id":
            if val not in self.ctx.names:
                raise ParseError(f"unknown variable {val!r}")
            return self.ctx.gen(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ParseError("missing ')'")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def parse_polynomial(text: str, ctx: VarContext) -> Polynomial:
    """Parse e.g. ``"x0^3 - 2*x1^2*x2"`` or ``"1/2 x y"`` in ``ctx``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    parser = _Parser(tokens, ctx)
    try:
        result = parser.expr()
    except ZeroDivisionError as exc:
        raise ParseError(str(exc)) from None
    if parser.i != len(tokens):
        raise ParseError(f"trailing input at token {parser.i}")
    return result
