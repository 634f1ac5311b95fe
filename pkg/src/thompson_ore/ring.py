"""The monoid ring K[M] and its subrings K[M_i]."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from . import monoid
from .config import get_limits
from .errors import (
    FieldMismatch,
    NotDivisible,
    ParseError,
    PreconditionViolated,
    ResourceLimit,
    ZeroPolynomial,
)
from .field import QQ, Field, format_coeff
from .monoid import Monomial


class Polynomial:
    """Finite K-linear combination of normal-form monomials.

    Instances are treated as immutable; ``terms`` never holds a zero coefficient.
    """

    __slots__ = ("terms", "field", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, field: Field = QQ):
        self.field = field
        self._hash = None
        clean: dict[Monomial, object] = {}
        if terms:
            coerce = field.coerce
            for m, c in terms.items():
                c = coerce(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, field: Field) -> "Polynomial":
        # trusted constructor: terms already canonical and zero-free
        p = object.__new__(cls)
        p.terms = terms
        p.field = field
        p._hash = None
        return p

    @classmethod
    def zero(cls, field: Field = QQ) -> "Polynomial":
        return cls._raw({}, field)

    @classmethod
    def one(cls, field: Field = QQ) -> "Polynomial":
        return cls._raw({(): 1}, field)

    @classmethod
    def const(cls, c, field: Field = QQ) -> "Polynomial":
        return cls({(): field.coerce(c)}, field)

    @classmethod
    def mono(cls, m: Iterable[int], c=1, field: Field = QQ) -> "Polynomial":
        return cls({monoid.normalize(m): field.coerce(c)}, field)

    @classmethod
    def x(cls, i: int, field: Field = QQ) -> "Polynomial":
        return cls._raw({(i,): 1}, field)

    @classmethod
    def one_minus_x(cls, i: int, field: Field = QQ) -> "Polynomial":
        return cls({(): 1, (i,): -1}, field)

    # -- basic protocol -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(other, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, field={self.field})"

    def __str__(self):
        return format_poly(self)

    def items(self):
        """Terms in graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: monoid.sort_key(t[0]))

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=monoid.sort_key)

    def coeff(self, m: Monomial):
        return self.terms.get(m, 0)

    # -- measures -------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(len(m) for m in self.terms)

    def min_index(self) -> int | None:
        """Smallest generator index occurring; None if no generator occurs."""
        idx = [m[0] for m in self.terms if m]
        return min(idx) if idx else None

    def max_index(self) -> int | None:
        idx = [m[-1] for m in self.terms if m]
        return max(idx) if idx else None

    def index_span(self) -> int:
        lo, hi = self.min_index(), self.max_index()
        return 0 if lo is None else hi - lo

    def in_M(self, i: int) -> bool:
        return all(monoid.in_M(m, i) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({len(m) for m in self.terms}) <= 1

    # -- linear structure -----------------------------------------------

    def _same(self, other: "Polynomial"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        canon = self.field.canon
        for m, c in other.terms.items():
            c = canon(out.get(m, 0) + c)
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        canon = self.field.canon
        return Polynomial._raw({m: canon(-c) for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if not c:
            return Polynomial.zero(self.field)
        canon = self.field.canon
        return Polynomial._raw({m: canon(a * c) for m, a in self.terms.items()}, self.field)

    # -- ring structure -------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._same(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.field)
        lim = get_limits()
        if len(self.terms) * len(other.terms) > 50 * lim.max_terms:
            raise ResourceLimit(
                f"product of {len(self.terms)} x {len(other.terms)} terms exceeds the term guard"
            )
        if self.degree() + other.degree() > lim.max_degree:
            raise ResourceLimit("product degree exceeds max_degree")
        mm = monoid.mul
        out: dict[Monomial, object] = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mm(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        canon = self.field.canon
        res = {}
        for m, c in out.items():
            c = canon(c)
            if c:
                res[m] = c
        if len(res) > lim.max_terms:
            raise ResourceLimit(f"{len(res)} terms exceeds max_terms={lim.max_terms}")
        return Polynomial._raw(res, self.field)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = Polynomial.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, s: int = 1) -> "Polynomial":
        return shift_poly(self, s)


def shift_poly(p: Polynomial, s: int) -> Polynomial:
    """Apply x_i -> x_{i+s} termwise; negative ``s`` requires p in K[M_|s|]."""
    if s == 0:
        return p
    if s > 0:
        hi = p.max_index()
        if hi is not None and hi + s > get_limits().max_index:
            raise ResourceLimit(f"index {hi + s} exceeds max_index")
        return Polynomial._raw({tuple(i + s for i in m): c for m, c in p.terms.items()}, p.field)
    return Polynomial._raw({monoid.shift_inv(m, -s): c for m, c in p.terms.items()}, p.field)


def homogeneous_components(p: Polynomial) -> list[tuple[int, Polynomial]]:
    if not p:
        raise ZeroPolynomial("no homogeneous components of 0")
    comps: dict[int, dict] = {}
    for m, c in p.terms.items():
        comps.setdefault(len(m), {})[m] = c
    return [(d, Polynomial._raw(comps[d], p.field)) for d in sorted(comps)]


def homogeneous_part(p: Polynomial, d: int) -> Polynomial:
    return Polynomial._raw({m: c for m, c in p.terms.items() if len(m) == d}, p.field)


def x0_decompose(p: Polynomial) -> list[Polynomial]:
    """Coefficients [z_0, ..., z_d] in K[M_1] with p = sum x0^t z_t."""
    parts: dict[int, dict] = {}
    for m, c in p.terms.items():
        k, rest = monoid.x0_split(m)
        parts.setdefault(k, {})[rest] = c
    if not parts:
        return []
    return [Polynomial._raw(parts.get(t, {}), p.field) for t in range(max(parts) + 1)]


def x0_power(t: int, field: Field = QQ) -> Polynomial:
    return Polynomial._raw({(0,) * t: 1}, field)


def x0_assemble(parts: list[Polynomial], field: Field = QQ) -> Polynomial:
    out = Polynomial.zero(field)
    for t, z in enumerate(parts):
        if z:
            out = out + x0_power(t, field) * z
    return out


def geometric_x0(t: int, field: Field = QQ) -> Polynomial:
    """1 + x0 + ... + x0^(t-1)."""
    return Polynomial._raw({(0,) * k: 1 for k in range(t)}, field)


def one_minus_left_divide(p: Polynomial, i: int) -> Polynomial:
    """The unique Q with (1 - x_i) Q = p, or NotDivisible.

    Degree-by-degree recurrence Q_d = P_d + x_i Q_{d-1}, then an exact check.
    """
    if not p:
        raise ZeroPolynomial("cannot divide the zero polynomial")
    f = p.field
    xi = Polynomial.x(i, f)
    q = Polynomial.zero(f)
    prev = Polynomial.zero(f)
    for d in range(p.degree()):
        prev = homogeneous_part(p, d) + xi * prev
        q = q + prev
    if Polynomial.one_minus_x(i, f) * q != p:
        raise NotDivisible(f"{format_poly(p)} is not left divisible by 1 - x{i}")
    return q


def shift_commute(w: Polynomial, v: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Check w*v == v*phi^d(w) for homogeneous v of degree d lying below w.

    Returns both products (they are equal).
    """
    if not v or not v.is_homogeneous():
        raise PreconditionViolated("v must be a nonzero homogeneous polynomial")
    lo_w, hi_v = w.min_index(), v.max_index()
    if lo_w is not None and hi_v is not None and lo_w <= hi_v:
        raise PreconditionViolated("every index in w must exceed every index in v")
    d = v.degree()
    left, right = w * v, v * shift_poly(w, d)
    if left != right:
        raise AssertionError("shift commutation failed")
    return left, right


# -- text form ------------------------------------------------------------


def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for m, c in p.items():
        c = p.field.signed(c)
        neg = c < 0
        a = -c if neg else c
        mono = monoid.format_monomial(m)
        if not m:
            body = format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_coeff(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<x>x)|(?P<op>[-+*/^]))")


def parse_poly(text: str, field: Field = QQ) -> Polynomial:
    """Parse the polynomial grammar; input monomials are normalized.

    >>> str(parse_poly("x1*x0"))
    'x0*x2'
    """
    tokens = []
    pos = 0
    s = text.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", text, 0)
    tokens.append(("end", "", len(s)))
    k = 0

    def peek():
        return tokens[k]

    def take(kind, value=None):
        nonlocal k
        t = tokens[k]
        if t[0] != kind or (value is not None and t[1] != value):
            raise ParseError(f"expected {value or kind}", text, t[2])
        k += 1
        return t

    def factor() -> list[int]:
        take("x")
        idx = int(take("num")[1])
        n = 1
        if peek()[1] == "^":
            take("op", "^")
            n = int(take("num")[1])
        return [idx] * n

    def mono() -> list[int]:
        letters = factor()
        while peek()[1] == "*":
            take("op", "*")
            letters += factor()
        return letters

    def term():
        t = peek()
        if t[0] == "num":
            num = int(take("num")[1])
            c = Fraction(num)
            if peek()[1] == "/":
                take("op", "/")
                den = int(take("num")[1])
                if den == 0:
                    raise ParseError("zero denominator", text, tokens[k - 1][2])
                c = Fraction(num, den)
            if peek()[1] == "*":
                take("op", "*")
                return c, mono()
            return c, []
        if t[0] == "x":
            return Fraction(1), mono()
        raise ParseError("expected a term", text, t[2])

    acc: dict[Monomial, object] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        c, letters = term()
        m = monoid.normalize(letters)
        acc[m] = acc.get(m, 0) + sign * c
        t = peek()
        if t[0] == "end":
            break
        if t[0] == "op" and t[1] in "+-":
            k += 1
            sign = -1 if t[1] == "-" else 1
            continue
        raise ParseError("expected '+' or '-'", text, t[2])
    return Polynomial({m: field.coerce(c) for m, c in acc.items()}, field)
