"""Thompson's group F as the group of right quotients p q^-1 of M."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import monoid
from .errors import ParseError
from .monoid import Monomial

# A group word is a sequence of (index, sign) letters, sign in {+1, -1}.
GroupWord = list[tuple[int, int]]


def _pass_letter(q: Monomial, j: int) -> tuple[int | None, Monomial]:
    """Rewrite q^-1 x_j as x_j' q'^-1; j' is None when the letter cancels."""
    out = list(q)
    for t, b in enumerate(q):
        if b < j:
            j += 1
        elif b > j:
            out[t] = b + 1
        else:
            del out[t]
            return None, tuple(out)
    return j, tuple(out)


def _drop_last(a: Monomial, i: int) -> Monomial:
    # remove the last x_i; letters to its right are >= i+2 and each drop by one
    pos = len(a) - 1 - a[::-1].index(i)
    return a[:pos] + tuple(b - 1 for b in a[pos + 1 :])


def _reduce(p: Monomial, q: Monomial) -> tuple[Monomial, Monomial]:
    while True:
        sp, sq = set(p), set(q)
        bad = [i for i in sp & sq if i + 1 not in sp and i + 1 not in sq]
        if not bad:
            return p, q
        i = min(bad)
        p, q = _drop_last(p, i), _drop_last(q, i)


@dataclass(frozen=True, order=True)
class GroupElement:
    """Reduced normal form p q^-1 (both parts sorted index tuples)."""

    p: Monomial = ()
    q: Monomial = ()

    @classmethod
    def make(cls, p: Iterable[int] = (), q: Iterable[int] = ()) -> "GroupElement":
        return cls(*_reduce(monoid.normalize(p), monoid.normalize(q)))

    @classmethod
    def positive(cls, m: Monomial) -> "GroupElement":
        return cls(tuple(m), ())

    @classmethod
    def x(cls, i: int, sign: int = 1) -> "GroupElement":
        return cls((i,), ()) if sign > 0 else cls((), (i,))

    @property
    def is_identity(self) -> bool:
        return not self.p and not self.q

    def is_positive(self) -> bool:
        return not self.q

    def mul_letter(self, i: int, sign: int) -> "GroupElement":
        return GroupElement(*_reduce(*_mul_letter(self.p, self.q, i, sign)))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        p, q = self.p, self.q
        for i in other.p:
            p, q = _mul_letter(p, q, i, 1)
        for i in reversed(other.q):
            p, q = _mul_letter(p, q, i, -1)
        return GroupElement(*_reduce(p, q))

    def inverse(self) -> "GroupElement":
        return GroupElement(*_reduce(self.q, self.p))

    def __pow__(self, n: int) -> "GroupElement":
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out * base
        return out

    def conj(self, by: "GroupElement") -> "GroupElement":
        """a^b = b^-1 a b."""
        return by.inverse() * self * by

    def word(self) -> GroupWord:
        return [(i, 1) for i in self.p] + [(i, -1) for i in reversed(self.q)]

    def __str__(self):
        return format_element(self)


IDENTITY = GroupElement()


def _mul_letter(p: Monomial, q: Monomial, i: int, sign: int) -> tuple[Monomial, Monomial]:
    if sign > 0:
        j, q = _pass_letter(q, i)
        if j is not None:
            p = monoid.mul(p, (j,))
        return p, q
    return p, monoid.mul((i,), q)


def reduce_word(word: Iterable[tuple[int, int]]) -> GroupElement:
    p: Monomial = ()
    q: Monomial = ()
    for i, s in word:
        if i < 0 or s not in (1, -1):
            raise ValueError(f"bad letter {(i, s)!r}")
        p, q = _mul_letter(p, q, i, s)
    return GroupElement(*_reduce(p, q))


def invert_word(word: Sequence[tuple[int, int]]) -> GroupWord:
    return [(i, -s) for i, s in reversed(word)]


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common right multiple: a * p where a^-1 b = p q^-1."""
    e = GroupElement((), tuple(a)) * GroupElement(tuple(b), ())
    out = monoid.mul(a, e.p)
    if out != monoid.mul(b, e.q):
        raise AssertionError("lcm postcondition failed")
    return out


def gig_translate(gs: Sequence[GroupElement]) -> tuple[Monomial, list[Monomial]]:
    """Find g in M with every gs[t] * g positive (left fold of lcm over q-parts)."""
    if not gs:
        raise ValueError("need at least one element")
    g: Monomial = ()
    for e in gs:
        g = lcm(g, e.q)
    translated = []
    for e in gs:
        h = e * GroupElement(g, ())
        if not h.is_positive():
            raise AssertionError("translation did not land in M")
        translated.append(h.p)
    return g, translated


# -- text forms -----------------------------------------------------------

_LETTER = re.compile(r"\s*([a-zA-Z])(\d+)(?:\s*\^\s*(-?\d+))?\s*")


def parse_word(text: str, letter: str = "x") -> GroupWord:
    """Parse ``x0*X1*x2^-3``; capital letters are inverses, ``1`` is empty."""
    s = text.strip()
    if s in ("", "1"):
        return []
    out: GroupWord = []
    pos = 0
    for chunk in s.split("*"):
        m = _LETTER.fullmatch(chunk)
        if m is None or m.group(1).lower() != letter:
            raise ParseError("bad word factor", text, pos)
        sign = -1 if m.group(1).isupper() else 1
        n = int(m.group(3) or 1)
        if n < 0:
            sign, n = -sign, -n
        out.extend([(int(m.group(2)), sign)] * n)
        pos += len(chunk) + 1
    return out


def format_word(word: Sequence[tuple[int, int]], letter: str = "x") -> str:
    if not word:
        return "1"
    return "*".join(f"{letter}{i}" if s > 0 else f"{letter.upper()}{i}" for i, s in word)


def format_element(e: GroupElement) -> str:
    if e.is_identity:
        return "1"
    if not e.q:
        return monoid.format_monomial(e.p)
    neg = f"({monoid.format_monomial(e.q)})^-1"
    if not e.p:
        return neg
    return f"{monoid.format_monomial(e.p)} * {neg}"


def parse_element(text: str) -> GroupElement:
    """Accepts either a group word or the ``p * (q)^-1`` emission form."""
    m = re.fullmatch(r"\s*(?:(.*?)\s*\*\s*)?\((.*)\)\^-1\s*", text)
    if m:
        p = monoid.parse_monomial(m.group(1)) if m.group(1) else ()
        return GroupElement.make(p, monoid.parse_monomial(m.group(2)))
    return reduce_word(parse_word(text))


def x_n(n: int) -> GroupElement:
    """x_n via x0^-(n-1) x1 x0^(n-1)."""
    if n < 2:
        return GroupElement.x(n)
    w = [(0, -1)] * (n - 1) + [(1, 1)] + [(0, 1)] * (n - 1)
    return reduce_word(w)


def defining_relators() -> list[GroupWord]:
    """Words equal to 1: x1^{x0^2} (x1^{x0 x1})^-1 and x1^{x0^3} (x1^{x0^2 x1})^-1."""

    def conj(a: GroupWord, b: GroupWord) -> GroupWord:
        return invert_word(b) + a + b

    x1 = [(1, 1)]
    r1 = conj(x1, [(0, 1), (0, 1)]) + invert_word(conj(x1, [(0, 1), (1, 1)]))
    r2 = conj(x1, [(0, 1)] * 3) + invert_word(conj(x1, [(0, 1), (0, 1), (1, 1)]))
    return [r1, r2]


def _runs(letters: Sequence[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for i in letters:
        if out and out[-1][0] == i:
            out[-1] = (i, out[-1][1] + 1)
        else:
            out.append((i, 1))
    return out


def format_element_tex(e: GroupElement) -> str:
    """TeX normal form, e.g. ``x_2^2x_3^{-1}x_2^{-1}`` for x2^2 (x2 x3)^-1."""
    if e.is_identity:
        return "1"

    def letter(i: int, k: int) -> str:
        base = f"x_{i}" if i < 10 else f"x_{{{i}}}"
        if k == 1:
            return base
        return f"{base}^{k}" if 0 < k < 10 else f"{base}^{{{k}}}"

    pos = "".join(letter(i, k) for i, k in _runs(e.p))
    neg = "".join(letter(i, -k) for i, k in reversed(_runs(e.q)))
    return pos + neg
