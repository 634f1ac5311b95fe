"""Thompson's monoid M = < x0, x1, ... | x_j x_i = x_i x_{j+1}, i < j >.

A monomial is stored as its normal form: a nondecreasing tuple of generator
indices.  ``()`` is the identity.  Plain tuples keep hashing and comparison
cheap, which matters because the ring layer multiplies millions of them.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from itertools import groupby
from typing import Iterable, NamedTuple

from .config import get_limits
from .errors import MinIndexZero, ParseError, ResourceLimit

Monomial = tuple[int, ...]

ONE: Monomial = ()


def _check(m: Monomial) -> Monomial:
    lim = get_limits()
    if len(m) > lim.max_degree:
        raise ResourceLimit(f"degree {len(m)} exceeds max_degree={lim.max_degree}")
    if m and m[-1] > lim.max_index:
        raise ResourceLimit(f"index {m[-1]} exceeds max_index={lim.max_index}")
    return m


def _append(res: list[int], j: int) -> None:
    # x_a x_j = x_j x_{a+1} for a > j: j slides left, every passed letter goes up by one
    p = bisect_right(res, j)
    if p == len(res):
        res.append(j)
    else:
        res[p:] = [j] + [a + 1 for a in res[p:]]


def normalize(word: Iterable[int]) -> Monomial:
    """Normal form of a positive word given as a sequence of indices.

    >>> normalize([1, 0])
    (0, 2)
    >>> normalize([1, 0, 1])
    (0, 1, 3)
    """
    res: list[int] = []
    for j in word:
        j = int(j)
        if j < 0:
            raise ValueError(f"negative generator index {j}")
        _append(res, j)
    return _check(tuple(res))


def mul(a: Monomial, b: Monomial) -> Monomial:
    if not b:
        return a
    if not a:
        return b
    if a[-1] <= b[0]:
        return a + b
    res = list(a)
    for j in b:
        _append(res, j)
    return tuple(res)


def power(a: Monomial, n: int) -> Monomial:
    out = ONE
    for _ in range(n):
        out = mul(out, a)
    return out


def gen(i: int) -> Monomial:
    return (i,)


def shift(a: Monomial, s: int = 1) -> Monomial:
    if s < 0:
        raise ValueError("shift amount must be nonnegative; use shift_inv")
    if not s or not a:
        return a
    return _check(tuple(i + s for i in a))


def shift_inv(a: Monomial, s: int = 1) -> Monomial:
    if a and a[0] < s:
        raise MinIndexZero(f"{format_monomial(a)} does not lie in M_{s}")
    return tuple(i - s for i in a)


def x0_split(a: Monomial) -> tuple[int, Monomial]:
    """Write ``a = x0^k * rest`` with ``rest`` free of x0."""
    k = bisect_right(a, 0)
    return k, a[k:]


def degree(a: Monomial) -> int:
    return len(a)


def min_index(a: Monomial) -> int | None:
    return a[0] if a else None


def max_index(a: Monomial) -> int | None:
    return a[-1] if a else None


def in_M(a: Monomial, i: int) -> bool:
    """True iff ``a`` lies in the submonoid generated by x_i, x_{i+1}, ..."""
    return not a or a[0] >= i


class Measures(NamedTuple):
    degree: int
    min_index: int | None
    max_index: int | None

    def in_M(self, i: int) -> bool:
        return self.min_index is None or self.min_index >= i


def measures(a: Monomial) -> Measures:
    return Measures(len(a), min_index(a), max_index(a))


def sort_key(a: Monomial) -> tuple[int, Monomial]:
    """Graded-lex key: degree first, then the index sequence."""
    return (len(a), a)


def format_monomial(a: Monomial) -> str:
    if not a:
        return "1"
    parts = []
    for i, run in groupby(a):
        n = len(list(run))
        parts.append(f"x{i}" if n == 1 else f"x{i}^{n}")
    return "*".join(parts)


_FACTOR = re.compile(r"\s*x(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_monomial(text: str) -> Monomial:
    """Parse ``x0^2*x3`` style text (any order; normalized on input)."""
    s = text.strip()
    if s == "1":
        return ONE
    letters: list[int] = []
    pos = 0
    for k, chunk in enumerate(s.split("*")):
        m = _FACTOR.fullmatch(chunk)
        if m is None:
            raise ParseError("bad monomial factor", text, pos)
        letters.extend([int(m.group(1))] * int(m.group(2) or 1))
        pos += len(chunk) + 1
    return normalize(letters)
