"""Rooted binary trees and forests, marked forests and diagram sets S(m, n).

A tree is ``()`` for a leaf or a pair ``(left, right)`` for a caret.  A forest
is a nonempty tuple of trees.  Text form: ``.`` for a leaf, ``(LR)`` for a
caret, trees separated by commas, ``*`` in front of the marked tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .config import get_limits
from .errors import ParseError, ResourceLimit, SizeMismatch

Tree = tuple
Forest = tuple[Tree, ...]
LEAF: Tree = ()


def caret(left: Tree, right: Tree) -> Tree:
    return (left, right)


def leaves(t: Tree) -> int:
    return 1 if t == LEAF else leaves(t[0]) + leaves(t[1])


def height(t: Tree) -> int:
    return 0 if t == LEAF else max(height(t[0]), height(t[1])) + 1


def forest_leaves(f: Forest) -> int:
    return sum(leaves(t) for t in f)


def forest_height(f: Forest) -> int:
    return max(height(t) for t in f)


@dataclass(frozen=True)
class MarkedForest:
    forest: Forest
    mark: int

    def __post_init__(self):
        if not self.forest:
            raise ValueError("a forest has at least one tree")
        if not 0 <= self.mark < len(self.forest):
            raise ValueError(f"mark {self.mark} out of range")


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


# -- counting -------------------------------------------------------------------


@lru_cache(maxsize=None)
def count_trees_leaves(n: int, k: int | None = None) -> int:
    """Trees with n leaves and height <= k (k None: unbounded)."""
    if n < 1 or (k is not None and k < 0):
        return 0
    if n == 1:
        return 1
    if k == 0:
        return 0
    sub = None if k is None else k - 1
    return sum(count_trees_leaves(a, sub) * count_trees_leaves(n - a, sub) for a in range(1, n))


@lru_cache(maxsize=None)
def count_sequences(roots: int, n: int, k: int | None = None) -> int:
    """Forests with exactly ``roots`` trees and n leaves, heights <= k."""
    if roots == 0:
        return 1 if n == 0 else 0
    return sum(
        count_trees_leaves(a, k) * count_sequences(roots - 1, n - a, k) for a in range(1, n - roots + 2)
    )


def count(kind: str, n: int, m: int | None = None, k: int | None = None) -> int:
    """Exact counts by dynamic programming.

    kind: ``trees`` (n carets), ``forests`` (n leaves), ``S`` (m roots, n
    leaves) or ``bb`` (marked forests with n leaves, heights <= k).
    """
    if kind == "trees":
        return count_trees_leaves(n + 1) if n >= 0 else 0
    if kind == "forests":
        return sum(count_sequences(r, n) for r in range(1, n + 1))
    if kind == "S":
        if m is None:
            raise ValueError("S needs m")
        return count_sequences(m, n)
    if kind == "bb":
        return sum(r * count_sequences(r, n, k) for r in range(1, n + 1))
    raise ValueError(f"unknown kind {kind!r}")


# -- enumeration ------------------------------------------------------------


def _trees(n: int, k: int | None) -> Iterator[Tree]:
    """Trees with n leaves, heights <= k, in a fixed order."""
    if n == 1:
        yield LEAF
        return
    if k == 0:
        return
    sub = None if k is None else k - 1
    for a in range(1, n):
        for left in _trees(a, sub):
            for right in _trees(n - a, sub):
                yield (left, right)


def _sequences(roots: int, n: int, k: int | None) -> Iterator[Forest]:
    if roots == 0:
        if n == 0:
            yield ()
        return
    for a in range(1, n - roots + 2):
        for t in _trees(a, k):
            for rest in _sequences(roots - 1, n - a, k):
                yield (t,) + rest


def _check_size(total: int) -> None:
    lim = get_limits().max_enumeration
    if total > lim:
        raise ResourceLimit(f"{total} items exceeds max_enumeration={lim}")


def enumerate_kind(kind: str, n: int, m: int | None = None, k: int | None = None) -> list:
    _check_size(count(kind, n, m, k))
    if kind == "trees":
        return list(_trees(n + 1, None))
    if kind == "forests":
        return [f for r in range(1, n + 1) for f in _sequences(r, n, None)]
    if kind == "S":
        return list(_sequences(m, n, None))
    if kind == "bb":
        return [
            MarkedForest(f, i) for r in range(1, n + 1) for f in _sequences(r, n, k) for i in range(r)
        ]
    raise ValueError(f"unknown kind {kind!r}")


# -- composition ------------------------------------------------------------


def compose(f1: Forest, f2: Forest) -> Forest:
    """Graft the trees of f2 onto the leaves of f1, left to right."""
    if forest_leaves(f1) != len(f2):
        raise SizeMismatch(f"{forest_leaves(f1)} leaves vs {len(f2)} roots")
    it = iter(f2)

    def graft(t: Tree) -> Tree:
        if t == LEAF:
            return next(it)
        return (graft(t[0]), graft(t[1]))

    return tuple(graft(t) for t in f1)


def trivial_forest(n: int) -> Forest:
    return (LEAF,) * n


# -- text form --------------------------------------------------------------


def format_tree(t: Tree) -> str:
    return "." if t == LEAF else f"({format_tree(t[0])}{format_tree(t[1])})"


def format_forest(f: Forest | MarkedForest) -> str:
    if isinstance(f, MarkedForest):
        return ",".join(("*" if i == f.mark else "") + format_tree(t) for i, t in enumerate(f.forest))
    return ",".join(format_tree(t) for t in f)


def parse_forest(text: str) -> Forest | MarkedForest:
    pos = 0
    s = text.strip()

    def tree() -> Tree:
        nonlocal pos
        if pos < len(s) and s[pos] == ".":
            pos += 1
            return LEAF
        if pos < len(s) and s[pos] == "(":
            pos += 1
            left = tree()
            right = tree()
            if pos >= len(s) or s[pos] != ")":
                raise ParseError("expected ')'", text, pos)
            pos += 1
            return (left, right)
        raise ParseError("expected '.' or '('", text, pos)

    trees, mark = [], None
    while True:
        if pos < len(s) and s[pos] == "*":
            if mark is not None:
                raise ParseError("more than one marked tree", text, pos)
            mark = len(trees)
            pos += 1
        trees.append(tree())
        if pos == len(s):
            break
        if s[pos] != ",":
            raise ParseError("expected ','", text, pos)
        pos += 1
    f = tuple(trees)
    return f if mark is None else MarkedForest(f, mark)
