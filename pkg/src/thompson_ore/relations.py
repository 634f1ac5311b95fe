"""From a relation between x0 and x1 to a solution of (1 - x0) u = (1 - x1) v.

A word a_1 ... a_n telescopes as 1 - a_1...a_n = sum_t (1 - a_t) s_t with
suffixes s_t = a_{t+1} ... a_n.  A letter x0^-1 contributes
(1 - x0^-1) s_t = -(1 - x0) s_{t-1}, so every term carries a left factor
1 - x0 or 1 - x1.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import DegenerateRelation, NotARelation, UnsupportedGenerator
from .field import QQ, Field
from .group import IDENTITY, GroupElement, gig_translate, reduce_word
from .ring import Polynomial
from .solvers import PairSolution, verify_solution


class FormalSum:
    """Finite K-combination of elements of F (an element of K[F])."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: Mapping[GroupElement, object] | None = None, field: Field = QQ):
        self.field = field
        self.terms = {}
        for g, c in (terms or {}).items():
            c = field.coerce(c)
            if c:
                self.terms[g] = c

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms and self.field == other.field

    def __repr__(self):
        inner = ", ".join(f"{g}: {c}" for g, c in sorted(self.terms.items()))
        return f"FormalSum({{{inner}}})"

    def _combine(self, other: "FormalSum", sign: int) -> "FormalSum":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + sign * c
        return FormalSum(out, self.field)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def left_mul(self, g: GroupElement) -> "FormalSum":
        return FormalSum({g * h: c for h, c in self.terms.items()}, self.field)

    def right_mul(self, g: GroupElement) -> "FormalSum":
        return FormalSum({h * g: c for h, c in self.terms.items()}, self.field)

    def one_minus_left(self, g: GroupElement) -> "FormalSum":
        """(1 - g) * self."""
        return self - self.left_mul(g)

    def to_polynomial(self) -> Polynomial:
        """Convert a sum supported in M."""
        out = {}
        for g, c in self.terms.items():
            if not g.is_positive():
                raise ValueError(f"{g} is not a positive element")
            out[g.p] = c
        return Polynomial(out, self.field)


def telescope(word: Sequence[tuple[int, int]], field: Field = QQ) -> tuple[FormalSum, FormalSum]:
    """(U, V) with (1 - x0) U + (1 - x1) V = 1 - (value of word)."""
    for i, _ in word:
        if i not in (0, 1):
            raise UnsupportedGenerator(f"x{i} is not x0 or x1")
    n = len(word)
    # suffix[t] = a_{t+1} ... a_n, i.e. the letters after position t (1-based)
    suffix = [IDENTITY] * (n + 1)
    for t in range(n - 1, -1, -1):
        i, s = word[t]
        suffix[t] = GroupElement.x(i, s) * suffix[t + 1]
    acc: dict[int, dict[GroupElement, int]] = {0: {}, 1: {}}
    for t, (i, s) in enumerate(word):
        # position t+1 in 1-based terms: s_t = suffix[t+1], s_{t-1} = suffix[t]
        g, c = (suffix[t + 1], 1) if s > 0 else (suffix[t], -1)
        acc[i][g] = acc[i].get(g, 0) + c
    return FormalSum(acc[0], field), FormalSum(acc[1], field)


def telescope_residual(word: Sequence[tuple[int, int]], field: Field = QQ) -> FormalSum:
    """(1 - x0) U + (1 - x1) V - (1 - w); zero when the identity holds."""
    U, V = telescope(word, field)
    lhs = U.one_minus_left(GroupElement.x(0)) + V.one_minus_left(GroupElement.x(1))
    w = reduce_word(word)
    return lhs - FormalSum({IDENTITY: 1}, field) + FormalSum({w: 1}, field)


def relation_to_solution(word: Sequence[tuple[int, int]], field: Field = QQ) -> PairSolution:
    """Solution (U g, -V g) of (1 - x0) u = (1 - x1) v from a relation word."""
    if not reduce_word(word).is_identity:
        raise NotARelation("the word does not represent the identity")
    U, V = telescope(word, field)
    if not U and not V:
        raise DegenerateRelation("telescoping gives U = V = 0")
    support = sorted(set(U.terms) | set(V.terms))
    g, _ = gig_translate(support)
    shift = GroupElement.positive(g)
    u = U.right_mul(shift).to_polynomial()
    v = -V.right_mul(shift).to_polynomial()
    sol = PairSolution(u, v)
    if not verify_solution(sol.lefts(), [u, v]):
        raise AssertionError("relation solution failed verification")
    return sol


def relator_words() -> list[list[tuple[int, int]]]:
    from .group import defining_relators

    return defining_relators()
