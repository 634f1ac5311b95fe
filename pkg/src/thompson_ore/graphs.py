"""Finite subgraphs of Cayley graphs of F: density, boundaries, flows."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import EmptySet, MissingEdgeValue
from .group import IDENTITY, GroupElement, GroupWord, parse_word, reduce_word

Edge = tuple[GroupElement, GroupElement]


@dataclass(frozen=True)
class CayleySubgraph:
    """Induced subgraph on ``vertices`` of the left or right Cayley graph.

    Right graphs join g to g*a.  In a left graph the edge labelled a runs from
    a*g to g, so leaving g along a lands on a^-1 * g.
    """

    vertices: frozenset[GroupElement]
    gens: tuple[GroupElement, ...]
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be left or right, not {self.side!r}")
        if any(a.is_identity for a in self.gens):
            raise ValueError("generators must be nontrivial")

    @classmethod
    def build(cls, vertices: Iterable[GroupElement], gens: Sequence[GroupElement], side: str = "right"):
        return cls(frozenset(vertices), tuple(gens), side)

    @property
    def m(self) -> int:
        return len(self.gens)

    def labels(self) -> list[tuple[int, int]]:
        return [(t, s) for t in range(len(self.gens)) for s in (1, -1)]

    def step(self, g: GroupElement, label: tuple[int, int]) -> GroupElement:
        t, s = label
        a = self.gens[t] if s > 0 else self.gens[t].inverse()
        if self.side == "right":
            return g * a
        return a.inverse() * g

    def out_edges(self, g: GroupElement):
        for lab in self.labels():
            yield lab, self.step(g, lab)

    def internal_edges(self) -> list[Edge]:
        out = []
        for g in sorted(self.vertices):
            for _, h in self.out_edges(g):
                if h in self.vertices:
                    out.append((g, h))
        return out


@dataclass(frozen=True)
class Metrics:
    delta: Fraction
    iota: Fraction
    m: int
    inner_boundary: frozenset[GroupElement]
    cheeger_boundary_size: int

    @property
    def identity_ok(self) -> bool:
        return self.delta + self.iota == 2 * self.m


def metrics(Y: CayleySubgraph) -> Metrics:
    if not Y.vertices:
        raise EmptySet("metrics of an empty vertex set")
    internal = external = 0
    inner = set()
    for g in Y.vertices:
        for _, h in Y.out_edges(g):
            if h in Y.vertices:
                internal += 1
            else:
                external += 1
                inner.add(g)
    n = len(Y.vertices)
    res = Metrics(Fraction(internal, n), Fraction(external, n), Y.m, frozenset(inner), external)
    if not res.identity_ok:
        raise AssertionError("delta + iota != 2m")
    return res


def ay_ratio(A: Sequence[GroupElement], Y: Iterable[GroupElement], include_identity: bool = False) -> Fraction:
    """|A Y| / |Y| with A Y = {a y}."""
    ys = set(Y)
    if not ys:
        raise EmptySet("ay_ratio of an empty set")
    gens = list(A) + ([IDENTITY] if include_identity else [])
    return Fraction(len({a * y for a in gens for y in ys}), len(ys))


def ball(gens: Sequence[GroupElement], radius: int) -> set[GroupElement]:
    """All products of at most ``radius`` letters from gens^{+-1}."""
    letters = list(gens) + [a.inverse() for a in gens]
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for g in frontier:
            for a in letters:
                h = g * a
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


# -- y generators -----------------------------------------------------------

Y0 = reduce_word([(0, 1), (2, -1)])
Y1 = reduce_word([(1, 1), (2, -1)])


def y_gen(n: int) -> GroupElement:
    """y_n = y0^-(n-1) y1 y0^(n-1) for n >= 2."""
    if n == 0:
        return Y0
    if n == 1:
        return Y1
    return Y1.conj(Y0 ** (n - 1))


def y_embed(word: Sequence[tuple[int, int]]) -> GroupElement:
    """Image of a word in y0, y1 (letters (0|1, sign)) under x_i -> y_i."""
    out = IDENTITY
    for i, s in word:
        if i not in (0, 1):
            raise ValueError(f"y{i} is not y0 or y1")
        g = Y0 if i == 0 else Y1
        out = out * (g if s > 0 else g.inverse())
    return out


def parse_y_word(text: str) -> GroupWord:
    return parse_word(text, letter="y")


def triangle(g: GroupElement) -> dict[str, Edge]:
    """The triangle x0 g, x1 g, x2 g of the left graph, edges as (tail, head).

    y0 = x0 x2^-1 runs x0 g -> x2 g, y1 = x1 x2^-1 runs x1 g -> x2 g and
    ybar1 = y1 y0^-1 = x1 x0^-1 runs x1 g -> x0 g.
    """
    v0, v1, v2 = (GroupElement.x(i) * g for i in range(3))
    ybar1 = Y1 * Y0.inverse()
    edges = {"y0": (v0, v2), "y1": (v1, v2), "ybar1": (v1, v0)}
    for lab, (tail, head) in edges.items():
        a = {"y0": Y0, "y1": Y1, "ybar1": ybar1}[lab]
        if a * head != tail:
            raise AssertionError(f"triangle edge {lab} is inconsistent")
    return edges


# -- flows --------------------------------------------------------------------


@dataclass(frozen=True)
class FlowReport:
    ok: bool
    antisymmetric: bool
    min_inflow: Fraction | None
    bound: Fraction
    inflows: dict = field(default_factory=dict, compare=False)


def flow_check(Y: CayleySubgraph, f: Mapping[Edge, object], eps) -> FlowReport:
    """Check antisymmetry and inflow >= eps at every vertex of Y.

    ``f`` may give only one direction of an edge; the other is taken as the
    negative.  ``bound`` is max |f(e)|, the constant C of the flow criterion.
    """
    if not Y.vertices:
        raise EmptySet("flow on an empty vertex set")
    eps = Fraction(eps)
    values: dict[Edge, Fraction] = {}
    antisym = True
    for e in Y.internal_edges():
        rev = (e[1], e[0])
        if e in f:
            values[e] = Fraction(f[e])
            if rev in f and Fraction(f[rev]) != -values[e]:
                antisym = False
        elif rev in f:
            values[e] = -Fraction(f[rev])
        else:
            raise MissingEdgeValue(f"no flow value on edge {e[0]} -> {e[1]}")
    inflow = {g: Fraction(0) for g in Y.vertices}
    for (tail, head), x in values.items():
        inflow[head] += x
    bound = max((abs(x) for x in values.values()), default=Fraction(0))
    low = min(inflow.values())
    ok = antisym and low >= eps
    return FlowReport(ok, antisym, low, bound, inflow)
