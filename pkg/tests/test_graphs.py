import random
from fractions import Fraction

import pytest

from thompson_ore.errors import EmptySet, MissingEdgeValue
from thompson_ore.graphs import (
    Y0,
    Y1,
    CayleySubgraph,
    ay_ratio,
    ball,
    flow_check,
    metrics,
    triangle,
    y_embed,
    y_gen,
)
from thompson_ore.group import IDENTITY, GroupElement as G, defining_relators, format_element_tex, reduce_word

A3 = [G.x(0), G.x(1), G.x(2)]


def test_metrics_examples():
    res = metrics(CayleySubgraph.build([IDENTITY, G.x(0)], A3, "right"))
    assert (res.delta, res.iota, res.m) == (1, 5, 3)
    assert res.cheeger_boundary_size == 10
    res = metrics(CayleySubgraph.build([IDENTITY], A3))
    assert (res.delta, res.iota) == (0, 6)
    xbar1 = G.x(1) * G.x(0, -1)
    gens = [G.x(1), xbar1]
    res = metrics(CayleySubgraph.build(ball(gens, 1), gens))
    assert res.identity_ok
    with pytest.raises(EmptySet):
        metrics(CayleySubgraph.build([], A3))


def _random_subsets(gens, n, seed):
    rng = random.Random(seed)
    balls = {r: sorted(ball(gens, r)) for r in range(4)}
    for _ in range(n):
        pool = balls[rng.randint(0, 3)]
        yield rng.sample(pool, rng.randint(1, len(pool)))


def test_identity_on_random_sets():
    gens = [G.x(0), G.x(1)]
    for ys in _random_subsets(gens, 100, 3):
        for side in ("left", "right"):
            assert metrics(CayleySubgraph.build(ys, gens, side)).identity_ok


def test_left_right_duality():
    for ys in _random_subsets(A3[:2], 30, 5):
        left = metrics(CayleySubgraph.build(ys, A3, "left"))
        right = metrics(CayleySubgraph.build([y.inverse() for y in ys], A3, "right"))
        assert (left.delta, left.iota) == (right.delta, right.iota)


def test_ay_ratio():
    assert ay_ratio(A3, [IDENTITY]) == 3
    assert ay_ratio(A3, [IDENTITY], include_identity=True) == 4
    ys = [IDENTITY, G.x(0), G.x(0) * G.x(0)]
    # independent count: products as reduced words
    prods = {reduce_word([(i, 1)] + y.word()) for i in range(3) for y in ys}
    assert ay_ratio(A3, ys) == Fraction(len(prods), 3)
    with pytest.raises(EmptySet):
        ay_ratio(A3, [])


def test_y_generators():
    assert Y0 == reduce_word([(0, 1), (2, -1)])
    assert y_embed([(0, 1)]) == Y0
    assert format_element_tex(y_gen(2)) == "x_2^2x_3^{-1}x_2^{-1}"
    assert y_gen(2) == Y0.inverse() * Y1 * Y0
    assert y_gen(2).conj(Y1) == y_gen(3)
    assert y_gen(3).conj(Y1) == y_gen(4)
    for r in defining_relators():
        assert y_embed(r) == IDENTITY
    assert y_gen(2) != Y1


def test_triangles():
    S = [IDENTITY, G.x(0), G.x(1) * G.x(2, -1), G.x(3)]
    AS = {a * g for a in A3 for g in S}
    assert ay_ratio(A3, S) == Fraction(len(AS), len(S))
    for g in S:
        tri = triangle(g)
        verts = {v for e in tri.values() for v in e}
        assert verts == {a * g for a in A3}


def test_flows():
    Y = CayleySubgraph.build([IDENTITY, G.x(0)], A3)
    e = (IDENTITY, G.x(0))
    rep = flow_check(Y, {e: 0}, 0)
    assert rep.ok and rep.bound == 0
    assert not flow_check(Y, {e: 0}, 1).ok
    rep = flow_check(Y, {e: 1}, 1)
    assert not rep.ok
    assert rep.inflows[G.x(0)] == 1 and rep.inflows[IDENTITY] == -1
    assert not flow_check(Y, {e: 1, (G.x(0), IDENTITY): 1}, -5).antisymmetric
    with pytest.raises(MissingEdgeValue):
        flow_check(Y, {}, 0)
