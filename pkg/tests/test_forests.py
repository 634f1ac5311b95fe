import random

import pytest

from thompson_ore.config import limits
from thompson_ore.errors import ParseError, ResourceLimit, SizeMismatch
from thompson_ore.forests import (
    LEAF,
    MarkedForest,
    catalan,
    compose,
    count,
    enumerate_kind,
    forest_height,
    forest_leaves,
    format_forest,
    height,
    parse_forest,
    trivial_forest,
)


def catalan_dp(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def test_catalan():
    assert catalan(0) == 1 and catalan(3) == 5 and catalan(10) == 16796
    assert all(catalan(n) == catalan_dp(n) for n in range(20))
    assert all(len(enumerate_kind("trees", n)) == catalan(n) for n in range(9))


def test_examples():
    assert len(enumerate_kind("trees", 1)) == 1
    assert len(enumerate_kind("forests", 3)) == 5
    assert len(enumerate_kind("S", 4, m=2)) == 5
    assert count("S", 3, m=1) == 2
    assert count("bb", 3, k=1) == 7
    assert all(count("forests", n) == catalan(n) for n in range(1, 13))


@pytest.mark.parametrize("kind, m, k", [("trees", None, None), ("forests", None, None), ("S", 3, None), ("bb", None, 2)])
def test_count_matches_enumeration(kind, m, k):
    for n in range(1, 9):
        items = enumerate_kind(kind, n, m, k)
        assert count(kind, n, m, k) == len(items) == len(set(items))


def test_heights():
    t = ((LEAF, LEAF), LEAF)
    assert height(LEAF) == 0 and height(t) == 2
    for mf in enumerate_kind("bb", 5, k=2):
        assert forest_height(mf.forest) <= 2


def test_compose():
    f = ((LEAF, LEAF), LEAF)
    assert compose(f, trivial_forest(3)) == f
    assert compose(trivial_forest(1), f[:1]) == f[:1]
    with pytest.raises(SizeMismatch):
        compose(f, trivial_forest(2))
    s12 = enumerate_kind("S", 2, m=1)
    s23 = enumerate_kind("S", 3, m=2)
    assert {compose(a, b) for a in s12 for b in s23} == set(enumerate_kind("S", 3, m=1))


def test_compose_associative_and_height():
    rng = random.Random(11)
    for _ in range(50):
        m, n, k, l = 1 + rng.randrange(3), 1 + rng.randrange(4), 1 + rng.randrange(5), 1 + rng.randrange(6)
        n = max(n, m)
        k = max(k, n)
        l = max(l, k)
        a = rng.choice(enumerate_kind("S", n, m=m))
        b = rng.choice(enumerate_kind("S", k, m=n))
        c = rng.choice(enumerate_kind("S", l, m=k))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
        ab = compose(a, b)
        assert len(ab) == m and forest_leaves(ab) == k
        assert forest_height(ab) <= forest_height(a) + forest_height(b)


def test_serialization():
    mf = MarkedForest((LEAF, (LEAF, LEAF)), 1)
    assert format_forest(mf) == ".,*(..)"
    assert parse_forest(".,*(..)") == mf
    assert parse_forest("(.(..)),.") == ((LEAF, (LEAF, LEAF)), LEAF)
    for f in enumerate_kind("forests", 5):
        assert parse_forest(format_forest(f)) == f
    with pytest.raises(ParseError):
        parse_forest("(.")
    with pytest.raises(ParseError):
        parse_forest("*.,*.")


def test_enumeration_guard():
    with limits(max_enumeration=100):
        with pytest.raises(ResourceLimit):
            enumerate_kind("forests", 8)
