import pytest
from hypothesis import given

from thompson_ore import monoid
from thompson_ore.config import limits
from thompson_ore.errors import MinIndexZero, ParseError, ResourceLimit

from strategies import monomials, words


def rewrite_oracle(word):
    """Apply x_j x_i -> x_i x_{j+1} (i < j) one adjacent pair at a time."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        for t in range(len(w) - 1):
            j, i = w[t], w[t + 1]
            if i < j:
                w[t], w[t + 1] = i, j + 1
                changed = True
                break
    return tuple(w)


@pytest.mark.parametrize(
    "word, nf",
    [([1, 0], (0, 2)), ([0, 1], (0, 1)), ([1, 0, 0], (0, 0, 3)), ([1, 0, 1], (0, 1, 3)), ([], ())],
)
def test_normalize_examples(word, nf):
    assert monoid.normalize(word) == nf


def test_mul_examples():
    assert monoid.mul((1,), (0,)) == (0, 2)
    assert monoid.mul((), (3, 4)) == (3, 4)
    assert monoid.mul((2,), (0, 1)) == (0, 1, 4)


@given(words(7, 5))
def test_normalize_matches_rewriting(word):
    assert monoid.normalize(word) == rewrite_oracle(word)


@given(monomials(), monomials(), monomials())
def test_mul_associative(a, b, c):
    assert monoid.mul(monoid.mul(a, b), c) == monoid.mul(a, monoid.mul(b, c))


@given(monomials(), monomials())
def test_degree_additive_and_min_index(a, b):
    ab = monoid.mul(a, b)
    assert monoid.degree(ab) == monoid.degree(a) + monoid.degree(b)
    mins = [x for x in (monoid.min_index(a), monoid.min_index(b)) if x is not None]
    assert monoid.min_index(ab) == (min(mins) if mins else None)


def test_shift_and_inverse():
    assert monoid.shift((0, 1), 1) == (1, 2)
    assert monoid.shift((), 5) == ()
    assert monoid.shift((0, 0, 3), 2) == (2, 2, 5)
    assert monoid.shift_inv((1, 3)) == (0, 2)
    assert monoid.shift_inv(()) == ()
    with pytest.raises(MinIndexZero):
        monoid.shift_inv((0, 1))


@given(monomials(), monomials())
def test_shift_is_endomorphism(a, b):
    assert monoid.shift(monoid.mul(a, b), 2) == monoid.mul(monoid.shift(a, 2), monoid.shift(b, 2))


def test_x0_split_and_measures():
    assert monoid.x0_split((0, 0, 3)) == (2, (3,))
    assert monoid.x0_split((1,)) == (0, (1,))
    assert monoid.x0_split((0,)) == (1, ())
    m = monoid.measures((1, 3))
    assert (m.degree, m.min_index, m.max_index) == (2, 1, 3)
    assert m.in_M(1) and not monoid.in_M((0, 2), 1)
    assert all(monoid.in_M((), i) for i in range(5))


@given(monomials())
def test_format_parse_roundtrip(a):
    assert monoid.parse_monomial(monoid.format_monomial(a)) == a


def test_parse_normalizes_and_errors():
    assert monoid.parse_monomial("x1*x0") == (0, 2)
    assert monoid.format_monomial((0, 0, 3)) == "x0^2*x3"
    with pytest.raises(ParseError):
        monoid.parse_monomial("x1*y0")


def test_index_guard():
    with limits(max_index=10):
        with pytest.raises(ResourceLimit):
            monoid.normalize([11])
