from hypothesis import strategies as st

from thompson_ore import monoid
from thompson_ore.field import QQ
from thompson_ore.group import GroupElement
from thompson_ore.ring import Polynomial


def words(max_len=5, max_index=4):
    return st.lists(st.integers(0, max_index), max_size=max_len)


def monomials(max_len=4, max_index=4):
    return words(max_len, max_index).map(monoid.normalize)


def polys(max_terms=4, max_len=3, max_index=4, field=QQ, coeffs=st.integers(-3, 3)):
    return st.dictionaries(monomials(max_len, max_index), coeffs, max_size=max_terms).map(
        lambda d: Polynomial(d, field)
    )


def nonzero_polys(**kw):
    return polys(**kw).filter(bool)


def group_words(max_len=8, max_index=3):
    return st.lists(st.tuples(st.integers(0, max_index), st.sampled_from([1, -1])), max_size=max_len)


def xy_words(max_len=10):
    return group_words(max_len, 1)


def elements(max_len=6, max_index=3):
    from thompson_ore.group import reduce_word

    return group_words(max_len, max_index).map(reduce_word)
