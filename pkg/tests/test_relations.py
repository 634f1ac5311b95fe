import random

import pytest
from hypothesis import given

from thompson_ore.errors import DegenerateRelation, NotARelation, UnsupportedGenerator
from thompson_ore.group import IDENTITY, GroupElement as G, defining_relators, invert_word
from thompson_ore.relations import FormalSum, relation_to_solution, telescope, telescope_residual
from thompson_ore.ring import Polynomial as P, parse_poly as pp
from thompson_ore.solvers import basic_u0, basic_v0, decompose_solution, verify_solution

from strategies import xy_words

R1, R2 = defining_relators()


def test_telescope_examples():
    U, V = telescope([(0, 1), (0, -1)])
    assert not U and not V
    U, V = telescope([(1, 1)])
    assert not U and V == FormalSum({IDENTITY: 1})
    U, V = telescope(R1)
    lhs = U.one_minus_left(G.x(0)) + V.one_minus_left(G.x(1))
    assert not lhs
    with pytest.raises(UnsupportedGenerator):
        telescope([(2, 1)])


def test_worked_identity():
    a = pp("1 + x0 - x0*x3 - x3 + x1*x3 - x1")
    b = pp("x0^2 + x3 - x0*x1 - 1")
    assert P.one_minus_x(0) * a + P.one_minus_x(1) * b == P.zero()


@given(xy_words(10))
def test_telescope_identity(w):
    assert not telescope_residual(w)


def test_relation_to_solution_first_relator():
    s = relation_to_solution(R1)
    assert s.is_valid()
    assert (s.u, s.v) == (basic_u0(), basic_v0())
    assert decompose_solution(s.u, s.v) == [P.one()]


def test_relation_to_solution_second_relator():
    s = relation_to_solution(R2)
    assert s.is_valid()
    decompose_solution(s.u, s.v)


def test_relation_errors():
    with pytest.raises(DegenerateRelation):
        relation_to_solution([(0, 1), (0, -1)])
    with pytest.raises(NotARelation):
        relation_to_solution([(0, 1)])


def test_products_of_conjugated_relators():
    rng = random.Random(7)
    for _ in range(15):
        word = []
        for _ in range(rng.randint(1, 2)):
            r = rng.choice([R1, R2])
            if rng.random() < 0.5:
                r = invert_word(r)
            c = [(rng.randint(0, 1), rng.choice([1, -1])) for _ in range(rng.randint(0, 2))]
            word += invert_word(c) + r + c
        try:
            s = relation_to_solution(word)
        except DegenerateRelation:
            continue
        assert verify_solution(s.lefts(), [s.u, s.v])
        decompose_solution(s.u, s.v)
