"""Exact computations around the Ore condition for Thompson's monoid ring K[M]."""

from .errors import ThompsonError
from .field import GF, QQ, Field
from .group import GroupElement, gig_translate, lcm, reduce_word
from .ring import Polynomial, format_poly, parse_poly, shift_poly
from .solvers import (
    ChainSolution,
    PairSolution,
    basic_solution,
    basis_u,
    chain_solve,
    decompose_solution,
    divide_by_v0,
    phi_relation,
    solve_x0_b,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "ChainSolution",
    "Field",
    "GF",
    "GroupElement",
    "PairSolution",
    "Polynomial",
    "QQ",
    "ThompsonError",
    "basic_solution",
    "basis_u",
    "chain_solve",
    "decompose_solution",
    "divide_by_v0",
    "format_poly",
    "gig_translate",
    "lcm",
    "parse_poly",
    "phi_relation",
    "reduce_word",
    "shift_poly",
    "solve_x0_b",
    "verify_solution",
]
