"""Linear-algebra search for solutions over bounded monomial supports.

For lefts a_0, ..., a_k and finite supports S_0, ..., S_k the unknowns are the
coefficients of u_j on S_j and each equation a_j u_j - a_{j+1} u_{j+1} = 0 is
imposed coefficientwise.  Over Q a dense rank computation mod a large prime
runs first: a zero nullity there proves the rational nullspace is trivial.
"""

from __future__ import annotations

import itertools
import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from . import _kernels, linalg
from .config import get_limits
from .errors import EmptySupport, LengthMismatch, NoSolutionInBounds, ParseError, ResourceLimit
from .field import QQ, Field, GF
from .monoid import Monomial, sort_key
from .ring import Polynomial
from .solvers import ChainSolution, verify_solution

PREFILTER_PRIME = 2**31 - 1
# dense cubic elimination; beyond this the prefilter is skipped
DENSE_PREFILTER_LIMIT = 4_000_000


def bounded_support(max_degree: int, max_index: int, min_index: int = 0) -> list[Monomial]:
    """All normal forms of degree <= max_degree with letters in [min_index, max_index]."""
    out: list[Monomial] = [()]
    for d in range(1, max_degree + 1):
        out.extend(itertools.combinations_with_replacement(range(min_index, max_index + 1), d))
    return out


@dataclass
class LinearSystem:
    lefts: list[Polynomial]
    supports: list[list[Monomial]]
    rows: list[dict[int, object]]
    row_keys: list[tuple[int, Monomial]]
    field: Field = QQ
    offsets: list[int] = dataclasses.field(default_factory=list)

    @property
    def ncols(self) -> int:
        return sum(len(s) for s in self.supports)

    def entries(self) -> int:
        return sum(len(r) for r in self.rows)

    def column(self, block: int, mono: Monomial) -> int:
        return self.offsets[block] + self.supports[block].index(mono)

    def vector_of(self, us: Sequence[Polynomial]) -> dict[int, object] | None:
        """Coefficient vector of (u_0, ..., u_k), or None if a support misses a term."""
        vec = {}
        for b, u in enumerate(us):
            idx = {m: i for i, m in enumerate(self.supports[b])}
            for m, c in u.terms.items():
                if m not in idx:
                    return None
                vec[self.offsets[b] + idx[m]] = c
        return vec

    def unpack(self, vec: dict[int, object]) -> list[Polynomial]:
        out = []
        for b, sup in enumerate(self.supports):
            off = self.offsets[b]
            out.append(Polynomial({m: vec[off + i] for i, m in enumerate(sup) if vec.get(off + i)}, self.field))
        return out

    def satisfied_by(self, vec: dict[int, object]) -> bool:
        return not any(linalg.apply(self.rows, vec, self.field))

    def write_triplets(self, fh: TextIO) -> None:
        """Sparse text form: a header ``% rows cols nnz`` then ``row col num/den`` lines."""
        fh.write(f"% {len(self.rows)} {self.ncols} {self.entries()}\n")
        for r, row in enumerate(self.rows):
            for c in sorted(row):
                v = Fraction(row[c])
                fh.write(f"{r} {c} {v.numerator}/{v.denominator}\n")


def read_triplets(fh: TextIO) -> tuple[int, int, list[dict[int, Fraction]]]:
    header = fh.readline().split()
    if len(header) != 4 or header[0] != "%":
        raise ParseError("expected '% rows cols nnz' header", " ".join(header), 0)
    nrows, ncols = int(header[1]), int(header[2])
    rows: list[dict[int, Fraction]] = [{} for _ in range(nrows)]
    for line in fh:
        if not line.strip():
            continue
        r, c, v = line.split()
        rows[int(r)][int(c)] = Fraction(v)
    return nrows, ncols, rows


def build_system(lefts: Sequence[Polynomial], supports: Sequence[Iterable[Monomial]]) -> LinearSystem:
    if len(lefts) != len(supports):
        raise LengthMismatch(f"{len(lefts)} lefts vs {len(supports)} supports")
    if len(lefts) < 2:
        raise LengthMismatch("need at least two unknowns")
    f = lefts[0].field
    sups = [sorted(set(s), key=sort_key) for s in supports]
    if any(not s for s in sups):
        raise EmptySupport("every unknown needs a nonempty support")
    offsets = list(itertools.accumulate([0] + [len(s) for s in sups[:-1]]))
    index: dict[tuple[int, Monomial], int] = {}
    rows: list[dict[int, object]] = []
    lim = get_limits().max_matrix_entries
    nnz = 0
    for j in range(len(lefts) - 1):
        for b, sign in ((j, 1), (j + 1, -1)):
            for i, mono in enumerate(sups[b]):
                col = offsets[b] + i
                prod = lefts[b] * Polynomial.mono(mono, 1, f)
                for pm, c in prod.terms.items():
                    key = (j, pm)
                    r = index.get(key)
                    if r is None:
                        r = index[key] = len(rows)
                        rows.append({})
                    row = rows[r]
                    x = f.canon(row.get(col, 0) + sign * c)
                    if x:
                        row[col] = x
                    else:
                        row.pop(col, None)
                    nnz += 1
                if nnz > lim:
                    raise ResourceLimit(f"system exceeds max_matrix_entries={lim}")
    keys = [None] * len(rows)
    for k, r in index.items():
        keys[r] = k
    keep = [i for i, r in enumerate(rows) if r]
    return LinearSystem(list(lefts), sups, [rows[i] for i in keep], [keys[i] for i in keep], f, offsets)


def chain_lefts(m: int, field: Field = QQ) -> list[Polynomial]:
    return [Polynomial.one_minus_x(i, field) for i in range(m + 1)]


def q_lefts(coeffs: Sequence[tuple[object, object, object]], field: Field = QQ) -> list[Polynomial]:
    """alpha_j x0 + beta_j x1 + gamma_j x2 for each triple."""
    return [Polynomial({(0,): a, (1,): b, (2,): c}, field) for a, b, c in coeffs]


def q_system(coeffs: Sequence[tuple[object, object, object]], supports, field: Field = QQ) -> LinearSystem:
    """The system a_0 u_0 = ... = a_k u_k with a_j = alpha_j x0 + beta_j x1 + gamma_j x2."""
    return build_system(q_lefts(coeffs, field), supports)


def mod_p_nullity(sys: LinearSystem, p: int = PREFILTER_PRIME, backend: str | None = None) -> int | None:
    """Nullity over F_p of the integer-scaled matrix, or None if not computable."""
    nrows, ncols = len(sys.rows), sys.ncols
    if nrows * ncols > min(DENSE_PREFILTER_LIMIT, get_limits().max_matrix_entries):
        return None
    import numpy as np

    fp = GF(p)
    a = np.zeros((nrows, ncols), dtype=np.int64)
    try:
        for r, row in enumerate(sys.rows):
            for c, v in row.items():
                a[r, c] = fp.coerce(v) if sys.field.p is None else v % p
    except ZeroDivisionError:
        return None
    return ncols - _kernels.rank_mod_p(a, p, backend)


def nullspace(sys: LinearSystem, prefilter: bool = True) -> list[dict[int, object]]:
    """Exact nullspace basis; every vector is re-checked against the rows."""
    if sys.entries() > get_limits().max_matrix_entries:
        raise ResourceLimit("system too large for exact elimination")
    if prefilter and sys.field.p is None and mod_p_nullity(sys) == 0:
        return []
    basis = linalg.nullspace(sys.rows, sys.ncols, sys.field)
    for v in basis:
        if not sys.satisfied_by(v):
            raise AssertionError("nullspace vector fails the system")
    return basis


def _support_size(v: dict) -> int:
    return sum(1 for x in v.values() if x)


def _shrink(vecs: list[dict], field: Field) -> list[dict]:
    """Greedy: replace v by v - t b whenever that strictly shrinks the support."""
    out = []
    for i, v in enumerate(vecs):
        v = dict(v)
        improved = True
        while improved:
            improved = False
            for j, b in enumerate(vecs):
                if j == i:
                    continue
                for c in b:
                    if c not in v:
                        continue
                    t = field.div(v[c], b[c])
                    w = dict(v)
                    linalg._axpy(w, field.canon(-t), b, field)
                    if w and _support_size(w) < _support_size(v):
                        v, improved = w, True
                        break
                if improved:
                    break
        out.append(v)
    return out


def minimal_chain_search(
    m: int, max_degree: int, max_index: int, field: Field = QQ, prefilter: bool = True
) -> list[ChainSolution]:
    """Verified chain solutions over the bounded support, smallest support first."""
    if m < 1:
        raise ValueError("m must be at least 1")
    sup = bounded_support(max_degree, max_index)
    lefts = chain_lefts(m, field)
    sys = build_system(lefts, [sup] * (m + 1))
    basis = nullspace(sys, prefilter)
    if not basis:
        raise NoSolutionInBounds(f"no chain solution for m={m} with degree <= {max_degree}, index <= {max_index}")
    cands = []
    seen = set()
    for v in _shrink(basis, field):
        if field.p is None:
            v = linalg.clear_denominators(v)
        us = sys.unpack(v)
        key = tuple(us)
        if key in seen:
            continue
        seen.add(key)
        if not verify_solution(lefts, us):
            raise AssertionError("search candidate fails verification")
        cands.append(ChainSolution(m, tuple(us), lefts[0] * us[0]))
    cands.sort(key=lambda s: (sum(len(u) for u in s.us), [str(u) for u in s.us]))
    return cands
