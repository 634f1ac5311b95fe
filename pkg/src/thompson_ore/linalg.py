"""Exact sparse linear algebra over Q or F_p.

Rows are dicts ``{column: value}`` with values in the field's canonical form.
Elimination is plain Gauss-Jordan with a sparsest-row pivot choice, which is
good enough for the structured systems produced by :mod:`thompson_ore.search`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm as _ilcm
from typing import Iterable, Mapping, Sequence

from .field import QQ, Field

Row = dict[int, object]


def _axpy(dst: Row, a, src: Mapping[int, object], field: Field) -> None:
    """dst += a * src, dropping zeros."""
    for c, v in src.items():
        x = dst.get(c, 0) + a * v
        x = field.canon(x)
        if x:
            dst[c] = x
        else:
            dst.pop(c, None)


def rref(rows: Iterable[Mapping[int, object]], field: Field = QQ) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns), sorted by pivot."""
    pending = [dict(r) for r in rows if r]
    basis: dict[int, Row] = {}
    for row in pending:
        # reduce against existing pivots
        for c in [c for c in row if c in basis]:
            if c in row:
                _axpy(row, -row[c], basis[c], field)
        while row:
            piv = min(row)
            inv = field.div(1, row[piv])
            row = {c: field.canon(v * inv) for c, v in row.items()}
            # back-substitute the new pivot into older rows
            for r in basis.values():
                if piv in r:
                    _axpy(r, -r[piv], row, field)
            basis[piv] = row
            break
    pivots = sorted(basis)
    return [basis[c] for c in pivots], pivots


def rank(rows: Iterable[Mapping[int, object]], field: Field = QQ) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows: Sequence[Mapping[int, object]], ncols: int, field: Field = QQ) -> list[Row]:
    """Basis of {x : A x = 0}, one vector per free column."""
    red, pivots = rref(rows, field)
    pset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pset:
            continue
        vec: Row = {f: 1}
        for r, p in zip(red, pivots):
            v = r.get(f)
            if v:
                vec[p] = field.canon(-v)
        out.append(vec)
    return out


def in_span(vec: Mapping[int, object], basis: Sequence[Mapping[int, object]], field: Field = QQ) -> bool:
    red, pivots = rref(basis, field)
    rest = dict(vec)
    for r, p in zip(red, pivots):
        if p in rest:
            _axpy(rest, -rest[p], r, field)
    return not rest


def apply(rows: Sequence[Mapping[int, object]], vec: Mapping[int, object], field: Field = QQ) -> list:
    return [field.canon(sum(v * vec.get(c, 0) for c, v in r.items())) for r in rows]


def clear_denominators(vec: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational vector to coprime integers with a positive first entry."""
    from math import gcd

    den = 1
    for v in vec.values():
        den = _ilcm(den, Fraction(v).denominator)
    ints = {c: int(Fraction(v) * den) for c, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g == 0:
        return ints
    first = ints[min(ints)]
    if first < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """n/d with n = a d mod m and |n|, d below sqrt(m/2), or None."""
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)
