"""Constructive solutions of equations over K[M].

Everything here returns exact certificates: each public solver re-checks its
output with ring arithmetic before returning, and a failed check raises
``AssertionError`` instead of handing back a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import itertools
from functools import lru_cache

from .config import get_limits
from .errors import InvalidSolution, LengthMismatch, NotASolution, ResourceLimit
from .field import QQ, Field
from .ring import (
    Polynomial,
    geometric_x0,
    homogeneous_components,
    one_minus_left_divide,
    shift_poly,
    x0_decompose,
    x0_power,
)

P = Polynomial


def _guard(*polys: Polynomial) -> None:
    lim = get_limits().max_terms
    for p in polys:
        if len(p) > lim:
            raise ResourceLimit(f"{len(p)} terms exceeds max_terms={lim}")


# -- data -------------------------------------------------------------------


@dataclass(frozen=True)
class PhiRelation:
    """sum_t phi^t(b) * vs[t] == 0 with some vs[t] nonzero."""

    b: Polynomial
    vs: tuple[Polynomial, ...]

    def residual(self) -> Polynomial:
        out = P.zero(self.b.field)
        for t, v in enumerate(self.vs):
            if v:
                out = out + shift_poly(self.b, t) * v
        return out

    def is_valid(self) -> bool:
        return any(self.vs) and not self.residual()


@dataclass(frozen=True)
class PairSolution:
    """(1 - x_left0) u == (1 - x_left1) v, or (1 - x0) u == b v when ``b`` is set."""

    u: Polynomial
    v: Polynomial
    left0: int = 0
    left1: int = 1
    b: Polynomial | None = None

    def lefts(self) -> list[Polynomial]:
        f = self.u.field
        right = self.b if self.b is not None else P.one_minus_x(self.left1, f)
        return [P.one_minus_x(self.left0, f), right]

    def is_valid(self) -> bool:
        return verify_solution(self.lefts(), [self.u, self.v]) and bool(self.u or self.v)


@dataclass(frozen=True)
class ChainSolution:
    """(1 - x_i) us[i] == w for 0 <= i <= m, with w nonzero."""

    m: int
    us: tuple[Polynomial, ...]
    w: Polynomial

    def is_valid(self) -> bool:
        if len(self.us) != self.m + 1 or not self.w:
            return False
        f = self.w.field
        return all(P.one_minus_x(i, f) * u == self.w for i, u in enumerate(self.us))

    def support(self) -> list:
        """The monomials carrying w (the set G_m), graded-lex ordered."""
        return self.w.monomials()


@dataclass(frozen=True)
class V0Division:
    w1: Polynomial
    w2: Polynomial
    w3: Polynomial


# -- verification -------------------------------------------------------------


def verify_solution(lefts: list[Polynomial], us: list[Polynomial]) -> bool:
    """True iff all products lefts[i] * us[i] coincide.

    The all-zero tuple passes; use :func:`is_zero_solution` to flag it.
    """
    if len(lefts) != len(us):
        raise LengthMismatch(f"{len(lefts)} coefficients vs {len(us)} unknowns")
    if len(lefts) < 2:
        raise LengthMismatch("need at least two sides")
    first = lefts[0] * us[0]
    return all(a * u == first for a, u in zip(lefts[1:], us[1:]))


def is_zero_solution(us: list[Polynomial]) -> bool:
    return not any(us)


# -- phi relations --------------------------------------------------------------


def phi_relation(b: Polynomial) -> PhiRelation:
    """A nontrivial relation between b, phi(b), phi^2(b), ... as a right module.

    With ``s`` the index span of b and ``m = s + 1``, a homogeneous b of degree
    d satisfies phi^m(b) b = b phi^(m+d)(b).  Otherwise the top component h_k
    is peeled off: c = phi^m(b) h_k - b phi^(m+d)(h_k) has fewer components,
    and a relation for c pulls back to one for b.
    """
    vs = _phi_coeffs(b)
    rel = PhiRelation(b, tuple(vs))
    if not rel.is_valid():
        raise AssertionError("phi relation failed verification")
    return rel


def _phi_coeffs(b: Polynomial) -> list[Polynomial]:
    f = b.field
    zero = P.zero(f)
    if not b:
        return [P.one(f)]
    m = b.index_span() + 1
    comps = homogeneous_components(b)
    d, hk = comps[-1]
    if len(comps) == 1:
        return [shift_poly(b, m + d)] + [zero] * (m - 1) + [-b]
    c = shift_poly(b, m) * hk - b * shift_poly(hk, m + d)
    _guard(c)
    if not c:
        return [shift_poly(hk, m + d)] + [zero] * (m - 1) + [-hk]
    ws = _phi_coeffs(c)
    n = len(ws) - 1
    out = []
    for j in range(n + m + 1):
        v = zero
        if 0 <= j - m <= n and ws[j - m]:
            v = v + shift_poly(hk, j - m) * ws[j - m]
        if j <= n and ws[j]:
            v = v - shift_poly(hk, j + m + d) * ws[j]
        out.append(v)
    j0 = next(j for j, w in enumerate(ws) if w)
    if not out[j0]:
        raise AssertionError("leading coefficient vanished in phi relation")
    _guard(*out)
    return out


# -- (1 - x0) u = b v -------------------------------------------------------------


def solve_x0_b(b: Polynomial) -> PairSolution:
    """Nonzero (u, v) with (1 - x0) u = b v, v != 0."""
    f = b.field
    parts = x0_decompose(b)
    b1 = P.zero(f)
    c = P.zero(f)
    for t, bt in enumerate(parts):
        if not bt:
            continue
        b1 = b1 + bt
        if t:
            c = c + geometric_x0(t, f) * bt
    if not b1:
        u, v = -c, P.one(f)
    else:
        vs = phi_relation(b1).vs
        if not all(vt.in_M(1) for vt in vs):
            raise AssertionError("phi relation of an x0-free element left K[M_1]")
        v = P.zero(f)
        u1 = P.zero(f)
        for t, vt in enumerate(vs):
            if not vt:
                continue
            v = v + x0_power(t, f) * vt
            if t:
                u1 = u1 - geometric_x0(t, f) * (shift_poly(b1, t) * vt)
        u = u1 - c * v
    _guard(u, v)
    sol = PairSolution(u, v, b=b)
    if not v or P.one_minus_x(0, f) * u != b * v:
        raise AssertionError("solve_x0_b failed verification")
    return sol


# -- (1 - x0) u = (1 - x1) v ----------------------------------------------------------


def basic_u0(field: Field = QQ) -> Polynomial:
    return P({(): 1, (0,): 1, (1,): -1}, field) * P.one_minus_x(3, field)


def basic_v0(field: Field = QQ) -> Polynomial:
    return P({(): 1, (3,): -1, (0, 0): -1, (0, 1): 1}, field)


def basic_solution(field: Field = QQ) -> PairSolution:
    sol = PairSolution(basic_u0(field), basic_v0(field))
    if not sol.is_valid():
        raise AssertionError("basic solution failed verification")
    return sol


@lru_cache(maxsize=64)
def _basis_u(k: int, field: Field) -> Polynomial:
    if k == 0:
        return basic_u0(field)
    return P.one_minus_x(1, field) * shift_poly(_basis_u(k - 1, field), 1)


def basis_u_closed(k: int, field: Field = QQ) -> Polynomial:
    """(1 - x1)...(1 - xk)(1 + xk - x_{k+1})(1 - x_{k+3})."""
    out = P.one(field)
    for i in range(1, k + 1):
        out = out * P.one_minus_x(i, field)
    out = out * P({(): 1, (k,): 1, (k + 1,): -1}, field)
    return out * P.one_minus_x(k + 3, field)


def basis_u(k: int, field: Field = QQ) -> Polynomial:
    """Generator u_k = (1 - x1) phi(u_{k-1}) of the module of u-parts."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    u = _basis_u(k, field)
    if u != basis_u_closed(k, field):
        raise AssertionError(f"recursion and closed form disagree for u_{k}")
    return u


@lru_cache(maxsize=256)
def _v0_table(k: int, field: Field) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(rho_k, xi_k, eta_k) with x0^k = v0 rho_k + x0 xi_k + eta_k, k >= 2."""
    if k == 2:
        return P.const(-1, field), P.x(1, field), P.one_minus_x(3, field)
    rho, xi, eta = _v0_table(k - 1, field)
    _, xi2, eta2 = _v0_table(2, field)
    sxi = shift_poly(xi, 1)
    return (
        rho * P.x(0, field) - sxi,
        xi2 * sxi + shift_poly(eta, 1),
        eta2 * sxi,
    )


def divide_by_v0(v: Polynomial) -> V0Division:
    """v = v0 w1 + x0 w2 + w3 with w2, w3 in K[M_1] and degrees bounded by deg v."""
    f = v.field
    zero = P.zero(f)
    if not v:
        return V0Division(zero, zero, zero)
    zs = x0_decompose(v)
    w1, w2, w3 = zero, zero, zs[0]
    if len(zs) > 1:
        w2 = zs[1]
    for t in range(2, len(zs)):
        if not zs[t]:
            continue
        rho, xi, eta = _v0_table(t, f)
        w1 = w1 + rho * zs[t]
        w2 = w2 + xi * zs[t]
        w3 = w3 + eta * zs[t]
    _guard(w1, w2, w3)
    res = V0Division(w1, w2, w3)
    x0 = P.x(0, f)
    if basic_v0(f) * w1 + x0 * w2 + w3 != v:
        raise AssertionError("divide_by_v0 identity failed")
    if not (w2.in_M(1) and w3.in_M(1)):
        raise AssertionError("divide_by_v0 remainder left K[M_1]")
    dv = v.degree()
    if (w2 and w2.degree() + 1 > dv) or (w3 and w3.degree() > dv):
        raise AssertionError("divide_by_v0 degree bound failed")
    return res


def extend_solution(prev: PairSolution, w: Polynomial) -> PairSolution:
    """u = u0 w + (1 - x1) phi(u'),  v = v0 w + phi(u') - x0 phi(v')."""
    f = w.field
    if prev.left0 != 0 or prev.left1 != 1 or prev.b is not None:
        raise InvalidSolution("extend_solution needs a solution of (1-x0)u = (1-x1)v")
    if not verify_solution(prev.lefts(), [prev.u, prev.v]):
        raise InvalidSolution("the given pair does not solve (1-x0)u = (1-x1)v")
    su, sv = shift_poly(prev.u, 1), shift_poly(prev.v, 1)
    u = basic_u0(f) * w + P.one_minus_x(1, f) * su
    v = basic_v0(f) * w + su - P.x(0, f) * sv
    out = PairSolution(u, v)
    if not verify_solution(out.lefts(), [u, v]):
        raise AssertionError("extend_solution failed verification")
    return out


def decompose_solution(u: Polynomial, v: Polynomial) -> list[Polynomial]:
    """[r_0, ..., r_k] with u = sum basis_u(i) r_i and r_i in K[M_i]."""
    f = u.field
    if P.one_minus_x(0, f) * u != P.one_minus_x(1, f) * v:
        raise NotASolution("(1-x0)u != (1-x1)v")
    rs = _decompose(u, v)
    recon = P.zero(f)
    for i, r in enumerate(rs):
        if not r.in_M(i):
            raise AssertionError(f"r_{i} not in K[M_{i}]")
        if r:
            recon = recon + basis_u(i, f) * r
    if recon != u:
        raise AssertionError("decomposition does not reconstruct u")
    return rs


def _decompose(u: Polynomial, v: Polynomial) -> list[Polynomial]:
    if not v:
        if u:
            raise AssertionError("u != 0 with v = 0 contradicts the absence of zero divisors")
        return []
    d = divide_by_v0(v)
    w = u - basic_u0(u.field) * d.w1
    if not w.in_M(1):
        raise AssertionError("u - u0 w1 is not in K[M_1]")
    rest = _decompose(shift_poly(d.w3, -1), -shift_poly(d.w2, -1))
    return [d.w1] + [shift_poly(r, 1) for r in rest]


def v_from_u(u: Polynomial) -> Polynomial:
    """Recover v from u by cancelling 1 - x1 on the left of (1 - x0) u."""
    if not u:
        return P.zero(u.field)
    return one_minus_left_divide(P.one_minus_x(0, u.field) * u, 1)


# -- chains ---------------------------------------------------------------------------


def chain_solve(m: int, field: Field = QQ, method: str = "lift") -> ChainSolution:
    """Nonzero solution of (1 - x0) u0 = (1 - x1) u1 = ... = (1 - xm) um.

    ``method="induction"`` runs the solve_x0_b induction; its intermediate
    polynomials pass max_terms already at m = 2.  ``method="lift"`` (default)
    builds step m from step m - 1 through :func:`lift_chain`.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if method == "induction":
        return _chain_induction(m, field)
    if method != "lift":
        raise ValueError(f"unknown method {method!r}")
    sol = ChainSolution(0, (P.one(field),), P.one_minus_x(0, field))
    for k in range(1, m + 1):
        sol = lift_chain(sol)
    return sol


def _chain_induction(m: int, field: Field) -> ChainSolution:
    base = basic_solution(field)
    us = [base.u, base.v]
    w = P.one_minus_x(0, field) * base.u
    for _ in range(1, m):
        sol = solve_x0_b(shift_poly(w, 1))
        us = [sol.u] + [shift_poly(ui, 1) * sol.v for ui in us]
        w = P.one_minus_x(0, field) * sol.u
        _guard(w, *us)
    out = ChainSolution(m, tuple(us), w)
    if not out.is_valid():
        raise AssertionError("chain solution failed verification")
    return out


def _low_monomials(max_degree: int, max_index: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for d in range(1, max_degree + 1):
        out.extend(itertools.combinations_with_replacement(range(max_index + 1), d))
    return out


def lift_chain(prev: ChainSolution) -> ChainSolution:
    """A chain solution of length m + 1 built on top of one of length m.

    Ansatz: u_k = sum_a sum_T c_{k,a,T} a phi^N(T) where T runs over
    (w, u_0, ..., u_m) of ``prev`` and a over monomials of degree <= m + 2 in
    x_0..x_{m+1}, with N = m + 3.  The coefficients solve a finite linear
    system; a letter x_i passing through a lands on phi^N(T) as x_{N+j},
    which is where the old chain identities take over.
    """
    from . import linalg

    f = prev.w.field
    m = prev.m + 1
    shift_n, deg, idx = m + 2, m + 1, m
    tails = [shift_poly(t, shift_n) for t in (prev.w, *prev.us)]
    low = _low_monomials(deg, idx)
    cols = [(a, t) for a in low for t in range(len(tails))]
    n = len(cols)
    lefts = [P.one_minus_x(i, f) for i in range(m + 1)]
    base = [P.mono(a, 1, f) * tails[t] for a, t in cols]
    lim = get_limits().max_matrix_entries
    est = 2 * m * n * max(len(b) for b in base) * 2
    if est > lim:
        raise ResourceLimit(f"lift system for m={m} needs about {est} entries (max_matrix_entries={lim})")
    rows: dict[tuple[int, tuple[int, ...]], dict[int, object]] = {}
    for j in range(m):
        for k, sign in ((j, 1), (j + 1, -1)):
            for ci, b in enumerate(base):
                col = k * n + ci
                for mono, c in (lefts[k] * b).terms.items():
                    r = rows.setdefault((j, mono), {})
                    x = f.canon(r.get(col, 0) + sign * c)
                    if x:
                        r[col] = x
                    else:
                        r.pop(col, None)
    for vec in linalg.nullspace(list(rows.values()), n * (m + 1), f):
        if f.p is None:
            vec = linalg.clear_denominators(vec)
        us = []
        for k in range(m + 1):
            terms: dict = {}
            for ci in range(n):
                c = vec.get(k * n + ci)
                if c:
                    for mono, x in base[ci].terms.items():
                        terms[mono] = terms.get(mono, 0) + c * x
            us.append(P(terms, f))
        if any(us):
            out = ChainSolution(m, tuple(us), P.one_minus_x(0, f) * us[0])
            _guard(out.w, *us)
            if not out.is_valid():
                raise AssertionError("lifted chain solution failed verification")
            return out
    raise AssertionError(f"lift ansatz found no chain solution for m={m}")
