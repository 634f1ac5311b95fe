"""Command-line front end.

JSON output carries ``"schema": "1"``; polynomials inside JSON use the same
text grammar as the parser.  Exit codes: 0 success, 2 for verified-impossible
findings (NoSolutionInBounds, NotDivisible), 1 for any other error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import forests, graphs, group, monoid, relations, search, solvers
from .config import Config, set_limits
from .errors import NoSolutionInBounds, NotDivisible, ThompsonError
from .ring import Polynomial, format_poly, parse_poly, shift_poly

SCHEMA = "1"
FINDINGS = (NoSolutionInBounds, NotDivisible)


def _poly(p: Polynomial) -> str:
    return format_poly(p)


def _chain_json(sol: solvers.ChainSolution) -> dict:
    return {
        "m": sol.m,
        "us": [_poly(u) for u in sol.us],
        "w": _poly(sol.w),
        "support_w": [monoid.format_monomial(a) for a in sol.support()],
        "terms": [len(u) for u in sol.us],
        "verified": sol.is_valid(),
    }


def _read_set(path: str) -> list[group.GroupElement]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(group.parse_element(line))
    return out


def _gens(text: str) -> list[group.GroupElement]:
    return [group.parse_element(t) for t in text.split(",") if t.strip()]


# -- handlers -------------------------------------------------------------------


def cmd_normalize(a, cfg):
    m = monoid.parse_monomial(a.word)
    return {"normal_form": monoid.format_monomial(m), "degree": monoid.degree(m)}


def cmd_mul(a, cfg):
    f = cfg.make_field()
    return {"product": _poly(parse_poly(a.a, f) * parse_poly(a.b, f))}


def cmd_reduce(a, cfg):
    e = group.reduce_word(group.parse_word(a.word))
    return {"normal_form": str(e), "tex": group.format_element_tex(e), "identity": e.is_identity}


def cmd_lcm(a, cfg):
    x, y = monoid.parse_monomial(a.a), monoid.parse_monomial(a.b)
    return {"lcm": monoid.format_monomial(group.lcm(x, y))}


def cmd_gig(a, cfg):
    els = [group.parse_element(t) for t in a.elements]
    g, moved = group.gig_translate(els)
    return {"g": monoid.format_monomial(g), "translated": [monoid.format_monomial(t) for t in moved]}


def cmd_phi(a, cfg):
    return {"result": _poly(shift_poly(parse_poly(a.poly, cfg.make_field()), a.s))}


def cmd_phi_relation(a, cfg):
    rel = solvers.phi_relation(parse_poly(a.b, cfg.make_field()))
    return {"b": _poly(rel.b), "vs": [_poly(v) for v in rel.vs], "verified": rel.is_valid()}


def cmd_solve_x0b(a, cfg):
    sol = solvers.solve_x0_b(parse_poly(a.b, cfg.make_field()))
    return {"b": _poly(sol.b), "u": _poly(sol.u), "v": _poly(sol.v), "verified": sol.is_valid()}


def cmd_chain(a, cfg):
    return _chain_json(solvers.chain_solve(a.m, cfg.make_field(), method=a.method))


def cmd_divide_v0(a, cfg):
    d = solvers.divide_by_v0(parse_poly(a.v, cfg.make_field()))
    return {"w1": _poly(d.w1), "w2": _poly(d.w2), "w3": _poly(d.w3)}


def cmd_decompose(a, cfg):
    f = cfg.make_field()
    rs = solvers.decompose_solution(parse_poly(a.u, f), parse_poly(a.v, f))
    return {"r": [_poly(r) for r in rs]}


def cmd_basis_u(a, cfg):
    return {"k": a.k, "u": _poly(solvers.basis_u(a.k, cfg.make_field()))}


def cmd_relation2solution(a, cfg):
    sol = relations.relation_to_solution(group.parse_word(a.word), cfg.make_field())
    out = {"u": _poly(sol.u), "v": _poly(sol.v), "verified": sol.is_valid()}
    if a.decompose:
        out["r"] = [_poly(r) for r in solvers.decompose_solution(sol.u, sol.v)]
    return out


def cmd_density(a, cfg):
    Y = graphs.CayleySubgraph.build(_read_set(a.set), _gens(a.gens), a.side)
    res = graphs.metrics(Y)
    return {
        "delta": str(res.delta),
        "iota": str(res.iota),
        "m": res.m,
        "vertices": len(Y.vertices),
        "inner_boundary": len(res.inner_boundary),
        "cheeger_boundary_size": res.cheeger_boundary_size,
        "identity_ok": res.identity_ok,
    }


def cmd_ay_ratio(a, cfg):
    r = graphs.ay_ratio(_gens(a.gens), _read_set(a.set), a.identity or cfg.identity_in_a)
    return {"ratio": str(r)}


def cmd_flow_check(a, cfg):
    Y = graphs.CayleySubgraph.build(_read_set(a.set), _gens(a.gens), a.side)
    flow = {}
    for line in Path(a.flow).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tail, head, value = (t.strip() for t in line.split(";"))
        flow[(group.parse_element(tail), group.parse_element(head))] = Fraction(value)
    rep = graphs.flow_check(Y, flow, Fraction(a.eps))
    return {
        "ok": rep.ok,
        "antisymmetric": rep.antisymmetric,
        "min_inflow": str(rep.min_inflow),
        "C": str(rep.bound),
    }


def _forest_args(a):
    if a.kind == "trees":
        return dict(kind="trees", n=a.carets)
    return dict(kind=a.kind, n=a.leaves, m=a.roots, k=a.height)


def cmd_forest(a, cfg):
    kw = _forest_args(a)
    if a.forest_cmd == "count":
        return {"kind": a.kind, "count": forests.count(**kw)}
    items = forests.enumerate_kind(**kw)
    if kw["kind"] == "trees":
        lines = [forests.format_tree(t) for t in items]
    else:
        lines = [forests.format_forest(f) for f in items]
    return {"kind": a.kind, "count": len(lines), "items": lines}


def cmd_search(a, cfg):
    f = cfg.make_field()
    deg = cfg.search_max_degree if a.max_degree is None else a.max_degree
    idx = cfg.search_max_index if a.max_index is None else a.max_index
    if a.search_cmd == "chain":
        if a.export:
            sup = search.bounded_support(deg, idx)
            sys_ = search.build_system(search.chain_lefts(a.m, f), [sup] * (a.m + 1))
            with open(a.export, "w") as fh:
                sys_.write_triplets(fh)
        cands = search.minimal_chain_search(a.m, deg, idx, f)
        return {"m": a.m, "max_degree": deg, "max_index": idx, "candidates": [_chain_json(c) for c in cands]}
    triples = [tuple(Fraction(x) for x in t.split(",")) for t in a.coeffs.split(";")]
    sup = search.bounded_support(deg, idx)
    sys_ = search.q_system(triples, [sup] * len(triples), f)
    if a.export:
        with open(a.export, "w") as fh:
            sys_.write_triplets(fh)
    basis = search.nullspace(sys_)
    if not basis:
        raise NoSolutionInBounds("only the zero solution fits these bounds")
    sols = [[_poly(u) for u in sys_.unpack(v)] for v in basis]
    return {"k": len(triples) - 1, "rows": len(sys_.rows), "cols": sys_.ncols, "solutions": sols}


# -- parser -----------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="JSON config file (default: $THOMPSON_ORE_CONFIG)")
    p.add_argument("--field", choices=["q", "fp"])
    p.add_argument("--prime", type=int)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="output", action="store_const", const="json")
    out.add_argument("--text", dest="output", action="store_const", const="text")
    p.add_argument("--seed", type=int, help="seed for randomized helpers")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="thompson-ore", description="Ore-condition tools for Thompson's monoid and group.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, leaf=True):
        p = sub.add_parser(name, parents=[common] if leaf else [], help=help)
        p.set_defaults(func=func)
        return p

    p = add("normalize", cmd_normalize, "normal form of a monoid word")
    p.add_argument("word")
    p = add("mul", cmd_mul, "product of two polynomials")
    p.add_argument("a")
    p.add_argument("b")
    p = add("reduce", cmd_reduce, "normal form of a group word")
    p.add_argument("word")
    p = add("lcm", cmd_lcm, "least common right multiple of two monomials")
    p.add_argument("a")
    p.add_argument("b")
    p = add("gig", cmd_gig, "translate group elements into M by one right factor")
    p.add_argument("elements", nargs="+")
    p = add("phi", cmd_phi, "apply the shift x_i -> x_{i+s}")
    p.add_argument("poly")
    p.add_argument("-s", type=int, default=1)
    p = add("phi-relation", cmd_phi_relation, "relation sum phi^t(b) v_t = 0")
    p.add_argument("-b", required=True)
    p = add("solve-x0b", cmd_solve_x0b, "solve (1 - x0) u = b v")
    p.add_argument("-b", required=True)
    p = add("chain", cmd_chain, "solve (1 - x0) u0 = ... = (1 - xm) um")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--method", choices=["lift", "induction"], default="lift")
    p = add("divide-v0", cmd_divide_v0, "v = v0 w1 + x0 w2 + w3")
    p.add_argument("-v", required=True)
    p = add("decompose", cmd_decompose, "coordinates of u over the u_k")
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)
    p = add("basis-u", cmd_basis_u, "generator u_k")
    p.add_argument("-k", type=int, required=True)
    p = add("relation2solution", cmd_relation2solution, "solution from a relation in x0, x1")
    p.add_argument("word")
    p.add_argument("--decompose", action="store_true")
    for name, func, help in (
        ("density", cmd_density, "density and Cheeger boundary of a vertex set"),
        ("ay-ratio", cmd_ay_ratio, "|AY| / |Y|"),
        ("flow-check", cmd_flow_check, "check a finite flow"),
    ):
        p = add(name, func, help)
        p.add_argument("--set", required=True, help="file with one group word per line")
        p.add_argument("--gens", default="x0,x1,x2")
        if name == "ay-ratio":
            p.add_argument("--identity", action="store_true", help="add 1 to A")
        else:
            p.add_argument("--side", choices=["left", "right"], default="right")
        if name == "flow-check":
            p.add_argument("--flow", required=True, help="lines 'tail ; head ; value'")
            p.add_argument("--eps", default="0")

    p = add("forest", cmd_forest, "count or enumerate forests", leaf=False)
    fsub = p.add_subparsers(dest="forest_cmd", required=True)
    for name in ("count", "enumerate"):
        q = fsub.add_parser(name, parents=[common])
        q.add_argument("--kind", choices=["trees", "forests", "S", "bb"], required=True)
        q.add_argument("--leaves", type=int, default=1)
        q.add_argument("--carets", type=int, default=0)
        q.add_argument("--roots", type=int)
        q.add_argument("--height", type=int)

    p = add("search", cmd_search, "bounded-support linear search", leaf=False)
    ssub = p.add_subparsers(dest="search_cmd", required=True)
    q = ssub.add_parser("chain", parents=[common])
    q.add_argument("-m", type=int, required=True)
    q2 = ssub.add_parser("q", parents=[common], help="system alpha_j x0 + beta_j x1 + gamma_j x2 with equal products")
    q2.add_argument("--coeffs", required=True, help="triples a,b,c separated by ';'")
    for q in (q, q2):
        q.add_argument("--max-degree", type=int)
        q.add_argument("--max-index", type=int)
        q.add_argument("--export", help="write the matrix as 'row col num/den' triplets")
    return parser


def _config(args) -> Config:
    base = Config.load(args.config)
    changes = {}
    if args.field:
        changes["field"] = args.field
    if args.prime:
        changes["prime"] = args.prime
    if args.output:
        changes["output"] = args.output
    if changes:
        from dataclasses import replace

        base = replace(base, **changes)
    return base


def _emit(payload: dict, cfg: Config, stream) -> None:
    if cfg.output == "json":
        stream.write(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True) + "\n")
        return
    for k, v in payload.items():
        if isinstance(v, list):
            stream.write(f"{k}:\n")
            for item in v:
                stream.write(f"  {json.dumps(item) if isinstance(item, dict) else item}\n")
        else:
            stream.write(f"{k}: {v}\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except (ValueError, OSError) as e:
        sys.stderr.write(f"config error: {e}\n")
        return 1
    if args.seed is not None:
        random.seed(args.seed)
    set_limits(cfg.limits)
    try:
        payload = args.func(args, cfg)
    except FINDINGS as e:
        _emit({"error": {"code": e.code, "message": str(e)}}, cfg, sys.stdout)
        return 2
    except ThompsonError as e:
        _emit({"error": {"code": e.code, "message": str(e)}}, cfg, sys.stdout)
        return 1
    except (ValueError, OSError) as e:
        _emit({"error": {"code": "error", "message": str(e)}}, cfg, sys.stdout)
        return 1
    _emit(payload, cfg, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
