"""Command-line front end.

Exit codes: 0 for success / positive decisions, 1 for negative decisions
(unsolvable instance, not k-planar, invalid drawing), 2 for malformed input
or flags, 3 for oracle budget exhaustion.  All machine-readable output goes
to files as deterministic JSON; stdout carries short human summaries.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, dot, family, reduction, tpart
from .drawing import Drawing, DrawingFormatError, planarize, verify
from .mgraph import Multigraph, new_multigraph, subdivide, total_edge_copies
from .oracle import BudgetExhausted, OracleBudget, cr_exact, decide_kplanar, lcr_exact


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except DrawingFormatError as exc:
        print(f"invalid drawing: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kplanar")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile-reduction", help="compile an instance into the gadget graph")
    p.add_argument("--instance", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dot", help="also write role-labeled DOT here")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("witness", help="compile, solve, and emit the witness drawing")
    p.add_argument("--instance", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify-drawing", help="check a drawing and report cr / lcr")
    p.add_argument("--drawing", required=True)
    p.add_argument("--out", help="write the report as JSON here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("subdivide", help="subdivide every edge copy once")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_subdivide)

    p = sub.add_parser("oracle", help="exact brute-force queries")
    orc = p.add_subparsers(dest="query", required=True)
    for query in ("lcr", "cr", "kplanar"):
        q = orc.add_parser(query)
        q.add_argument("--graph", required=True)
        if query == "kplanar":
            q.add_argument("--k", type=int, required=True)
        q.add_argument("--max-edge-copies", type=int)
        q.add_argument("--max-crossings", type=int)
        q.add_argument("--timeout", type=float)
        q.set_defaults(func=_cmd_oracle, query=query)

    p = sub.add_parser("family", help="build a tradeoff family member")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--drawing", choices=("d1", "d2"))
    p.add_argument("--out-drawing")
    p.add_argument("--dot", help="also write role-labeled DOT here")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("bounds", help="exact bound calculators")
    bnd = p.add_subparsers(dest="calc", required=True)
    q = bnd.add_parser("crossing-lemma")
    q.add_argument("--v", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True)
    q.set_defaults(func=_cmd_bounds, calc="crossing-lemma")
    q = bnd.add_parser("r-upper")
    q.add_argument("--v", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.set_defaults(func=_cmd_bounds, calc="r-upper")

    p = sub.add_parser("solve-3partition", help="exact 3-partition solver")
    p.add_argument("--instance", required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--out", help="write the partition as JSON here")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("generate-3partition", help="deterministic instance generator")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--unsolvable", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("export-dot", help="render a graph or a drawing's planarization")
    p.add_argument("--graph")
    p.add_argument("--drawing")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_export_dot)

    p = sub.add_parser("round-trip", help="check parse -> serialize -> parse stability")
    p.add_argument("--kind", choices=("graph", "instance", "drawing"), required=True)
    p.add_argument("path")
    p.set_defaults(func=_cmd_round_trip)

    return parser


def _read_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_json(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump(obj))


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_instance(args) -> tpart.ThreePartitionInstance:
    inst = tpart.ThreePartitionInstance.from_json_dict(_read_json(args.instance))
    check = tpart.validate(inst, strict=args.strict)
    if not check.ok:
        raise ValueError("invalid instance: " + "; ".join(check.errors))
    return inst


def _load_graph(path: str) -> Multigraph:
    return Multigraph.from_json_dict(_read_json(path))


def _cmd_compile(args) -> int:
    inst = _load_instance(args)
    rg = reduction.compile_reduction(inst, args.k)
    _write_json(args.out, rg.graph.to_json_dict())
    if args.dot:
        _write_text(args.dot, dot.to_dot(rg.graph, rg.roles))
    print(f"gadget: {rg.graph.n} vertices, {len(rg.graph.edges)} edges, "
          f"{total_edge_copies(rg.graph)} edge copies")
    return 0


def _cmd_witness(args) -> int:
    inst = _load_instance(args)
    part = tpart.solve(inst)
    if part is None:
        print("instance is unsolvable, no witness drawing exists", file=sys.stderr)
        return 1
    rg = reduction.compile_reduction(inst, args.k)
    d = reduction.witness_drawing(rg, part, args.k)
    report = verify(d)
    _write_json(args.out, d.to_json_dict())
    print(f"cr={report.cr} lcr={report.lcr} valid={str(report.valid).lower()}")
    return 0


def _cmd_verify(args) -> int:
    d = Drawing.from_json_dict(_read_json(args.drawing))
    report = verify(d)
    print(f"cr={report.cr} lcr={report.lcr} valid={str(report.valid).lower()}")
    if args.out:
        _write_json(args.out, {"valid": report.valid, "cr": report.cr, "lcr": report.lcr})
    return 0 if report.valid else 1


def _cmd_subdivide(args) -> int:
    g = _load_graph(args.graph)
    sub, _ = subdivide(g)
    _write_json(args.out, sub.to_json_dict())
    print(f"subdivided: {sub.n} vertices, {len(sub.edges)} edges")
    return 0


def _budget(args) -> OracleBudget:
    base = OracleBudget()
    return OracleBudget(
        max_edge_copies=base.max_edge_copies if args.max_edge_copies is None else args.max_edge_copies,
        max_crossings=base.max_crossings if args.max_crossings is None else args.max_crossings,
        timeout=base.timeout if args.timeout is None else args.timeout,
    )


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    budget = _budget(args)
    if args.query == "kplanar":
        if args.k < 0:
            raise ValueError("--k must be non-negative")
        ok = decide_kplanar(g, args.k, budget)
        print(str(ok).lower())
        return 0 if ok else 1
    value = lcr_exact(g, budget) if args.query == "lcr" else cr_exact(g, budget)
    print(value)
    return 0


def _cmd_family(args) -> int:
    fg = family.build_family(args.k)
    _write_json(args.out, fg.graph.to_json_dict())
    print(f"family k={args.k}: {fg.graph.n} vertices, {len(fg.graph.edges)} edges")
    if args.dot:
        _write_text(args.dot, dot.to_dot(fg.graph, fg.roles))
    if args.drawing:
        if not args.out_drawing:
            raise ValueError("--drawing requires --out-drawing")
        d = family.drawing_d1(fg) if args.drawing == "d1" else family.drawing_d2(fg)
        report = verify(d)
        _write_json(args.out_drawing, d.to_json_dict())
        print(f"{args.drawing}: cr={report.cr} lcr={report.lcr} valid={str(report.valid).lower()}")
    return 0


def _cmd_bounds(args) -> int:
    if args.calc == "crossing-lemma":
        value = bounds.crossing_lemma_lb(args.v, args.e, Fraction(args.lam))
    else:
        value = bounds.r_upper(args.v, args.e)
    print(f"{value} (~{float(value):.6g})")
    return 0


def _cmd_solve(args) -> int:
    inst = _load_instance(args)
    part = tpart.solve(inst)
    if part is None:
        print("unsolvable")
        return 1
    shown = ",".join("{" + ",".join(str(i + 1) for i in trip) + "}" for trip in part.parts)
    print(shown)
    if args.out:
        _write_json(args.out, {"parts": [list(trip) for trip in part.parts]})
    return 0


def _cmd_generate(args) -> int:
    inst = tpart.generate(args.m, args.b, solvable=not args.unsolvable, seed=args.seed)
    _write_json(args.out, inst.to_json_dict())
    print(f"a={list(inst.a)} B={inst.B} m={inst.m}")
    return 0


def _cmd_export_dot(args) -> int:
    if bool(args.graph) == bool(args.drawing):
        raise ValueError("give exactly one of --graph / --drawing")
    if args.graph:
        _write_text(args.out, dot.to_dot(_load_graph(args.graph)))
    else:
        d = Drawing.from_json_dict(_read_json(args.drawing))
        _write_text(args.out, dot.to_dot(planarize(d)))
    return 0


def _cmd_round_trip(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        original = fh.read()
    raw = json.loads(original)
    if args.kind == "graph":
        again = Multigraph.from_json_dict(raw).to_json_dict()
    elif args.kind == "instance":
        again = tpart.ThreePartitionInstance.from_json_dict(raw).to_json_dict()
    else:
        d = Drawing.from_json_dict(raw)
        trouble = d.problems()
        if trouble:
            raise DrawingFormatError(trouble)
        again = d.to_json_dict()
    value_stable = json.loads(_dump(again)) == raw
    byte_stable = _dump(again) == original
    print(f"value={str(value_stable).lower()} bytes={str(byte_stable).lower()}")
    return 0 if value_stable else 1


if __name__ == "__main__":
    sys.exit(main())
