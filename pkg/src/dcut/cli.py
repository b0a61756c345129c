"""Command line front end.

Exit codes: 0 completed (including a NO answer), 1 bad input or violated
precondition, 2 search budget exhausted. Decision subcommands print YES
or NO as their first stdout line. All vertex ids in files and messages
are 1-based; the Python API is 0-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .colouring import DCutCertificate, parse_colouring, serialize_colouring, verify
from .errors import PromiseViolationError, ResourceExceeded
from .exact import DEFAULT_MAX_NODES, DEFAULT_TIME_BUDGET, solve_bp, solve_naive
from .gadgets import (
    gen_diamond_chain,
    gen_h_gadget,
    gen_random_clawfree,
    gen_regular_noncut,
    gen_spider,
)
from .graph import (
    Graph,
    Spider,
    find_induced_spider,
    is_connected,
    parse_graph,
    serialize_graph,
    structural_report,
)
from .sat import parse_cnf, reduce as reduce_formula, solve_nae01
from .structured import WorkCounter, build_seed, degree_two_cut, flood_from_seed


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _write_json(path: str | None, payload: dict):
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v + 1};")
    for u, v in g.edges():
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_graph(args, g: Graph, labels: dict | None = None) -> int:
    _write_text(args.output, to_dot(g) if args.dot else serialize_graph(g))
    if labels is not None and args.labels:
        _write_json(args.labels, {k: [v + 1 for v in ids] for k, ids in labels.items()})
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "regular-noncut":
        g, labels = gen_regular_noncut(args.d, args.k, args.r)
        return _emit_graph(args, g, labels)
    if args.kind == "h-gadget":
        g, labels = gen_h_gadget(args.d, args.k, args.r)
        return _emit_graph(args, g, labels)
    if args.kind == "diamond-chain":
        return _emit_graph(args, gen_diamond_chain(args.p, args.k))
    if args.kind == "spider":
        return _emit_graph(args, gen_spider(args.t, args.ell))
    if args.kind == "random-clawfree":
        return _emit_graph(args, gen_random_clawfree(args.n, args.max_deg, args.seed))
    raise AssertionError(args.kind)


def _cmd_solve_exact(args) -> int:
    g = parse_graph(_read_text(args.graph))
    if args.naive:
        outcome = solve_naive(g, args.d)
    else:
        outcome = solve_bp(g, args.d, max_nodes=args.max_nodes, time_budget=args.timeout)
    print("YES" if outcome.has_dcut else "NO")
    if args.stats:
        print(f"branch_nodes={outcome.stats.branch_nodes}")
        print(f"propagation_steps={outcome.stats.propagation_steps}")
    if outcome.has_dcut and args.witness:
        _write_text(args.witness, serialize_colouring(outcome.witness))
    return 0


def _cmd_solve_structured(args) -> int:
    g = parse_graph(_read_text(args.graph))
    if args.check_promise:
        found = find_induced_spider(g, Spider(args.t, args.ell))
        if found is not None:
            raise PromiseViolationError(
                f"input contains an induced spider for (t={args.t}, ell={args.ell})",
                found,
            )
    counter = WorkCounter()
    if g.max_degree() == 2:
        cert = degree_two_cut(g, args.d, counter)
        report: dict = {"branch": "max-degree-2"}
    else:
        seed_report = build_seed(g, args.d, args.t, args.ell, counter)
        cert = flood_from_seed(g, seed_report.seed, args.d, counter)
        report = seed_report.to_json_dict()
        report["branch"] = "seed-flood"
    report["blue_size"] = len(cert.blue)
    report["crossing_edges"] = len(cert.crossing)
    report["work_touches"] = counter.touches
    print("YES")
    if args.witness:
        _write_text(args.witness, serialize_colouring(cert.colouring()))
    if args.report:
        _write_json(args.report, report)
    return 0


def _cmd_verify(args) -> int:
    g = parse_graph(_read_text(args.graph))
    colouring = parse_colouring(_read_text(args.colouring), g.n)
    result = verify(g, colouring, args.d)
    if isinstance(result, DCutCertificate):
        print(f"VALID crossing_edges={len(result.crossing)}")
        return 0
    print("INVALID")
    print(result.message(one_indexed=True), file=sys.stderr)
    return 1


def _cmd_check(args) -> int:
    g = parse_graph(_read_text(args.graph))
    if args.property == "connected":
        print("YES" if is_connected(g) else "NO")
        return 0
    if args.property == "degree":
        rep = structural_report(g)
        print(f"connected={'yes' if rep.connected else 'no'}")
        print(f"max_degree={rep.max_degree}")
        print(f"regular={'yes' if rep.is_regular else 'no'}")
        for deg, count in rep.degree_histogram:
            print(f"degree_{deg}={count}")
        return 0
    if args.property == "clawfree":
        pattern = Spider(2, 1)
    else:  # starfree
        pattern = Spider(args.t, args.ell)
    print("NO" if find_induced_spider(g, pattern) else "YES")
    return 0


def _cmd_sat_solve(args) -> int:
    formula = parse_cnf(_read_text(args.cnf))
    assignment = solve_nae01(formula)
    if assignment is None:
        print("NO")
        return 0
    print("YES")
    lits = (str(v if assignment[v - 1] else -v) for v in range(1, formula.n_vars + 1))
    print("v " + " ".join(lits) + " 0")
    return 0


def _cmd_sat_reduce(args) -> int:
    formula = parse_cnf(_read_text(args.cnf))
    g, rmap = reduce_formula(formula, args.d, args.delta)
    _write_text(args.output, serialize_graph(g))
    if args.map:
        _write_json(args.map, rmap.to_json_dict())
    return 0


def _add_output_opts(p: argparse.ArgumentParser, with_labels: bool = False):
    p.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the edge list")
    if with_labels:
        p.add_argument("--labels", help="write the gadget's named vertex groups as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcut", description="Generate, decide and verify d-cut instances."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate benchmark graphs")
    kinds = gen.add_subparsers(dest="kind", required=True)
    p = kinds.add_parser("regular-noncut", help="regular ring of cliques with no d-cut")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="number of cliques")
    p.add_argument("--r", type=int, required=True, help="clique size / regularity")
    _add_output_opts(p, with_labels=True)
    p.set_defaults(func=_cmd_gen)
    p = kinds.add_parser("h-gadget", help="ring of cliques with pendant-ish taps, no d-cut")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_output_opts(p, with_labels=True)
    p.set_defaults(func=_cmd_gen)
    p = kinds.add_parser("diamond-chain", help="chain of cliques-minus-an-edge, no 1-cut")
    p.add_argument("--p", type=int, required=True, help="clique size per link")
    p.add_argument("--k", type=int, required=True, help="number of links")
    _add_output_opts(p)
    p.set_defaults(func=_cmd_gen)
    p = kinds.add_parser("spider", help="one centre, t pendant legs, one path of length ell")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    _add_output_opts(p)
    p.set_defaults(func=_cmd_gen)
    p = kinds.add_parser("random-clawfree", help="line graph of a random bounded-degree graph")
    p.add_argument("--n", type=int, required=True, help="base graph vertex count")
    p.add_argument("--max-deg", type=int, default=3, help="base graph degree cap")
    p.add_argument("--seed", type=int, default=0)
    _add_output_opts(p)
    p.set_defaults(func=_cmd_gen)

    solve = commands.add_parser("solve", help="decide or construct d-cuts")
    modes = solve.add_subparsers(dest="mode", required=True)
    p = modes.add_parser("exact", help="exact decision by branch-and-propagate search")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--naive", action="store_true", help="exhaustive reference search")
    p.add_argument(
        "--max-nodes",
        type=int,
        default=int(os.environ.get("DCUT_MAX_NODES", DEFAULT_MAX_NODES)),
        help="branch node budget (env DCUT_MAX_NODES overrides the default)",
    )
    p.add_argument("--timeout", type=float, default=DEFAULT_TIME_BUDGET,
                   help="wall clock budget in seconds")
    p.add_argument("--witness", help="write a colouring file for YES answers")
    p.add_argument("--stats", action="store_true", help="print search statistics")
    p.set_defaults(func=_cmd_solve_exact)
    p = modes.add_parser("structured", help="linear-time construction for spider-free inputs")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--check-promise", action="store_true",
                   help="search for a forbidden spider up front instead of trusting the promise")
    p.add_argument("--report", help="write seed construction details as JSON")
    p.add_argument("--witness", help="write the colouring found")
    p.set_defaults(func=_cmd_solve_structured)

    p = commands.add_parser("verify", help="check a colouring file against a graph")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--colouring", required=True, help="colouring file")
    p.set_defaults(func=_cmd_verify)

    check = commands.add_parser("check", help="structural predicates")
    props = check.add_subparsers(dest="property", required=True)
    for prop in ("clawfree", "connected", "degree"):
        p = props.add_parser(prop)
        p.add_argument("graph", help="graph file, or - for stdin")
        p.set_defaults(func=_cmd_check)
    p = props.add_parser("starfree")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--ell", type=int, default=1)
    p.set_defaults(func=_cmd_check)

    sat = commands.add_parser("sat", help="the not-all-equal formula side")
    actions = sat.add_subparsers(dest="action", required=True)
    p = actions.add_parser("solve", help="exhaustive non-constant NAE search")
    p.add_argument("cnf", help="cnf file, or - for stdin")
    p.set_defaults(func=_cmd_sat_solve)
    p = actions.add_parser("reduce", help="encode a formula as a d-cut instance")
    p.add_argument("cnf", help="cnf file, or - for stdin")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--delta", type=int, default=None,
                   help="target max degree (default 2d+3, the minimum)")
    p.add_argument("-o", "--output", default="-", help="graph output (default stdout)")
    p.add_argument("--map", help="write gadget locations as JSON")
    p.set_defaults(func=_cmd_sat_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except ResourceExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PromiseViolationError as exc:
        ids = " ".join(str(v + 1) for v in exc.witness)
        print(f"error: {exc} [witness vertices: {ids}]", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
