"""Command-line surface: construct, verify, certify, and export colourings.

Exit codes are stable: 0 ok, 1 invalid colouring, 2 parse/IO failure,
3 precondition failure, 4 open problem (both complete factors odd),
5 oracle timeout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import jsonio
from .colouring import verify_total
from .constructions import (
    kn_times_bipartite,
    knm_total_colouring,
    crown_total_colouring,
    lift_bipartite,
)
from .errors import (
    IncompleteColouringError,
    OpenProblemError,
    ParseError,
    TotalColourError,
)
from .graph_core import Graph, complete_graph
from .oracle import OracleStatus, SearchBudget, exact_chi_total
from .products import crown_graph, direct_product

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_OPEN_PROBLEM = 4
EXIT_TIMEOUT = 5

ELEMENT_GUIDELINE = 60  # soft cap for the exact oracle


def _emit(obj: Any, output: str | None) -> None:
    if output:
        jsonio.save_json(output, obj)
    else:
        print(json.dumps(obj, indent=2))


def _write_text(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")


def cmd_product(args: argparse.Namespace) -> int:
    g = jsonio.graph_from_obj(jsonio.load_json(args.g))
    h = jsonio.graph_from_obj(jsonio.load_json(args.h))
    prod, _ = direct_product(g, h)
    stats = f"|V|={prod.n} |E|={len(prod.edges)} max_degree={prod.max_degree}"
    if args.format == "dot":
        _write_text(jsonio.to_dot(prod), args.output)
    else:
        _emit(jsonio.graph_to_obj(prod), args.output)
    print(stats, file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK


def _build_colouring(args: argparse.Namespace) -> tuple[Graph, Any, dict[str, Any]]:
    if args.kind == "knm":
        tc = knm_total_colouring(args.n, args.m)
        g, _ = direct_product(complete_graph(args.n), complete_graph(args.m))
        meta = {"construction": "knm", "params": [args.n, args.m]}
    elif args.kind == "crown":
        crown = crown_total_colouring(args.m)
        g = crown_graph(args.m)
        tc = crown.colouring
        meta = {"construction": "crown", "params": [args.m]}
    elif args.kind == "lift":
        base = jsonio.graph_from_obj(jsonio.load_json(args.g))
        f = jsonio.colouring_from_obj(jsonio.load_json(args.f))
        h = jsonio.graph_from_obj(jsonio.load_json(args.h))
        tc = lift_bipartite(base, f, h)
        g, _ = direct_product(base, h)
        meta = {"construction": "lift", "params": [args.g, args.f, args.h]}
    else:  # kn-bipartite
        h = jsonio.graph_from_obj(jsonio.load_json(args.h))
        tc = kn_times_bipartite(args.n, h)
        g, _ = direct_product(complete_graph(args.n), h)
        meta = {"construction": "kn-bipartite", "params": [args.n, args.h]}
    return g, tc, meta


def cmd_colour(args: argparse.Namespace) -> int:
    g, tc, meta = _build_colouring(args)
    report = verify_total(g, tc)
    meta["colours_used"] = report.colours_used
    meta["max_degree"] = g.max_degree
    if args.format == "dot":
        _write_text(jsonio.to_dot(g, tc), args.output)
    else:
        _emit(jsonio.bundle_to_obj(g, tc, report, meta), args.output)
    status = "valid" if report.valid else "INVALID"
    print(
        f"{meta['construction']}: {status}, {report.colours_used} colours, "
        f"max_degree={g.max_degree}",
        file=sys.stdout if args.output else sys.stderr,
    )
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_verify(args: argparse.Namespace) -> int:
    if len(args.paths) == 1:
        g, tc, _ = jsonio.bundle_from_obj(jsonio.load_json(args.paths[0]))
    elif len(args.paths) == 2:
        g = jsonio.graph_from_obj(jsonio.load_json(args.paths[0]))
        tc = jsonio.colouring_from_obj(jsonio.load_json(args.paths[1]))
    else:
        raise ParseError("verify takes a bundle, or a graph and a colouring")
    report = verify_total(g, tc)
    if report.valid:
        print(f"valid: {report.colours_used} colours, max_degree={g.max_degree}")
        return EXIT_OK
    print(f"INVALID: {len(report.violations)} conflicts (showing at most 20)")
    for a, b, c in report.violations[:20]:
        print(f"  {a} / {b} share colour {c}")
    return EXIT_INVALID


def _chi_one(path: str, max_nodes: int | None, max_seconds: float | None) -> dict:
    g = jsonio.graph_from_obj(jsonio.load_json(path))
    if g.element_count() > ELEMENT_GUIDELINE:
        print(
            f"warning: {path} has {g.element_count()} elements "
            f"(guideline is {ELEMENT_GUIDELINE}); attempting anyway",
            file=sys.stderr,
        )
    budget = SearchBudget(max_nodes=max_nodes, max_seconds=max_seconds)
    result = exact_chi_total(g, budget)
    return jsonio.oracle_result_to_obj(g, result)


def cmd_chi(args: argparse.Namespace) -> int:
    max_seconds = args.seconds
    if args.nodes is None and args.seconds is None:
        max_seconds = 60.0
    if args.jobs > 1 and len(args.graphs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(
                pool.map(
                    _chi_one,
                    args.graphs,
                    [args.nodes] * len(args.graphs),
                    [max_seconds] * len(args.graphs),
                )
            )
    else:
        results = [_chi_one(p, args.nodes, max_seconds) for p in args.graphs]
    code = EXIT_OK
    for obj in results:
        print(json.dumps(obj))
        if obj["status"] != OracleStatus.EXACT.value:
            code = EXIT_TIMEOUT
    return code


def cmd_export_dot(args: argparse.Namespace) -> int:
    g, tc, _ = jsonio.bundle_from_obj(jsonio.load_json(args.bundle))
    _write_text(jsonio.to_dot(g, tc), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totalcolour",
        description="Total colourings of direct product graphs.",
        epilog=(
            "exit codes: 0 ok, 1 invalid colouring, 2 parse failure, "
            "3 precondition failure, 4 open problem, 5 oracle timeout"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="direct product of two graph files")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_product)

    c = sub.add_parser("colour", help="run a construction and emit a certificate bundle")
    kinds = c.add_subparsers(dest="kind", required=True)
    knm = kinds.add_parser("knm", help="total colouring of K_n x K_m (n or m even)")
    knm.add_argument("n", type=int)
    knm.add_argument("m", type=int)
    crown = kinds.add_parser("crown", help="total colouring of the crown graph J_2m")
    crown.add_argument("m", type=int)
    lift = kinds.add_parser(
        "lift", help="lift a total colouring of G x K_2 to G x H (H bipartite)"
    )
    lift.add_argument("g", help="graph JSON for G")
    lift.add_argument("f", help="colouring JSON of the product G x K_2")
    lift.add_argument("h", help="graph JSON for bipartite H")
    knb = kinds.add_parser("kn-bipartite", help="total colouring of K_n x H")
    knb.add_argument("n", type=int)
    knb.add_argument("h", help="graph JSON for bipartite H")
    for sp in (knm, crown, lift, knb):
        sp.add_argument("-o", "--output", default=None)
        sp.add_argument("--format", choices=["json", "dot"], default="json")
    c.set_defaults(func=cmd_colour)

    v = sub.add_parser("verify", help="verify a colouring against its graph")
    v.add_argument("paths", nargs="+", help="bundle.json, or graph.json colouring.json")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("chi", help="exact total chromatic number (small graphs)")
    x.add_argument("graphs", nargs="+", help="graph JSON files")
    x.add_argument("--nodes", type=int, default=None, help="search node limit")
    x.add_argument("--seconds", type=float, default=None, help="wall-clock limit")
    x.add_argument("--jobs", type=int, default=1, help="parallel workers for batches")
    x.set_defaults(func=cmd_chi)

    d = sub.add_parser("export-dot", help="render a certificate bundle as DOT")
    d.add_argument("bundle")
    d.add_argument("-o", "--output", default=None)
    d.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    if os.environ.get("TOTAL_COLOUR_SEED"):
        print(
            "warning: TOTAL_COLOUR_SEED is set but ignored; all algorithms "
            "are deterministic (the variable is reserved for future "
            "randomized search)",
            file=sys.stderr,
        )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, IncompleteColouringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OpenProblemError as exc:
        print(f"open problem: {exc}", file=sys.stderr)
        return EXIT_OPEN_PROBLEM
    except TotalColourError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
