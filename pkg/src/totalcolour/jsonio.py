"""JSON interchange formats and DOT export.

Schemas (all canonical, so serialize-parse round-trips are identity):

* graph:      {"n": int, "edges": [[u, v], ...], "labels": [str, ...]?}
* colouring:  {"vertex_colours": [int, ...], "edge_colours": [[u, v, c], ...]}
* report:     {"valid": bool, "colours_used": int, "violations": [[elem, elem, c], ...]}
              with elements encoded as ["v", i] or ["e", u, v]
* bundle:     {"graph": ..., "colouring": ..., "report": ..., "meta": {...}?}
* oracle run: {"graph": ..., "chi_total": int|null, "lower": int, "upper": int,
               "nodes": int, "status": str}
* latin:      {"rows": [[int, ...], ...], "transversal": [int, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .colouring import Edge, TotalColouring, VerificationReport, Vertex
from .edge_colouring import LatinSquare
from .errors import ParseError, TotalColourError
from .graph_core import Element, Graph, make_graph
from .oracle import OracleResult

# Fill colours for DOT export; colour indices beyond the table wrap.
DOT_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc949", "#af7aa1", "#ff9da7", "#9c755f", "#bab0ab",
    "#1f77b4", "#aec7e8", "#ffbb78", "#2ca02c", "#98df8a",
    "#d62728", "#ff9896", "#9467bd", "#c5b0d5", "#8c564b",
)


def load_json(path: str | Path) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {path}: {exc}")


def save_json(path: str | Path, obj: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def graph_to_obj(g: Graph) -> dict[str, Any]:
    obj: dict[str, Any] = {
        "n": g.n,
        "edges": [[u, v] for u, v in g.sorted_edges],
    }
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return obj


def graph_from_obj(obj: Any) -> Graph:
    if not isinstance(obj, dict):
        raise ParseError("graph document must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError('graph field "n" must be a non-negative integer')
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise ParseError('graph field "edges" must be a list of [u, v] pairs')
    pairs: list[tuple[int, int]] = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise ParseError(f"bad edge entry {item!r}")
        pairs.append((item[0], item[1]))
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ParseError('graph field "labels" must be a list of strings')
    try:
        return make_graph(n, pairs, labels)
    except TotalColourError as exc:
        raise ParseError(f"invalid graph: {exc}")


def colouring_to_obj(tc: TotalColouring) -> dict[str, Any]:
    vertices = sorted(
        (el.index, c) for el, c in tc.assignment.items() if isinstance(el, Vertex)
    )
    edges = sorted(
        (el.u, el.v, c) for el, c in tc.assignment.items() if isinstance(el, Edge)
    )
    return {
        "vertex_colours": [c for _, c in vertices],
        "edge_colours": [[u, v, c] for u, v, c in edges],
    }


def colouring_from_obj(obj: Any) -> TotalColouring:
    if not isinstance(obj, dict):
        raise ParseError("colouring document must be a JSON object")
    vcs = obj.get("vertex_colours")
    ecs = obj.get("edge_colours")
    if not isinstance(vcs, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in vcs
    ):
        raise ParseError('"vertex_colours" must be a list of non-negative integers')
    if not isinstance(ecs, list):
        raise ParseError('"edge_colours" must be a list of [u, v, colour] triples')
    edge_colours: dict[tuple[int, int], int] = {}
    for item in ecs:
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
            or item[2] < 0
        ):
            raise ParseError(f"bad edge colour entry {item!r}")
        u, v, c = item
        if u == v:
            raise ParseError(f"bad edge colour entry {item!r}: self-loop")
        edge_colours[(u, v)] = c
    return TotalColouring.from_parts(vcs, edge_colours)


def _element_to_obj(el: Element) -> list[Any]:
    if isinstance(el, Vertex):
        return ["v", el.index]
    return ["e", el.u, el.v]


def report_to_obj(report: VerificationReport, limit: int | None = None) -> dict[str, Any]:
    violations = report.violations if limit is None else report.violations[:limit]
    return {
        "valid": report.valid,
        "colours_used": report.colours_used,
        "violations": [
            [_element_to_obj(a), _element_to_obj(b), c] for a, b, c in violations
        ],
    }


def bundle_to_obj(
    g: Graph,
    tc: TotalColouring,
    report: VerificationReport,
    meta: dict[str, Any] | None = None,
) -> dict[str, Any]:
    obj = {
        "graph": graph_to_obj(g),
        "colouring": colouring_to_obj(tc),
        "report": report_to_obj(report),
    }
    if meta:
        obj["meta"] = meta
    return obj


def bundle_from_obj(obj: Any) -> tuple[Graph, TotalColouring, dict[str, Any]]:
    if not isinstance(obj, dict) or "graph" not in obj or "colouring" not in obj:
        raise ParseError('bundle must be an object with "graph" and "colouring"')
    g = graph_from_obj(obj["graph"])
    tc = colouring_from_obj(obj["colouring"])
    report = obj.get("report")
    if report is not None and not isinstance(report, dict):
        raise ParseError('bundle field "report" must be an object')
    return g, tc, report or {}


def oracle_result_to_obj(g: Graph, result: OracleResult) -> dict[str, Any]:
    return {
        "graph": graph_to_obj(g),
        "chi_total": result.chi_total,
        "lower": result.lower,
        "upper": result.upper,
        "nodes": result.nodes,
        "status": result.status.value,
    }


def latin_to_obj(square: LatinSquare) -> dict[str, Any]:
    return {
        "rows": [list(row) for row in square.rows],
        "transversal": list(square.transversal),
    }


def _dot_colour(c: int) -> tuple[str, str]:
    """Hex fill for a colour index, plus a label annotated when it wraps."""
    label = f"c{c}"
    if c >= len(DOT_PALETTE):
        label += " (wrapped)"
    return DOT_PALETTE[c % len(DOT_PALETTE)], label


def to_dot(g: Graph, tc: TotalColouring | None = None, name: str = "G") -> str:
    """DOT text for a graph, with fills and edge colours when a colouring is given."""
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for i in range(g.n):
        if tc is not None:
            fill, clabel = _dot_colour(tc.vertex_colour(i))
            lines.append(
                f'  {i} [label="{g.label(i)}\\n{clabel}", fillcolor="{fill}"];'
            )
        else:
            lines.append(f'  {i} [label="{g.label(i)}", fillcolor="#dddddd"];')
    for u, v in g.sorted_edges:
        if tc is not None:
            stroke, clabel = _dot_colour(tc.edge_colour(u, v))
            lines.append(
                f'  {u} -- {v} [color="{stroke}", label="{clabel}", penwidth=2];'
            )
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
