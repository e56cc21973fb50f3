"""Total and edge colourings, the properness verifiers, and type classification.

Colours are 0-based non-negative integers.  Palettes need not be contiguous;
``colours_used`` always counts distinct values and :func:`normalize_total`
compacts a palette when a contiguous one is wanted for output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .errors import DomainError, IncompleteColouringError, OutOfConjectureRangeError
from .graph_core import Edge, Element, Graph, Pair, Vertex, canonical_pair


@dataclass
class TotalColouring:
    """Assignment of one colour to every vertex and edge of a target graph."""

    assignment: dict[Element, int]

    def __post_init__(self) -> None:
        for el, c in self.assignment.items():
            if c < 0:
                raise DomainError(f"negative colour {c} on {el}")

    @classmethod
    def from_parts(
        cls,
        vertex_colours: Sequence[int],
        edge_colours: Mapping[Pair, int],
    ) -> "TotalColouring":
        assignment: dict[Element, int] = {
            Vertex(i): c for i, c in enumerate(vertex_colours)
        }
        for (u, v), c in edge_colours.items():
            assignment[Edge(u, v)] = c
        return cls(assignment)

    def vertex_colour(self, i: int) -> int:
        return self.assignment[Vertex(i)]

    def edge_colour(self, u: int, v: int) -> int:
        return self.assignment[Edge(u, v)]

    @property
    def colours(self) -> frozenset[int]:
        return frozenset(self.assignment.values())

    @property
    def palette_size(self) -> int:
        return len(self.colours)


@dataclass
class EdgeColouring:
    """Assignment of one colour to every edge of a target graph."""

    assignment: dict[Pair, int]

    def __post_init__(self) -> None:
        fixed: dict[Pair, int] = {}
        for (u, v), c in self.assignment.items():
            if c < 0:
                raise DomainError(f"negative colour {c} on edge ({u},{v})")
            fixed[canonical_pair(u, v)] = c
        self.assignment = fixed

    def colour(self, u: int, v: int) -> int:
        return self.assignment[canonical_pair(u, v)]

    @property
    def colours(self) -> frozenset[int]:
        return frozenset(self.assignment.values())

    @property
    def palette_size(self) -> int:
        return len(self.colours)


@dataclass
class VerificationReport:
    valid: bool
    violations: list[tuple[Element, Element, int]] = field(default_factory=list)
    colours_used: int = 0


class TypeClass(Enum):
    TYPE_I = 1
    TYPE_II = 2


def _check_total_cover(g: Graph, tc: TotalColouring) -> None:
    have = set(tc.assignment)
    want = set(g.elements())
    missing = want - have
    extra = have - want
    if missing or extra:
        raise IncompleteColouringError(
            f"colouring does not match the graph's elements "
            f"({len(missing)} missing, {len(extra)} unknown)"
        )


def verify_total(g: Graph, tc: TotalColouring) -> VerificationReport:
    """Certify a total colouring, listing every conflicting element pair.

    A conflict is a pair of equal-coloured elements that are adjacent vertices,
    edges sharing an endpoint, or an edge and one of its endpoints.  A colouring
    that misses (or invents) elements raises IncompleteColouringError instead,
    which is distinct from being invalid.
    """
    _check_total_cover(g, tc)
    a = tc.assignment
    violations: list[tuple[Element, Element, int]] = []

    for u, v in g.sorted_edges:
        cu, cv = a[Vertex(u)], a[Vertex(v)]
        if cu == cv:
            violations.append((Vertex(u), Vertex(v), cu))

    incident: list[list[Pair]] = [[] for _ in range(g.n)]
    for e in g.sorted_edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    # Two distinct edges of a simple graph share at most one endpoint, so
    # iterating per shared vertex reports each conflicting pair exactly once.
    for w in range(g.n):
        edges_here = incident[w]
        for i in range(len(edges_here)):
            for j in range(i + 1, len(edges_here)):
                c1 = a[Edge(*edges_here[i])]
                if c1 == a[Edge(*edges_here[j])]:
                    violations.append(
                        (Edge(*edges_here[i]), Edge(*edges_here[j]), c1)
                    )

    for u, v in g.sorted_edges:
        ce = a[Edge(u, v)]
        for w in (u, v):
            if a[Vertex(w)] == ce:
                violations.append((Vertex(w), Edge(u, v), ce))

    colours_used = len(set(a.values()))
    return VerificationReport(not violations, violations, colours_used)


def verify_edge(g: Graph, ec: EdgeColouring) -> VerificationReport:
    """Certify a proper edge colouring: no two edges sharing an endpoint agree."""
    have = set(ec.assignment)
    missing = g.edges - have
    extra = have - g.edges
    if missing or extra:
        raise IncompleteColouringError(
            f"edge colouring does not match the graph's edges "
            f"({len(missing)} missing, {len(extra)} unknown)"
        )
    violations: list[tuple[Element, Element, int]] = []
    incident: list[list[Pair]] = [[] for _ in range(g.n)]
    for e in g.sorted_edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    for w in range(g.n):
        edges_here = incident[w]
        for i in range(len(edges_here)):
            for j in range(i + 1, len(edges_here)):
                c1 = ec.assignment[edges_here[i]]
                if c1 == ec.assignment[edges_here[j]]:
                    violations.append(
                        (Edge(*edges_here[i]), Edge(*edges_here[j]), c1)
                    )
    colours_used = len(set(ec.assignment.values()))
    return VerificationReport(not violations, violations, colours_used)


def classify(g: Graph, chi_total: int) -> TypeClass:
    """Type I when chi_total = max_degree + 1, type II when it is max_degree + 2.

    Anything outside that range would contradict the total colouring
    conjecture's bounds (or the trivial lower bound) and is surfaced loudly
    rather than clamped.
    """
    delta = g.max_degree
    if chi_total == delta + 1:
        return TypeClass.TYPE_I
    if chi_total == delta + 2:
        return TypeClass.TYPE_II
    raise OutOfConjectureRangeError(
        f"chi_total={chi_total} outside [{delta + 1}, {delta + 2}] "
        f"for max degree {delta}"
    )


def normalize_total(tc: TotalColouring) -> TotalColouring:
    """Relabel colours order-preservingly onto 0..k-1 (k = palette size)."""
    rank = {c: i for i, c in enumerate(sorted(tc.colours))}
    return TotalColouring({el: rank[c] for el, c in tc.assignment.items()})


def normalize_edge(ec: EdgeColouring) -> EdgeColouring:
    """Relabel edge colours order-preservingly onto 0..k-1."""
    rank = {c: i for i, c in enumerate(sorted(ec.colours))}
    return EdgeColouring({e: rank[c] for e, c in ec.assignment.items()})


def restrict_to_edges(tc: TotalColouring) -> EdgeColouring:
    """The edge part of a total colouring."""
    return EdgeColouring(
        {el.pair: c for el, c in tc.assignment.items() if isinstance(el, Edge)}
    )
