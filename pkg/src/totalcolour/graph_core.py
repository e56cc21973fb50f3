"""Finite simple undirected graphs and their elements (vertices and edges).

Vertices are dense integer indices 0..n-1; optional string labels are
metadata only and never used for identity.  Edges are canonical unordered
pairs (min, max).  Graphs are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainError, GraphConstructionError

Pair = tuple[int, int]


def canonical_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Vertex:
    index: int


@dataclass(frozen=True)
class Edge:
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise GraphConstructionError(f"self-loop on vertex {self.u}")
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    @property
    def pair(self) -> Pair:
        return (self.u, self.v)


Element = Vertex | Edge


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Pair]
    labels: tuple[str, ...] | None = None

    @cached_property
    def sorted_edges(self) -> tuple[Pair, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_pair(u, v) in self.edges

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def vertices(self) -> range:
        return range(self.n)

    def elements(self) -> Iterator[Element]:
        """All elements in canonical order: vertices by index, then edges sorted."""
        for i in range(self.n):
            yield Vertex(i)
        for u, v in self.sorted_edges:
            yield Edge(u, v)

    def element_count(self) -> int:
        return self.n + len(self.edges)

    def contains_element(self, el: Element) -> bool:
        if isinstance(el, Vertex):
            return 0 <= el.index < self.n
        return el.pair in self.edges


def make_graph(
    vertex_count: int,
    edge_list: Iterable[tuple[int, int]],
    labels: Iterable[str] | None = None,
) -> Graph:
    """Build a graph, deduplicating and canonicalizing the edge list.

    Raises GraphConstructionError for self-loops or out-of-range endpoints.
    """
    if vertex_count < 0:
        raise GraphConstructionError(f"negative vertex count {vertex_count}")
    edges: set[Pair] = set()
    for u, v in edge_list:
        if u == v:
            raise GraphConstructionError(f"self-loop on vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphConstructionError(
                f"edge ({u},{v}) has an endpoint outside [0,{vertex_count})"
            )
        edges.add(canonical_pair(u, v))
    label_tuple: tuple[str, ...] | None = None
    if labels is not None:
        label_tuple = tuple(str(s) for s in labels)
        if len(label_tuple) != vertex_count:
            raise GraphConstructionError(
                f"{len(label_tuple)} labels for {vertex_count} vertices"
            )
    return Graph(vertex_count, frozenset(edges), label_tuple)


def complete_graph(n: int) -> Graph:
    """K_n.  Rejects n = 0; K_1 is the single vertex with no edges."""
    if n < 1:
        raise GraphConstructionError("complete graph needs at least one vertex")
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the first part on indices 0..a-1 and the second on a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphConstructionError("complete bipartite graph needs nonempty parts")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path_graph(n: int) -> Graph:
    """P_n: the path 0-1-...-(n-1)."""
    if n < 1:
        raise GraphConstructionError("path needs at least one vertex")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n: the cycle on n >= 3 vertices."""
    if n < 3:
        raise GraphConstructionError("cycle needs at least three vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0 joined to each of the given number of leaves."""
    if leaves < 1:
        raise GraphConstructionError("star needs at least one leaf")
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def edgeless_graph(n: int) -> Graph:
    if n < 0:
        raise GraphConstructionError(f"negative vertex count {n}")
    return Graph(n, frozenset())


def degree_profile(g: Graph) -> DegreeProfile:
    return DegreeProfile(g.degrees, g.max_degree)


def _require_element(g: Graph, el: Element) -> None:
    if not g.contains_element(el):
        raise DomainError(f"element {el} is not in the graph")


def incidence_conflicts(g: Graph, a: Element, b: Element) -> bool:
    """True iff two distinct elements may not share a colour in a total colouring.

    That is: adjacent vertices, edges sharing an endpoint, or an edge and one
    of its endpoints.  Symmetric and irreflexive.
    """
    _require_element(g, a)
    _require_element(g, b)
    if a == b:
        return False
    if isinstance(a, Vertex) and isinstance(b, Vertex):
        return g.has_edge(a.index, b.index)
    if isinstance(a, Edge) and isinstance(b, Edge):
        return bool({a.u, a.v} & {b.u, b.v})
    vertex, edge = (a, b) if isinstance(a, Vertex) else (b, a)
    assert isinstance(vertex, Vertex) and isinstance(edge, Edge)
    return vertex.index in (edge.u, edge.v)
