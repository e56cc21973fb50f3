"""Constructive total colourings of direct products.

Three constructions, each emitting a colouring that uses exactly one more
colour than the product's maximum degree:

* ``crown_total_colouring``: m-colour the crown graph on 2m vertices by
  deleting a rainbow perfect matching from a square colouring of K_{m,m}
  and pushing each deleted edge's colour onto its endpoints.
* ``lift_bipartite``: given a max-degree-plus-one total colouring of
  G x K_2, extend it to G x H for any bipartite H.
* ``knm_total_colouring``: colour K_n x K_m outright when n or m is even
  (both odd is open; we refuse rather than guess).
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import TotalColouring, normalize_total, verify_total
from .edge_colouring import (
    Bipartition,
    bipartite_delta_edge_colouring,
    colour_class,
    crown_edge_colouring,
    find_bipartition,
    one_factorization,
    rainbow_kmm,
)
from .errors import (
    DomainError,
    IncompleteColouringError,
    OpenProblemError,
    PreconditionError,
)
from .graph_core import Edge, Element, Graph, Vertex, complete_graph
from .products import crown_graph, direct_product


@dataclass(frozen=True)
class CrownTotalColouring:
    """Total colouring of the crown graph on 2m vertices with palette 0..m-1.

    ``vertex_permutation`` maps k to the shared colour of x_k and y_k; it is
    a bijection onto 0..m-1, so vertices within each part are pairwise
    distinctly coloured and x_k matches y_t in colour only when k = t.
    """

    m: int
    colouring: TotalColouring
    vertex_permutation: tuple[int, ...]


def crown_total_colouring(m: int) -> CrownTotalColouring:
    """m-total-colouring of the crown graph on 2m vertices (m >= 3).

    Take the rainbow-matched square colouring of K_{m,m}, remove the rainbow
    matching x_i y_i, and colour both endpoints of each removed edge with the
    removed edge's colour.  Remaining edges keep their square colours.
    """
    square, _, _ = rainbow_kmm(m)
    assignment: dict[Element, int] = {}
    for k in range(m):
        shared = square.symbol(k, k)
        assignment[Vertex(k)] = shared
        assignment[Vertex(m + k)] = shared
    for k in range(m):
        for t in range(m):
            if k != t:
                assignment[Edge(k, m + t)] = square.symbol(k, t)
    diag = tuple(square.symbol(k, k) for k in range(m))
    return CrownTotalColouring(m, TotalColouring(assignment), diag)


def kn_k2_total_colouring(n: int) -> TotalColouring:
    """n-colour total colouring of the direct product K_n x K_2 (n >= 3).

    The product is isomorphic to the crown graph on 2n vertices via
    x_k -> (v_k, z_1), y_k -> (v_k, z_2); this transports the crown
    colouring across that relabelling.
    """
    if n < 3:
        raise DomainError("K_n x K_2 is only type I for n >= 3")
    crown = crown_total_colouring(n)
    assignment: dict[Element, int] = {}
    for k in range(n):
        assignment[Vertex(2 * k)] = crown.colouring.vertex_colour(k)
        assignment[Vertex(2 * k + 1)] = crown.colouring.vertex_colour(n + k)
    for k in range(n):
        for t in range(n):
            if k != t:
                assignment[Edge(2 * k, 2 * t + 1)] = crown.colouring.edge_colour(
                    k, n + t
                )
    return TotalColouring(assignment)


def lift_bipartite(
    g: Graph,
    f: TotalColouring,
    h: Graph,
    parts: Bipartition | None = None,
) -> TotalColouring:
    """Extend a type-I total colouring of G x K_2 to one of G x H, H bipartite.

    ``f`` must be a valid total colouring of direct_product(g, K_2) using
    exactly max_degree(g) + 1 colours; its palette is compacted to
    0..max_degree(g) before lifting.  The output colours the product
    direct_product(g, h) with exactly max_degree(g) * max_degree(h) + 1
    colours:

    * vertices copy f fibre-wise: (v_k, x) takes f((v_k, z_1)) on the left
      part and f((v_k, z_2)) on the right;
    * product edges over colour class 0 of an exact bipartite edge colouring
      of h copy f's edge colours;
    * all remaining product edges form a bipartite graph of maximum degree
      max_degree(g) * (max_degree(h) - 1) and get that many fresh colours,
      occupying the block starting right above f's palette.

    If h is edgeless so is the product, and the single colour 0 suffices.
    """
    k2 = complete_graph(2)
    gk2, _ = direct_product(g, k2)
    try:
        report = verify_total(gk2, f)
    except IncompleteColouringError as exc:
        raise PreconditionError(f"input colouring does not cover G x K_2: {exc}")
    if not report.valid:
        raise PreconditionError(
            f"input colouring of G x K_2 is improper ({len(report.violations)} conflicts)"
        )
    dg = g.max_degree
    if report.colours_used != dg + 1:
        raise PreconditionError(
            f"input colouring uses {report.colours_used} colours, "
            f"expected exactly {dg + 1}"
        )

    if parts is None:
        parts = find_bipartition(h)
    prod, pmap = direct_product(g, h)

    if not h.edges:
        # Edgeless H: the product is edgeless, and one colour is both enough
        # and exactly max_degree(g) * 0 + 1.
        bipartite_delta_edge_colouring(h, parts)  # still validates the parts
        return TotalColouring({Vertex(p): 0 for p in range(prod.n)})

    f = normalize_total(f)
    left = set(parts.left)
    assignment: dict[Element, int] = {}

    for k in range(g.n):
        c_left = f.vertex_colour(2 * k)
        c_right = f.vertex_colour(2 * k + 1)
        for w in range(h.n):
            assignment[Vertex(pmap.index(k, w))] = c_left if w in left else c_right

    ec_h = bipartite_delta_edge_colouring(h, parts)
    cls = colour_class(ec_h, 0)
    for w1, w2 in sorted(cls):
        wx, wy = (w1, w2) if w1 in left else (w2, w1)
        for a, b in g.sorted_edges:
            assignment[Edge(pmap.index(a, wx), pmap.index(b, wy))] = f.edge_colour(
                2 * a, 2 * b + 1
            )
            assignment[Edge(pmap.index(b, wx), pmap.index(a, wy))] = f.edge_colour(
                2 * b, 2 * a + 1
            )

    residual = [e for e in prod.sorted_edges if Edge(*e) not in assignment]
    if residual:
        residual_graph = Graph(prod.n, frozenset(residual))
        residual_parts = Bipartition(
            tuple(pmap.index(k, w) for k in range(g.n) for w in parts.left),
            tuple(pmap.index(k, w) for k in range(g.n) for w in parts.right),
        )
        rec = bipartite_delta_edge_colouring(residual_graph, residual_parts)
        offset = dg + 1
        for (u, v), c in rec.assignment.items():
            assignment[Edge(u, v)] = offset + c

    return TotalColouring(assignment)


def _knm_even_first(n: int, m: int) -> TotalColouring:
    """Colouring of K_n x K_m with n even; palette 0..(n-1)(m-1)."""
    crown = crown_total_colouring(m)
    diag = crown.vertex_permutation
    f_ec = crown_edge_colouring(m)  # colours 0..m-2 on crown edges x_k y_t
    l_ec = one_factorization(n)  # colours 0..n-2 on K_n edges
    kn = complete_graph(n)
    _, pmap = direct_product(kn, complete_graph(m))

    assignment: dict[Element, int] = {}
    for i in range(n):
        for k in range(m):
            assignment[Vertex(pmap.index(i, k))] = diag[k]

    for i, j in kn.sorted_edges:  # i < j: row side of the crown lookup
        c = l_ec.colour(i, j)
        for k in range(m):
            for t in range(m):
                if k == t:
                    continue
                e = Edge(pmap.index(i, k), pmap.index(j, t))
                if c == 0:
                    assignment[e] = crown.colouring.edge_colour(k, m + t)
                else:
                    assignment[e] = c * (m - 1) + f_ec.colour(k, m + t) + 1
    return TotalColouring(assignment)


def knm_total_colouring(n: int, m: int) -> TotalColouring:
    """Total colouring of K_n x K_m with exactly (n-1)(m-1)+1 colours.

    Requires n, m >= 3 with at least one even; both odd is the open case and
    raises OpenProblemError.  Internally the even factor is put first (the
    larger one when both are even), and the result is transposed back so the
    returned colouring targets direct_product(K_n, K_m) in the caller's
    argument order.

    The construction: colour each fibre copy of K_m's vertices by the crown
    colouring's vertex permutation; edges over colour class 0 of a one
    factorization of K_n copy the crown's edge colours; edges over class
    c >= 1 take c*(m-1) + f + 1 where f is an exact (m-1)-edge colouring of
    the crown.  Bands for distinct classes never overlap and sit strictly
    above the vertex palette.
    """
    if n < 3 or m < 3:
        raise DomainError(
            f"K_{n} x K_{m}: both factors must have at least 3 vertices "
            "(use the bipartite lift for K_2 factors)"
        )
    if n % 2 and m % 2:
        raise OpenProblemError(
            f"the total chromatic number of K_{n} x K_{m} with both factors odd "
            "is an open problem; no construction is available"
        )
    a, b = n, m
    if a % 2 or (b % 2 == 0 and b > a):
        a, b = b, a
    tc = _knm_even_first(a, b)
    if (a, b) == (n, m):
        return tc

    # transpose (i,j) -> (j,i) back onto K_n x K_m indexing
    def back(p: int) -> int:
        i, j = divmod(p, m)
        return j * n + i

    prod, _ = direct_product(complete_graph(n), complete_graph(m))
    assignment: dict[Element, int] = {}
    for v in range(prod.n):
        assignment[Vertex(v)] = tc.vertex_colour(back(v))
    for u, v in prod.sorted_edges:
        assignment[Edge(u, v)] = tc.edge_colour(back(u), back(v))
    return TotalColouring(assignment)


def kn_times_bipartite(
    n: int, h: Graph, parts: Bipartition | None = None
) -> TotalColouring:
    """Total colouring of K_n x H, H bipartite, with (n-1)*max_degree(h)+1 colours.

    n = 2 is refused: K_2 x K_2 is type II, so no such colouring can exist
    for every bipartite H.  n = 1 gives an edgeless product and the single
    colour 0.  For n >= 3 the type-I colouring of K_n x K_2 is generated
    internally and lifted across h.
    """
    if n == 2:
        raise DomainError(
            "K_2 x H is excluded: K_2 x K_2 is type II, so the lift has no "
            "valid starting colouring"
        )
    if n < 1:
        raise DomainError("K_n needs n >= 1")
    if parts is None:
        parts = find_bipartition(h)
    if n == 1:
        prod, _ = direct_product(complete_graph(1), h)
        return TotalColouring({Vertex(p): 0 for p in range(prod.n)})
    f = kn_k2_total_colouring(n)
    return lift_bipartite(complete_graph(n), f, h, parts)
