"""Edge-colouring primitives the total-colouring constructions consume.

Three builders live here: the exact max-degree edge colouring of bipartite
graphs (Konig's alternating-path insertion), the circle-method one
factorization of even complete graphs, and the rainbow-matched square
colouring of K_{m,m} realised as a Latin square with a transversal.

All tie-breaking is lowest-colour / lowest-index first, so every output is
deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .colouring import EdgeColouring
from .errors import (
    DomainError,
    NoRainbowError,
    NotBipartiteError,
    SearchExhaustedError,
)
from .graph_core import Graph, Pair, canonical_pair, complete_graph


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint vertex sets; whether they cover a given graph is checked
    by the operations that consume them."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", tuple(sorted(set(self.left))))
        object.__setattr__(self, "right", tuple(sorted(set(self.right))))
        if set(self.left) & set(self.right):
            raise DomainError("bipartition parts overlap")


def find_bipartition(g: Graph) -> Bipartition:
    """2-colour the vertices by BFS; isolated vertices land on the left.

    Raises NotBipartiteError if some component contains an odd cycle.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adjacency[u]):
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    raise NotBipartiteError(f"odd cycle through vertices {u} and {v}")
    left = tuple(v for v in range(g.n) if side[v] == 0)
    right = tuple(v for v in range(g.n) if side[v] == 1)
    return Bipartition(left, right)


def _validate_parts(h: Graph, parts: Bipartition) -> None:
    if set(parts.left) | set(parts.right) != set(range(h.n)):
        raise DomainError("bipartition does not cover the vertex set")
    left = set(parts.left)
    for u, v in h.edges:
        if (u in left) == (v in left):
            raise NotBipartiteError(f"edge ({u},{v}) lies inside one part")


def bipartite_delta_edge_colouring(h: Graph, parts: Bipartition) -> EdgeColouring:
    """Proper edge colouring of a bipartite graph with exactly max_degree colours.

    Edges are inserted in sorted order.  Each edge (u, v) takes the smallest
    colour free at u; if that colour is busy at v, the alternating two-colour
    path starting at v is flipped first (it can never reach u in a bipartite
    graph), which frees the colour.  With 0 edges the colouring is empty.
    """
    _validate_parts(h, parts)
    delta = h.max_degree
    if delta == 0:
        return EdgeColouring({})

    # at[v][c] = neighbour joined to v by the c-coloured edge
    at: list[dict[int, int]] = [{} for _ in range(h.n)]
    colour_of: dict[Pair, int] = {}

    def first_free(v: int) -> int:
        c = 0
        while c in at[v]:
            c += 1
        return c

    def flip_path(v: int, a: int, b: int) -> None:
        # swap colours a and b along the maximal alternating path from v
        path: list[tuple[int, int, int]] = []
        x, want = v, a
        while want in at[x]:
            y = at[x][want]
            path.append((x, y, want))
            x, want = y, a + b - want
        for x, y, c in path:
            del at[x][c]
            del at[y][c]
        for x, y, c in path:
            nc = a + b - c
            at[x][nc] = y
            at[y][nc] = x
            colour_of[canonical_pair(x, y)] = nc

    for u, v in h.sorted_edges:
        a = first_free(u)
        if a in at[v]:
            b = first_free(v)
            flip_path(v, a, b)
        at[u][a] = v
        at[v][a] = u
        colour_of[(u, v)] = a

    return EdgeColouring(colour_of)


def colour_class(ec: EdgeColouring, c: int) -> set[Pair]:
    """All edges carrying colour c; empty (not an error) if c is unused."""
    return {e for e, col in ec.assignment.items() if col == c}


def one_factorization(n: int) -> EdgeColouring:
    """Edge colouring of K_n (n even) with n-1 colours, each class a perfect matching.

    Circle method: vertex n-1 sits in the centre; in round r it pairs with r,
    and (r+i) pairs with (r-i) mod (n-1) for i = 1..n/2-1.  Round r is colour r.
    """
    if n < 2 or n % 2:
        raise DomainError(f"one factorization of K_n needs even n >= 2, got {n}")
    mod = n - 1
    colour_of: dict[Pair, int] = {}
    for r in range(mod):
        colour_of[canonical_pair(r, n - 1)] = r
        for i in range(1, n // 2):
            colour_of[canonical_pair((r + i) % mod, (r - i) % mod)] = r
    return EdgeColouring(colour_of)


@dataclass(frozen=True)
class LatinSquare:
    """m x m array over symbols 0..m-1 with a designated transversal.

    The transversal is a permutation sigma: cells (i, sigma(i)) are the
    designated ones and must carry pairwise distinct symbols.  Read as an
    edge colouring of K_{m,m} (cell (i,j) colours the edge x_i y_j), the
    transversal is a perfect rainbow matching.
    """

    rows: tuple[tuple[int, ...], ...]
    transversal: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.rows)
        symbols = set(range(m))
        for row in self.rows:
            if set(row) != symbols:
                raise DomainError("row is not a permutation of the symbols")
        for j in range(m):
            if {row[j] for row in self.rows} != symbols:
                raise DomainError("column is not a permutation of the symbols")
        if sorted(self.transversal) != list(range(m)):
            raise DomainError("transversal is not a permutation")
        if len(self.transversal_symbols()) != m:
            raise DomainError("transversal symbols are not pairwise distinct")

    @property
    def order(self) -> int:
        return len(self.rows)

    def symbol(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def transversal_symbols(self) -> set[int]:
        return {self.rows[i][s] for i, s in enumerate(self.transversal)}


def _cyclic_rows(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple((i + j) % m for j in range(m)) for i in range(m))


def _has_sdr(masks: list[int], m: int) -> bool:
    """Whether the bitmask sets admit a system of distinct representatives."""
    owner = [-1] * m  # symbol -> mask index
    visited = [False] * m

    def augment(i: int) -> bool:
        cand = masks[i]
        while cand:
            s = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if not visited[s]:
                visited[s] = True
                if owner[s] < 0 or augment(owner[s]):
                    owner[s] = i
                    return True
        return False

    for i in range(len(masks)):
        visited = [False] * m
        if not augment(i):
            return False
    return True


def _search_rainbow_square(m: int, max_nodes: int) -> tuple[tuple[int, ...], ...]:
    """Backtrack row by row for a Latin square whose main diagonal is rainbow.

    Candidate symbols at cell (i, j) are tried in the cyclic order starting
    from (i+j) mod m, so the cyclic square is the seed pattern the search
    deviates from as little as possible.  Two matching-based propagation
    checks keep the search shallow: a partial row is kept only if its
    remaining cells still admit a perfect column/symbol matching, and a
    finished row only if the remaining diagonal cells still admit pairwise
    distinct symbols.
    """
    full = (1 << m) - 1
    rows = [[-1] * m for _ in range(m)]
    col_avail = [full] * m
    diag_used = 0
    nodes = 0

    def place(i: int, j: int, row_used: int) -> bool:
        nonlocal diag_used, nodes
        if j == m:
            future_diag = [col_avail[r] & ~diag_used for r in range(i + 1, m)]
            if any(mask == 0 for mask in future_diag):
                return False
            if future_diag and not _has_sdr(future_diag, m):
                return False
            return i + 1 == m or place(i + 1, 0, 0)
        nodes += 1
        if nodes > max_nodes:
            raise SearchExhaustedError(
                f"rainbow square search exceeded {max_nodes} nodes for m={m}"
            )
        base = (i + j) % m
        for k in range(m):
            s = (base + k) % m
            bit = 1 << s
            if row_used & bit or not col_avail[j] & bit:
                continue
            if i == j and diag_used & bit:
                continue
            rest = []
            feasible = True
            for jj in range(j + 1, m):
                avail = col_avail[jj] & ~(row_used | bit)
                if jj == i:
                    avail &= ~diag_used
                if not avail:
                    feasible = False
                    break
                rest.append(avail)
            if not feasible or (rest and not _has_sdr(rest, m)):
                continue
            rows[i][j] = s
            col_avail[j] &= ~bit
            if i == j:
                diag_used |= bit
            if place(i, j + 1, row_used | bit):
                return True
            rows[i][j] = -1
            col_avail[j] |= bit
            if i == j:
                diag_used &= ~bit
        return False

    if not place(0, 0, 0):
        raise NoRainbowError(f"no Latin square of order {m} with a rainbow diagonal")
    return tuple(tuple(r) for r in rows)


def rainbow_kmm(
    m: int, max_nodes: int = 5_000_000
) -> tuple[LatinSquare, EdgeColouring, set[Pair]]:
    """m-edge-colouring of K_{m,m} with a perfect rainbow matching, for m >= 3.

    Returns the Latin square, the induced edge colouring of K_{m,m} (parts
    x_i = i and y_j = m + j), and the rainbow matching {x_i y_i}.  For odd m
    the cyclic square works as-is: its diagonal carries 2i mod m, which are
    pairwise distinct.  For even m the cyclic diagonal is constant, so a
    square with a rainbow diagonal is found by bounded backtracking seeded
    with the cyclic pattern.  The transversal is the main diagonal either way.

    m = 2 fails for a reason, not by accident: both proper 2-edge-colourings
    of K_{2,2} make each perfect matching monochromatic.
    """
    if m <= 2:
        raise NoRainbowError(
            f"K_{{{m},{m}}} has no {m}-edge-colouring with a rainbow perfect matching"
        )
    if m % 2:
        rows = _cyclic_rows(m)
    else:
        rows = _search_rainbow_square(m, max_nodes)
    square = LatinSquare(rows, tuple(range(m)))
    colour_of = {(i, m + j): rows[i][j] for i in range(m) for j in range(m)}
    matching = {(i, m + i) for i in range(m)}
    return square, EdgeColouring(colour_of), matching


def crown_edge_colouring(m: int) -> EdgeColouring:
    """Proper (m-1)-edge colouring of the crown graph on 2m vertices.

    The crown graph is (m-1)-regular bipartite, so the exact bound comes
    straight from the bipartite colouring.
    """
    from .products import crown_graph

    if m < 2:
        raise DomainError("crown edge colouring needs m >= 2")
    crown = crown_graph(m)
    parts = Bipartition(tuple(range(m)), tuple(range(m, 2 * m)))
    return bipartite_delta_edge_colouring(crown, parts)
