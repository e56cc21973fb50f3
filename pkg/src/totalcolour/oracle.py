"""Exact total chromatic numbers for small graphs.

The main solver reduces total colouring to vertex colouring of the total
graph T(G) (one vertex per element, adjacency = the conflict relation) and
runs a DSATUR-ordered branch and bound on T(G):

* lower bound: a deterministic greedy clique on T(G), never below
  max_degree(G) + 1 (a max-degree vertex plus its incident edges is a clique);
* upper bound: DSATUR greedy, then a few rounds of iterated-greedy
  recolouring (processing previous colour classes as blocks never increases
  the palette and often shrinks it);
* search: DSATUR branching with the best clique pre-coloured, new colours
  restricted to (max used so far) + 1, and everything tie-broken on lowest
  index, so results are reproducible.

``chi_total_bruteforce`` is the deliberately dumber second oracle: plain
enumeration of colourings directly over the elements, with the conflict
relation recomputed from first principles rather than through T(G).

Nothing here assumes the conjectured upper bound max_degree + 2; the solver
reports whatever it proves.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from enum import Enum

from .colouring import TotalColouring, verify_total
from .errors import DomainError, PreconditionError
from .graph_core import Graph, make_graph

_RNG_SEED = 0x5EEDC01


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exact search; at least one of the two must be finite."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes is None and self.max_seconds is None:
            raise DomainError("search budget needs a node or wall-clock limit")
        if self.max_nodes is not None and self.max_nodes < 0:
            raise DomainError("node limit must be non-negative")
        if self.max_seconds is not None and self.max_seconds < 0:
            raise DomainError("wall-clock limit must be non-negative")


class OracleStatus(str, Enum):
    EXACT = "exact"
    TIMED_OUT = "timed_out"
    LOWER_BOUND_ONLY = "lower_bound_only"


@dataclass(frozen=True)
class OracleResult:
    status: OracleStatus
    chi_total: int | None
    lower: int
    upper: int
    nodes: int

    @property
    def is_exact(self) -> bool:
        return self.status is OracleStatus.EXACT


class CertificationStatus(Enum):
    OPTIMAL = "optimal"
    VALID_BUT_UNPROVEN = "valid_but_unproven"
    SUBOPTIMAL = "suboptimal"


@dataclass(frozen=True)
class CertificationVerdict:
    status: CertificationStatus
    colours_used: int
    oracle: OracleResult


def total_graph(g: Graph) -> Graph:
    """T(G): one vertex per element of g, adjacent iff the elements conflict.

    Vertices 0..n-1 of T(G) are g's vertices in index order; the rest are
    g's edges in sorted order.  chi(T(G)) equals the total chromatic number.
    """
    edge_list = g.sorted_edges
    index_of = {e: g.n + i for i, e in enumerate(edge_list)}
    t_edges: list[tuple[int, int]] = []
    t_edges.extend(g.sorted_edges)  # adjacent vertices conflict
    for e, te in index_of.items():
        t_edges.append((e[0], te))  # edge conflicts with both endpoints
        t_edges.append((e[1], te))
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, te in index_of.items():
        incident[e[0]].append(te)
        incident[e[1]].append(te)
    for group in incident:  # edges sharing an endpoint conflict
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                t_edges.append((group[i], group[j]))
    labels = tuple(f"v{i}" for i in range(g.n)) + tuple(
        f"e{u}-{v}" for u, v in edge_list
    )
    return make_graph(g.n + len(edge_list), t_edges, labels)


class _BudgetExhausted(Exception):
    pass


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.max_nodes = budget.max_nodes
        self.deadline = (
            None
            if budget.max_seconds is None
            else time.monotonic() + budget.max_seconds
        )
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 512 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExhausted

    def exhausted(self) -> bool:
        if self.max_nodes is not None and self.nodes >= self.max_nodes:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline


def _adjacency_masks(t: Graph) -> list[int]:
    masks = [0] * t.n
    for u, v in t.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _greedy_clique(masks: list[int]) -> list[int]:
    """Deterministic greedy clique, grown from every vertex as a seed."""
    n = len(masks)
    degs = [m.bit_count() for m in masks]
    best: list[int] = []
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    for seed in order:
        if degs[seed] + 1 <= len(best):
            break  # seeds are degree-sorted; no later seed can beat best
        clique = [seed]
        cand = masks[seed]
        while cand:
            pick, pick_score = -1, (-1, 0)
            m = cand
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                score = ((masks[v] & cand).bit_count(), -v)
                if score > pick_score:
                    pick, pick_score = v, score
            clique.append(pick)
            cand &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(masks: list[int], order_hint: list[int] | None = None) -> list[int]:
    """Greedy colouring; DSATUR selection unless an explicit order is given."""
    n = len(masks)
    colours = [-1] * n
    if order_hint is not None:
        for v in order_hint:
            forbid = 0
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if colours[u] >= 0:
                    forbid |= 1 << colours[u]
            c = 0
            while forbid >> c & 1:
                c += 1
            colours[v] = c
        return colours

    degs = [m.bit_count() for m in masks]
    forbid_mask = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colours[u] < 0),
            key=lambda u: (forbid_mask[u].bit_count(), degs[u], -u),
        )
        c = 0
        while forbid_mask[v] >> c & 1:
            c += 1
        colours[v] = c
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if colours[u] < 0:
                forbid_mask[u] |= 1 << c
    return colours


def _iterated_greedy(
    masks: list[int], colours: list[int], rounds: int, clock: _Clock
) -> list[int]:
    """Recolour by previous classes in varying orders; palette never grows."""
    rng = random.Random(_RNG_SEED)
    best = colours[:]
    k = max(best) + 1
    for r in range(rounds):
        if clock.exhausted():
            break
        classes: list[list[int]] = [[] for _ in range(k)]
        for v, c in enumerate(best):
            classes[c].append(v)
        strategy = r % 4
        if strategy == 0:
            classes.reverse()
        elif strategy == 1:
            classes.sort(key=len)
        elif strategy == 2:
            classes.sort(key=len, reverse=True)
        else:
            rng.shuffle(classes)
        order = [v for cls in classes for v in cls]
        candidate = _dsatur_greedy(masks, order_hint=order)
        ck = max(candidate) + 1
        if ck <= k:
            best, k = candidate, ck
    return best


def _branch_and_bound(
    masks: list[int],
    lb: int,
    start: list[int],
    clique: list[int],
    clock: _Clock,
) -> tuple[bool, list[int]]:
    """DSATUR branch and bound; returns (completed, best colouring found)."""
    n = len(masks)
    degs = [m.bit_count() for m in masks]
    best_assign = start[:]
    best = max(start) + 1
    if best == lb:
        return True, best_assign

    colours = [-1] * n
    forbid = [0] * n
    in_clique = [False] * n
    for idx, v in enumerate(clique):
        colours[v] = idx
        in_clique[v] = True
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            forbid[u] |= 1 << idx
    cmax0 = len(clique)

    class _Done(Exception):
        pass

    def rec(cmax: int, coloured: int) -> None:
        nonlocal best, best_assign
        if cmax >= best:
            return
        if coloured == n:
            best = cmax
            best_assign = colours[:]
            if best == lb:
                raise _Done
            return
        clock.tick()
        v, v_key = -1, (-1, -1, 0)
        for u in range(n):
            if colours[u] < 0:
                key = (forbid[u].bit_count(), degs[u], -u)
                if key > v_key:
                    v, v_key = u, key
        limit = min(cmax + 1, best - 1)  # colour index cmax opens a new class
        for c in range(limit):
            if c == cmax and cmax + 1 >= best:
                break
            if forbid[v] >> c & 1:
                continue
            colours[v] = c
            touched = []
            bit = 1 << c
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if colours[u] < 0 and not forbid[u] & bit:
                    forbid[u] |= bit
                    touched.append(u)
            rec(max(cmax, c + 1), coloured + 1)
            for u in touched:
                forbid[u] &= ~bit
            colours[v] = -1

    try:
        rec(cmax0, len(clique))
    except _Done:
        return True, best_assign
    except _BudgetExhausted:
        return False, best_assign
    return True, best_assign


def exact_chi_total(g: Graph, budget: SearchBudget | None = None) -> OracleResult:
    """Exact total chromatic number of g, within a search budget.

    Returns Exact when the lower and upper bounds meet (or the search space
    is exhausted), TimedOut with the best bounds otherwise.  A budget that
    is spent before the first greedy colouring finishes yields
    LowerBoundOnly with the trivial bounds.
    """
    if budget is None:
        budget = SearchBudget(max_seconds=60.0)
    t = total_graph(g)
    if t.n == 0:
        return OracleResult(OracleStatus.EXACT, 0, 0, 0, 0)

    trivial_lower = 1 if g.n else 0
    if g.edges:
        trivial_lower = g.max_degree + 1
    clock = _Clock(budget)
    if clock.exhausted():
        return OracleResult(
            OracleStatus.LOWER_BOUND_ONLY, None, trivial_lower, t.n, 0
        )

    masks = _adjacency_masks(t)
    clique = _greedy_clique(masks)
    lb = max(len(clique), trivial_lower)
    greedy = _dsatur_greedy(masks)
    greedy = _iterated_greedy(masks, greedy, rounds=24, clock=clock)
    ub = max(greedy) + 1

    if lb == ub or clock.exhausted():
        if lb == ub:
            return OracleResult(OracleStatus.EXACT, ub, lb, ub, clock.nodes)
        return OracleResult(OracleStatus.TIMED_OUT, None, lb, ub, clock.nodes)

    completed, best_assign = _branch_and_bound(masks, lb, greedy, clique, clock)
    best = max(best_assign) + 1
    if completed:
        return OracleResult(OracleStatus.EXACT, best, best, best, clock.nodes)
    return OracleResult(OracleStatus.TIMED_OUT, None, lb, best, clock.nodes)


def chi_total_bruteforce(g: Graph, max_elements: int = 16) -> int:
    """Second oracle: enumerate element colourings directly, smallest k first.

    Conflicts are recomputed from the definitions (adjacent vertices, edges
    sharing an endpoint, edge-endpoint incidence) without going through the
    total graph, so this path shares nothing with the main solver.  Intended
    for cross-validation on graphs with at most ~a dozen elements.
    """
    elements: list[tuple[str, int, int]] = [("v", i, -1) for i in range(g.n)]
    elements += [("e", u, v) for u, v in g.sorted_edges]
    ne = len(elements)
    if ne == 0:
        return 0
    if ne > max_elements:
        raise DomainError(f"{ne} elements exceeds the brute-force cap {max_elements}")

    def conflicts(a: tuple[str, int, int], b: tuple[str, int, int]) -> bool:
        if a[0] == "v" and b[0] == "v":
            return g.has_edge(a[1], b[1])
        if a[0] == "e" and b[0] == "e":
            return bool({a[1], a[2]} & {b[1], b[2]})
        v, e = (a, b) if a[0] == "v" else (b, a)
        return v[1] in (e[1], e[2])

    conflict_sets: list[list[int]] = [[] for _ in range(ne)]
    for i in range(ne):
        for j in range(i):
            if conflicts(elements[i], elements[j]):
                conflict_sets[i].append(j)

    assign = [-1] * ne

    def feasible(i: int, k: int, used: int) -> bool:
        if i == ne:
            return True
        # restricted growth: a fresh colour index may only be the next unused
        top = min(k - 1, used)
        for c in range(top + 1):
            if all(assign[j] != c for j in conflict_sets[i]):
                assign[i] = c
                if feasible(i + 1, k, max(used, c + 1)):
                    return True
                assign[i] = -1
        return False

    for k in range(1, ne + 1):
        if feasible(0, k, 0):
            return k
    raise AssertionError("unreachable: n elements are always n-colourable")


def certify_construction(
    g: Graph, tc: TotalColouring, budget: SearchBudget | None = None
) -> CertificationVerdict:
    """Judge a verified colouring against the exact oracle.

    Optimal when the oracle proves the palette is the total chromatic number,
    Suboptimal when it proves a smaller one, ValidButUnproven when the budget
    runs out first.  An invalid colouring is a precondition failure, not a
    verdict.
    """
    report = verify_total(g, tc)
    if not report.valid:
        raise PreconditionError(
            f"colouring is not proper ({len(report.violations)} conflicts); "
            "nothing to certify"
        )
    used = report.colours_used
    result = exact_chi_total(g, budget)
    if result.status is OracleStatus.EXACT:
        assert result.chi_total is not None
        if result.chi_total == used:
            return CertificationVerdict(CertificationStatus.OPTIMAL, used, result)
        if result.chi_total < used:
            return CertificationVerdict(CertificationStatus.SUBOPTIMAL, used, result)
        raise AssertionError(
            "oracle exceeded the palette of a verified colouring; solver bug"
        )
    return CertificationVerdict(CertificationStatus.VALID_BUT_UNPROVEN, used, result)
