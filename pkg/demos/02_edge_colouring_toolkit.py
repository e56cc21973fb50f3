"""Tour of the edge-colouring primitives.

Run with:  python3 demos/02_edge_colouring_toolkit.py
"""

import random

from totalcolour import (
    Bipartition,
    bipartite_delta_edge_colouring,
    colour_class,
    complete_graph,
    crown_edge_colouring,
    crown_graph,
    make_graph,
    one_factorization,
    rainbow_kmm,
    verify_edge,
)

# ----------------------------------------------------------------------
# Bipartite graphs can always be edge-coloured with exactly max-degree
# colours.  The colouring below inserts edges one at a time, flipping an
# alternating path whenever the preferred colour is busy.
# ----------------------------------------------------------------------

rng = random.Random(7)
a = b = 6
edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.5]
h = make_graph(a + b, edges)
parts = Bipartition(tuple(range(a)), tuple(range(a, a + b)))
ec = bipartite_delta_edge_colouring(h, parts)
print(f"random bipartite graph: {len(h.edges)} edges, max degree {h.max_degree}")
print(f"  colours used: {sorted(ec.colours)} (exactly max degree)")
print(f"  proper: {verify_edge(h, ec).valid}")
for c in sorted(ec.colours):
    print(f"  class {c}: {sorted(colour_class(ec, c))}")
print()

# ----------------------------------------------------------------------
# One-factorizations: K_n for even n splits into n-1 perfect matchings.
# This is the classic circle method used for round-robin schedules.
# ----------------------------------------------------------------------

n = 8
ec = one_factorization(n)
print(f"one factorization of K_{n} (think: {n - 1} rounds of a tournament)")
for r in range(n - 1):
    matches = sorted(colour_class(ec, r))
    print(f"  round {r}: " + "  ".join(f"{u}-{v}" for u, v in matches))
print(f"  proper: {verify_edge(complete_graph(n), ec).valid}")
print()

# ----------------------------------------------------------------------
# Rainbow-matched squares: an m-edge-colouring of K_{m,m} whose cell
# (i, j) colour is a Latin square entry, with the main diagonal carrying
# m pairwise distinct colours (a perfect rainbow matching).
# ----------------------------------------------------------------------

for m in (5, 6):
    square, ec, matching = rainbow_kmm(m)
    print(f"order-{m} square with a rainbow diagonal:")
    for i, row in enumerate(square.rows):
        marked = [
            f"[{s}]" if j == square.transversal[i] else f" {s} "
            for j, s in enumerate(row)
        ]
        print("   " + " ".join(marked))
    print(f"  diagonal symbols: {sorted(square.transversal_symbols())}")
    print()

print("m = 2 is impossible: both proper 2-edge-colourings of K_{2,2} make")
print("each perfect matching monochromatic, so rainbow_kmm(2) raises.")
print()

# ----------------------------------------------------------------------
# Crown graphs are (m-1)-regular bipartite, so they get exactly m-1
# colours, each class again a perfect matching.
# ----------------------------------------------------------------------

m = 5
ec = crown_edge_colouring(m)
crown = crown_graph(m)
print(f"crown on {2 * m} vertices: {len(ec.colours)} colours, "
      f"proper={verify_edge(crown, ec).valid}")
