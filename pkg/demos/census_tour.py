"""A tour of the cycle census on the cyclic braid family.

We build the triangle-cluster braids H_n, count their induced cycles
with the bitmask engine, and check the closed form.  Along the way we
break the n = 13 four-cycle count apart by how many clusters each
cycle touches, which is where the two quadratic terms of the formula
come from.

Run with:  python3 demos/census_tour.py
"""

from braidcensus import (
    build_H,
    count_induced_cycles,
    m_lower,
    slow_census,
    visit_induced_cycles,
)
from braidcensus.graphs import bits_of

# ----------------------------------------------------------------------
# the census against the closed form
# ----------------------------------------------------------------------

# H_n is a ring of clusters (almost all triangles) where consecutive
# clusters are completely joined.  Its induced cycle count is the
# conjectured maximum over all n-vertex graphs.

print("n   census    closed form")
for n in range(12, 22):
    g, part = build_H(n)
    census = count_induced_cycles(g)
    formula = m_lower(n).value
    marker = "ok" if census.f == formula else "MISMATCH"
    print(f"{n:<3} {census.f:<9} {formula:<9} {marker}")

# The engine enumerates chordless cycles directly.  For a second
# opinion, the subset oracle walks all 2^n vertex subsets and tests
# which ones induce a cycle.  Slow, but independent.

g, _ = build_H(14)
assert count_induced_cycles(g).by_length == slow_census(g).by_length
print("\nsubset oracle agrees with the engine on H_14")

# ----------------------------------------------------------------------
# where the four-cycles live
# ----------------------------------------------------------------------

# At n = 13 the braid has clusters of sizes 4, 3, 3, 3.  Every induced
# four-cycle either straddles two adjacent clusters, spans three
# consecutive ones, or wraps the whole ring (possible only because
# k = 4 here).  Count each kind by looking up the cluster of every
# vertex on the cycle.

g, part = build_H(13)
cluster_of = {}
for idx, cluster in enumerate(part.clusters):
    for v in cluster:
        cluster_of[v] = idx

spans = {2: 0, 3: 0, 4: 0}


def visit(mask, length):
    if length == 4:
        spans[len({cluster_of[v] for v in bits_of(mask)})] += 1


visit_induced_cycles(g, visit)

n = 13
print(f"\nfour-cycles of H_13 by cluster span")
print(f"  two clusters:   {spans[2]:>4}  (3(n+5) = {3 * (n + 5)})")
print(f"  three clusters: {spans[3]:>4}  (9(n+4) = {9 * (n + 4)})")
print(f"  whole ring:     {spans[4]:>4}")
print(f"  total:          {sum(spans.values()):>4}")

total = count_induced_cycles(g).by_length[4]
assert sum(spans.values()) == total
