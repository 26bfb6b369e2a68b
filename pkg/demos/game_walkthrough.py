"""Walking the induced-path game behind vertex typicality.

Two players grow an induced path from a start vertex v toward a probe
vertex w more than four steps away.  The Builder steers while the walk
is far from w; the Adversary takes over inside the radius-4 ball of w
and wins by making the path arrive badly (a chosen ball vertex with an
unseen-neighbor count other than 3) or by leaving part of the ball
undominated when the walk dies.  The probe w is typical when the
Builder wins.  On large braids the ring funnels the walk, so almost
every far target is typical, and the local-structure probe recovers
the cluster layout around any vertex from adjacency alone.

Run with:  python3 demos/game_walkthrough.py
"""

from braidcensus import (
    BraidSpec,
    atypical_set,
    build_H,
    build_braid,
    local_structure,
    solve_typical_game,
)

# ----------------------------------------------------------------------
# both verdicts on one ring
# ----------------------------------------------------------------------

# A ring of three singletons, ten triangles, then one more singleton.
# The lone vertices act as choke points: a walk that reaches one has no
# room to dodge, so targets near them are Adversary wins, while targets
# deep in the triangle arc are Builder wins.

ring = BraidSpec((1, 1, 1) + (3,) * 10 + (1,), cyclic=True, intra="empty")
g, part = build_braid(ring)
print(f"ring of clusters {ring.cluster_sizes}, n = {g.n}")

verdict = solve_typical_game(g, 0, 21)
print(f"\nv=0, w=21: winner {verdict.winner}")
print(f"  optimal line {verdict.trace}")

verdict = solve_typical_game(g, 0, 9)
print(f"\nv=0, w=9: winner {verdict.winner}, reason {verdict.reason}")
print(f"  optimal line {verdict.trace}")

# ----------------------------------------------------------------------
# the full typicality split
# ----------------------------------------------------------------------

# atypical_set plays every probe outside the radius-4 ball of v.  Here
# the three vertices of the triangle next to the singleton run are the
# only Adversary wins.

report = atypical_set(g, 0)
print(f"\nv=0: atypical {report.atypical}")
print(f"     typical  {report.typical}")

# On the plain triangle ring H_30 the only probes outside the ball are
# the three antipodal vertices, and the Adversary wins all of them; on
# H_18 the ring is so small that every vertex is exempt.

g30, _ = build_H(30)
report = atypical_set(g30, 0)
print(f"\nH_30, v=0: probes {report.typical + report.atypical}, "
      f"atypical {report.atypical}")

g18, _ = build_H(18)
report = atypical_set(g18, 0)
print(f"H_18, v=0: {len(report.exempt)} exempt vertices, no probes")

# ----------------------------------------------------------------------
# reading the cluster structure off a single vertex
# ----------------------------------------------------------------------

# For triangle-cluster rings with at least five clusters, the
# neighborhood of any vertex z splits into its own cluster and the two
# flanking ones.  local_structure finds that split without being told
# the partition.

g15, _ = build_H(15)
for z in (0, 7):
    found = local_structure(g15, z)
    print(f"\nH_15, z={z}:")
    print(f"  own cluster   {found['Z']}")
    print(f"  flanks        {found['V']} and {found['W']}")

# On H_12 the ring has only four clusters, so the two flanks share
# their far neighbor and the split is no longer recoverable.

g12, _ = build_H(12)
print(f"\nH_12, z=0: local structure {local_structure(g12, 0)}")
