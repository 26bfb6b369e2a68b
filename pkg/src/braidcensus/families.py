"""Constructors for braid graphs and the named extremal families.

A braid is an ordered sequence of disjoint vertex clusters B_1..B_k in
which consecutive clusters are completely joined and every vertex of a
*central* cluster (2 <= i <= k-1, or all i mod k in the cyclic variant)
has its whole neighborhood inside the three-cluster window around it.
Edges inside a cluster are unrestricted.

Families built here (vertex numbering is cluster-major ascending, special
clusters at the lowest indices, so output is reproducible):

* build_H(n): empty cyclic braid, clusters all 3 except one 2 (n = 3k-1)
  or one 4 (n = 3k+1); the all-cycle extremal construction.
* build_G(n): full cyclic braid, size exceptions by n mod 6; odd-cycle
  extremal.
* build_E(n): empty cyclic braid, size exceptions by n mod 6 (the odd
  table shifted by 3); even-cycle extremal.
* member_of_F(n, parity, variant): path braids (1, c_1..c_t, 1) with
  singleton ends, central sizes by the n mod 3 table ("all") or the
  n mod 6 tables ("odd"/"even"); variants enumerate admissible central
  multisets and their orderings up to reversal.
* members_of_script_G(n): one representative per (size multiset, necklace
  placement, empty/full intra) for the odd-hole family, including the
  extra four-2s multiset at n = 5 mod 6.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph, InputError, mask_of

FAMILY_TAGS = ("H", "G", "E", "F", "F_odd", "F_even", "G_script")

# intra-cluster edge patterns: the two symbolic forms, or an explicit list
# of local index pairs per cluster
IntraSpec = str | Sequence[tuple[int, int]]


# ======================================================================
# partition and spec types
# ======================================================================


@dataclass(frozen=True)
class ClusterPartition:
    """Ordered clusters, possibly covering only part of a graph."""

    clusters: tuple[tuple[int, ...], ...]
    cyclic: bool

    def __post_init__(self):
        if len(self.clusters) < 1:
            raise InputError("partition needs at least one cluster")
        if self.cyclic and len(self.clusters) < 3:
            raise InputError(
                f"cyclic partition needs >= 3 clusters, got {len(self.clusters)}"
            )
        seen: set[int] = set()
        for c in self.clusters:
            if not c:
                raise InputError("empty cluster")
            if seen & set(c):
                raise InputError(f"clusters overlap at {sorted(seen & set(c))}")
            seen |= set(c)

    @property
    def k(self) -> int:
        return len(self.clusters)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.clusters)

    def size_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.sizes()))

    def vertex_mask(self) -> int:
        return mask_of(v for c in self.clusters for v in c)

    def to_json_dict(self) -> dict:
        return {"clusters": [list(c) for c in self.clusters], "cyclic": self.cyclic}


@dataclass(frozen=True)
class FamilyId:
    tag: str
    n: int
    variant: int = 0

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise InputError(f"unknown family tag {self.tag!r}")


@dataclass(frozen=True)
class BraidSpec:
    cluster_sizes: tuple[int, ...]
    cyclic: bool = False
    intra: tuple[IntraSpec, ...] | IntraSpec = "empty"

    def __post_init__(self):
        sizes = tuple(self.cluster_sizes)
        object.__setattr__(self, "cluster_sizes", sizes)
        k = len(sizes)
        if any(s < 1 for s in sizes):
            raise InputError(f"cluster sizes must be positive: {sizes}")
        if self.cyclic and k < 3:
            raise InputError(f"cyclic braid needs k >= 3, got {k}")
        if not self.cyclic and k < 2:
            raise InputError(f"braid needs k >= 2, got {k}")

    def intra_for(self, i: int) -> IntraSpec:
        if isinstance(self.intra, str):
            return self.intra
        return self.intra[i]


# ======================================================================
# the generic constructor
# ======================================================================

MAX_BRAID_VERTICES = 128


def _intra_pairs(spec_entry: IntraSpec, size: int, cluster_idx: int):
    if spec_entry == "empty":
        return []
    if spec_entry == "full":
        return list(itertools.combinations(range(size), 2))
    pairs = []
    for a, b in spec_entry:
        if a == b or not (0 <= a < size and 0 <= b < size):
            raise InputError(
                f"intra edge ({a},{b}) invalid for cluster {cluster_idx} of size {size}"
            )
        pairs.append((min(a, b), max(a, b)))
    return sorted(set(pairs))


def build_braid(spec: BraidSpec) -> tuple[Graph, ClusterPartition]:
    """Materialize a braid: consecutive clusters completely joined,
    non-consecutive pairs empty, intra edges exactly as specified."""
    sizes = spec.cluster_sizes
    if not isinstance(spec.intra, str) and len(spec.intra) != len(sizes):
        raise InputError(
            f"intra spec has {len(spec.intra)} entries for {len(sizes)} clusters"
        )
    n = sum(sizes)
    if n > MAX_BRAID_VERTICES:
        raise InputError(f"braid would have {n} > {MAX_BRAID_VERTICES} vertices")
    starts = []
    at = 0
    for s in sizes:
        starts.append(at)
        at += s
    clusters = tuple(
        tuple(range(starts[i], starts[i] + sizes[i])) for i in range(len(sizes))
    )
    edges: list[tuple[int, int]] = []
    k = len(sizes)
    joins = list(range(k - 1)) if not spec.cyclic else list(range(k))
    for i in joins:
        j = (i + 1) % k
        if i == j:
            continue
        for u in clusters[i]:
            for v in clusters[j]:
                edges.append((u, v))
    for i, cluster in enumerate(clusters):
        for a, b in _intra_pairs(spec.intra_for(i), sizes[i], i):
            edges.append((cluster[a], cluster[b]))
    g = Graph.from_edge_list(n, edges)
    return g, ClusterPartition(clusters, spec.cyclic)


# ======================================================================
# cyclic families: H, G, E
# ======================================================================


def h_sizes(n: int) -> tuple[int, ...]:
    if n < 8:
        raise InputError(f"build_H needs n >= 8, got {n}")
    r = n % 3
    if r == 0:
        return tuple([3] * (n // 3))
    if r == 1:  # n = 3k+1: one 4, k-1 threes
        return tuple([4] + [3] * ((n - 4) // 3))
    return tuple([2] + [3] * ((n - 2) // 3))  # n = 3k-1: one 2


def build_H(n: int) -> tuple[Graph, ClusterPartition]:
    """Empty cyclic braid with the all-cycles extremal size profile."""
    return build_braid(BraidSpec(h_sizes(n), cyclic=True, intra="empty"))


_G_SPECIALS = {0: [2, 2, 2], 1: [2, 2], 2: [2], 3: [], 4: [4], 5: [4, 4]}
_E_SPECIALS = {0: [], 1: [4], 2: [4, 4], 3: [2, 2, 2], 4: [2, 2], 5: [2]}


def _cyclic_sizes(n: int, specials: list[int], who: str) -> tuple[int, ...]:
    if n < 14:
        raise InputError(f"build_{who} needs n >= 14, got {n}")
    rest = n - sum(specials)
    assert rest % 3 == 0, f"residue table broken for n={n}"
    return tuple(specials + [3] * (rest // 3))


def g_sizes(n: int) -> tuple[int, ...]:
    return _cyclic_sizes(n, _G_SPECIALS[n % 6], "G")


def e_sizes(n: int) -> tuple[int, ...]:
    return _cyclic_sizes(n, _E_SPECIALS[n % 6], "E")


def build_G(n: int) -> tuple[Graph, ClusterPartition]:
    """Full cyclic braid, odd-cycle extremal profile (special clusters
    consecutive at the lowest indices)."""
    return build_braid(BraidSpec(g_sizes(n), cyclic=True, intra="full"))


def build_E(n: int) -> tuple[Graph, ClusterPartition]:
    """Empty cyclic braid, even-cycle extremal profile."""
    return build_braid(BraidSpec(e_sizes(n), cyclic=True, intra="empty"))


# ======================================================================
# path families: F, F_odd, F_even
# ======================================================================

_F_ODD_SPECIALS = {0: [[4]], 1: [[4, 4], [2, 2, 2, 2]], 2: [[2, 2, 2]],
                   3: [[2, 2]], 4: [[2]], 5: [[]]}
_F_EVEN_SPECIALS = {0: [[2, 2]], 1: [[2]], 2: [[]], 3: [[4]],
                    4: [[4, 4], [2, 2, 2, 2]], 5: [[2, 2, 2]]}


def f_central_multisets(n: int, parity: str = "all") -> list[tuple[int, ...]]:
    """Admissible central-size multisets (sorted tuples), in table order."""
    budget = n - 2
    if parity == "all":
        if n < 4:
            raise InputError(f"path family needs n >= 4, got {n}")
        r = n % 3
        if r == 0:
            options = [[4], [2, 2]]
        elif r == 1:
            options = [[2]]
        else:
            options = [[]]
    elif parity in ("odd", "even"):
        if n < 10:
            raise InputError(f"parity path families need n >= 10, got {n}")
        table = _F_ODD_SPECIALS if parity == "odd" else _F_EVEN_SPECIALS
        options = table[n % 6]
    else:
        raise InputError(f"parity must be all|odd|even, got {parity!r}")
    out = []
    for specials in options:
        rest = budget - sum(specials)
        assert rest >= 0 and rest % 3 == 0, f"table broken for n={n} {parity}"
        out.append(tuple(sorted(specials + [3] * (rest // 3))))
    return out


def f_central_sequences(n: int, parity: str = "all") -> list[tuple[int, ...]]:
    """All admissible central-size orderings, deduplicated up to reversal.

    The variant index of member_of_F points into this list.  Order: the
    multisets in table order, then the lexicographically smallest
    representative of each reversal class, ascending.
    """
    seqs: list[tuple[int, ...]] = []
    for multiset in f_central_multisets(n, parity):
        reps = set()
        for perm in _distinct_permutations(multiset):
            reps.add(min(perm, tuple(reversed(perm))))
        seqs.extend(sorted(reps))
    return seqs


def member_of_F(
    n: int, parity: str = "all", variant: int = 0, intra: IntraSpec | None = None
) -> tuple[Graph, ClusterPartition]:
    """Build the variant-th braid of the requested path family, with
    singleton end clusters first and last.  Intra edges default empty;
    pass "full" or explicit per-central-cluster pairs to override."""
    seqs = f_central_sequences(n, parity)
    if not 0 <= variant < len(seqs):
        raise InputError(
            f"variant {variant} out of range: {parity} family at n={n} "
            f"has {len(seqs)} variants"
        )
    central = seqs[variant]
    sizes = (1,) + central + (1,)
    if intra is None or isinstance(intra, str):
        intra_spec: tuple[IntraSpec, ...] | IntraSpec = intra or "empty"
    else:
        # explicit per-central-cluster intra lists; ends are singletons
        if len(intra) != len(central):
            raise InputError(
                f"intra override needs {len(central)} entries, got {len(intra)}"
            )
        intra_spec = (("empty",) + tuple(intra) + ("empty",))
    return build_braid(BraidSpec(sizes, cyclic=False, intra=intra_spec))


# ======================================================================
# the odd-hole family script-G
# ======================================================================


def script_g_multisets(n: int) -> list[tuple[int, ...]]:
    if n < 14:
        raise InputError(f"script-G needs n >= 14, got {n}")
    out = [tuple(sorted(g_sizes(n)))]
    if n % 6 == 5:
        rest = n - 8
        assert rest % 3 == 0
        out.append(tuple(sorted([2, 2, 2, 2] + [3] * (rest // 3))))
    return out


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Permutations of a multiset without repeats (classic counting walk)."""
    pool = sorted(items)
    n = len(pool)
    counts: dict[int, int] = {}
    for x in pool:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def _necklace_classes(multiset: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct circular arrangements up to rotation and reflection,
    each as its lexicographically minimal representative, sorted."""
    classes = set()
    for perm in _distinct_permutations(multiset):
        k = len(perm)
        best = None
        for seq in (perm, tuple(reversed(perm))):
            for r in range(k):
                rot = seq[r:] + seq[:r]
                if best is None or rot < best:
                    best = rot
        classes.add(best)
    return sorted(classes)


def members_of_script_G(n: int) -> Iterator[tuple[Graph, ClusterPartition]]:
    """One representative per (size multiset, necklace placement,
    empty/full intra) for the odd-hole extremal family."""
    for multiset in script_g_multisets(n):
        for arrangement in _necklace_classes(multiset):
            for intra in ("empty", "full"):
                yield build_braid(BraidSpec(arrangement, cyclic=True, intra=intra))


# ======================================================================
# partition-aware helpers shared by tests and recognition
# ======================================================================


def random_intra(
    sizes: Sequence[int], rng, density: float = 0.5
) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Random explicit intra-edge lists, one per cluster (test helper)."""
    out = []
    for s in sizes:
        pairs = [
            (a, b)
            for a, b in itertools.combinations(range(s), 2)
            if rng.random() < density
        ]
        out.append(tuple(pairs))
    return tuple(out)
