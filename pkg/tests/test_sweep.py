"""Exhaustive sweeps on small n.

Every non-formula pin here was produced by the sweep itself and then
sanity-checked by hand against a construction: complete graphs maximize
induced cycle counts (only their triangles are chordless), balanced
complete bipartite graphs maximize the even count, and the path maxima
agree with the closed form with extremal classes that are exactly the
intra-edge variants of the admissible path braids.
"""

import itertools

import pytest

from braidcensus.families import member_of_F, build_H
from braidcensus.formulas import f2
from braidcensus.graphs import (
    CanonicalCode,
    Graph,
    InputError,
    canonical_code,
)
from braidcensus.sweep import (
    SweepResult,
    checkpoint_line,
    exhaustive_max,
    merge_sweeps,
    parse_checkpoint_line,
    quantity_of_graph,
    shard_range,
    verify_extremal_uniqueness,
)
from braidcensus.sweep import _values_for_codes

import numpy as np


def graph_from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


def canon(g: Graph) -> CanonicalCode:
    return canonical_code(g)


# ======================================================================
# path-count sweeps against the closed form
# ======================================================================


def test_p2_sweep_matches_closed_form():
    for n in (4, 5, 6):
        result = exhaustive_max(n, "p2")
        assert result.max.value == f2(n).value
        assert result.graphs_scanned == 1 << (n * (n - 1) // 2)


def test_p2_extremal_classes_at_n4():
    result = exhaustive_max(4, "p2")
    square = cycle_graph(4)
    diamond = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])
    assert result.extremal_codes == {canon(square), canon(diamond)}


def test_p2_extremal_classes_are_intra_variants():
    # the extremal graphs are path braids with arbitrary edges inside
    # central clusters: one 3-cluster has 4 intra patterns up to
    # isomorphism at n=5; at n=6 a 4-cluster has 11 and a 2+2 split has 3
    assert len(exhaustive_max(5, "p2").extremal_codes) == 4
    assert len(exhaustive_max(6, "p2").extremal_codes) == 14


def test_p2_parity_sweeps():
    # 3-vertex paths have an odd vertex count, so the odd maximum and
    # its extremal classes coincide with the plain ones at n=4
    plain, odd = exhaustive_max(4, "p2"), exhaustive_max(4, "p2_odd")
    assert odd.max.value == 2
    assert odd.extremal_codes == plain.extremal_codes
    even5 = exhaustive_max(5, "p2_even")
    assert even5.max.value == 2
    assert len(even5.extremal_codes) == 2  # 2-cluster intra variants
    even6 = exhaustive_max(6, "p2_even")
    assert even6.max.value == 4
    assert len(even6.extremal_codes) == 3  # 2+2 central intra variants


# ======================================================================
# cycle-count sweeps
# ======================================================================


def test_m_sweep_is_maximized_by_complete_graphs():
    # every vertex triple of a complete graph is an induced triangle and
    # nothing longer is chordless, and no 6-vertex graph beats 20
    for n in (4, 5, 6):
        result = exhaustive_max(n, "m")
        assert result.max.value == n * (n - 1) * (n - 2) // 6
        assert result.extremal_codes == {canon(complete_graph(n))}
        odd = exhaustive_max(n, "m_odd")
        assert odd.max.value == result.max.value
        assert odd.extremal_codes == result.extremal_codes


def test_m_sweep_at_n7():
    result = exhaustive_max(7, "m")
    assert result.max.value == 35
    assert result.extremal_codes == {canon(complete_graph(7))}


def test_m_even_pins():
    assert exhaustive_max(4, "m_even").extremal_codes == {canon(cycle_graph(4))}
    five = exhaustive_max(5, "m_even")
    assert five.max.value == 3
    assert five.extremal_codes == {canon(complete_bipartite(2, 3))}
    six = exhaustive_max(6, "m_even")
    assert six.max.value == 9
    assert six.extremal_codes == {canon(complete_bipartite(3, 3))}


def test_m_odd_holes_pins():
    # below five vertices no odd hole fits, so every isomorphism class
    # on four vertices ties at zero
    four = exhaustive_max(4, "m_odd_holes")
    assert four.max.value == 0
    assert len(four.extremal_codes) == 11
    five = exhaustive_max(5, "m_odd_holes")
    assert five.max.value == 1
    assert five.extremal_codes == {canon(cycle_graph(5))}
    assert exhaustive_max(6, "m_odd_holes").max.value == 2


def test_odd_and_even_partition_the_total():
    n = 5
    codes = np.arange(1 << 10, dtype=np.int64)
    total = _values_for_codes(n, "m", codes)
    odd = _values_for_codes(n, "m_odd", codes)
    even = _values_for_codes(n, "m_even", codes)
    assert (total == odd + even).all()


# ======================================================================
# mechanics: determinism, shards, checkpoints, errors
# ======================================================================


def test_determinism_across_worker_counts():
    assert exhaustive_max(6, "p2") == exhaustive_max(6, "p2", threads=3)


def test_shards_merge_to_the_full_sweep():
    full = exhaustive_max(5, "p2")
    parts = [exhaustive_max(5, "p2", shards=3, shard=i) for i in range(3)]
    assert sum(p.graphs_scanned for p in parts) == full.graphs_scanned
    assert merge_sweeps(parts) == full


def test_checkpoint_roundtrip():
    part = exhaustive_max(5, "p2", shards=3, shard=1)
    line = checkpoint_line(1, part)
    shard, parsed = parse_checkpoint_line(5, "p2", 3, line)
    assert shard == 1 and parsed == part
    with pytest.raises(InputError):
        parse_checkpoint_line(5, "p2", 3, "1,2")
    with pytest.raises(InputError):
        merge_sweeps([])
    with pytest.raises(InputError):
        merge_sweeps([part, exhaustive_max(4, "p2")])


def test_shard_geometry():
    assert shard_range(5, 1, 0) == (0, 1 << 10)
    lo, hi = shard_range(5, 3, 2)
    assert hi == 1 << 10 and lo < hi
    with pytest.raises(InputError):
        shard_range(5, 3, 3)
    with pytest.raises(InputError):
        shard_range(2, 3, 0)  # fewer codes than shards: an empty shard


def test_input_errors():
    with pytest.raises(InputError):
        exhaustive_max(8, "m")  # needs the long-run flag
    with pytest.raises(InputError):
        exhaustive_max(9, "m", long_run=True)
    with pytest.raises(InputError):
        exhaustive_max(5, "triangles")
    with pytest.raises(InputError):
        exhaustive_max(1, "m")


def test_long_run_shard_at_n8():
    # one 65536-code shard of the quarter-billion sweep: its codes touch
    # only the pairs inside {0..5} plus the pair (0,6), so the best
    # graph is K6 (20 triangles) with or without the pendant edge
    part = exhaustive_max(8, "m", long_run=True, shards=1 << 12, shard=0)
    assert part.max.value == 20
    assert part.graphs_scanned == 1 << 16
    for code in part.extremal_codes:
        assert quantity_of_graph(code.graph(), "m") == 20


def test_result_validation_and_json():
    result = exhaustive_max(4, "p2")
    doc = result.to_json_dict()
    assert doc["max"] == "2"
    assert doc["graphs_scanned"] == "64"
    assert len(doc["extremal_codes"]) == 2
    with pytest.raises(InputError):
        SweepResult(4, "p2", result.max, frozenset(), 64)
    with pytest.raises(InputError):
        SweepResult(4, "nope", result.max, result.extremal_codes, 64)


def test_quantity_of_graph_matches_known_counts():
    g, _ = build_H(12)
    assert quantity_of_graph(g, "m") == 225
    braid, _ = member_of_F(6, variant=1)  # central sizes (2, 2)
    assert quantity_of_graph(braid, "p2") == 4
    assert quantity_of_graph(braid, "p2_even") == 4


# ======================================================================
# extremal uniqueness
# ======================================================================


def test_uniqueness_small_n():
    report = verify_extremal_uniqueness(4)
    assert report.all_match
    assert report.pairs_checked == 3  # two pairs on the square, one on
    # the diamond
    assert report.central_multisets == {(2,)}
    assert verify_extremal_uniqueness(5).central_multisets == {(3,)}
    six = verify_extremal_uniqueness(6)
    assert six.all_match
    assert six.central_multisets == {(4,), (2, 2)}


def test_uniqueness_input_checks():
    with pytest.raises(InputError):
        verify_extremal_uniqueness(3)
    with pytest.raises(InputError):
        verify_extremal_uniqueness(4, sweep=exhaustive_max(4, "m"))
    doc = verify_extremal_uniqueness(4).to_json_dict()
    assert doc["all_match"] is True
    assert doc["counterexample_codes"] == []
