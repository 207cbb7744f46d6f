"""Deletion distance to a spanning cactus: three exact routes plus the
subset table they share."""

import random

import pytest
from hypothesis import given, settings, strategies as st

import cactuskit as ck
from conftest import (
    bowtie,
    complete_graph,
    cycle_chord6,
    cycle_graph,
    k4,
    kept_subgraph_is_spanning_cactus,
    random_connected,
    triangle,
)

ALL_SOLVERS = (ck.edc_subset_dp, ck.edc_tree_enum, ck.edc_brute_force)


def test_chorded_cycle_deletes_one_edge():
    g = cycle_chord6()
    for solve in ALL_SOLVERS:
        res = solve(g)
        assert res.deleted_count == 1
        assert kept_subgraph_is_spanning_cactus(g, res.kept_edge_ids)
        assert res.deleted_count + len(res.kept_edge_ids) == g.m


def test_k4_deletes_two_edges():
    g = k4()
    for solve in ALL_SOLVERS:
        res = solve(g)
        assert res.deleted_count == 2
        assert kept_subgraph_is_spanning_cactus(g, res.kept_edge_ids)


def test_cactus_input_needs_no_deletion():
    for g in (triangle(), bowtie(), cycle_graph(7), ck.build_graph(2, [(0, 1)])):
        for solve in ALL_SOLVERS:
            res = solve(g)
            assert res.deleted_count == 0
            assert sorted(res.kept_edge_ids) == list(range(g.m))


def test_spanning_tree_counts():
    assert ck.count_spanning_trees(k4()) == 16
    assert ck.count_spanning_trees(cycle_chord6()) == 15
    assert ck.count_spanning_trees(ck.build_graph(4, [(0, 1), (1, 2), (2, 3)])) == 1
    for n in range(3, 9):
        assert ck.count_spanning_trees(cycle_graph(n)) == n


def test_enumeration_is_complete_and_distinct():
    g = cycle_chord6()
    seen = []
    stats = ck.enumerate_spanning_trees(g, seen.append)
    assert stats.trees_visited == stats.spanning_tree_count == 15
    assert len(set(seen)) == 15
    for ids in seen:
        ck.spanning_tree_from_ids(g, ids)


def test_enumeration_limit_paths():
    with pytest.raises(ck.LimitExceeded) as info:
        ck.enumerate_spanning_trees(k4(), lambda ids: None, limit=3)
    assert info.value.partial_stats.trees_visited == 3
    with pytest.raises(ck.TooManyTrees) as info:
        ck.edc_tree_enum(k4(), tree_limit=5)
    assert info.value.count == 16
    assert info.value.limit == 5


def test_subset_dp_guards():
    path26 = ck.build_graph(26, [(i, i + 1) for i in range(25)])
    with pytest.raises(ck.TooManyVertices):
        ck.edc_subset_dp(path26)
    assert ck.edc_subset_dp(path26, max_n=26).deleted_count == 0
    with pytest.raises(ck.NotConnected):
        ck.edc_subset_dp(ck.build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ck.TooManyEdges):
        ck.edc_brute_force(complete_graph(7))


def test_base_case_values():
    g = cycle_chord6()
    assert ck.base_case_value(triangle(), [0, 1, 2]) == (3, (0, 1, 2))
    assert ck.base_case_value(g, [0, 1]) == (1, (0,))
    value, kept = ck.base_case_value(k4(), range(4))
    assert value == 4
    assert kept_subgraph_is_spanning_cactus(k4(), kept)
    with pytest.raises(ck.EmptySubset):
        ck.base_case_value(g, [])
    with pytest.raises(ck.SubsetTooLarge):
        ck.base_case_value(g, range(6))
    with pytest.raises(ck.NotConnectedSubset):
        ck.base_case_value(cycle_graph(6), [0, 3])


def test_split_value_at_bowtie_cut():
    g = bowtie()
    table = ck.new_subset_table(g)
    full = frozenset(range(5))
    assert ck.find_cut_cactus(2, frozenset({0, 1}), full, table) == 6
    assert ck.find_max_cactus(full, g, table) == 6
    with pytest.raises(ck.PreconditionViolated):
        ck.find_cut_cactus(0, frozenset({1, 2}), full, table)  # other side falls apart
    with pytest.raises(ck.PreconditionViolated):
        ck.find_cut_cactus(3, frozenset({0, 1}), full, table)  # A side falls apart
    with pytest.raises(ck.PreconditionViolated):
        ck.find_cut_cactus(2, frozenset({0, 1, 3, 4}), full, table)  # empty other side


def test_subset_table_entries():
    g = cycle_chord6()
    table = ck.new_subset_table(g)
    full = frozenset(range(g.n))
    best = ck.find_max_cactus(full, g, table)
    assert best == 6
    entry = table.entry(full)
    assert entry.vertices == tuple(range(6))
    assert entry.value == 6
    assert entry.mask == (1 << 6) - 1
    assert table.entry(entry.mask) == entry
    # bound chain: tree lower bound, edge-count and density upper bounds
    for mask in table.masks():
        e = table.entry(mask)
        verts = set(e.vertices)
        size = len(verts)
        induced = sum(1 for a, b in g.edges if a in verts and b in verts)
        assert size - 1 <= e.value <= induced
        assert e.value <= max(0, 3 * (size - 1) // 2)
    # every evaluated mask is base or final, never the error sentinel
    assert set(table.masks(status=1)) | set(table.masks(status=2)) == set(table.masks())


def test_compiled_and_reference_engines_agree():
    for trial in range(40):
        rng = random.Random(63_000 + trial)
        g = random_connected(rng)
        a = ck.edc_subset_dp(g)
        b = ck.edc_subset_dp(g, engine="reference")
        assert a.stats["engine"] == "compiled"
        assert b.stats["engine"] == "reference"
        assert a.deleted_count == b.deleted_count
        assert sorted(a.kept_edge_ids) == sorted(b.kept_edge_ids)


@given(st.integers(0, 10_000))
@settings(max_examples=40)
def test_all_routes_agree_and_verify(seed):
    g = random_connected(random.Random(seed), n_lo=4, n_hi=7)
    results = [solve(g) for solve in ALL_SOLVERS]
    counts = {r.deleted_count for r in results}
    assert len(counts) == 1
    for r in results:
        assert kept_subgraph_is_spanning_cactus(g, r.kept_edge_ids)
        assert len(r.kept_edge_ids) == g.m - r.deleted_count


def test_result_metadata():
    g = cycle_chord6()
    dp = ck.edc_subset_dp(g)
    assert dp.algorithm == "dp"
    assert dp.stats["engine"] == "compiled"
    assert dp.table is not None
    en = ck.edc_tree_enum(g)
    assert en.algorithm == "enum"
    assert en.stats["spanning_tree_count"] == 15
    br = ck.edc_brute_force(g)
    assert br.algorithm == "brute"
    assert br.stats["subsets_tried"] >= 1
