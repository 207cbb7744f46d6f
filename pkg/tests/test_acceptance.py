"""Acceptance gate: the ten primary checks, one test function each.

Run ``pytest -v tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion.  Wall-clock budgets are the stated envelopes; every numeric
check is exact unless a budget says otherwise.
"""

import itertools
import os
import random
import resource
import subprocess
import sys
import time

import cactuskit as ck
from conftest import (
    complete_graph,
    cycle_chord6,
    cycle_graph,
    k4,
    kept_subgraph_is_spanning_cactus,
    make_edge_minimal,
    petersen,
    shared_edc_family,
)

GIB = 1024 * 1024 * 1024


def _run_cli(args, timeout, fault=None):
    env = dict(os.environ)
    env.pop("CACTUSKIT_FAULT", None)
    if fault:
        env["CACTUSKIT_FAULT"] = fault
    return subprocess.run(
        [sys.executable, "-m", "cactuskit", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=timeout,
    )


def test_criterion_01_three_route_agreement_on_200_graphs():
    t0 = time.monotonic()
    checked = 0
    for trial, g in shared_edc_family():
        dp = ck.edc_subset_dp(g)
        en = ck.edc_tree_enum(g)
        br = ck.edc_brute_force(g)
        assert dp.deleted_count == en.deleted_count == br.deleted_count, (trial, g)
        for res in (dp, en, br):
            assert kept_subgraph_is_spanning_cactus(g, res.kept_edge_ids), (trial, res)
        checked += 1
    assert checked == 200
    assert time.monotonic() - t0 < 300
    print(f"criterion 1 PASS: {checked} graphs, three identical answers each")


def test_criterion_02_tree_augmentation_matches_brute_on_200_pairs():
    t0 = time.monotonic()
    for trial in range(200):
        rng = random.Random(31_000 + trial)
        n = rng.randint(4, 9)
        extra = rng.randint(0, min(12, n * (n - 1) // 2 - (n - 1)))
        g = ck.gen_instance("random", n, extra_edges=extra, seed=6_000 + trial)
        t = ck.spanning_tree_from_ids(g, ck.random_spanning_tree(g, trial))
        assert ck.spanning_tree_to_cactus(g, t).added_count == ck.stc_brute_force(g, t), trial
    assert time.monotonic() - t0 < 120
    print("criterion 2 PASS: 200 tree/graph pairs, exact agreement")


def test_criterion_03_named_instance_goldens():
    g = cycle_chord6()
    assert ck.edc_subset_dp(g).deleted_count == 1
    assert ck.edc_brute_force(g).deleted_count == 1
    path_tree = ck.spanning_tree_from_ids(g, range(5))
    assert ck.spanning_tree_to_cactus(g, path_tree).added_count == 1

    four = k4()
    assert ck.edc_subset_dp(four).deleted_count == 2
    assert ck.edc_brute_force(four).deleted_count == 2
    star = ck.spanning_tree_from_ids(four, [0, 1, 2])
    assert ck.spanning_tree_to_cactus(four, star).added_count == 1
    print("criterion 3 PASS: chorded 6-cycle (1, 1) and K4 (2, 1)")


def test_criterion_04_complete_graph_law():
    t0 = time.monotonic()
    for n in range(4, 9):
        g = complete_graph(n)
        law = 3 * (n - 1) // 2
        dp = ck.edc_subset_dp(g)
        assert len(dp.kept_edge_ids) == law, n
        if g.m <= 20:
            assert len(ck.edc_brute_force(g).kept_edge_ids) == law, n
        else:
            assert len(ck.edc_tree_enum(g).kept_edge_ids) == law, n
    assert time.monotonic() - t0 < 180
    print("criterion 4 PASS: kept = floor(3(n-1)/2) for n = 4..8")


def test_criterion_05_disjoint_paths_biconditional():
    violations = 0
    for trial in range(200):
        rng = random.Random(52_000 + trial)
        n = rng.randint(3, 10)
        tree = ck.gen_instance("random", n, extra_edges=0, seed=8_800 + trial)
        free = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if ck.edge_id_of(tree, u, v) is None
        ]
        extras = rng.sample(free, rng.randint(0, min(8, len(free))))
        g = ck.build_graph(n, list(tree.edges) + extras)
        t = ck.spanning_tree_from_ids(g, range(n - 1))
        paths = [ck.tree_path(t, u, v) for u, v in extras]
        disjoint = all(
            not (p.edge_indices & q.edge_indices)
            for p, q in itertools.combinations(paths, 2)
        )
        if disjoint != ck.is_cactus(g).cactus:
            violations += 1
    assert violations == 0
    print("criterion 5 PASS: 200 augmented trees, biconditional held every time")


def test_criterion_06_minimal_non_cacti_pairwise_cycles():
    collected = 0
    for trial in range(130):
        g, rep = make_edge_minimal(trial)
        if g is None:
            continue
        assert rep.is_noncactus and rep.is_edge_minimal
        assert len(rep.pair_cycle_table) == g.m * (g.m - 1) // 2
        assert all(entry.common_cycle for entry in rep.pair_cycle_table)
        collected += 1
        if collected == 100:
            break
    assert collected == 100
    print("criterion 6 PASS: 100 edge-minimal non-cacti, every edge pair on a common cycle")


def test_criterion_07_enumeration_completeness():
    for trial in range(50):
        rng = random.Random(84_000 + trial)
        n = rng.randint(3, 8)
        extra = rng.randint(0, min(8, n * (n - 1) // 2 - (n - 1)))
        g = ck.gen_instance("random", n, extra_edges=extra, seed=9_900 + trial)
        visited = 0

        def count(_ids):
            nonlocal visited
            visited += 1

        stats = ck.enumerate_spanning_trees(g, count)
        assert visited == stats.trees_visited == stats.spanning_tree_count
        assert stats.spanning_tree_count == ck.count_spanning_trees(g)
    assert ck.count_spanning_trees(k4()) == 16
    for n in range(3, 9):
        assert ck.count_spanning_trees(cycle_graph(n)) == n
    print("criterion 7 PASS: visit counts equal determinant counts on 50 graphs")


def test_criterion_08_matching_kernel():
    inst = ck.matching_instance(10, petersen())
    assert ck.max_matching(inst).size == 5
    for trial in range(200):
        rng = random.Random(95_000 + trial)
        n = rng.randint(1, 12)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        inst = ck.matching_instance(n, pairs[:20])
        assert ck.max_matching(inst).size == ck.brute_matching(inst), trial
    print("criterion 8 PASS: Petersen = 5 and 200 random instances match the oracle")


def test_criterion_09_performance_envelope(tmp_path):
    extras = {12: 20, 15: 45, 18: 68}
    files = {}
    for n, extra in extras.items():
        path = str(tmp_path / f"perf{n}.graph")
        ck.write_graph_path(path, ck.gen_instance("random", n, extra_edges=extra, seed=1))
        files[n] = path
    # warm run loads the compiled kernel cache; not part of the measurement
    _run_cli(["edc", "-g", files[12], "--algo", "dp"], timeout=120)
    wall = {}
    for n in (15, 18):
        t0 = time.monotonic()
        p = _run_cli(["edc", "-g", files[n], "--algo", "dp"], timeout=650)
        wall[n] = time.monotonic() - t0
        assert p.returncode == 0, p.stderr
        assert p.stdout.startswith("deleted ")
    assert wall[15] < 60, wall
    assert wall[18] < 600, wall
    child_rss_kb = resource.getrusage(resource.RUSAGE_CHILDREN).ru_maxrss
    assert child_rss_kb * 1024 < 2 * GIB
    print(
        f"criterion 9 PASS: n=15 {wall[15]:.2f}s, n=18 {wall[18]:.2f}s, "
        f"peak child RSS {child_rss_kb / 1024 / 1024:.2f} GiB"
    )


def test_criterion_10_injected_fault_is_caught(tmp_path):
    caught_at = None
    for trial, g in shared_edc_family():
        path = str(tmp_path / f"fault{trial}.graph")
        ck.write_graph_path(path, g)
        p = _run_cli(["verify", "-g", path], timeout=120, fault="dp-no-cactus-shortcut")
        if p.returncode == 3:
            caught_at = trial
            clean = _run_cli(["verify", "-g", path], timeout=120)
            assert clean.returncode == 0
            break
        assert p.returncode == 0, (trial, p.returncode, p.stderr)
    assert caught_at is not None
    print(f"criterion 10 PASS: corrupted recurrence rejected with exit 3 at family instance {caught_at}")
