"""Command-line surface: subcommands, output contracts, exit codes."""

import csv
import os
import subprocess
import sys

import pytest

import cactuskit as ck
from conftest import k4, shared_edc_family, triangle


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("CACTUSKIT_FAULT", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "cactuskit", *args],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.fixture()
def chorded(tmp_path):
    path = str(tmp_path / "chorded.graph")
    ck.write_graph_path(path, ck.gen_instance("cycle-chord", 6))
    return path


@pytest.fixture()
def k4_file(tmp_path):
    path = str(tmp_path / "k4.graph")
    ck.write_graph_path(path, k4())
    return path


def test_recognize(tmp_path, chorded):
    tri = str(tmp_path / "tri.graph")
    ck.write_graph_path(tri, triangle())
    p = run_cli("recognize", "-g", tri)
    assert (p.returncode, p.stdout) == (0, "cactus\n")
    p = run_cli("recognize", "-g", chorded)
    assert (p.returncode, p.stdout) == (0, "not-cactus\n")


def test_stc_golden(tmp_path, chorded):
    tree = tmp_path / "chorded.tree"
    g = ck.gen_instance("cycle-chord", 6)
    tree.write_text("".join(f"e {u} {v}\n" for u, v in list(g.edges)[:5]))
    p = run_cli("stc", "-g", chorded, "-t", str(tree))
    assert p.returncode == 0
    assert p.stdout == "added 1\n"
    p = run_cli("stc", "-g", chorded, "-t", str(tree), "--emit-edges")
    assert p.stdout == "added 1\nadd 6\n"


def test_edc_all_algorithms(chorded):
    for algo in ("dp", "enum", "brute"):
        p = run_cli("edc", "-g", chorded, "--algo", algo)
        assert (p.returncode, p.stdout) == (0, "deleted 1\n"), algo


def test_edc_emit_edges_is_a_valid_answer(chorded):
    p = run_cli("edc", "-g", chorded, "--algo", "dp", "--emit-edges")
    lines = p.stdout.splitlines()
    assert lines[0] == "deleted 1"
    kept = [int(tok) for tok in lines[1].split()[1:]]
    g = ck.gen_instance("cycle-chord", 6)
    h = ck.build_graph(g.n, [g.edges[e] for e in kept])
    assert ck.is_connected(h) and ck.is_cactus(h).cactus


def test_verify_k4_agreement(k4_file):
    p = run_cli("verify", "-g", k4_file)
    assert p.returncode == 0
    assert p.stdout == "dp deleted 2\nenum deleted 2\nbrute deleted 2\nagreement ok\n"


def test_exit_1_on_bad_input(tmp_path):
    p = run_cli("recognize", "-g", str(tmp_path / "missing.graph"))
    assert p.returncode == 1
    assert "error" in p.stderr
    bad = tmp_path / "bad.graph"
    bad.write_text("p 2 1\nq 0 1\n")
    p = run_cli("recognize", "-g", str(bad))
    assert p.returncode == 1
    assert "line 2" in p.stderr
    p = run_cli("edc", "-g", str(bad), "--algo", "nope")
    assert p.returncode == 1
    p = run_cli()
    assert p.returncode == 1


def test_exit_2_on_limits(chorded, k4_file):
    p = run_cli("edc", "-g", chorded, "--algo", "enum", "--max-trees", "1")
    assert p.returncode == 2
    assert "15" in p.stderr and "1" in p.stderr  # names the count and the limit
    p = run_cli("edc", "-g", k4_file, "--algo", "dp", "--max-n", "3")
    assert p.returncode == 2


def test_exit_3_under_injected_fault(tmp_path):
    # scan the shared family for an instance the broken recurrence gets wrong
    fault = {"CACTUSKIT_FAULT": "dp-no-cactus-shortcut"}
    for trial, g in shared_edc_family():
        path = str(tmp_path / f"fam{trial}.graph")
        ck.write_graph_path(path, g)
        p = run_cli("verify", "-g", path, env_extra=fault)
        if p.returncode == 3:
            assert run_cli("verify", "-g", path).returncode == 0
            return
        assert p.returncode == 0
        if trial >= 30:
            break
    raise AssertionError("fault was never detected in the scanned prefix")


def test_gen_round_trip(tmp_path):
    out = str(tmp_path / "gen.graph")
    p = run_cli("gen", "--kind", "random", "-n", "8", "--extra", "3", "--seed", "7", "-o", out)
    assert p.returncode == 0
    assert p.stdout == f"wrote {out}\n"
    g = ck.read_graph_path(out)
    assert g == ck.gen_instance("random", 8, extra_edges=3, seed=7)
    out2 = str(tmp_path / "gen2.graph")
    run_cli("gen", "--kind", "random", "-n", "8", "--extra", "3", "--seed", "7", "-o", out2)
    assert open(out).read() == open(out2).read()
    p = run_cli("gen", "--kind", "complete", "-n", "4", "--extra", "1", "-o", out, "--seed", "0")
    assert p.returncode == 1


def test_bench_csv(tmp_path):
    out = str(tmp_path / "bench.csv")
    p = run_cli(
        "bench", "--kind", "random", "--n-range", "5:7", "--trials", "2",
        "--algos", "dp,enum", "--csv", out,
    )
    assert p.returncode == 0
    assert p.stdout == f"wrote {out} (6 records)\n"
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6
    assert set(r["algorithm"] for r in rows) == {"dp", "enum"}
    for row in rows:
        assert int(row["n"]) in (5, 6, 7)
        assert float(row["wall_time_s"]) >= 0
        by_algo = [r for r in rows if r["instance"] == row["instance"]]
        assert len({r["deleted_count"] for r in by_algo}) == 1
    p = run_cli("bench", "--kind", "random", "--n-range", "5:4", "--trials", "1",
                "--algos", "dp", "--csv", out)
    assert p.returncode == 1


def test_check_minimal_outputs(tmp_path, chorded, k4_file):
    p = run_cli("check-minimal", "-g", chorded)
    assert p.returncode == 0
    assert p.stdout == "noncactus yes\nedge-minimal yes\npair-cycles all\n"
    p = run_cli("check-minimal", "-g", k4_file)
    assert p.stdout.startswith("noncactus yes\nedge-minimal no\nviolating-edge 0\n")
    tri = str(tmp_path / "tri.graph")
    ck.write_graph_path(tri, triangle())
    p = run_cli("check-minimal", "-g", tri)
    assert p.stdout.splitlines()[0] == "noncactus no"
