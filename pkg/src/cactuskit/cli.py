"""Command-line front end.

Exit codes: 0 success, 1 invalid input (including bad usage), 2 a
stated limit was exceeded, 3 an internal cross-check failed.  Solver
output keeps to stable one-line facts (``deleted <k>``, ``added <k>``);
witness edge lists appear only under ``--emit-edges`` since optima are
rarely unique.
"""

from __future__ import annotations

import argparse
import sys

from .bench import run_bench, write_csv
from .edge_deletion import (
    DEFAULT_TREE_LIMIT,
    DEFAULT_VERTEX_CAP,
    count_spanning_trees,
    edc_brute_force,
    edc_subset_dp,
    edc_tree_enum,
)
from .errors import CrossCheckError, InputError, LimitError
from .files import read_graph_path, read_tree_path, write_graph_path
from .generate import KINDS, gen_instance
from .graph import is_cactus
from .minimal import check_minimal
from .tree_to_cactus import spanning_tree_to_cactus

EDC_BRUTE_CAP = 20


class _Parser(argparse.ArgumentParser):
    # usage problems are invalid input (exit 1), not argparse's default 2
    def error(self, message):
        raise InputError(message)


def _load_graph(path: str):
    try:
        return read_graph_path(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    print("cactus" if is_cactus(g).cactus else "not-cactus")
    return 0


def cmd_stc(args) -> int:
    g = _load_graph(args.graph)
    try:
        with open(args.tree, "r", encoding="utf-8") as fh:
            tree_text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.tree}: {exc.strerror or exc}") from None
    from .files import parse_tree_file

    t = parse_tree_file(tree_text, g)
    res = spanning_tree_to_cactus(g, t)
    print(f"added {res.added_count}")
    if args.emit_edges:
        print("add " + " ".join(str(e) for e in res.added_edge_ids))
    return 0


def cmd_edc(args) -> int:
    g = _load_graph(args.graph)
    if args.algo == "dp":
        res = edc_subset_dp(g, max_n=args.max_n)
    elif args.algo == "enum":
        res = edc_tree_enum(g, tree_limit=args.max_trees)
    else:
        res = edc_brute_force(g)
    print(f"deleted {res.deleted_count}")
    if args.emit_edges:
        print("keep " + " ".join(str(e) for e in res.kept_edge_ids))
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    results: dict[str, int] = {}
    if g.n <= args.max_n:
        results["dp"] = edc_subset_dp(g, max_n=args.max_n).deleted_count
    if count_spanning_trees(g) <= args.max_trees:
        results["enum"] = edc_tree_enum(g, tree_limit=args.max_trees).deleted_count
    if g.m <= EDC_BRUTE_CAP:
        results["brute"] = edc_brute_force(g).deleted_count
    for name, k in results.items():
        print(f"{name} deleted {k}")
    if not results:
        raise LimitError("no algorithm is applicable within the given limits")
    if len(set(results.values())) > 1:
        raise CrossCheckError(f"algorithms disagree: {results}")
    print("agreement ok")
    return 0


def cmd_gen(args) -> int:
    g = gen_instance(args.kind, args.n, extra_edges=args.extra, seed=args.seed)
    comment = f"{args.kind} n={args.n} extra={args.extra} seed={args.seed}"
    write_graph_path(args.out, g, comments=(comment,))
    print(f"wrote {args.out}")
    return 0


def cmd_bench(args) -> int:
    lo_hi = args.n_range.split(":")
    if len(lo_hi) != 2:
        raise InputError(f"--n-range wants LO:HI, got {args.n_range!r}")
    try:
        lo, hi = int(lo_hi[0]), int(lo_hi[1])
    except ValueError:
        raise InputError(f"--n-range wants integers, got {args.n_range!r}") from None
    if lo < 1 or hi < lo:
        raise InputError(f"bad range {args.n_range!r}")
    algos = [a for a in args.algos.split(",") if a]
    if not algos:
        raise InputError("--algos must name at least one of dp,enum,brute")
    try:
        records = run_bench(
            args.kind, list(range(lo, hi + 1)), args.trials, algos,
            extra_edges=args.extra, seed_base=args.seed,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    write_csv(records, args.csv)
    print(f"wrote {args.csv} ({len(records)} records)")
    return 0


def cmd_check_minimal(args) -> int:
    g = _load_graph(args.graph)
    rep = check_minimal(g)
    print(f"noncactus {'yes' if rep.is_noncactus else 'no'}")
    if rep.is_noncactus:
        print(f"edge-minimal {'yes' if rep.is_edge_minimal else 'no'}")
        if rep.violating_edge is not None:
            print(f"violating-edge {rep.violating_edge}")
        missing = sum(1 for e in rep.pair_cycle_table if not e.common_cycle)
        print("pair-cycles all" if missing == 0 else f"pair-cycles missing {missing}")
    return 0


def _build_parser() -> _Parser:
    p = _Parser(prog="cactuskit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("recognize", help="classify a graph file as cactus or not")
    sp.add_argument("-g", "--graph", required=True)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("stc", help="most non-tree edges addable to a spanning tree")
    sp.add_argument("-g", "--graph", required=True)
    sp.add_argument("-t", "--tree", required=True)
    sp.add_argument("--emit-edges", action="store_true")
    sp.set_defaults(func=cmd_stc)

    sp = sub.add_parser("edc", help="fewest edge deletions leaving a cactus")
    sp.add_argument("-g", "--graph", required=True)
    sp.add_argument("--algo", choices=("dp", "enum", "brute"), default="dp")
    sp.add_argument("--emit-edges", action="store_true")
    sp.add_argument("--max-n", type=int, default=DEFAULT_VERTEX_CAP)
    sp.add_argument("--max-trees", type=int, default=DEFAULT_TREE_LIMIT)
    sp.set_defaults(func=cmd_edc)

    sp = sub.add_parser("verify", help="run every applicable algorithm, demand agreement")
    sp.add_argument("-g", "--graph", required=True)
    sp.add_argument("--max-n", type=int, default=DEFAULT_VERTEX_CAP)
    sp.add_argument("--max-trees", type=int, default=DEFAULT_TREE_LIMIT)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="write a generated instance file")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--extra", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--out", required=True)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="timing sweep over generated instances, CSV out")
    sp.add_argument("--kind", choices=KINDS, default="random")
    sp.add_argument("--n-range", required=True)
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--algos", default="dp,enum")
    sp.add_argument("--extra", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--csv", required=True)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("check-minimal", help="edge-minimality and pair-cycle audit")
    sp.add_argument("-g", "--graph", required=True)
    sp.set_defaults(func=cmd_check_minimal)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
