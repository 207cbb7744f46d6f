#!/usr/bin/env python3
"""Sweep the exact solvers over generated instances and write a CSV.

Thin driver around run_bench: same defaults as the documented bench
subcommand, handy when the sweep should live in a notebook-friendly file.
"""

import argparse

import cactuskit as ck


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", default="random")
    ap.add_argument("--n-range", default="6:14", help="inclusive LO:HI")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--algos", default="dp,enum")
    ap.add_argument("--extra", type=int, default=3)
    ap.add_argument("--seed-base", type=int, default=0)
    ap.add_argument("--csv", default="bench.csv")
    args = ap.parse_args()

    lo, hi = (int(part) for part in args.n_range.split(":"))
    records = ck.run_bench(
        args.kind,
        list(range(lo, hi + 1)),
        args.trials,
        args.algos.split(","),
        extra_edges=args.extra,
        seed_base=args.seed_base,
    )
    ck.write_csv(records, args.csv)
    print(f"wrote {args.csv} ({len(records)} records)")


if __name__ == "__main__":
    main()
