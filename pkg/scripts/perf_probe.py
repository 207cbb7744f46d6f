#!/usr/bin/env python3
"""Time the subset solver across instance sizes.

One line per n: a single solve on a random connected instance at the
requested extra-edge density, with the evaluated-subset count.  Useful for
checking that growth stays near the expected 3^n curve.
"""

import argparse
import time

import cactuskit as ck


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-lo", type=int, default=8)
    ap.add_argument("--n-hi", type=int, default=18)
    ap.add_argument("--density", type=float, default=0.5,
                    help="fraction of the possible extra edges to add")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    for n in range(args.n_lo, args.n_hi + 1):
        max_extra = n * (n - 1) // 2 - (n - 1)
        extra = int(max_extra * args.density)
        g = ck.gen_instance("random", n, extra_edges=extra, seed=args.seed)
        t0 = time.perf_counter()
        res = ck.edc_subset_dp(g)
        wall = time.perf_counter() - t0
        print(f"n={n:2d} m={g.m:3d} deleted={res.deleted_count:3d} "
              f"subsets={res.stats['subsets_evaluated']:9d} wall={wall:8.3f}s")


if __name__ == "__main__":
    main()
