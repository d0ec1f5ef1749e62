"""Timing sweep for the two polynomial solvers.

Usage:
    python scripts/bench_scaling.py [--max-tournament 200] [--max-alt 2000]

Prints one line per (class, size, seed) with the measured wall time, the
deletion count, and the retained-core size where applicable.
"""

from __future__ import annotations

import argparse
import time

from rtvd.acyclic_local import min_tvd_alt
from rtvd.bounded import solve_tournament, tournament_retain_cap
from rtvd.generators import (
    gen_acyclic_local_tournament,
    gen_tournament,
    random_reach_function,
)


def bench_tournaments(sizes, seeds):
    cap = tournament_retain_cap(0).cap
    for n in sizes:
        for seed in seeds:
            T = gen_tournament(n, seed)
            t0 = time.perf_counter()
            sol = solve_tournament(T, 0)
            dt = time.perf_counter() - t0
            print(
                f"tournament n={n:4d} seed={seed} deleted={sol.size:4d} "
                f"retained={n - sol.size} (cap {cap})  {dt * 1000:8.1f} ms"
            )


def bench_alts(sizes, seeds, span):
    for n in sizes:
        for seed in seeds:
            D = gen_acyclic_local_tournament(
                random_reach_function(n, seed, max_span=span)
            )
            t0 = time.perf_counter()
            sol = min_tvd_alt(D)
            dt = time.perf_counter() - t0
            print(
                f"alt        n={n:4d} seed={seed} m={D.m:6d} "
                f"deleted={sol.size:4d}  {dt * 1000:8.1f} ms"
            )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-tournament", type=int, default=200)
    parser.add_argument("--max-alt", type=int, default=2000)
    parser.add_argument("--span", type=int, default=40)
    parser.add_argument("--seeds", type=int, default=3)
    args = parser.parse_args()

    seeds = range(args.seeds)
    t_sizes = [n for n in (25, 50, 100, 200, 400) if n <= args.max_tournament]
    a_sizes = [n for n in (100, 250, 500, 1000, 2000, 4000) if n <= args.max_alt]
    bench_tournaments(t_sizes, seeds)
    bench_alts(a_sizes, seeds, args.span)


if __name__ == "__main__":
    main()
