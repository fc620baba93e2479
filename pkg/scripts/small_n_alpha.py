"""Exact alpha(G_n) against the closed form, with node counts and timings.

    python scripts/small_n_alpha.py --max-n 8 [--budget SECONDS] [--threads N]
"""

import argparse

from distgraphs import alpha_formula, build_gn, max_independent_set
from distgraphs.solver import SolverSettings


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--budget", type=float, default=None)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>3} {'order':>6} {'formula':>7} {'exact':>9} {'nodes':>10} {'sec':>8}")
    for n in range(3, args.max_n + 1):
        g = build_gn(n)
        rep = max_independent_set(g, SolverSettings(threads=args.threads, time_limit=args.budget))
        exact = str(rep.lower) if rep.complete else f"{rep.lower}..{rep.upper}"
        print(f"{n:>3} {g.order:>6} {alpha_formula(n):>7} {exact:>9} {rep.nodes:>10} {rep.elapsed:>8.2f}")


if __name__ == "__main__":
    main()
