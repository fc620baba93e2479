"""Maximum independent sets with every signplace degree capped, for the l-constrained rows.

Needs scipy (HiGHS MILP); not a package dependency.

    python scripts/appendix_degree_cap.py --cap 4
"""

import argparse

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from distgraphs.appendix import PAPER_TABLE, enumerate_configs
from distgraphs.build import build_config


def capped_alpha(cfg, cap, time_limit):
    g = build_config(cfg)
    if g.order == 0:
        return 0
    rows, ub = [], []
    for u, v in g.edges():
        r = np.zeros(g.order)
        r[u] = r[v] = 1
        rows.append(r)
        ub.append(1)
    for sp in cfg.signplaces():
        rows.append(np.array([sp in v.signplaces() for v in g.labels], dtype=float))
        ub.append(cap)
    res = milp(-np.ones(g.order), constraints=LinearConstraint(np.array(rows), -np.inf, ub),
               integrality=np.ones(g.order), bounds=Bounds(0, 1), options={"time_limit": time_limit})
    return round(-res.fun) if res.status == 0 else None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cap", type=int, default=4)
    ap.add_argument("--time-limit", type=float, default=300)
    args = ap.parse_args()
    for m, lc, bound in PAPER_TABLE:
        if lc.kind != "ge":
            continue
        vals = {(c.d, c.s): capped_alpha(c, args.cap, args.time_limit) for c in enumerate_configs(m, lc)}
        print(f"m={m} l{lc} published<={bound} capped={vals}")


if __name__ == "__main__":
    main()
