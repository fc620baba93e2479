"""Exact maximum independent set via clique search on the complement.

The search is a bitset branch and bound with greedy-colouring bounds
(vertices are branched on in decreasing colour order, so a colour class
plays the role of a Bron-Kerbosch pivot).  Every top-level vertex spawns an
independent subproblem: "largest clique containing v among vertices
ordered before v".  Subproblems are handed out to a thread pool; the numba
kernel releases the GIL.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _kernels
from .model import Graph, IndependentSet, pack_rows

SOLVER_VERSION = "1.0"
MAX_BRUTE_FORCE_ORDER = 25
THREADS_ENV = "DISTGRAPHS_THREADS"


class IncompleteSolve(RuntimeError):
    """Raised when an exact value is requested from an incomplete report."""


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SolverSettings:
    ordering: str = "natural"  # or "degeneracy"
    threads: int | None = None
    node_limit: int | None = None
    time_limit: float | None = None
    branching: str = "color-sort"

    def resolved_threads(self) -> int:
        return self.threads if self.threads else default_threads()

    def describe(self) -> dict:
        d = asdict(self)
        d["threads"] = self.resolved_threads()
        d["version"] = SOLVER_VERSION
        return d

    def value_key(self) -> str:
        """Hash of the settings that could affect a *value*; thread count and budgets do not."""
        return hashlib.sha1(f"{SOLVER_VERSION}:{self.branching}".encode()).hexdigest()[:12]


@dataclass(frozen=True)
class SolveReport:
    complete: bool
    lower: int
    upper: int
    witness: IndependentSet
    nodes: int
    elapsed: float
    settings: dict = field(default_factory=dict)

    @property
    def alpha(self) -> int:
        if not self.complete:
            raise IncompleteSolve(f"search stopped with bounds [{self.lower}, {self.upper}]")
        return self.lower

    @property
    def settings_hash(self) -> str:
        blob = json.dumps(self.settings, sort_keys=True).encode()
        return hashlib.sha1(blob).hexdigest()[:12]

    def to_dict(self) -> dict:
        return {
            "complete": self.complete,
            "alpha": self.lower if self.complete else None,
            "lower": self.lower,
            "upper": self.upper,
            "witness": sorted(self.witness.members),
            "nodes": self.nodes,
            "elapsed_ms": int(round(self.elapsed * 1000)),
            "settings": self.settings,
            "settings_hash": self.settings_hash,
        }


def _degeneracy_order(adj: np.ndarray) -> list[int]:
    # repeatedly strip a minimum-degree vertex (smallest index on ties); it goes last
    n = adj.shape[0]
    deg = adj.sum(axis=1).astype(np.int64)
    alive = np.ones(n, dtype=bool)
    removed = []
    big = np.iinfo(np.int64).max
    for _ in range(n):
        v = int(np.argmin(np.where(alive, deg, big)))
        removed.append(v)
        alive[v] = False
        deg -= adj[v]
    return removed[::-1]


def _prefix_row(row: np.ndarray, v: int) -> np.ndarray:
    out = row.copy()
    w, b = v >> 6, v & 63
    out[w + 1:] = 0
    out[w] &= np.uint64((1 << b) - 1)
    return out


def _clique_search(adj: np.ndarray, settings: SolverSettings) -> tuple[bool, int, int, list[int], int]:
    """Maximum clique of the boolean matrix ``adj``.

    Returns ``(complete, lower, upper, clique, nodes)``.
    """
    n = adj.shape[0]
    if n == 0:
        return True, 0, 0, [], 0
    if settings.ordering == "degeneracy":
        order = _degeneracy_order(adj)
    elif settings.ordering == "natural":
        order = list(range(n))
    else:
        raise ValueError(f"unknown ordering {settings.ordering!r}")
    rows = pack_rows(adj[np.ix_(order, order)])

    threads = max(1, min(settings.resolved_threads(), n))
    incumbent = np.zeros(threads, dtype=np.int64)
    witnesses = np.full((threads, n + 1), -1, dtype=np.int64)
    stop = np.zeros(1, dtype=np.int64)
    done = np.zeros(n, dtype=bool)
    lock = threading.Lock()
    state = {"next": 0, "nodes": 0}

    def worker(slot: int) -> None:
        while stop[0] == 0:
            with lock:
                v = state["next"]
                if v >= n:
                    return
                state["next"] += 1
                remaining = 0
                if settings.node_limit is not None:
                    remaining = settings.node_limit - state["nodes"]
                    if remaining <= 0:
                        stop[0] = 1
                        return
            cand = _prefix_row(rows[v], v)
            nodes, finished = _kernels.search_root(
                rows, v, cand, incumbent, slot, stop, remaining, witnesses[slot])
            with lock:
                state["nodes"] += nodes
                if finished:
                    done[v] = True
                elif settings.node_limit is not None:
                    stop[0] = 1

    timer = None
    if settings.time_limit is not None:
        timer = threading.Timer(settings.time_limit, lambda: stop.__setitem__(0, 1))
        timer.daemon = True
        timer.start()
    try:
        if threads == 1:
            worker(0)
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                list(pool.map(worker, range(threads)))
    finally:
        if timer is not None:
            timer.cancel()

    slot = int(np.argmax(incumbent))
    lower = int(incumbent[slot])
    clique = [order[int(i)] for i in witnesses[slot] if i >= 0][:lower]
    complete = bool(done.all())
    upper = lower
    if not complete:
        for v in np.flatnonzero(~done):
            cand = _prefix_row(rows[v], int(v))
            upper = max(upper, 1 + int(_kernels.color_bound(rows, cand)))
    return complete, lower, upper, clique, state["nodes"]


def _complement_matrix(g: Graph) -> np.ndarray:
    adj = ~g.matrix()
    np.fill_diagonal(adj, False)
    return adj


def max_independent_set(g: Graph, settings: SolverSettings | None = None, *,
                        threads: int | None = None, node_limit: int | None = None,
                        time_limit: float | None = None) -> SolveReport:
    """Exact independence number of ``g`` with a witness set.

    With a budget the report may come back with ``complete=False``; then
    ``lower``/``upper`` bracket the true value and ``alpha`` raises.
    """
    if settings is None:
        settings = SolverSettings(threads=threads, node_limit=node_limit, time_limit=time_limit)
    t0 = time.perf_counter()
    complete, lower, upper, members, nodes = _clique_search(_complement_matrix(g), settings)
    elapsed = time.perf_counter() - t0
    witness = IndependentSet(g.graph_id, frozenset(members))
    if not verify_independent(g, witness.members) or len(witness) != lower:
        raise AssertionError("solver produced an invalid witness")
    return SolveReport(complete, lower, upper, witness, nodes, elapsed, settings.describe())


def max_clique(g: Graph, settings: SolverSettings | None = None) -> tuple[int, list[int]]:
    """Clique number of ``g`` and one maximum clique (no budget)."""
    settings = settings or SolverSettings()
    _, size, _, clique, _ = _clique_search(g.matrix(), settings)
    return size, sorted(clique)


def brute_force_mis(g: Graph) -> int:
    """Independence number by plain include/exclude recursion (test oracle)."""
    if g.order > MAX_BRUTE_FORCE_ORDER:
        raise ValueError(f"brute force limited to {MAX_BRUTE_FORCE_ORDER} vertices, got {g.order}")
    if g.order == 0:
        return 0
    masks = np.array([int(r) for r in g.rows[:, 0]], dtype=np.uint64)
    return int(_kernels.brute_force_alpha(masks, g.order))


def verify_independent(g: Graph, members) -> bool:
    idx = sorted(set(int(i) for i in members))
    for i in idx:
        if not 0 <= i < g.order:
            raise ValueError(f"vertex index {i} out of range for order {g.order}")
    for a, u in enumerate(idx):
        for v in idx[a + 1:]:
            if g.has_edge(u, v):
                return False
    return True
