"""Independence numbers of signplace-restricted subgraphs, tabulated by signplace count.

Negating a coordinate or permuting coordinates preserves every scalar
product, so any ``m`` signplaces on ``l`` places are equivalent to the
canonical configuration with ``d = m - l`` two-signed places and
``s = 2l - m`` plus-only places.  Each table row is the maximum over the
canonical configurations compatible with its place constraint.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .build import SignplaceConfig, build_config
from .solver import SolverSettings, max_independent_set


@dataclass(frozen=True)
class LConstraint:
    kind: str = "any"  # "any" | "eq" | "ge"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("any", "eq", "ge"):
            raise ValueError(f"unknown constraint kind {self.kind!r}")

    def admits(self, l: int) -> bool:
        if self.kind == "eq":
            return l == self.k
        if self.kind == "ge":
            return l >= self.k
        return True

    @classmethod
    def parse(cls, text: str | None) -> "LConstraint":
        """``None``/``'any'``, ``'7'`` or ``'=7'``, ``'>=8'``."""
        if text is None or text == "any":
            return cls()
        text = text.strip()
        if text.startswith(">="):
            return cls("ge", int(text[2:]))
        return cls("eq", int(text.lstrip("=")))

    def __str__(self):
        return {"any": "any", "eq": f"={self.k}", "ge": f">={self.k}"}[self.kind]


ANY = LConstraint()

# (m, constraint, published upper bound)
PAPER_TABLE = (
    (13, ANY, 25),
    (13, LConstraint("eq", 7), 18),
    (12, ANY, 22),
    (12, LConstraint("eq", 6), 16),
    (11, ANY, 19),
    (10, ANY, 16),
    (10, LConstraint("ge", 8), 12),
    (9, ANY, 16),
    (9, LConstraint("ge", 7), 13),
    (9, LConstraint("ge", 8), 10),
    (8, ANY, 16),
    (8, LConstraint("ge", 7), 10),
    (7, ANY, 10),
    (7, LConstraint("eq", 7), 5),
    (6, ANY, 7),
    (5, ANY, 5),
    (4, ANY, 4),
    (3, ANY, 1),
)


def paper_bound(m: int, lc: LConstraint) -> int | None:
    for mm, cc, b in PAPER_TABLE:
        if mm == m and cc == lc:
            return b
    return None


def enumerate_configs(m: int, lc: LConstraint = ANY) -> list[SignplaceConfig]:
    if m < 0:
        raise ValueError("m must be non-negative")
    out = []
    for d in range(m // 2 + 1):
        cfg = SignplaceConfig(d, m - 2 * d)
        if cfg.l >= 3 and lc.admits(cfg.l):
            out.append(cfg)
    return out


@dataclass(frozen=True)
class ConfigResult:
    d: int
    s: int
    alpha: int | None
    complete: bool
    lower: int
    upper: int
    order: int
    nodes: int
    witness: tuple[int, ...] = ()
    witness_m: int = 0  # signplaces actually touched by the witness
    witness_l: int = 0  # places actually touched by the witness


@dataclass(frozen=True)
class AppendixEntry:
    m: int
    l_constraint: LConstraint
    paper_bound: int | None
    configs: tuple[ConfigResult, ...] = field(default=())

    @property
    def complete(self) -> bool:
        return all(c.complete for c in self.configs)

    @property
    def computed(self) -> int | None:
        if not self.complete:
            return None
        return max((c.alpha for c in self.configs), default=0)

    @property
    def bounds(self) -> tuple[int, int]:
        return (max((c.lower for c in self.configs), default=0),
                max((c.upper for c in self.configs), default=0))

    @property
    def status(self) -> str:
        if not self.complete:
            return "incomplete"
        if self.paper_bound is None:
            return "unpublished"
        if self.computed == self.paper_bound:
            return "equal"
        return "below" if self.computed < self.paper_bound else "EXCEEDS"


def witness_usage(g, members) -> tuple[int, int]:
    sps = {sp for i in members for sp in g.labels[i].signplaces()}
    return len(sps), len({sp.place for sp in sps})


def config_result(cfg: SignplaceConfig, g, alpha, complete, lower, upper, nodes, witness) -> ConfigResult:
    wm, wl = witness_usage(g, witness)
    return ConfigResult(cfg.d, cfg.s, alpha, complete, lower, upper, g.order, nodes,
                        tuple(sorted(witness)), wm, wl)


def solve_config(cfg: SignplaceConfig, settings: SolverSettings | None = None) -> ConfigResult:
    g = build_config(cfg)
    rep = max_independent_set(g, settings or SolverSettings(threads=1))
    return config_result(cfg, g, rep.lower if rep.complete else None, rep.complete,
                         rep.lower, rep.upper, rep.nodes, rep.witness.members)


def solve_configs(configs, threads: int = 1, settings: SolverSettings | None = None) -> dict:
    """Solve distinct configurations concurrently, one single-threaded search each."""
    settings = settings or SolverSettings(threads=1)
    uniq = sorted(set(configs), key=lambda c: (-c.l, c.d))
    if threads <= 1:
        return {c: solve_config(c, settings) for c in uniq}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda c: solve_config(c, settings), uniq))
    return dict(zip(uniq, results))


def appendix_entry(m: int, lc: LConstraint = ANY, *, threads: int = 1,
                   settings: SolverSettings | None = None, solved: dict | None = None) -> AppendixEntry:
    cfgs = enumerate_configs(m, lc)
    solved = dict(solved or {})
    missing = [c for c in cfgs if c not in solved]
    solved.update(solve_configs(missing, threads, settings))
    return AppendixEntry(m, lc, paper_bound(m, lc), tuple(solved[c] for c in cfgs))


def appendix_table(*, threads: int = 1, settings: SolverSettings | None = None,
                   rows=PAPER_TABLE, solved: dict | None = None) -> list[AppendixEntry]:
    """All rows; ``solved`` may carry results known in advance (e.g. from a cache)."""
    solved = dict(solved or {})
    needed = {c for m, lc, _ in rows for c in enumerate_configs(m, lc)} - set(solved)
    solved.update(solve_configs(needed, threads, settings))
    return [appendix_entry(m, lc, solved=solved) for m, lc, _ in rows]


def mismatches(entries) -> list[AppendixEntry]:
    return [e for e in entries if e.status != "equal"]


CSV_COLUMNS = ("m", "l_constraint", "d", "s", "alpha", "paper_bound", "match")


def to_csv(entries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for e in entries:
        for c in e.configs:
            alpha = c.alpha if c.complete else f"{c.lower}..{c.upper}"
            w.writerow((e.m, str(e.l_constraint), c.d, c.s, alpha,
                        "" if e.paper_bound is None else e.paper_bound, e.status))
    return buf.getvalue()


def to_text(entries) -> str:
    header = ("m", "l", "paper", "computed", "status", "configs (d,s:alpha)")
    body = []
    for e in entries:
        computed = str(e.computed) if e.complete else "{}..{}".format(*e.bounds)
        cfgs = " ".join(f"({c.d},{c.s}:{c.alpha if c.complete else '?'})" for c in e.configs)
        body.append((str(e.m), str(e.l_constraint), str(e.paper_bound or "-"), computed, e.status, cfgs))
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in body]
    return "\n".join(lines) + "\n"
