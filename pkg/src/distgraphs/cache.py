"""Append-only JSONL cache of exact solve results."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .model import Graph
from .solver import SOLVER_VERSION, SolverSettings, verify_independent

log = logging.getLogger(__name__)

CACHE_ENV = "DISTGRAPHS_CACHE_DIR"
CACHE_FILE = "results.jsonl"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "distgraphs"


def problem_key(g: Graph, settings: SolverSettings | None = None) -> str:
    settings = settings or SolverSettings()
    desc = json.dumps({"origin": g.origin, "params": repr(g.params), "graph": g.graph_id,
                       "solver": settings.value_key(), "version": SOLVER_VERSION}, sort_keys=True)
    return hashlib.sha1(desc.encode()).hexdigest()


@dataclass(frozen=True)
class CacheRecord:
    key: str
    alpha: int
    witness: list[int] | None
    timestamp: float


class ResultCache:
    """Loads every well-formed line on open; appends go through one lock."""

    def __init__(self, directory: Path | str | None = None):
        self.path = Path(directory or default_cache_dir()) / CACHE_FILE
        self._lock = threading.Lock()
        self._records: dict[str, CacheRecord] = {}
        self.skipped = 0
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    raw = json.loads(line)
                    rec = CacheRecord(str(raw["key"]), int(raw["alpha"]), raw.get("witness"),
                                      float(raw.get("timestamp", 0)))
                except (ValueError, KeyError, TypeError):
                    self.skipped += 1
                    log.warning("skipping corrupted cache line %d in %s", lineno, self.path)
                    continue
                self._records[rec.key] = rec

    def __len__(self):
        return len(self._records)

    def lookup(self, g: Graph, settings: SolverSettings | None = None) -> CacheRecord | None:
        """Return a record only if its witness replays as an independent set of size alpha."""
        rec = self._records.get(problem_key(g, settings))
        if rec is None:
            return None
        w = rec.witness or []
        try:
            ok = len(set(w)) == rec.alpha and verify_independent(g, w)
        except ValueError:
            ok = False
        if not ok:
            log.warning("cache record %s failed verification; ignoring", rec.key[:12])
            return None
        return rec

    def store(self, g: Graph, alpha: int, witness, settings: SolverSettings | None = None) -> CacheRecord:
        rec = CacheRecord(problem_key(g, settings), int(alpha), sorted(int(i) for i in witness), time.time())
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(asdict(rec), sort_keys=True) + "\n")
            self._records[rec.key] = rec
        return rec
