"""Graph constructors: G_n, Nagy's 0/1 graph, signplace-restricted subgraphs, DIMACS."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable

import numpy as np

from .model import MINUS, PLUS, Graph, Signplace, Vertex

SIGN_PATTERNS = tuple(product((PLUS, MINUS), repeat=3))


def gn_vertices(n: int) -> list[Vertex]:
    """All +-1/0 vectors of dimension ``n`` with three nonzero coordinates, in canonical order."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return [
        Vertex.from_signed_places(n, zip(base, signs))
        for base in combinations(range(n), 3)
        for signs in SIGN_PATTERNS
    ]


def build_gn(n: int) -> Graph:
    g = Graph.from_vertices(gn_vertices(n), "generated-Gn", (("n", n),))
    assert g.order == 8 * comb(n, 3)
    return g


def build_nagy(n: int) -> Graph:
    if n < 1:
        raise ValueError("dimension must be at least 1")
    verts = [Vertex.from_signed_places(n, ((p, PLUS) for p in base)) for base in combinations(range(n), 3)]
    return Graph.from_vertices(verts, "generated-nagy", (("n", n),))


@dataclass(frozen=True, order=True)
class SignplaceConfig:
    """``d`` places carrying both signs and ``s`` places carrying only ``+``."""

    d: int
    s: int

    def __post_init__(self):
        if self.d < 0 or self.s < 0:
            raise ValueError("d and s must be non-negative")

    @property
    def m(self) -> int:
        return 2 * self.d + self.s

    @property
    def l(self) -> int:
        return self.d + self.s

    def signplaces(self) -> frozenset[Signplace]:
        sps = {Signplace(p, sgn) for p in range(self.d) for sgn in (PLUS, MINUS)}
        sps |= {Signplace(p, PLUS) for p in range(self.d, self.l)}
        return frozenset(sps)


def signplace_vertices(signplaces: Iterable[Signplace], dim: int) -> list[Vertex]:
    """Vertices of G_dim all of whose signplaces belong to ``signplaces``."""
    allowed = {}
    for sp in signplaces:
        if sp.place >= dim:
            raise ValueError(f"signplace {sp} outside dimension {dim}")
        allowed.setdefault(sp.place, []).append(sp.sign)
    places = sorted(allowed)
    out = []
    for base in combinations(places, 3):
        for signs in SIGN_PATTERNS:
            if all(s in allowed[p] for p, s in zip(base, signs)):
                out.append(Vertex.from_signed_places(dim, zip(base, signs)))
    return out


def build_signplaces(signplaces: Iterable[Signplace], dim: int) -> Graph:
    sps = frozenset(signplaces)
    key = tuple(sorted((sp.place, sp.sign) for sp in sps))
    return Graph.from_vertices(signplace_vertices(sps, dim), "generated-config",
                               (("dim", dim), ("signplaces", key)))


def build_config(cfg: SignplaceConfig) -> Graph:
    dim = max(cfg.l, 1)
    return Graph.from_vertices(signplace_vertices(cfg.signplaces(), dim), "generated-config",
                               (("d", cfg.d), ("s", cfg.s)))


def complement(g: Graph) -> Graph:
    adj = ~g.matrix()
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj, origin="imported", params=g.params)


class DimacsError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def from_dimacs(text: str) -> Graph:
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if order is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                order, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"non-integer header fields in {line!r}", lineno) from None
            if order < 0 or declared < 0:
                raise DimacsError("negative counts in header", lineno)
        elif parts[0] == "e":
            if order is None:
                raise DimacsError("edge before problem line", lineno)
            if len(parts) != 3:
                raise DimacsError(f"malformed edge {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= order and 1 <= v <= order):
                raise DimacsError(f"vertex index out of range in {line!r}", lineno)
            if u == v:
                raise DimacsError(f"self-loop in {line!r}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"unknown line type {parts[0]!r}", lineno)
    if order is None:
        raise DimacsError("missing problem line")
    return Graph.from_edges(order, edges)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    edges = list(g.edges())
    lines = []
    if comment:
        lines += [f"c {c}" for c in comment.splitlines()]
    lines.append(f"p edge {g.order} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _base_rank(base: tuple[int, int, int], n: int) -> int:
    # lexicographic rank of a sorted 3-subset of range(n), matching itertools.combinations
    rank = 0
    prev = -1
    for k, x in enumerate(base):
        for y in range(prev + 1, x):
            rank += comb(n - y - 1, 2 - k)
        prev = x
    return rank


def gn_index(v: Vertex) -> int:
    """Index of ``v`` in ``build_gn(v.dim)``."""
    return 8 * _base_rank(v.base, v.dim) + SIGN_PATTERNS.index(v.signs)


def induced_gn(n: int, vertices) -> Graph:
    """The subgraph of G_n induced by ``vertices``, without materialising G_n."""
    verts = list(vertices)
    for v in verts:
        if v.dim != n:
            raise ValueError(f"vertex {v} has dimension {v.dim}, expected {n}")
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertices")
    return Graph.from_vertices(verts, "generated-Gn", (("n", n), ("induced", len(verts))))
