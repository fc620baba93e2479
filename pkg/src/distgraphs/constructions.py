"""Extremal independent sets of G_n: quads, cobras, the double cobra.

A *quad* is 4 bases on 4 places, each with the four even sign patterns.
A *cobra* is three snakes sharing a tail whose head pairs pairwise
intersect, plus the 4 even-pattern vectors on the head base; on ``t``
signplaces it has ``3t - 14`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from .build import induced_gn
from .formulas import c_const
from .model import MINUS, PLUS, Graph, Vertex, dot
from .solver import max_independent_set, verify_independent

EVEN_PATTERNS = ((PLUS, PLUS, PLUS), (PLUS, MINUS, MINUS), (MINUS, PLUS, MINUS), (MINUS, MINUS, PLUS))
KINDS = ("quad-packing", "snake", "cobra", "double-cobra", "nagy-set")


@dataclass(frozen=True)
class Construction:
    kind: str
    n: int
    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown construction kind {self.kind!r}")

    def __len__(self):
        return len(self.vertices)

    def signplaces(self) -> set[tuple[int, int]]:
        return {(sp.place, sp.sign) for v in self.vertices for sp in v.signplaces()}

    def graph(self) -> Graph:
        return induced_gn(self.n, self.vertices)

    def is_independent(self) -> bool:
        g = self.graph()
        return verify_independent(g, range(g.order))

    def to_text(self) -> str:
        lines = [f"{self.kind} {self.n} {len(self.vertices)}"]
        lines += [str(v) for v in self.vertices]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Construction":
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise ValueError("empty construction file")
        head = rows[0].split()
        if len(head) != 3:
            raise ValueError(f"bad header {rows[0]!r}; expected 'kind n size'")
        kind, n, size = head[0], int(head[1]), int(head[2])
        verts = []
        for ln in rows[1:]:
            places = []
            for tok in ln.split():
                if tok[0] not in "+-" or not tok[1:].isdigit():
                    raise ValueError(f"bad signed place {tok!r}")
                places.append((int(tok[1:]) - 1, PLUS if tok[0] == "+" else MINUS))
            verts.append(Vertex.from_signed_places(n, places))
        if len(verts) != size:
            raise ValueError(f"header says {size} vertices, found {len(verts)}")
        return cls(kind, n, tuple(verts))


def _base_vectors(n, base, patterns=EVEN_PATTERNS):
    return [Vertex.from_signed_places(n, zip(base, p)) for p in patterns]


def quad(n: int, places: Sequence[int]) -> list[Vertex]:
    """The 16 vertices of a quad on 4 places."""
    if len(set(places)) != 4:
        raise ValueError("a quad needs 4 distinct places")
    out = []
    for base in combinations(sorted(places), 3):
        out += _base_vectors(n, base)
    return out


def quad_packing(n: int) -> Construction:
    if n < 3:
        raise ValueError("quad packing needs n >= 3")
    verts = []
    for b in range(n // 4):
        verts += quad(n, range(4 * b, 4 * b + 4))
    if n % 4 == 3:
        verts += _base_vectors(n, (n - 3, n - 2, n - 1))
    c = Construction("quad-packing", n, tuple(verts))
    assert len(c) == 4 * n - 4 * c_const(n)
    return c


def nagy_set(n: int) -> Construction:
    """All-positive analogue: 4 weight-3 supports per block of 4 places."""
    if n < 3:
        raise ValueError("nagy set needs n >= 3")
    verts = []
    for b in range(n // 4):
        for base in combinations(range(4 * b, 4 * b + 4), 3):
            verts.append(Vertex.from_signed_places(n, ((p, PLUS) for p in base)))
    if n % 4 == 3:
        verts.append(Vertex.from_signed_places(n, ((p, PLUS) for p in range(n - 3, n))))
    return Construction("nagy-set", n, tuple(verts))


# head pair -> sign pattern on that pair, as in the displayed lines
_SNAKE_HEADS = ((0, 1, (PLUS, MINUS)), (1, 2, (PLUS, MINUS)), (0, 2, (MINUS, PLUS)))


def snake(n: int, head: tuple[int, int], head_signs: tuple[int, int],
          tail_places: Sequence[int], tail_sign: int = PLUS) -> list[Vertex]:
    return [
        Vertex.from_signed_places(n, [(head[0], head_signs[0]), (head[1], head_signs[1]), (x, tail_sign)])
        for x in tail_places
    ]


def cobra(n: int, head_places: Sequence[int] | None = None,
          tail_places: Sequence[int] | None = None, tail_sign: int = PLUS) -> Construction:
    """Three snakes on a common tail plus the 4 head vectors.

    Without explicit places this is the first-three-places layout with the
    tail on places ``3..n-4`` (0-based), which needs ``n >= 7``.
    """
    if head_places is None and tail_places is None:
        if n < 7:
            raise ValueError("the default cobra layout needs n >= 7")
        head_places, tail_places = (0, 1, 2), range(3, n - 3)
    elif head_places is None or tail_places is None:
        raise ValueError("give both head_places and tail_places, or neither")
    head = tuple(head_places)
    tail = list(tail_places)
    if len(set(head)) != 3:
        raise ValueError("a cobra head needs 3 distinct places")
    if len(set(tail)) != len(tail) or set(head) & set(tail):
        raise ValueError("head and tail places must be disjoint and distinct")
    if any(not 0 <= p < n for p in (*head, *tail)):
        raise ValueError(f"places must lie in range({n})")
    if tail_sign not in (PLUS, MINUS):
        raise ValueError("tail sign must be +1 or -1")
    verts = []
    for a, b, signs in _SNAKE_HEADS:
        verts += snake(n, (head[a], head[b]), signs, tail, tail_sign)
    verts += _base_vectors(n, head)
    return Construction("cobra", n, tuple(verts))


def double_cobra(n: int) -> Construction:
    """Cobra on the first three places plus its mirror on the last three with a -1 tail."""
    if n < 7:
        raise ValueError("double cobra needs n >= 7")
    tail = range(3, n - 3)
    first = cobra(n, (0, 1, 2), tail, PLUS)
    second = cobra(n, (n - 3, n - 2, n - 1), tail, MINUS)
    c = Construction("double-cobra", n, first.vertices + second.vertices)
    assert len(c) == 6 * n - 28
    return c


def spectrum(c: Construction) -> set[int]:
    """All scalar products over unordered pairs of distinct vertices."""
    if len(c.vertices) < 2:
        raise ValueError("spectrum needs at least two vertices")
    x = np.array([v.coords() for v in c.vertices], dtype=np.int16)
    prods = x @ x.T
    iu = np.triu_indices(len(c.vertices), 1)
    return set(int(p) for p in np.unique(prods[iu]))


class Removal(NamedTuple):
    count: int | None
    removed: frozenset[int]
    complete: bool
    bounds: tuple[int, int]


def min_removal_for_product(c: Construction, p: int, *, time_limit: float | None = None) -> Removal:
    """Fewest vertices to delete so that no remaining pair has scalar product ``p``.

    Solved exactly as a minimum vertex cover of the product-``p`` conflict
    graph (its complement is a maximum independent set).  ``removed`` holds
    indices into ``c.vertices``.
    """
    verts = c.vertices
    k = len(verts)
    adj = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            if dot(verts[i], verts[j]) == p:
                adj[i, j] = adj[j, i] = True
    if not adj.any():
        return Removal(0, frozenset(), True, (0, 0))
    rep = max_independent_set(Graph.from_matrix(adj), time_limit=time_limit)
    removed = frozenset(range(k)) - rep.witness.members
    bounds = (k - rep.upper, k - rep.lower)
    return Removal(len(removed) if rep.complete else None, removed, rep.complete, bounds)
