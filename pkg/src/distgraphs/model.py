"""Vertices as signed supports, scalar products, signplaces and the graph container."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

PLUS = 1
MINUS = -1


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, order=False)
class Vertex:
    """A vector with exactly three nonzero coordinates, each +1 or -1.

    ``pos`` and ``neg`` are bit masks over coordinate indices ``0..dim-1``.
    """

    dim: int
    pos: int
    neg: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        if self.pos < 0 or self.neg < 0:
            raise ValueError("support masks must be non-negative")
        if self.pos & self.neg:
            raise ValueError("a coordinate cannot be both +1 and -1")
        if (self.pos | self.neg) >> self.dim:
            raise ValueError(f"support exceeds dimension {self.dim}")
        if _popcount(self.pos) + _popcount(self.neg) != 3:
            raise ValueError("a vertex needs exactly three nonzero coordinates")

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "Vertex":
        pos = neg = 0
        for i, c in enumerate(coords):
            if c == 1:
                pos |= 1 << i
            elif c == -1:
                neg |= 1 << i
            elif c != 0:
                raise ValueError(f"coordinate {c!r} not in {{-1, 0, 1}}")
        return cls(len(coords), pos, neg)

    @classmethod
    def from_signed_places(cls, dim: int, places: Iterable[tuple[int, int]]) -> "Vertex":
        """Build from ``(place, sign)`` pairs, places 0-based."""
        pos = neg = 0
        for place, sign in places:
            if sign == PLUS:
                pos |= 1 << place
            elif sign == MINUS:
                neg |= 1 << place
            else:
                raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        return cls(dim, pos, neg)

    @property
    def base(self) -> tuple[int, ...]:
        """Sorted nonzero places."""
        m = self.pos | self.neg
        return tuple(i for i in range(self.dim) if m >> i & 1)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(PLUS if self.pos >> i & 1 else MINUS for i in self.base)

    def signplaces(self) -> tuple["Signplace", ...]:
        return tuple(Signplace(p, s) for p, s in zip(self.base, self.signs))

    def coords(self) -> tuple[int, ...]:
        return tuple(
            PLUS if self.pos >> i & 1 else MINUS if self.neg >> i & 1 else 0
            for i in range(self.dim)
        )

    def sort_key(self) -> tuple:
        # +1 sorts before -1 inside a sign pattern
        return (self.base, tuple(0 if s == PLUS else 1 for s in self.signs))

    def __str__(self):
        return " ".join(f"{'+' if s == PLUS else '-'}{p + 1}" for p, s in zip(self.base, self.signs))


@dataclass(frozen=True)
class Signplace:
    place: int
    sign: int

    def __post_init__(self):
        if self.place < 0:
            raise ValueError("place index must be non-negative")
        if self.sign not in (PLUS, MINUS):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def __str__(self):
        return f"{self.place}{'+' if self.sign == PLUS else '-'}"


def dot(v: Vertex, w: Vertex) -> int:
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    return (
        _popcount(v.pos & w.pos)
        + _popcount(v.neg & w.neg)
        - _popcount(v.pos & w.neg)
        - _popcount(v.neg & w.pos)
    )


def is_edge(v: Vertex, w: Vertex) -> bool:
    return dot(v, w) == 1


def degree_of_signplace(vertices: Iterable[Vertex], sp: Signplace) -> int:
    """Number of vertices carrying ``sp.sign`` at ``sp.place``."""
    bit = 1 << sp.place
    count = 0
    for v in vertices:
        if sp.place >= v.dim:
            raise ValueError(f"signplace {sp} outside dimension {v.dim}")
        mask = v.pos if sp.sign == PLUS else v.neg
        count += bool(mask & bit)
    return count


def words_for(order: int) -> int:
    return max(1, (order + 63) // 64)


def product_one_adjacency(vertices: Sequence[Vertex]) -> np.ndarray:
    """Boolean adjacency matrix of the scalar-product-1 relation."""
    k = len(vertices)
    if k == 0:
        return np.zeros((0, 0), dtype=bool)
    dim = vertices[0].dim
    x = np.zeros((k, dim), dtype=np.int8)
    for i, v in enumerate(vertices):
        if v.dim != dim:
            raise ValueError("all vertices must share one dimension")
        x[i] = v.coords()
    prods = x.astype(np.int16) @ x.T.astype(np.int16)
    adj = prods == 1
    np.fill_diagonal(adj, False)
    return adj


def pack_rows(adj: np.ndarray) -> np.ndarray:
    """Pack a square boolean matrix into little-endian uint64 bit rows."""
    n = adj.shape[0]
    w = words_for(n)
    padded = np.zeros((n, w * 64), dtype=bool)
    padded[:, :n] = adj
    bits = np.packbits(padded.reshape(n, w, 64), axis=2, bitorder="little")
    return np.ascontiguousarray(bits).view(np.uint64).reshape(n, w)


def unpack_rows(rows: np.ndarray, order: int) -> np.ndarray:
    if order == 0:
        return np.zeros((0, 0), dtype=bool)
    as_bytes = np.ascontiguousarray(rows).view(np.uint8).reshape(order, -1)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return bits[:, :order].astype(bool)


ORIGINS = ("generated-Gn", "generated-nagy", "generated-config", "imported")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable dense graph with one packed bit row per vertex.

    Build instances with :meth:`from_matrix`, :meth:`from_edges` or
    :meth:`from_vertices`; the raw constructor trusts its input.
    """

    order: int
    rows: np.ndarray
    labels: tuple[Vertex, ...] | None = None
    origin: str = "imported"
    params: tuple = field(default=())

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise ValueError(f"unknown origin {self.origin!r}")
        self.rows.flags.writeable = False

    @classmethod
    def from_matrix(cls, adj, labels=None, origin="imported", params=()) -> "Graph":
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != adj.shape[0]:
                raise ValueError("labels must align with vertices")
        return cls(adj.shape[0], pack_rows(adj), labels, origin, tuple(params))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u, v] = adj[v, u] = True
        return cls.from_matrix(adj)

    @classmethod
    def from_vertices(cls, vertices: Sequence[Vertex], origin: str, params=()) -> "Graph":
        return cls.from_matrix(product_one_adjacency(vertices), vertices, origin, params)

    def matrix(self) -> np.ndarray:
        return unpack_rows(self.rows, self.order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(int(self.rows[u, v >> 6]) >> (v & 63) & 1)

    def neighbors(self, u: int) -> list[int]:
        return np.flatnonzero(self.matrix()[u]).tolist() if self.order else []

    def degrees(self) -> np.ndarray:
        return self.matrix().sum(axis=1)

    @property
    def n_edges(self) -> int:
        return int(self.matrix().sum()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        adj = self.matrix()
        for u, v in zip(*np.nonzero(np.triu(adj, 1))):
            yield int(u), int(v)

    def induced(self, indices: Sequence[int]) -> "Graph":
        idx = list(indices)
        adj = self.matrix()[np.ix_(idx, idx)] if idx else np.zeros((0, 0), bool)
        labels = tuple(self.labels[i] for i in idx) if self.labels is not None else None
        return Graph.from_matrix(adj, labels, self.origin, self.params)

    @property
    def graph_id(self) -> str:
        h = hashlib.sha1(str(self.order).encode())
        h.update(np.ascontiguousarray(self.rows).tobytes())
        return h.hexdigest()[:16]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash(self.graph_id)

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.n_edges}, origin={self.origin!r})"


@dataclass(frozen=True)
class IndependentSet:
    graph_id: str
    members: frozenset[int]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))
