"""Immutable simple-graph core: construction, vertex deletion, exact distances.

Vertices are the integers 0..n-1. Adjacency is a tuple of sorted neighbor
tuples, so graphs hash and compare by value and are safe to share across
threads. Distances are exact integers; unreachable pairs carry the
sentinel ``UNREACHABLE`` (-1), never a large stand-in value.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

import numpy as np

from . import kernels
from .errors import (
    DuplicateEdgeError,
    OutOfRangeError,
    SelfLoopError,
)

UNREACHABLE = -1


class Graph:
    """Immutable simple undirected graph with optional vertex role labels."""

    __slots__ = ("n", "adjacency", "_labels", "_csr", "_dist", "_profile", "_hash")

    def __init__(
        self,
        n: int,
        adjacency: Iterable[Iterable[int]],
        labels: Optional[Mapping[int, str]] = None,
        _validate: bool = True,
    ):
        self.n = int(n)
        self.adjacency = tuple(tuple(row) for row in adjacency)
        self._labels = dict(labels) if labels else {}
        self._csr = None
        self._dist = None
        self._profile = None
        self._hash = None
        if _validate:
            self._check_invariants()

    def _check_invariants(self):
        if self.n < 0:
            raise ValueError("negative order")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match order")
        for v, row in enumerate(self.adjacency):
            prev = -1
            for u in row:
                if not 0 <= u < self.n:
                    raise OutOfRangeError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise SelfLoopError(f"vertex {v} lists itself as a neighbor")
                if u <= prev:
                    raise ValueError(f"neighbors of vertex {v} not sorted/unique")
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric edge ({v}, {u})")
                prev = u
        for v, name in self._labels.items():
            if not 0 <= v < self.n:
                raise OutOfRangeError(f"label key {v} out of range")
        if len(set(self._labels.values())) != len(self._labels):
            raise ValueError("duplicate label strings")

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.adjacency == other.adjacency
            and self._labels == other._labels
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adjacency, frozenset(self._labels.items())))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- basic queries ------------------------------------------------------

    @property
    def labels(self) -> Mapping[int, str]:
        return MappingProxyType(self._labels)

    def label(self, v: int) -> Optional[str]:
        return self._labels.get(v)

    def vertex_by_label(self, name: str) -> int:
        for v, lab in self._labels.items():
            if lab == name:
                return v
        raise KeyError(name)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple]:
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v < u:
                    yield (v, u)

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise OutOfRangeError(f"vertex {v} out of range [0, {self.n})")

    # -- kernel plumbing ----------------------------------------------------

    def csr(self):
        """CSR adjacency (indptr, indices) as int64 arrays, cached."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, np.int64)
            for v, row in enumerate(self.adjacency):
                indptr[v + 1] = indptr[v] + len(row)
            indices = np.fromiter(
                (u for row in self.adjacency for u in row),
                np.int64,
                count=int(indptr[-1]),
            )
            self._csr = (indptr, indices)
        return self._csr


def from_edge_list(
    n: int,
    edges: Iterable[tuple],
    labels: Optional[Mapping[int, str]] = None,
) -> Graph:
    """Build a graph on vertices 0..n-1 from an undirected edge list.

    Rejects loops, endpoints outside [0, n), and repeated edges (in either
    orientation), keeping the result a simple graph.
    """
    n = int(n)
    if n < 0:
        raise ValueError("negative order")
    seen = set()
    rows = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"edge ({u}, {v}) is a loop")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} supplied twice")
        seen.add(key)
        rows[u].append(v)
        rows[v].append(u)
    return Graph(n, (sorted(r) for r in rows), labels)


def remove_vertex(g: Graph, v: int) -> tuple:
    """Delete vertex v, reindexing the rest in order.

    Returns ``(graph, index_map)`` where ``index_map`` sends each surviving
    old vertex id to its new id; labels ride along through the map.
    """
    g._check_vertex(v)
    rows = []
    for u, row in enumerate(g.adjacency):
        if u == v:
            continue
        rows.append(tuple(w if w < v else w - 1 for w in row if w != v))
    index_map = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    labels = {index_map[u]: lab for u, lab in g.labels.items() if u != v}
    return Graph(g.n - 1, rows, labels, _validate=False), index_map


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Exact hop distances from ``source``; UNREACHABLE (-1) where there is no path."""
    g._check_vertex(source)
    indptr, indices = g.csr()
    return kernels.bfs_row(indptr, indices, g.n, source)


class DistanceMatrix:
    """Exact all-pairs shortest-path distances of a graph.

    ``matrix`` is a read-only (n, n) int64 array; entry -1 (``UNREACHABLE``)
    marks pairs with no connecting path.
    """

    __slots__ = ("n", "matrix")

    def __init__(self, matrix: np.ndarray):
        matrix = np.asarray(matrix, np.int64)
        matrix.setflags(write=False)
        self.n = matrix.shape[0]
        self.matrix = matrix

    def __getitem__(self, pair) -> int:
        u, w = pair
        return int(self.matrix[u, w])

    def row(self, v: int) -> np.ndarray:
        return self.matrix[v]

    def all_finite(self) -> bool:
        if self.n == 0:
            return True
        return bool((self.matrix >= 0).all())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """All-pairs BFS distances, cached on the (immutable) graph."""
    if g._dist is None:
        if g.n == 0:
            g._dist = DistanceMatrix(np.zeros((0, 0), np.int64))
        else:
            indptr, indices = g.csr()
            g._dist = DistanceMatrix(kernels.apsp(indptr, indices, g.n))
    return g._dist


def is_connected(g: Graph) -> bool:
    """True when one BFS from vertex 0 reaches everything; K0 and K1 count."""
    if g.n <= 1:
        return True
    return bool((bfs_distances(g, 0) >= 0).all())
