"""Wiener index, vertex transmission, and vertex-deletion invariants.

The central quantity is the per-vertex Wiener delta: how much the sum of
all pairwise distances changes when one vertex is deleted. A vertex whose
deletion keeps the graph connected and leaves the Wiener index unchanged
is called *good*. Deletion deltas are only defined while the remainder is
connected; here that case is an explicit ``None``, never a number, so a
disconnect can never be confused with an integer delta.

All proportions are exact ``fractions.Fraction`` values in lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .errors import (
    DisconnectedAfterRemovalError,
    DisconnectedGraphError,
    InvalidVertexTripleError,
)
from .graph import DistanceMatrix, Graph, all_pairs_distances


@dataclass(frozen=True)
class VertexReport:
    """Per-vertex slice of an analysis: transmission and deletion delta.

    ``delta`` is None when removing the vertex disconnects the graph.
    """

    vertex: int
    label: Optional[str]
    transmission: int
    delta: Optional[int]

    @property
    def good(self) -> bool:
        return self.delta == 0


@dataclass(frozen=True)
class AnalysisReport:
    """Full good-vertex analysis of one connected graph."""

    n: int
    wiener: int
    per_vertex: tuple
    good_count: int
    good_proportion: Fraction

    def to_json_dict(self) -> dict:
        vertices = []
        for rec in self.per_vertex:
            entry = {
                "id": rec.vertex,
                "label": rec.label,
                "transmission": rec.transmission,
            }
            if rec.delta is None:
                entry["disconnects"] = True
            else:
                entry["delta"] = rec.delta
            vertices.append(entry)
        return {
            "n": self.n,
            "wiener": self.wiener,
            "vertices": vertices,
            "good_count": self.good_count,
            "good_proportion": {
                "num": self.good_proportion.numerator,
                "den": self.good_proportion.denominator,
            },
        }


@dataclass(frozen=True)
class DeltaSpectrum:
    """Histogram of deletion deltas plus the count of disconnecting vertices."""

    counts: dict
    disconnecting_count: int

    @property
    def total(self) -> int:
        return sum(self.counts.values()) + self.disconnecting_count


def _distances(g: Graph) -> DistanceMatrix:
    dist = all_pairs_distances(g)
    if not dist.all_finite():
        raise DisconnectedGraphError("graph is not connected")
    return dist


def _profile(g: Graph):
    """(transmissions, deltas, disconnect flags) for every vertex, cached."""
    if g._profile is None:
        _distances(g)
        if g.n == 1:
            # deleting the only vertex leaves the empty graph
            g._profile = (
                np.zeros(1, np.int64),
                np.zeros(1, np.int64),
                np.ones(1, np.uint8),
            )
        else:
            indptr, indices = g.csr()
            g._profile = kernels.deletion_profile(indptr, indices, g.n)
    return g._profile


def wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over all unordered vertex pairs."""
    dist = _distances(g)
    return int(dist.matrix.sum()) // 2


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from v to every other vertex."""
    g._check_vertex(v)
    dist = _distances(g)
    return int(dist.row(v).sum())


def delta_v(g: Graph, v: int) -> Optional[int]:
    """Wiener change W(G) - W(G-v), or None when G-v is disconnected.

    A single-vertex graph also yields None: deleting the vertex leaves the
    empty graph, which has no Wiener index.
    """
    g._check_vertex(v)
    t, delta, disc = _profile(g)
    return None if disc[v] else int(delta[v])


def delta_pair(g: Graph, v: int, u: int, w: int) -> int:
    """Distance change d_G(u, w) - d_{G-v}(u, w) caused by deleting v.

    Never positive: deleting a vertex cannot shorten a path. Requires g and
    G-v connected and three distinct vertices.
    """
    for x in (v, u, w):
        g._check_vertex(x)
    if u == w or u == v or w == v:
        raise InvalidVertexTripleError(f"need distinct vertices, got v={v} u={u} w={w}")
    dist = _distances(g)
    indptr, indices = g.csr()
    dv = kernels.apsp_excluding(indptr, indices, g.n, v)
    if dv[u, w] < 0:
        raise DisconnectedAfterRemovalError(f"removing vertex {v} disconnects the graph")
    return dist[u, w] - int(dv[u, w])


def delta_decomposition(g: Graph, v: int) -> tuple:
    """Split the deletion delta into transmission plus half the pair-delta sum.

    Returns ``(t, half_delta_sum, delta)`` where ``t`` is the transmission of
    v, ``half_delta_sum`` is half the sum of d_G(u,w) - d_{G-v}(u,w) over
    ordered pairs u, w != v (an integer-valued Fraction), and
    ``delta = t + half_delta_sum``. The pair sum is accumulated pairwise, so
    comparing ``delta`` against ``delta_v`` exercises the identity rather
    than restating it.
    """
    g._check_vertex(v)
    dist = _distances(g)
    if g.n == 1:
        raise DisconnectedAfterRemovalError("deleting the only vertex leaves nothing")
    indptr, indices = g.csr()
    dv = kernels.apsp_excluding(indptr, indices, g.n, v)
    keep = np.ones(g.n, dtype=bool)
    keep[v] = False
    block = dv[np.ix_(keep, keep)]
    if (block < 0).any():
        raise DisconnectedAfterRemovalError(f"removing vertex {v} disconnects the graph")
    t = int(dist.row(v).sum())
    ordered_sum = int((dist.matrix[np.ix_(keep, keep)] - block).sum())
    half = Fraction(ordered_sum, 2)
    assert half.denominator == 1, "ordered pair-delta sum must be even"
    return t, half, t + int(half)


def good_vertices(g: Graph) -> set:
    """Vertices whose deletion keeps the graph connected and W unchanged."""
    t, delta, disc = _profile(g)
    return {v for v in range(g.n) if not disc[v] and delta[v] == 0}


def analyze(g: Graph) -> AnalysisReport:
    """Full per-vertex transmission / deletion-delta report."""
    if g.n == 0:
        return AnalysisReport(0, 0, (), 0, Fraction(0, 1))
    t, delta, disc = _profile(g)
    per_vertex = tuple(
        VertexReport(
            vertex=v,
            label=g.label(v),
            transmission=int(t[v]),
            delta=None if disc[v] else int(delta[v]),
        )
        for v in range(g.n)
    )
    wiener = int(t.sum()) // 2
    good_count = sum(1 for rec in per_vertex if rec.good)
    return AnalysisReport(
        n=g.n,
        wiener=wiener,
        per_vertex=per_vertex,
        good_count=good_count,
        good_proportion=Fraction(good_count, g.n),
    )


def delta_spectrum(g: Graph) -> DeltaSpectrum:
    """Histogram {delta value: vertex count} plus the disconnecting count."""
    t, delta, disc = _profile(g)
    counts: dict = {}
    disconnecting = 0
    for v in range(g.n):
        if disc[v]:
            disconnecting += 1
        else:
            z = int(delta[v])
            counts[z] = counts.get(z, 0) + 1
    return DeltaSpectrum(counts=counts, disconnecting_count=disconnecting)
