"""Generators for the graph families with prescribed good-vertex structure.

Two parameterized families are built here, plus the standard graphs used
around them:

* the *bunch* B(k): a six-vertex path w0..w5 with k parallel five-vertex
  spoke paths attached at w0 and w5, so every spoke closes an 11-cycle with
  the w-path. Exactly the 2k spoke endpoints are good, a proportion of
  2k/(5k+6).

* the *lily* L(k, m): m blocks of k internally disjoint three-edge paths
  from a hub u0 to a per-block sink v_i, a complete m-partite graph on the
  first-layer vertices, and a calibrated tail (a path u1..ud plus one
  pendant at u_t) sized so that deleting any first-layer vertex changes the
  Wiener index by exactly z (z = 0: the km first-layer vertices are good, a
  proportion of km/(2km+m+2+d)).

Every generated vertex carries a role label ("w0", "v_2_1_3", "u_prime", ...)
so callers can address construction roles without depending on index order.
The index order itself is fixed and documented per builder for stable
graph6 output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, List, Tuple

from .analysis import analyze, delta_v
from .errors import InfeasibleError, InvalidParamsError, TooSmallError
from .formats import emit_graph6
from .graph import Graph, from_edge_list


@dataclass(frozen=True)
class BunchParams:
    """Spoke count k >= 2 for the bunch family B(k)."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidParamsError(f"bunch requires k >= 2, got k = {self.k}")

    @property
    def order(self) -> int:
        return 5 * self.k + 6


def _lily_min_k(m: int) -> int:
    # smallest integer k with k >= (m-3)/(m-6)
    return -((m - 3) // -(m - 6))


@dataclass(frozen=True)
class LilyParams:
    """Block size k, block count m >= 7, and target delta z for L(k, m)."""

    k: int
    m: int
    z: int = 0

    def __post_init__(self):
        if self.m < 7:
            raise InvalidParamsError(f"lily requires m >= 7, got m = {self.m}")
        kmin = _lily_min_k(self.m)
        if self.k < kmin:
            raise InvalidParamsError(
                f"k >= {kmin} required for m = {self.m}, got k = {self.k}"
            )
        if self.tail_target < 0:
            raise InfeasibleError(
                f"no tail reaches target {self.tail_target} for "
                f"(k={self.k}, m={self.m}, z={self.z}); increase k"
            )

    @property
    def tail_target(self) -> int:
        """Required hub-transmission surplus of the tail: km-6k-m+3+z."""
        return self.k * self.m - 6 * self.k - self.m + 3 + self.z


@dataclass(frozen=True)
class TailParams:
    """Tail path length d and pendant position t solving the target equation.

    The tail is a path u0..ud plus one pendant neighbor of u_t, chosen so
    its vertex count and transmission at u0 satisfy
    ``(d(d+1)/2 + t + 1) - (d + 2) = N``. d is pinned by the bracketing
    inequality (d+1)(d-2)/2 <= N < (d+2)(d-1)/2 and t follows.
    """

    d: int
    t: int
    target: int

    def __post_init__(self):
        n = self.target
        if not (self.d + 1) * (self.d - 2) // 2 <= n < (self.d + 2) * (self.d - 1) // 2:
            raise InvalidParamsError(f"d = {self.d} violates the bracket for N = {n}")
        if self.t != n - (self.d + 1) * (self.d - 2) // 2:
            raise InvalidParamsError(f"t = {self.t} inconsistent with N = {n}")
        if not 0 <= self.t <= self.d:
            raise InvalidParamsError(f"pendant index t = {self.t} outside [0, {self.d}]")


def lily_tail_params(p: LilyParams) -> TailParams:
    """Tail (d, t) for the lily parameters, from the exact integer square root.

    Floating-point square roots could land on the wrong side of the bracket
    near perfect squares, so d comes from ``isqrt`` and is then nudged by a
    correction loop that re-checks both bracket bounds.
    """
    n = p.tail_target
    if n < 0:
        raise InfeasibleError(f"negative tail target {n}")
    d = (1 + isqrt(8 * n + 9)) // 2
    while (d + 1) * (d - 2) > 2 * n:
        d -= 1
    while 2 * n >= (d + 2) * (d - 1):
        d += 1
    t = n - (d + 1) * (d - 2) // 2
    return TailParams(d=d, t=t, target=n)


def build_path(n: int) -> Graph:
    """Path on n >= 1 vertices (0-1-...-(n-1)), labeled v0..v{n-1}."""
    if n < 1:
        raise TooSmallError(f"path needs n >= 1, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)]
    return from_edge_list(n, edges, {i: f"v{i}" for i in range(n)})


def build_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices, labeled v0..v{n-1}."""
    if n < 3:
        raise TooSmallError(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return from_edge_list(n, edges, {i: f"v{i}" for i in range(n)})


def build_complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices, labeled v0..v{n-1}."""
    if n < 1:
        raise TooSmallError(f"complete graph needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return from_edge_list(n, edges, {i: f"v{i}" for i in range(n)})


def build_bunch(k) -> Graph:
    """Bunch B(k): w-path 0..5, then spoke i at indices 6+5(i-1)..10+5(i-1).

    Order 5k+6, size 6k+5. Labels: "w0".."w5" and "v_{i}_{j}" for spoke i,
    position j in 1..5.
    """
    p = k if isinstance(k, BunchParams) else BunchParams(k)
    k = p.k
    labels = {j: f"w{j}" for j in range(6)}
    edges = [(j, j + 1) for j in range(5)]
    for i in range(1, k + 1):
        base = 6 + 5 * (i - 1)
        for j in range(1, 6):
            labels[base + j - 1] = f"v_{i}_{j}"
        edges.extend((base + j, base + j + 1) for j in range(4))
        edges.append((0, base))       # w0 - v_i_1
        edges.append((5, base + 4))   # w5 - v_i_5
    return from_edge_list(p.order, edges, labels)


def _build_lily(p: LilyParams) -> Graph:
    tail = lily_tail_params(p)
    k, m, d, t = p.k, p.m, tail.d, tail.t
    order = 2 * k * m + m + 2 + d
    labels = {0: "u0"}
    edges: List[Tuple[int, int]] = []
    # index layout: u0, then per block i: first layer (k), second layer (k),
    # sink; then tail u1..ud; pendant last
    first_layer: List[List[int]] = []
    idx = 1
    for i in range(1, m + 1):
        first = list(range(idx, idx + k))
        second = list(range(idx + k, idx + 2 * k))
        sink = idx + 2 * k
        idx = sink + 1
        for j in range(k):
            labels[first[j]] = f"v_{i}_1_{j + 1}"
            labels[second[j]] = f"v_{i}_2_{j + 1}"
            edges.append((0, first[j]))
            edges.append((first[j], second[j]))
            edges.append((second[j], sink))
        labels[sink] = f"v_{i}"
        first_layer.append(first)
    for a in range(m):
        for b in range(a + 1, m):
            edges.extend((x, y) for x in first_layer[a] for y in first_layer[b])
    tail_ids = [0] + list(range(idx, idx + d))
    for s in range(1, d + 1):
        labels[tail_ids[s]] = f"u{s}"
        edges.append((tail_ids[s - 1], tail_ids[s]))
    pendant = idx + d
    labels[pendant] = "u_prime"
    edges.append((tail_ids[t], pendant))
    assert pendant + 1 == order
    return from_edge_list(order, edges, labels)


def build_lily(k: int, m: int) -> Graph:
    """Lily L(k, m) with a tail calibrated for delta 0 on the first layer."""
    return _build_lily(LilyParams(k, m, 0))


def build_lily_general(k: int, m: int, z: int) -> Graph:
    """Lily variant whose first-layer deletion deltas all equal z."""
    return _build_lily(LilyParams(k, m, z))


def build_chorded_cycle_12() -> Graph:
    """12-cycle v1..v12 with chords (v1,v3), (v4,v6), (v7,v9), (v10,v12).

    Eight vertices of degree 3 and four of degree 2; the degree-3 vertices
    are exactly the good ones, a proportion of 2/3.
    """
    edges = [(i, (i + 1) % 12) for i in range(12)]
    edges += [(0, 2), (3, 5), (6, 8), (9, 11)]
    return from_edge_list(12, edges, {i: f"v{i + 1}" for i in range(12)})


@dataclass(frozen=True)
class VerificationResult:
    """One verified construction instance with its failure messages, if any."""

    name: str
    params: tuple
    passed: bool
    failures: tuple
    graph6: str
    order: int
    matched_count: int
    proportion: Fraction

    @property
    def certificate(self) -> str:
        return self.graph6


def _first_layer_labels(k: int, m: int) -> set:
    return {f"v_{i}_1_{j}" for i in range(1, m + 1) for j in range(1, k + 1)}


def verify_bunch_family(k_range: Iterable[int]) -> List[VerificationResult]:
    """Check the advertised good-vertex structure of B(k) for each k.

    Verifies, by direct computation on the generated graph: the good set is
    exactly the 2k spoke endpoints {v_i_1, v_i_5}, the transmission of v_1_1
    is 20k+10, and the good proportion is exactly 2k/(5k+6). Failures are
    reported, not raised.
    """
    results = []
    for k in k_range:
        g = build_bunch(k)
        report = analyze(g)
        failures = []
        expected = {f"v_{i}_1" for i in range(1, k + 1)}
        expected |= {f"v_{i}_5" for i in range(1, k + 1)}
        good = {g.label(rec.vertex) for rec in report.per_vertex if rec.good}
        if good != expected:
            extra = sorted(good - expected)
            missing = sorted(expected - good)
            failures.append(f"good set mismatch: extra={extra} missing={missing}")
        t_v11 = report.per_vertex[g.vertex_by_label("v_1_1")].transmission
        if t_v11 != 20 * k + 10:
            failures.append(f"transmission(v_1_1) = {t_v11}, expected {20 * k + 10}")
        want = Fraction(2 * k, 5 * k + 6)
        if report.good_proportion != want:
            failures.append(f"proportion {report.good_proportion} != {want}")
        if report.n != 5 * k + 6:
            failures.append(f"order {report.n} != {5 * k + 6}")
        results.append(
            VerificationResult(
                name=f"B({k})",
                params=(k,),
                passed=not failures,
                failures=tuple(failures),
                graph6=emit_graph6(g).decode("ascii"),
                order=report.n,
                matched_count=report.good_count,
                proportion=report.good_proportion,
            )
        )
    return results


def verify_lily_family(cases: Iterable[tuple]) -> List[VerificationResult]:
    """Check the advertised delta structure of L(k, m) / its z variants.

    For each (k, m, z): the order is 2km+m+2+d, and the set of vertices with
    deletion delta exactly z (among non-disconnecting deletions) is precisely
    the km first-layer vertices; for z = 0 the good proportion is
    km/(2km+m+2+d). Failures are reported, not raised.
    """
    results = []
    for case in cases:
        k, m, z = case if len(case) == 3 else (*case, 0)
        p = LilyParams(k, m, z)
        tail = lily_tail_params(p)
        g = _build_lily(p)
        failures = []
        want_order = 2 * k * m + m + 2 + tail.d
        if g.n != want_order:
            failures.append(f"order {g.n} != {want_order}")
        expected = _first_layer_labels(k, m)
        preimage = set()
        for v in range(g.n):
            if delta_v(g, v) == z:
                preimage.add(g.label(v))
        if preimage != expected:
            extra = sorted(preimage - expected)
            missing = sorted(expected - preimage)
            failures.append(
                f"delta={z} preimage mismatch: extra={extra} missing={missing}"
            )
        matched = len(preimage)
        proportion = Fraction(matched, g.n)
        if z == 0 and proportion != Fraction(k * m, want_order):
            failures.append(
                f"proportion {proportion} != {Fraction(k * m, want_order)}"
            )
        name = f"L({k},{m})" if z == 0 else f"L'({k},{m},{z})"
        results.append(
            VerificationResult(
                name=name,
                params=(k, m, z),
                passed=not failures,
                failures=tuple(failures),
                graph6=emit_graph6(g).decode("ascii"),
                order=g.n,
                matched_count=matched,
                proportion=proportion,
            )
        )
    return results
