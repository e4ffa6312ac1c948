"""Hot distance kernels: numba-jitted loops with a pure-numpy fallback.

Everything here works on CSR adjacency (``indptr``, ``indices``) and plain
numpy arrays so the same code drives single graphs and exhaustive sweeps
over millions of small graphs. Unreachable pairs carry the sentinel -1.

Backend selection happens at import time: the jitted loop kernels are used
when numba is importable, unless ``WIENERLAB_NO_NUMBA`` is set to 1/true/yes,
in which case the vectorized numpy fallbacks take over. Both variants stay
importable (``*_jit`` / ``*_numpy``) so ``benchmarks/bench_kernels.py`` can
time them against each other.

Distance sums use int64 throughout. With distances < n and fewer than n^2/2
pairs, a Wiener sum is below n^3/2, so int64 is safe for every order the
graph6 headers in this package can express (n <= 258047).
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("WIENERLAB_NO_NUMBA", "").strip().lower()
NUMBA_DISABLED = _FLAG in {"1", "true", "yes"}

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not NUMBA_DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"

# Sweep counter layout (see exhaustive_sweep).
SWEEP_CONNECTED = 0
SWEEP_HANDSHAKE_VIOL = 1
SWEEP_FW_VIOL = 2
SWEEP_MONO_VIOL = 3
SWEEP_PROP_CHECKED = 4
SWEEP_PROP_VIOL = 5


# ---------------------------------------------------------------------------
# Loop implementations (numba compile targets)
# ---------------------------------------------------------------------------

def _bfs_fill_loops(indptr, indices, n, src, skip, dist, queue):
    # Fills dist with BFS levels from src, ignoring vertex `skip` (-1: none).
    # Returns the number of vertices reached (including src).
    for i in range(n):
        dist[i] = -1
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            if w != skip and dist[w] < 0:
                dist[w] = du + 1
                queue[tail] = w
                tail += 1
    return tail


def _bfs_row_loops(indptr, indices, n, src):
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    _bfs_fill_loops(indptr, indices, n, src, -1, dist, queue)
    return dist


def _apsp_loops(indptr, indices, n):
    out = np.empty((n, n), np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        _bfs_fill_loops(indptr, indices, n, s, -1, out[s], queue)
    return out


def _apsp_excluding_loops(indptr, indices, n, skip):
    out = np.empty((n, n), np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        if s == skip:
            for i in range(n):
                out[s, i] = -1
        else:
            _bfs_fill_loops(indptr, indices, n, s, skip, out[s], queue)
            out[s, skip] = -1
    return out


def _deletion_profile_loops(indptr, indices, n):
    # Per-vertex deletion profile of a connected graph on n >= 2 vertices:
    # transmissions, Wiener deltas, and a disconnect flag per vertex.
    t = np.zeros(n, np.int64)
    delta = np.zeros(n, np.int64)
    disc = np.zeros(n, np.uint8)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    two_w = 0
    for s in range(n):
        _bfs_fill_loops(indptr, indices, n, s, -1, dist, queue)
        acc = 0
        for i in range(n):
            acc += dist[i]
        t[s] = acc
        two_w += acc
    w = two_w // 2
    for v in range(n):
        first = 0 if v != 0 else 1
        reached = _bfs_fill_loops(indptr, indices, n, first, v, dist, queue)
        if reached < n - 1:
            disc[v] = 1
            continue
        acc = 0
        for i in range(n):
            if i != v:
                acc += dist[i]
        for s in range(first + 1, n):
            if s == v:
                continue
            _bfs_fill_loops(indptr, indices, n, s, v, dist, queue)
            for i in range(n):
                if i != v:
                    acc += dist[i]
        delta[v] = w - acc // 2
    return t, delta, disc


def _exhaustive_sweep_loops(n):
    # Checks every labeled graph on n vertices (2^(n(n-1)/2) edge masks):
    #   - BFS distances agree with a Floyd-Warshall recomputation (all masks);
    #   - on connected graphs, twice the pair sum equals the transmission sum;
    #   - deleting a vertex never shortens a surviving finite distance;
    #   - Wiener delta equals transmission plus half the pairwise delta sum
    #     whenever the deletion leaves the graph connected.
    # Returns int64 counters; see the SWEEP_* indices.
    npairs = n * (n - 1) // 2
    pi = np.empty(npairs, np.int64)
    pj = np.empty(npairs, np.int64)
    p = 0
    for j in range(1, n):
        for i in range(j):
            pi[p] = i
            pj[p] = j
            p += 1
    adj = np.zeros((n, n), np.uint8)
    deg = np.zeros(n, np.int64)
    nbr = np.zeros((n, n), np.int64)
    dmat = np.empty((n, n), np.int64)
    dvrow = np.empty(n, np.int64)
    dvmat = np.empty((n, n), np.int64)
    fw = np.empty((n, n), np.int64)
    queue = np.empty(n, np.int64)
    counters = np.zeros(6, np.int64)
    inf = np.int64(1) << 40
    for mask in range(1 << npairs):
        for q in range(n):
            deg[q] = 0
            for r in range(n):
                adj[q, r] = 0
        for p in range(npairs):
            if (mask >> p) & 1:
                a = pi[p]
                b = pj[p]
                adj[a, b] = 1
                adj[b, a] = 1
                nbr[a, deg[a]] = b
                deg[a] += 1
                nbr[b, deg[b]] = a
                deg[b] += 1
        # BFS all-pairs on the adjacency matrix
        connected = True
        for s in range(n):
            for i in range(n):
                dmat[s, i] = -1
            dmat[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dmat[s, u]
                for e in range(deg[u]):
                    w = nbr[u, e]
                    if dmat[s, w] < 0:
                        dmat[s, w] = du + 1
                        queue[tail] = w
                        tail += 1
            if tail < n:
                connected = False
        # Floyd-Warshall oracle, compared entry for entry
        for q in range(n):
            for r in range(n):
                if q == r:
                    fw[q, r] = 0
                elif adj[q, r]:
                    fw[q, r] = 1
                else:
                    fw[q, r] = inf
        for m in range(n):
            for q in range(n):
                dqm = fw[q, m]
                if dqm >= inf:
                    continue
                for r in range(n):
                    alt = dqm + fw[m, r]
                    if alt < fw[q, r]:
                        fw[q, r] = alt
        for q in range(n):
            for r in range(n):
                want = fw[q, r]
                got = dmat[q, r]
                if want >= inf:
                    if got != -1:
                        counters[SWEEP_FW_VIOL] += 1
                elif got != want:
                    counters[SWEEP_FW_VIOL] += 1
        if not connected:
            continue
        counters[SWEEP_CONNECTED] += 1
        total = 0
        for q in range(n):
            for r in range(n):
                total += dmat[q, r]
        upper = 0
        for p in range(npairs):
            upper += dmat[pi[p], pj[p]]
        if 2 * upper != total:
            counters[SWEEP_HANDSHAKE_VIOL] += 1
        w = upper
        for v in range(n):
            # BFS all-pairs with v removed
            ok = n > 1
            for s in range(n):
                if s == v:
                    for i in range(n):
                        dvmat[s, i] = -1
                    continue
                for i in range(n):
                    dvmat[s, i] = -1
                dvmat[s, s] = 0
                queue[0] = s
                head = 0
                tail = 1
                while head < tail:
                    u = queue[head]
                    head += 1
                    du = dvmat[s, u]
                    for e in range(deg[u]):
                        ww = nbr[u, e]
                        if ww != v and dvmat[s, ww] < 0:
                            dvmat[s, ww] = du + 1
                            queue[tail] = ww
                            tail += 1
                if tail < n - 1:
                    ok = False
            for q in range(n):
                if q == v:
                    continue
                for r in range(n):
                    if r == v:
                        continue
                    if dvmat[q, r] != -1 and dvmat[q, r] < dmat[q, r]:
                        counters[SWEEP_MONO_VIOL] += 1
            if not ok:
                continue
            tv = 0
            for r in range(n):
                tv += dmat[v, r]
            s_pairs = 0
            wv2 = 0
            for q in range(n):
                if q == v:
                    continue
                for r in range(n):
                    if r == v or r == q:
                        continue
                    s_pairs += dmat[q, r] - dvmat[q, r]
                    wv2 += dvmat[q, r]
            counters[SWEEP_PROP_CHECKED] += 1
            if s_pairs % 2 != 0 or 2 * tv + s_pairs != 2 * w - wv2:
                counters[SWEEP_PROP_VIOL] += 1
    return counters


# ---------------------------------------------------------------------------
# Pure-numpy fallback (vectorized; no per-vertex Python BFS loops)
# ---------------------------------------------------------------------------

def _dense_from_csr(indptr, indices, n):
    adj = np.zeros((n, n), np.uint8)
    if len(indices):
        rows = np.repeat(np.arange(n), np.diff(indptr))
        adj[rows, indices] = 1
    return adj


def _apsp_dense_numpy(adj):
    # Level-synchronous BFS from all sources at once: one uint8 matmul per
    # distance level. Rows are sources.
    n = adj.shape[0]
    dist = np.full((n, n), -1, np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier.astype(np.uint8) @ adj) > 0
        nxt &= ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist

def bfs_row_numpy(indptr, indices, n, src):
    adj = _dense_from_csr(indptr, indices, n)
    dist = np.full(n, -1, np.int64)
    dist[src] = 0
    reached = np.zeros(n, dtype=bool)
    reached[src] = True
    frontier = reached.copy()
    level = 0
    while frontier.any():
        level += 1
        nxt = (adj[frontier].any(axis=0)) & ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def apsp_numpy(indptr, indices, n):
    return _apsp_dense_numpy(_dense_from_csr(indptr, indices, n))


def apsp_excluding_numpy(indptr, indices, n, skip):
    adj = _dense_from_csr(indptr, indices, n).copy()
    adj[skip, :] = 0
    adj[:, skip] = 0
    out = _apsp_dense_numpy(adj)
    out[skip, :] = -1
    out[:, skip] = -1
    return out


def deletion_profile_numpy(indptr, indices, n):
    adj = _dense_from_csr(indptr, indices, n)
    dist = _apsp_dense_numpy(adj)
    t = dist.sum(axis=1)
    w = int(t.sum()) // 2
    delta = np.zeros(n, np.int64)
    disc = np.zeros(n, np.uint8)
    keep = np.ones(n, dtype=bool)
    for v in range(n):
        sub = adj.copy()
        sub[v, :] = 0
        sub[:, v] = 0
        dv = _apsp_dense_numpy(sub)
        keep[v] = False
        block = dv[np.ix_(keep, keep)]
        keep[v] = True
        if block.size and (block < 0).any():
            disc[v] = 1
        elif n == 1:
            disc[v] = 1
        else:
            delta[v] = w - int(block.sum()) // 2
    return t, delta, disc


def exhaustive_sweep_numpy(n):
    # Same contract as the jitted sweep; practical up to n = 6 or so.
    npairs = n * (n - 1) // 2
    pi = np.empty(npairs, np.intp)
    pj = np.empty(npairs, np.intp)
    p = 0
    for j in range(1, n):
        for i in range(j):
            pi[p], pj[p] = i, j
            p += 1
    counters = np.zeros(6, np.int64)
    inf = np.int64(1) << 40
    triu = np.triu_indices(n, 1)
    for mask in range(1 << npairs):
        adj = np.zeros((n, n), np.uint8)
        if npairs:
            bits = (mask >> np.arange(npairs)) & 1
            adj[pi, pj] = bits
            adj[pj, pi] = bits
        dmat = _apsp_dense_numpy(adj)
        fw = np.where(adj > 0, np.int64(1), inf)
        np.fill_diagonal(fw, 0)
        for m in range(n):
            fw = np.minimum(fw, fw[:, m, None] + fw[None, m, :])
        want = np.where(fw >= inf, -1, fw)
        counters[SWEEP_FW_VIOL] += int((want != dmat).sum())
        if (dmat < 0).any():
            continue
        counters[SWEEP_CONNECTED] += 1
        w = int(dmat[triu].sum())
        if 2 * w != int(dmat.sum()):
            counters[SWEEP_HANDSHAKE_VIOL] += 1
        keep = np.ones(n, dtype=bool)
        for v in range(n):
            sub = adj.copy()
            sub[v, :] = 0
            sub[:, v] = 0
            dv = _apsp_dense_numpy(sub)
            keep[v] = False
            block_d = dmat[np.ix_(keep, keep)]
            block_dv = dv[np.ix_(keep, keep)]
            keep[v] = True
            fin = block_dv >= 0
            counters[SWEEP_MONO_VIOL] += int((block_dv[fin] < block_d[fin]).sum())
            if n == 1 or not fin.all():
                continue
            tv = int(dmat[v].sum())
            s_pairs = int((block_d - block_dv).sum())
            wv2 = int(block_dv.sum())
            counters[SWEEP_PROP_CHECKED] += 1
            if s_pairs % 2 != 0 or 2 * tv + s_pairs != 2 * w - wv2:
                counters[SWEEP_PROP_VIOL] += 1
    return counters


# ---------------------------------------------------------------------------
# Backend selection
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    _jit = njit(cache=True, nogil=True)
    _bfs_fill_loops = _jit(_bfs_fill_loops)
    bfs_row_jit = _jit(_bfs_row_loops)
    apsp_jit = _jit(_apsp_loops)
    apsp_excluding_jit = _jit(_apsp_excluding_loops)
    deletion_profile_jit = _jit(_deletion_profile_loops)
    exhaustive_sweep_jit = _jit(_exhaustive_sweep_loops)
else:  # pragma: no cover
    bfs_row_jit = None
    apsp_jit = None
    apsp_excluding_jit = None
    deletion_profile_jit = None
    exhaustive_sweep_jit = None

if USE_NUMBA:
    bfs_row = bfs_row_jit
    apsp = apsp_jit
    apsp_excluding = apsp_excluding_jit
    deletion_profile = deletion_profile_jit
    exhaustive_sweep = exhaustive_sweep_jit
else:
    bfs_row = bfs_row_numpy
    apsp = apsp_numpy
    apsp_excluding = apsp_excluding_numpy
    deletion_profile = deletion_profile_numpy
    exhaustive_sweep = exhaustive_sweep_numpy


def warmup():
    """Force JIT compilation of every kernel on a tiny graph."""
    indptr = np.array([0, 1, 2], np.int64)
    indices = np.array([1, 0], np.int64)
    bfs_row(indptr, indices, 2, 0)
    apsp(indptr, indices, 2)
    apsp_excluding(indptr, indices, 2, 0)
    deletion_profile(indptr, indices, 2)
    exhaustive_sweep(2)
