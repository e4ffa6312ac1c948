"""Property tests: invariants over random and exhaustively enumerated graphs."""

import numpy as np
from hypothesis import given, strategies as st

from wienerlab import (
    all_pairs_distances,
    analyze,
    delta_decomposition,
    delta_pair,
    delta_spectrum,
    delta_v,
    emit_graph6,
    from_edge_list,
    good_vertices,
    is_connected,
    parse_graph6,
    remove_vertex,
    transmission,
    wiener_index,
)
from wienerlab import kernels
from wienerlab.errors import DisconnectedAfterRemovalError

from helpers import floyd_warshall_oracle


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return from_edge_list(n, picks)


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    tree = [(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in set(tree)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return from_edge_list(n, tree + extra)


@given(graphs())
def test_adjacency_invariants(g):
    for v, row in enumerate(g.adjacency):
        assert list(row) == sorted(set(row))
        assert v not in row
        for u in row:
            assert v in g.adjacency[u]


@given(graphs())
def test_apsp_matches_floyd_warshall(g):
    ours = all_pairs_distances(g).matrix.tolist()
    assert ours == floyd_warshall_oracle(g)


@given(graphs(max_n=30))
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g)).adjacency == g.adjacency


@given(connected_graphs())
def test_distances_bounded_on_connected(g):
    d = all_pairs_distances(g).matrix
    assert (d >= 0).all()
    assert (d <= g.n - 1).all()


@given(connected_graphs())
def test_handshake_identity(g):
    assert 2 * wiener_index(g) == sum(transmission(g, v) for v in range(g.n))


@given(connected_graphs())
def test_removal_never_shortens_distances(g):
    d = all_pairs_distances(g).matrix
    for v in range(g.n):
        h, index_map = remove_vertex(g, v)
        dh = all_pairs_distances(h).matrix
        for u in range(g.n):
            for w in range(g.n):
                if u == v or w == v:
                    continue
                duw = dh[index_map[u], index_map[w]]
                if duw >= 0:
                    assert duw >= d[u, w]


@given(connected_graphs())
def test_delta_pair_non_positive(g):
    for v in range(g.n):
        try:
            pairs = [
                (u, w)
                for u in range(g.n)
                for w in range(u + 1, g.n)
                if u != v and w != v
            ]
            for u, w in pairs:
                assert delta_pair(g, v, u, w) <= 0
        except DisconnectedAfterRemovalError:
            continue


@given(connected_graphs())
def test_decomposition_equals_delta_v(g):
    for v in range(g.n):
        expected = delta_v(g, v)
        if expected is None:
            continue
        t, half, delta = delta_decomposition(g, v)
        assert half.denominator == 1
        assert delta == expected
        assert t == transmission(g, v)


@given(connected_graphs())
def test_good_vertices_consistency(g):
    good = good_vertices(g)
    rep = analyze(g)
    assert rep.good_count == len(good)
    for v in good:
        assert delta_v(g, v) == 0
    spectrum = delta_spectrum(g)
    assert spectrum.total == g.n
    assert spectrum.counts.get(0, 0) == len(good)


@given(connected_graphs())
def test_report_wiener_consistent(g):
    rep = analyze(g)
    assert rep.wiener == wiener_index(g)
    assert 2 * rep.wiener == sum(r.transmission for r in rep.per_vertex)


@given(graphs())
def test_remove_vertex_edge_set(g):
    if g.n < 2:
        return
    v = g.n // 2
    h, index_map = remove_vertex(g, v)
    expected = sorted(
        (index_map[a], index_map[b]) for a, b in g.edges() if v not in (a, b)
    )
    assert sorted(h.edges()) == expected
    assert is_connected(h) in (True, False)  # never raises


@given(graphs(max_n=12))
def test_kernel_backends_agree(g):
    if not kernels.HAVE_NUMBA:
        return
    indptr, indices = g.csr()
    n = g.n
    assert np.array_equal(
        kernels.apsp_jit(indptr, indices, n), kernels.apsp_numpy(indptr, indices, n)
    )
    for v in range(n):
        assert np.array_equal(
            kernels.apsp_excluding_jit(indptr, indices, n, v),
            kernels.apsp_excluding_numpy(indptr, indices, n, v),
        )
    if n >= 2 and is_connected(g):
        tj, dj, cj = kernels.deletion_profile_jit(indptr, indices, n)
        tn, dn, cn = kernels.deletion_profile_numpy(indptr, indices, n)
        assert np.array_equal(tj, tn)
        assert np.array_equal(cj, cn)
        assert np.array_equal(dj[cj == 0], dn[cn == 0])


def test_sweep_backends_agree_small():
    if not kernels.HAVE_NUMBA:
        return
    for n in range(1, 5):
        assert np.array_equal(
            kernels.exhaustive_sweep_jit(n), kernels.exhaustive_sweep_numpy(n)
        )


def test_shared_graph_is_safe_across_threads():
    from concurrent.futures import ThreadPoolExecutor

    from wienerlab import build_bunch

    g = build_bunch(5)
    with ThreadPoolExecutor(max_workers=8) as pool:
        reports = list(pool.map(lambda _: analyze(g), range(32)))
    assert all(rep == reports[0] for rep in reports)
    assert reports[0].good_count == 10
