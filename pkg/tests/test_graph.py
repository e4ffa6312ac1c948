import numpy as np
import pytest

from wienerlab import (
    UNREACHABLE,
    all_pairs_distances,
    bfs_distances,
    from_edge_list,
    is_connected,
    remove_vertex,
)
from wienerlab.errors import DuplicateEdgeError, OutOfRangeError, SelfLoopError


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_from_edge_list_k2():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2
    assert g.adjacency == ((1,), (0,))
    assert g.edge_count == 1


def test_from_edge_list_c11():
    g = cycle(11)
    assert g.n == 11
    assert all(g.degree(v) == 2 for v in range(11))
    assert g.edge_count == 11


def test_from_edge_list_rejects_reversed_duplicate():
    with pytest.raises(DuplicateEdgeError):
        from_edge_list(3, [(0, 1), (1, 0)])


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        from_edge_list(3, [(1, 1)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(OutOfRangeError):
        from_edge_list(3, [(0, 3)])


def test_remove_vertex_path_center_disconnects():
    g, index_map = remove_vertex(path(3), 1)
    assert g.n == 2
    assert g.edge_count == 0
    assert index_map == {0: 0, 2: 1}


def test_remove_vertex_cycle_gives_path():
    # removing the last vertex keeps the canonical path order
    g, _ = remove_vertex(cycle(11), 10)
    assert g.adjacency == path(10).adjacency
    # removing any other vertex still leaves a 10-vertex path (relabeled)
    h, _ = remove_vertex(cycle(11), 4)
    degrees = sorted(len(row) for row in h.adjacency)
    assert h.n == 10 and degrees == [1, 1] + [2] * 8
    assert is_connected(h)


def test_remove_vertex_complete():
    g, index_map = remove_vertex(complete(4), 0)
    assert g.adjacency == complete(3).adjacency
    assert index_map == {1: 0, 2: 1, 3: 2}


def test_remove_vertex_carries_labels():
    g = from_edge_list(3, [(0, 1), (1, 2)], labels={0: "a", 1: "b", 2: "c"})
    h, _ = remove_vertex(g, 1)
    assert dict(h.labels) == {0: "a", 1: "c"}


def test_remove_vertex_out_of_range():
    with pytest.raises(OutOfRangeError):
        remove_vertex(path(3), 3)


def test_bfs_distances_cycle():
    assert bfs_distances(cycle(11), 0).tolist() == [0, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1]


def test_bfs_distances_complete():
    assert bfs_distances(complete(5), 2).tolist() == [1, 1, 0, 1, 1]


def test_bfs_distances_unreachable_sentinel():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0).tolist() == [0, 1, UNREACHABLE, UNREACHABLE]


def test_all_pairs_c4():
    d = all_pairs_distances(cycle(4)).matrix
    off = d[~np.eye(4, dtype=bool)]
    assert set(off.tolist()) == {1, 2}
    assert int((d == 2).sum()) == 4


def test_all_pairs_p4_and_k1():
    assert all_pairs_distances(path(4))[0, 3] == 3
    d = all_pairs_distances(from_edge_list(1, []))
    assert d.matrix.shape == (1, 1)
    assert d[0, 0] == 0


def test_all_pairs_agrees_with_bfs_rows():
    g = cycle(7)
    d = all_pairs_distances(g)
    for v in range(g.n):
        assert d.row(v).tolist() == bfs_distances(g, v).tolist()


def test_distance_matrix_invariants():
    for g in (cycle(6), path(5), complete(4)):
        d = all_pairs_distances(g).matrix
        assert (np.diag(d) == 0).all()
        assert (d == d.T).all()
        n = g.n
        for u in range(n):
            for v in range(n):
                for w in range(n):
                    assert d[u, w] <= d[u, v] + d[v, w]
        for u in range(n):
            for w in range(n):
                assert (d[u, w] == 1) == g.has_edge(u, w)


def test_is_connected():
    assert is_connected(cycle(11))
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(from_edge_list(1, []))
    assert is_connected(from_edge_list(0, []))


def test_graph_value_semantics():
    a = from_edge_list(3, [(0, 1), (1, 2)])
    b = from_edge_list(3, [(1, 2), (0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != from_edge_list(3, [(0, 1)])


def test_labels_are_read_only():
    g = from_edge_list(2, [(0, 1)], labels={0: "x"})
    with pytest.raises(TypeError):
        g.labels[1] = "y"


def test_duplicate_label_strings_rejected():
    with pytest.raises(ValueError):
        from_edge_list(2, [(0, 1)], labels={0: "x", 1: "x"})


def test_distance_matrix_is_read_only():
    d = all_pairs_distances(cycle(5))
    with pytest.raises(ValueError):
        d.matrix[0, 0] = 7
