"""Shared test utilities: random graphs and an independent distance oracle."""

import random

from wienerlab import Graph, from_edge_list


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extra = rng.randrange(0, n * (n - 1) // 2 + 1)
    for _ in range(extra):
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        if u > v:
            u, v = v, u
        edges.add((u, v))
    return from_edge_list(n, sorted(edges))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random (possibly disconnected) graph with edge probability p."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(n, edges)


def floyd_warshall_oracle(g: Graph):
    """Independent distance oracle: plain min-plus Floyd-Warshall."""
    n = g.n
    inf = float("inf")
    dist = [[inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
        for u in g.adjacency[v]:
            dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return [[-1 if d == inf else int(d) for d in row] for row in dist]
