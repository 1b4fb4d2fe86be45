import random

import pytest

from minbisect.graph import Graph, is_connected


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def theta_graph():
    # two degree-3 hubs joined by three internally disjoint paths
    return Graph(8, [(0, 2), (2, 3), (3, 1),
                     (0, 4), (4, 5), (5, 1),
                     (0, 6), (6, 7), (7, 1)])


def random_graph(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng, n, extra_edges=None, p=None):
    """Random spanning tree plus extra edges; always connected."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    pool = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(pool)
    if extra_edges is None:
        extra_edges = sum(1 for _ in pool if rng.random() < (p if p is not None else 0.3))
    for e in pool[:extra_edges]:
        edges.add(e)
    g = Graph(n, sorted(edges))
    assert is_connected(g)
    return g


@pytest.fixture
def rng():
    return random.Random(20240817)
