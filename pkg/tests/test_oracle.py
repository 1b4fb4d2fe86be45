import pytest

from minbisect.graph import Graph
from minbisect.hp import HPInstance
from minbisect.oracle import (
    OracleSizeError,
    brute_bisection,
    brute_edge_disjoint_paths,
    brute_hp,
    brute_important_separators,
    brute_unbreakability,
)
from conftest import complete_graph, cycle_graph, path_graph, random_connected_graph

INF = float("inf")


def test_brute_bisection_examples():
    feas, cut, _, part = brute_bisection(path_graph(4), 1, 2)
    assert feas and cut == 1 and len(part[0]) == 2
    feas, cut, _, _ = brute_bisection(complete_graph(4), 4, 2)
    assert feas and cut == 4
    feas, cut, _, _ = brute_bisection(cycle_graph(6), 2, 3)
    assert feas and cut == 2


def test_brute_bisection_monotone_in_k(rng):
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(4, 8))
        target = g.n // 2
        prev_feasible = False
        for k in range(0, 5):
            feas, cut, _, _ = brute_bisection(g, k, target)
            if prev_feasible:
                assert feas
            prev_feasible = feas
            if feas:
                assert cut <= k


def test_brute_bisection_guard():
    with pytest.raises(OracleSizeError):
        brute_bisection(Graph(25, []), 1, 12)


def test_brute_hp_oplus_decomposable():
    # two disjoint single-vertex instances combine by min-plus convolution
    single = lambda v: HPInstance(
        k=2, b=2, d=1, q=2, vertices=(v,), hyperedges=[frozenset({v})],
        col0={}, costs=[{(frozenset(), 0): 0, (frozenset({v}), 1): 1}])
    w0 = brute_hp(single(0))
    joint = HPInstance(
        k=2, b=2, d=1, q=2, vertices=(0, 1),
        hyperedges=[frozenset({0}), frozenset({1})],
        col0={},
        costs=[{(frozenset(), 0): 0, (frozenset({0}), 1): 1},
               {(frozenset(), 0): 0, (frozenset({1}), 1): 1}])
    wj = brute_hp(joint)
    for mu in range(3):
        best = INF
        for m1 in range(mu + 1):
            if w0[m1] is not INF and w0[mu - m1] is not INF:
                best = min(best, w0[m1] + w0[mu - m1])
        assert wj[mu] == (best if best <= 2 else INF)


def test_brute_important_separators_small():
    p5 = path_graph(5)
    assert brute_important_separators(p5, {0}, {4}, 0) == []
    seps = brute_important_separators(p5, {0}, {4}, 2)
    # every returned separator is minimal and separates
    for w in seps:
        assert len(w) <= 2


def test_brute_unbreakability_small():
    k5 = complete_graph(5)
    assert brute_unbreakability(k5, range(5), 1, 1) is None
    witness = brute_unbreakability(path_graph(5), range(5), 1, 1)
    assert witness is not None
    x, y = witness
    assert len(x & y) <= 1


def test_brute_edge_disjoint_paths():
    c4 = cycle_graph(4)
    assert brute_edge_disjoint_paths(4, c4.edges, 0, 2) == 2
    p4 = path_graph(4)
    assert brute_edge_disjoint_paths(4, p4.edges, 0, 3) == 1
    k4 = complete_graph(4)
    assert brute_edge_disjoint_paths(4, k4.edges, 0, 1) == 3
