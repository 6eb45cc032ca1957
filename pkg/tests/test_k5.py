import random
from itertools import combinations

import pytest

from plandec.decomposition import validate
from plandec.drawing import count_crossings
from plandec.generators import random_k5_free, random_triangulation
from plandec.graph import Graph, GraphError, canon, clique_number, complete_graph, octahedron, path_graph, v8_graph
from plandec.k5 import (crossings_k5, edge_partition_k5, k5_max_tree, maximal_k5_completion, omega_decomp_from_E,
                        planar_omega_decomp_k5, strong_3_decomp_k5, strong_omega_decomp_k5, v8_one_crossing_drawing)
from plandec.oracles import has_minor_small
from plandec.planar import is_triangulation, planar, triangles


def _fan_path(n: int) -> Graph:
    """Two adjacent apexes over a path: a planar graph with 3n-8 triangles."""
    es = [(0, 1)] + [(i, i + 1) for i in range(2, n - 1)]
    es += [(a, v) for a in (0, 1) for v in range(2, n)]
    return Graph(n, es)


def _tripartition_ok(part) -> None:
    h = part.tree.completion
    cls = part.class_of()
    assert set(cls) == set(h.edges)
    for t in triangles(h):
        assert sorted(cls[canon(a, b)] for a, b in combinations(t, 2)) == [0, 1, 2]
    for i in range(3):
        assert len(part.classes[i]) <= h.n - 2
    vs = part.V
    for i, j in combinations(range(3), 2):
        assert not set(vs[i]) & set(vs[j])


def test_v8_classes_are_the_three_matchings():
    part = edge_partition_k5(v8_graph())
    rim_even = {canon(i, (i + 1) % 8) for i in range(0, 8, 2)}
    rim_odd = {canon(i, (i + 1) % 8) for i in range(1, 8, 2)}
    chords = {(i, i + 4) for i in range(4)}
    assert sorted(map(set, part.classes), key=sorted) == sorted([rim_even, rim_odd, chords], key=sorted)
    _tripartition_ok(part)


def test_k4_and_octahedron_class_sizes():
    assert [len(c) for c in edge_partition_k5(complete_graph(4)).classes] == [2, 2, 2]
    part = edge_partition_k5(octahedron())
    assert [len(c) for c in part.classes] == [4, 4, 4]
    _tripartition_ok(part)


def test_every_vertex_meets_two_classes():
    rng = random.Random(0)
    for _ in range(10):
        part = edge_partition_k5(k5_max_tree(random_k5_free(rng, rng.randint(6, 60))))
        _tripartition_ok(part)
        h = part.tree.completion
        cls = part.class_of()
        for v in range(h.n):
            assert len({cls[canon(v, w)] for w in h.adj[v]}) >= 2


def test_edge_partition_needs_maximal_graph():
    with pytest.raises(GraphError):
        edge_partition_k5(path_graph(5))


def test_omega_from_E_k4():
    d = omega_decomp_from_E(complete_graph(4), [(0, 1), (2, 3)])
    assert sorted(map(sorted, d.bags)) == [[0, 1], [2, 3]] and d.dgraph.m == 1
    assert validate(d).ok


def test_omega_from_E_v8():
    d = omega_decomp_from_E(v8_graph(), [(i, i + 4) for i in range(4)])
    assert d.order == 4 and d.dgraph == complete_graph(4) and validate(d).ok


def test_omega_from_E_octahedron_fixture():
    # equator 0-2-5-4 carries E, the poles 1 and 3 are left uncovered
    E = [(0, 2), (0, 4), (4, 5), (2, 5)]
    d = omega_decomp_from_E(octahedron(), E)
    assert d.order == 6
    assert sorted(map(sorted, d.bags)) == sorted([[0, 2], [0, 4], [4, 5], [2, 5], [1], [3]])
    rep = validate(d)
    assert rep.ok and rep.planar


def test_omega_from_E_rejects_bad_class():
    with pytest.raises(GraphError):
        omega_decomp_from_E(complete_graph(4), [(0, 1), (0, 2)])


def test_planar_omega_examples():
    d = planar_omega_decomp_k5(octahedron())
    hist = d.size_histogram()
    assert d.width == 2 and hist.get(2, 0) <= 4 and hist.get(1, 0) <= 2
    v = planar_omega_decomp_k5(v8_graph())
    assert v.width == 2 and v.order <= 7 and validate(v).ok
    for n in (3, 5, 9, 14):
        t = planar_omega_decomp_k5(path_graph(n))
        assert t.order <= 4 * n // 3 - 2 and validate(t).ok


def test_planar_omega_random():
    rng = random.Random(1)
    for _ in range(15):
        g = random_k5_free(rng, rng.randint(4, 80), delete_prob=0.3)
        if g.n < 3:
            continue
        d = planar_omega_decomp_k5(g)
        rep = validate(d)
        assert rep.ok and rep.planar and d.p == max(2, clique_number(g))
        hist = d.size_histogram()
        assert d.width <= 2 and hist.get(2, 0) <= g.n - 2 and hist.get(1, 0) <= g.n // 3
        assert d.order <= 4 * g.n // 3 - 2
        assert len(set(d.bags)) == d.order  # no duplicate bags


def test_crossings_k5_v8():
    res = crossings_k5(v8_graph())
    assert 1 <= res.report.total <= 480 and res.report.total < 20 / 3 * 9 * 8
    assert res.report.total == count_crossings(res.drawing).total


def test_maximal_completion():
    t = path_graph(7)
    h = maximal_k5_completion(t)
    assert set(t.edges) <= set(h.edges) and is_triangulation(h)
    assert maximal_k5_completion(v8_graph()) == v8_graph()
    tri = random_triangulation(15, random.Random(2))
    assert maximal_k5_completion(tri) == tri


def test_completion_is_minor_free_and_maximal():
    rng = random.Random(3)
    # kept small: positive minor checks are exponential in the worst case
    for _ in range(6):
        g = random_k5_free(rng, 10, delete_prob=0.4)
        h = maximal_k5_completion(g)
        assert set(g.edges) <= set(h.edges) and not has_minor_small(h, "K5")
        missing = [e for e in combinations(range(h.n), 2) if not h.has_edge(*e)]
        for e in rng.sample(missing, min(3, len(missing))):
            assert has_minor_small(h.with_edges([e]), "K5")


def test_strong_3_examples():
    k3 = strong_3_decomp_k5(complete_graph(3))
    assert k3.order == 1
    o = strong_3_decomp_k5(octahedron())
    assert o.order == 2 * 6 - 4 and o.width == 3
    v = strong_3_decomp_k5(v8_graph())
    assert v.order == 13
    for d in (o, v):
        rep = validate(d)
        assert rep.ok and rep.planar and d.strong and d.p == 3
    with pytest.raises(GraphError):
        strong_3_decomp_k5(path_graph(2))


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_strong_3_triangle_witness(n):
    g = _fan_path(n)
    assert planar(g) and len(triangles(g)) == 3 * n - 8
    d = strong_3_decomp_k5(g)
    assert validate(d).ok and d.width <= 3
    # each triangle needs its own bag of size 3
    assert d.order == 3 * n - 8


def test_strong_3_random():
    rng = random.Random(4)
    for _ in range(12):
        g = random_k5_free(rng, rng.randint(4, 60), delete_prob=0.3)
        if g.n < 4:
            continue
        d = strong_3_decomp_k5(g)
        rep = validate(d)
        assert rep.ok and rep.planar and d.strong and d.width <= 3
        assert d.order <= 3 * g.n - 8


def test_strong_omega_examples():
    assert strong_omega_decomp_k5(complete_graph(4)).bags == (frozenset(range(4)),)
    v = strong_omega_decomp_k5(v8_graph())
    assert (v.width, v.order) == (4, 4) and validate(v).ok
    o = strong_omega_decomp_k5(octahedron())
    assert o.order == 4 and o.width <= 4 and validate(o).ok
    with pytest.raises(GraphError):
        strong_omega_decomp_k5(complete_graph(3))


def test_strong_omega_random():
    rng = random.Random(5)
    for _ in range(12):
        g = random_k5_free(rng, rng.randint(5, 60), delete_prob=0.3)
        if g.n < 4:
            continue
        d = strong_omega_decomp_k5(g)
        rep = validate(d)
        assert rep.ok and rep.planar and d.strong and d.width <= 4
        assert d.p == max(2, clique_number(g))


def test_v8_drawing_fixture():
    rep = count_crossings(v8_one_crossing_drawing())
    assert rep.ok and rep.total == 1
