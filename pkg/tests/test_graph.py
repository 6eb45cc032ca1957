import random
from itertools import combinations

import networkx as nx
import pytest

from plandec.coloring import four_colouring, is_proper
from plandec.generators import random_triangulation
from plandec.graph import (Graph, GraphError, canon, clique_number, complete_bipartite, complete_graph, cycle_graph,
                           degeneracy_order, enumerate_cliques, format_edge_list, grid_graph, is_matching, is_V8,
                           max_matching, octahedron, parse_edge_list, path_graph, v8_cycle, v8_graph)


def test_graph_canonical_and_equal():
    a = Graph(3, [(1, 0), (2, 1)])
    b = Graph(3, [(0, 1), (1, 2), (2, 1)])
    assert a == b and hash(a) == hash(b)
    assert a.edges == ((0, 1), (1, 2))
    assert a.edge_index(2, 1) == 1
    assert canon(5, 2) == (2, 5)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_standard_graphs():
    assert complete_graph(6).m == 15
    assert path_graph(4).m == 3
    assert cycle_graph(5).max_degree() == 2
    assert complete_bipartite(3, 3).m == 9
    assert grid_graph(3, 4).m == 17
    o = octahedron()
    assert o.n == 6 and o.m == 12 and all(o.degree(v) == 4 for v in range(6))
    v8 = v8_graph()
    assert v8.m == 12 and all(v8.degree(v) == 3 for v in range(8))


def test_induced_and_components():
    g = Graph(6, [(0, 1), (1, 2), (4, 5)])
    assert g.components() == [[0, 1, 2], [3], [4, 5]]
    h, old = g.induced([1, 2, 5])
    assert old == [1, 2, 5] and h.edges == ((0, 1),)
    assert not g.is_connected()


def test_degeneracy_matches_networkx():
    rng = random.Random(1)
    for _ in range(30):
        n = rng.randint(1, 25)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.3])
        d, order, orient = degeneracy_order(g)
        core = nx.core_number(g.to_networkx())
        assert d == max(core.values(), default=0)
        assert orient.is_acyclic()
        assert max(orient.indegrees(), default=0) <= d
        assert sorted(order) == list(range(n))


def test_cliques_against_networkx():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 14)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        ref = {tuple(sorted(c)) for c in nx.enumerate_all_cliques(g.to_networkx()) if len(c) <= 4}
        assert {tuple(sorted(c)) for c in enumerate_cliques(g, 4)} == ref
        assert clique_number(g) == max(len(c) for c in nx.find_cliques(g.to_networkx()))


def test_max_matching_is_maximum():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 20)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.25])
        m = max_matching(g)
        assert is_matching(g, m)
        assert len(m) == len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))
    assert not is_matching(path_graph(3), [(0, 1), (1, 2)])


def test_v8_recognition():
    assert is_V8(v8_graph())
    cyc = v8_cycle(v8_graph())
    assert cyc is not None and len(cyc) == 8
    perm = list(range(8))
    random.Random(4).shuffle(perm)
    assert is_V8(v8_graph().relabel(perm))
    assert not is_V8(cycle_graph(8))
    assert not is_V8(complete_bipartite(4, 4))
    # the cube is cubic on 8 vertices but bipartite, so no antipodal cycle
    cube = Graph(8, [(a, b) for a, b in combinations(range(8), 2) if bin(a ^ b).count("1") == 1])
    assert not is_V8(cube)


def test_edge_list_round_trip():
    g = Graph(5, [(0, 1), (3, 4)])
    assert parse_edge_list(format_edge_list(g)) == g
    text = "# a comment\n4 2\n0 1\n2 3  # trailing\n"
    assert parse_edge_list(text) == Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("x y\n")


def test_four_colouring_triangulations():
    rng = random.Random(5)
    for _ in range(25):
        g = random_triangulation(rng.randint(4, 80), rng)
        col = four_colouring(g)
        assert is_proper(g, col) and set(col) <= {0, 1, 2, 3}
    assert is_proper(octahedron(), four_colouring(octahedron()))
    assert not is_proper(complete_graph(3), [0, 0, 1])
