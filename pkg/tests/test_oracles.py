import random

import pytest

from plandec.generators import random_k5_free, random_k33_free, random_triangulation
from plandec.graph import Graph, GraphError, complete_bipartite, complete_graph, octahedron, v8_graph
from plandec.oracles import has_minor_small, oracle_caps, treewidth_exact_small

PETERSEN = Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])


@pytest.mark.parametrize("g, k5, k33", [
    (complete_graph(5), True, False),
    (complete_bipartite(3, 3), False, True),
    (v8_graph(), False, True),
    (octahedron(), False, False),
    (PETERSEN, True, True),
    (complete_graph(6), True, True),
])
def test_known_minors(g, k5, k33):
    assert has_minor_small(g, "K5") is k5
    assert has_minor_small(g, "K33") is k33


def test_subdivisions_are_detected():
    # K5 with every edge subdivided
    es, nxt = [], 5
    for u in range(5):
        for v in range(u + 1, 5):
            es += [(u, nxt), (nxt, v)]
            nxt += 1
    assert has_minor_small(Graph(nxt, es), "K5")


def test_generated_graphs_are_minor_free():
    rng = random.Random(0)
    for _ in range(6):
        assert not has_minor_small(random_k5_free(rng, rng.randint(8, 22)), "K5")
        assert not has_minor_small(random_k33_free(rng, rng.randint(8, 22)), "K33")
        assert not has_minor_small(random_triangulation(rng.randint(5, 20), rng), "K33")


def test_caps_and_env(monkeypatch):
    assert oracle_caps() == (18, 25)
    monkeypatch.setenv("PLANDEC_ORACLE_CAP", "10/12")
    assert oracle_caps() == (10, 12)
    with pytest.raises(GraphError):
        treewidth_exact_small(Graph(11))
    with pytest.raises(GraphError):
        has_minor_small(Graph(13), "K5")
    monkeypatch.setenv("PLANDEC_ORACLE_CAP", "oops")
    with pytest.raises(GraphError):
        oracle_caps()


def test_bad_target():
    with pytest.raises(GraphError):
        has_minor_small(complete_graph(3), "K4")


def test_minor_oracle_matches_branch_set_enumeration():
    from itertools import combinations

    from helpers import brute_has_minor

    rng = random.Random(7)
    seen = {"K5": set(), "K33": set()}
    for _ in range(60):
        n = rng.randint(5, 8)
        p = rng.uniform(0.4, 0.9)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        for h in ("K5", "K33"):
            want = brute_has_minor(g.n, g.edges, h)
            assert has_minor_small(g, h) is want
            seen[h].add(want)
    assert seen == {"K5": {True, False}, "K33": {True, False}}
