import random

import pytest

from helpers import naive_crossings
from plandec.generators import random_bounded_treewidth
from plandec.graph import Graph, GraphError, complete_graph, cycle_graph, grid_graph, path_graph
from plandec.partition import (Partition, convex_treewidth_pipeline, is_forest, produce_convex_drawing,
                               produce_drawing, tree_partition, width_bound)


def test_partition_validation():
    g = path_graph(4)
    with pytest.raises(GraphError):
        Partition(g, (frozenset({0, 1}), frozenset({1, 2, 3})))
    with pytest.raises(GraphError):
        Partition(g, (frozenset({0, 1}),))
    with pytest.raises(GraphError):
        Partition(g, (frozenset({0, 1, 2, 3}), frozenset()))
    p = Partition(g, (frozenset({0, 1}), frozenset({2, 3})))
    assert p.width == 2 and p.bag_of() == [0, 0, 1, 1]
    assert p.pattern.edges == ((0, 1),)
    assert Partition.from_json(p.to_json()) == p


def test_is_forest():
    assert is_forest(path_graph(5))
    assert is_forest(Graph(4, []))
    assert not is_forest(cycle_graph(4))


def test_tree_partition_is_tree_partition():
    rng = random.Random(21)
    for g in [path_graph(7), cycle_graph(9), grid_graph(3, 5), complete_graph(4)]:
        p = tree_partition(g)
        assert is_forest(p.pattern)
    for _ in range(20):
        g = random_bounded_treewidth(rng, rng.randint(2, 18), rng.randint(1, 4), 4)
        p = tree_partition(g)
        assert is_forest(p.pattern)
        assert sorted(v for b in p.bags for v in b) == list(range(g.n))


def test_width_bound_formula():
    assert width_bound(1, 2) == pytest.approx(2.5 * 2 * 6)


def test_produce_drawing_rejects_foreign_partition():
    p = Partition(path_graph(3), tuple(frozenset({v}) for v in range(3)))
    with pytest.raises(GraphError):
        produce_drawing(path_graph(4), p)


def test_convex_drawing_from_tree_partition():
    rng = random.Random(22)
    for _ in range(15):
        g = random_bounded_treewidth(rng, rng.randint(3, 16), rng.randint(1, 3), 4)
        p = tree_partition(g)
        pd = produce_convex_drawing(g, p, seed=2)
        assert pd.convex_agrees
        total, _ = naive_crossings(pd.drawing)
        assert total == pd.report.total
        assert pd.shares_bag


def test_pipeline_reports():
    rng = random.Random(23)
    for _ in range(10):
        g = random_bounded_treewidth(rng, rng.randint(4, 18), rng.randint(1, 4), 4)
        res = convex_treewidth_pipeline(g, seed=3)
        assert res.exact_treewidth and res.pattern_is_forest and res.crossings_ok
        assert res.width_ok
