import math
import random
from itertools import combinations

import pytest

from helpers import brute_is_decomposition
from plandec.decomposition import (Decomposition, DecompositionError, clique_sum_decomp, compose, contract_edge,
                                   contract_matching, degen_omega, identity_decomposition, quadratic_decomp,
                                   reduce_order, to_omega, validate)
from plandec.generators import random_planar_decomposition, random_triangulation
from plandec.graph import Graph, clique_number, complete_graph, enumerate_cliques, max_matching, path_graph
from plandec.partition import _heuristic_td


def test_identity_decomposition():
    g = complete_graph(3)
    d = identity_decomposition(g)
    assert d.order == 3 and d.width == 1 and validate(d).ok
    assert identity_decomposition(Graph(0)).order == 0
    p2 = identity_decomposition(path_graph(2))
    assert not p2.strong and validate(p2).ok
    assert not validate(p2.with_claims(strong=True)).ok


@pytest.mark.parametrize("n", [1, 2, 4, 6, 9])
def test_quadratic_decomp_shape(n):
    d = quadratic_decomp(complete_graph(n))
    rep = validate(d)
    assert rep.ok and rep.planar and d.strong
    assert d.order == n * (n + 1) // 2
    assert d.width == (2 if n > 1 else 1)


def test_quadratic_k6_and_k4_examples():
    assert quadratic_decomp(complete_graph(6)).order == 21
    d4 = quadratic_decomp(complete_graph(4))
    assert d4.order == 10 and validate(d4).ok


def test_removed_bag_is_a_named_violation():
    d = quadratic_decomp(complete_graph(6))
    keep = [i for i in range(d.order) if d.bags[i] != frozenset((0, 2))]  # splits the row of vertex 0
    sub, _ = d.dgraph.induced(keep)
    bad = Decomposition(d.host, tuple(d.bags[i] for i in keep), sub, True, 2)
    rep = validate(bad)
    assert not rep.ok and any("empty or disconnected" in v for v in rep.violations)


def test_contract_edge_examples():
    g = Graph(2, [(0, 1)])
    d = contract_edge(identity_decomposition(g), 0, 1)
    assert d.bags == (frozenset((0, 1)),) and d.width == 2
    dup = Decomposition(g, (frozenset((0, 1)), frozenset((0, 1))), Graph(2, [(0, 1)]), True)
    assert contract_edge(dup, 0, 1).width == 2
    with pytest.raises(DecompositionError):
        contract_edge(identity_decomposition(Graph(3, [(0, 1)])), 0, 2)


def test_random_contractions_keep_validity():
    rng = random.Random(0)
    d = quadratic_decomp(complete_graph(5))
    for _ in range(50):
        if d.dgraph.m == 0:
            break
        x, y = rng.choice(d.dgraph.edges)
        d = contract_edge(d, x, y)
        assert validate(d).ok and validate(d).planar


def test_contract_matching_order_arithmetic():
    rng = random.Random(1)
    for _ in range(30):
        d = random_planar_decomposition(rng, rng.randint(3, 20), 3)
        m = max_matching(d.dgraph)
        k = rng.randint(0, len(m))
        out = contract_matching(d, m[:k])
        assert out.order == d.order - k and out.width <= 2 * d.width and validate(out).ok
    with pytest.raises(DecompositionError):
        contract_matching(quadratic_decomp(complete_graph(3)), [(0, 1), (1, 2)])


def test_reduce_order():
    d = quadratic_decomp(complete_graph(8))
    res = reduce_order(d)
    out = res.decomposition
    assert out.order <= 8 and validate(out).ok and validate(out).planar
    assert out.width <= 2 ** res.planned_iterations * 2
    assert res.iterations <= res.planned_iterations
    one = reduce_order(d, target=1)
    assert one.decomposition.order == 1
    # one round shrinks order to at most 2/3
    first = reduce_order(d, target=math.floor(2 * d.order / 3))
    assert first.iterations == 1
    small = identity_decomposition(path_graph(5))
    assert reduce_order(small).iterations == 0


def test_compose_identity_cases():
    d = quadratic_decomp(complete_graph(4))
    same = compose(d, identity_decomposition(d.dgraph))
    assert same.bags == d.bags and same.dgraph == d.dgraph
    g = path_graph(4)
    j = quadratic_decomp(g)
    c = compose(identity_decomposition(g), j)
    assert c.bags == j.bags


def test_compose_over_tree_decomposition():
    d = quadratic_decomp(complete_graph(6))
    td = _heuristic_td(d.dgraph)
    out = compose(d, td.with_claims(strong=True))
    assert validate(out).ok and out.width <= 2 * td.width


def test_degen_omega():
    t = path_graph(6)
    assert degen_omega(t).width == 2
    k5 = degen_omega(complete_graph(5))
    assert frozenset(range(5)) in k5.bags
    rng = random.Random(2)
    for _ in range(10):
        g = random_triangulation(rng.randint(4, 30), rng)
        d = degen_omega(g)
        assert validate(d).ok
        for c in enumerate_cliques(g, clique_number(g)):
            assert any(set(c) <= b for b in d.bags)


def test_to_omega_width_bound():
    rng = random.Random(3)
    for _ in range(10):
        g = random_triangulation(rng.randint(4, 25), rng)
        d = reduce_order(quadratic_decomp(g)).decomposition
        w = to_omega(d)
        assert validate(w).ok and w.width <= d.width * 6
        assert all(any(set(t) <= b for b in w.bags) for t in enumerate_cliques(g, 3) if len(t) == 3)


def test_clique_sum_decomp():
    d = identity_decomposition(complete_graph(3))
    out = clique_sum_decomp(d, d, [(0, 0), (1, 1)])
    assert out.host.n == 4 and out.host.m == 5
    assert validate(out).ok and validate(out).planar and out.order == 6
    good = degen_omega(complete_graph(4))
    out2 = clique_sum_decomp(good, good, [(0, 0), (1, 1), (2, 2)])
    assert out2.strong and validate(out2).ok and out2.order == 8
    assert clique_sum_decomp(good, good, [(0, 0), (1, 1), (2, 2)], merge_nested=True).order == 8
    merged = clique_sum_decomp(d, d, [(0, 0), (1, 1)], merge_nested=True)
    assert merged.order == 5 and validate(merged).ok
    with pytest.raises(DecompositionError):
        clique_sum_decomp(good, identity_decomposition(path_graph(3)), [(0, 0), (1, 2)])


def test_validate_matches_brute_force():
    rng = random.Random(4)
    agree = 0
    for _ in range(200):
        n = rng.randint(1, 12)
        d = random_planar_decomposition(rng, n, rng.randint(1, 4))
        if rng.random() < 0.5:
            extra = [e for e in combinations(range(n), 2) if rng.random() < 0.1]
            d = Decomposition(d.host.with_edges(extra), d.bags, d.dgraph, rng.random() < 0.3, rng.choice([2, 3, 4]))
        assert validate(d).ok == brute_is_decomposition(d)
        agree += 1
    assert agree == 200


def test_json_round_trip():
    d = quadratic_decomp(complete_graph(5))
    assert Decomposition.from_json(d.to_json()) == d
