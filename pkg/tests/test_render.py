import random

import pytest

from helpers import naive_crossings
from plandec.decomposition import (Decomposition, DecompositionError, identity_decomposition, quadratic_decomp,
                                   reduce_order)
from plandec.drawing import count_crossings
from plandec.generators import random_planar_decomposition, random_triangulation
from plandec.graph import Graph, complete_graph, v8_graph
from plandec.k5 import planar_omega_decomp_k5
from plandec.render import crossing_bound, render


def test_identity_of_planar_graph_is_plane():
    g = random_triangulation(20, random.Random(0))
    res = render(identity_decomposition(g))
    assert res.report.ok and res.report.total == 0 and sum(res.drawing.bends()) == 0


def test_v8_omega_decomposition_bound():
    d = planar_omega_decomp_k5(v8_graph())
    res = render(d)
    assert res.bound == 2 * 9 * sum((len(b) + 1) * len(b) // 2 for b in d.bags)
    assert res.bound_ok and res.bends_ok
    assert res.report.total >= 1  # V8 is not planar
    assert res.report.total == naive_crossings(res.drawing)[0]


def test_k5_via_reduced_quadratic():
    g = complete_graph(5)
    d = reduce_order(quadratic_decomp(g)).decomposition
    res = render(d)
    k = d.width
    assert res.report.total <= k * (k + 1) * g.max_degree() ** 2 * d.order
    assert res.bound_ok and res.bends_ok


def test_random_decompositions_meet_certificates():
    rng = random.Random(1)
    for _ in range(15):
        d = random_planar_decomposition(rng, rng.randint(2, 25), rng.randint(1, 4))
        res = render(d, seed=rng.randrange(100))
        assert res.report.ok and res.bound_ok and res.bends_ok
        assert res.bound == crossing_bound(d)
        assert res.report.max_charge <= 2


def test_render_is_deterministic():
    d = random_planar_decomposition(random.Random(2), 15, 3)
    a, b = render(d, seed=5), render(d, seed=5)
    assert a.drawing == b.drawing


def test_render_rejects_bad_input():
    g = complete_graph(3)
    bad = Decomposition(g, (frozenset((0,)), frozenset((1, 2))), Graph(2), False, 2)
    with pytest.raises(DecompositionError):
        render(bad)
    k5 = complete_graph(5)
    with pytest.raises(DecompositionError):
        render(identity_decomposition(k5))  # dgraph K5 is not planar


def test_empty_graph():
    assert render(identity_decomposition(Graph(0))).report.total == 0
