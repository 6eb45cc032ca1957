import random

from plandec.decomposition import validate
from plandec.generators import (random_bounded_treewidth, random_convex, random_k5_free, random_k33_free,
                                random_planar_decomposition, random_polyline_drawing, random_triangulation)
from plandec.drawing import count_crossings
from plandec.oracles import has_minor_small, treewidth_exact_small
from plandec.planar import is_triangulation


def test_triangulations():
    rng = random.Random(0)
    for n in range(3, 60, 7):
        g = random_triangulation(n, rng)
        assert is_triangulation(g)
        capped = random_triangulation(n, rng, max_degree=8)
        assert is_triangulation(capped)


def test_minor_free_generators():
    rng = random.Random(1)
    for _ in range(5):
        g = random_k5_free(rng, 18)
        assert g.max_degree() <= 8
        if g.n <= 25:
            assert not has_minor_small(g, "K5")
        h = random_k33_free(rng, 18)
        if h.n <= 25:
            assert not has_minor_small(h, "K33")


def test_decomposition_generator_is_valid():
    rng = random.Random(2)
    for _ in range(30):
        k = rng.randint(1, 4)
        d = random_planar_decomposition(rng, rng.randint(1, 40), k)
        rep = validate(d)
        assert rep.ok and rep.planar and d.width <= k


def test_drawing_generators_general_position():
    rng = random.Random(3)
    for _ in range(10):
        assert count_crossings(random_polyline_drawing(rng, 12, 25, max_bends=3)).ok
        dr = random_convex(rng, 10, 0.4)
        assert dr.convex and count_crossings(dr).ok


def test_bounded_treewidth():
    rng = random.Random(4)
    for _ in range(10):
        g = random_bounded_treewidth(rng, 14, 3, 4)
        assert g.max_degree() <= 4 and treewidth_exact_small(g) <= 3


def test_generators_are_seeded():
    a = random_k5_free(random.Random(9), 40)
    b = random_k5_free(random.Random(9), 40)
    assert a == b
