import os
import subprocess
import sys

import networkx as nx
import numpy as np
import pytest

from plandec import kernels
from plandec.oracles import treewidth_exact_small
from plandec.graph import Graph, grid_graph, complete_graph, cycle_graph

numba_only = pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")


def _segments(rng, s, box=30):
    seg = rng.integers(0, box, size=(s, 4), dtype=np.int64)
    owner = np.stack([np.arange(s) // 2, np.arange(s) % 2], axis=1).astype(np.int64)
    return seg, owner


def _as_set(pairs, codes):
    return {(int(a), int(b), int(c)) for (a, b), c in zip(pairs, codes)}


@numba_only
def test_segment_pairs_backends_agree():
    rng = np.random.default_rng(0)
    for s in (2, 5, 40, 300):
        seg, owner = _segments(rng, s)
        a = _as_set(*kernels._segment_pairs_numpy(seg, owner))
        b = _as_set(*kernels._segment_pairs_numba(seg, owner))
        assert a == b


@numba_only
def test_interleavings_backends_agree():
    rng = np.random.default_rng(1)
    for k in (2, 10, 200):
        c = np.sort(rng.choice(4 * k, size=(k, 2), replace=True), axis=1)
        c = c[c[:, 0] != c[:, 1]]
        pa, qa = kernels._interleave_numpy(c)
        pb, qb = kernels._interleave_numba(c)
        assert {tuple(map(int, p)) for p in pa} == {tuple(map(int, p)) for p in pb}
        assert list(qa) == list(qb)


@numba_only
def test_treewidth_backends_agree():
    rng = np.random.default_rng(2)
    for n in range(1, 12):
        masks = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.4:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
        assert kernels._treewidth_py(masks, n) == int(kernels._treewidth_numba(np.array(masks, dtype=np.int64), n))


def test_interleaving_definition():
    chords = np.array([[0, 2], [1, 3], [4, 5], [0, 5]], dtype=np.int64)
    pairs, per = kernels.interleavings(chords)
    assert {tuple(map(int, p)) for p in pairs} == {(0, 1)}
    assert list(per) == [1, 1, 0, 0]


def test_segment_pair_codes():
    seg = np.array([[0, 0, 4, 4], [0, 4, 4, 0], [5, 5, 6, 6], [4, 4, 5, 5]], dtype=np.int64)
    owner = np.array([[0, 0], [1, 0], [2, 0], [3, 0]], dtype=np.int64)
    got = _as_set(*kernels.segment_pairs(seg, owner))
    assert (0, 1, kernels.CROSS) in got
    assert (0, 3, kernels.TOUCH) in got and (2, 3, kernels.TOUCH) in got


@pytest.mark.parametrize("g, tw", [(cycle_graph(6), 2), (complete_graph(6), 5), (grid_graph(3, 4), 3), (Graph(4), 0)])
def test_treewidth_known_values(g, tw):
    assert treewidth_exact_small(g) == tw


def test_treewidth_matches_networkx_on_trees_and_chordal():
    rng = np.random.default_rng(3)
    for n in range(2, 14):
        t = nx.random_labeled_tree(n, seed=int(rng.integers(1 << 30))) if hasattr(nx, "random_labeled_tree") \
            else nx.random_tree(n, seed=int(rng.integers(1 << 30)))
        assert treewidth_exact_small(Graph.from_networkx(t)) == 1


def test_fallback_selected_by_env_flag():
    env = dict(os.environ, PLANDEC_NO_NUMBA="1")
    code = ("from plandec import kernels, oracles; from plandec.graph import grid_graph;"
            "print(kernels.backend(), oracles.treewidth_exact_small(grid_graph(3, 3)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "3"]
