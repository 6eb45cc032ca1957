"""Planarizing matchings and straight-line drawings of K3,3-minor-free graphs.

Each K5 piece of the clique-sum tree loses planarity-breaking power once one
of its edges is contracted, so one matching edge per K5 piece suffices. The
contracted graph is planar, so the matched pairs and the remaining singletons
form a planar partition of width 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, canon
from .partition import Partition, PartitionDrawing, produce_drawing
from .sumtree import SumTree, wagner_k33_decompose

Edge = tuple[int, int]


@dataclass(frozen=True)
class PlanarizingMatching:
    edges: tuple[Edge, ...]
    e: Edge | None  # the edge the matching tries to avoid
    disjoint_from_e: bool
    tree: SumTree


def k33_planarizing_matching(g: Graph, e: Edge | None = None) -> PlanarizingMatching:
    """A matching with one edge in every K5 piece; contracting it leaves a planar graph.

    The matching avoids the endpoints of ``e`` where the tree allows it; the
    flag ``disjoint_from_e`` reports whether it succeeded.
    """
    tree = wagner_k33_decompose(g)
    if e is not None:
        e = canon(*e)
        if not g.has_edge(*e):
            raise GraphError(f"{e} is not an edge")
    real = set(g.edges)
    np_ = len(tree.pieces)
    nbrs: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(np_)]
    for j in tree.joins:
        nbrs[j.a].append((j.b, j.clique))
        nbrs[j.b].append((j.a, j.clique))
    root = 0
    if e is not None:
        root = next((i for i, p in enumerate(tree.pieces) if e in p.edges), 0)
    avoid = set(e) if e is not None else set()
    matched: set[int] = set()
    chosen: list[Edge] = []
    seen = [False] * np_
    order = []
    for start in [root] + list(range(np_)):
        if seen[start]:
            continue
        seen[start] = True
        dq = deque([(start, ())])
        while dq:
            x, pc = dq.popleft()
            order.append((x, pc))
            for y, c in nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    dq.append((y, c))
    for x, pc in order:
        p = tree.pieces[x]
        if p.kind != "K5":
            continue
        if any(a in p.verts and b in p.verts for a, b in chosen):
            continue
        cands = [f for f in p.edges if f in real and f[0] not in matched and f[1] not in matched]
        if not cands:
            raise GraphError(f"no free edge in the K5 piece on {list(p.verts)}")

        def cost(f: Edge) -> tuple[int, int, Edge]:
            return (len(set(f) & avoid), len(set(f) & set(pc)), f)

        f = min(cands, key=cost)
        chosen.append(f)
        matched.update(f)
    ok = not any(set(f) & avoid for f in chosen)
    return PlanarizingMatching(tuple(sorted(chosen)), e, ok, tree)


def contract_matching_graph(g: Graph, matching) -> tuple[Graph, list[int], list[frozenset[int]]]:
    """``G/M`` with the map from vertices to contracted nodes and each node's preimage."""
    rep = list(range(g.n))
    for a, b in matching:
        rep[b] = a
    ids = sorted(set(rep))
    nid = {r: i for i, r in enumerate(ids)}
    node = [nid[rep[v]] for v in range(g.n)]
    groups: list[set[int]] = [set() for _ in ids]
    for v in range(g.n):
        groups[node[v]].add(v)
    h = Graph(len(ids), {canon(node[u], node[v]) for u, v in g.edges if node[u] != node[v]})
    return h, node, [frozenset(s) for s in groups]


def k33_planar_partition(g: Graph, e: Edge | None = None) -> Partition:
    """Planar width-2 partition: matching pairs and singletons, with pattern ``G/M``."""
    m = k33_planarizing_matching(g, e)
    _, _, groups = contract_matching_graph(g, m.edges)
    return Partition(g, tuple(groups))


# ---------------------------------------------------------------------------
# Straight-line drawing
# ---------------------------------------------------------------------------


def k33_rectilinear_drawing(g: Graph, e: Edge | None = None, seed: int = 0) -> PartitionDrawing:
    """Straight-line drawing from the planar width-2 partition; at most ``2 Delta`` crossings per edge."""
    pd = produce_drawing(g, k33_planar_partition(g, e), seed=seed)
    pd.total_bound = min(pd.total_bound, g.max_degree() * max(0, 3 * g.n - 5))
    return pd


__all__ = [
    "PlanarizingMatching", "k33_planarizing_matching", "contract_matching_graph", "k33_planar_partition",
    "k33_rectilinear_drawing",
]
