"""Vertex partitions, their patterns, tree-partitions and the drawings they induce."""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx

from .decomposition import Decomposition, DecompositionError, validate
from .drawing import CrossingReport, Drawing, DrawingError, convex_count, convex_drawing, count_crossings
from .graph import Graph, GraphError, canon
from .oracles import oracle_caps, treewidth_exact_small
from .planar import is_outerplanar, outerplanar_order, planar
from .render import render


@dataclass(frozen=True)
class Partition:
    host: Graph
    bags: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.bags:
            if not b:
                raise GraphError("partition bags must be nonempty")
            if b & seen:
                raise GraphError("partition bags must be disjoint")
            seen |= b
        if seen != set(range(self.host.n)):
            raise GraphError("partition bags must cover every vertex")

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def bag_of(self) -> list[int]:
        out = [0] * self.host.n
        for i, b in enumerate(self.bags):
            for v in b:
                out[v] = i
        return out

    @property
    def pattern(self) -> Graph:
        return partition_pattern(self)

    def as_decomposition(self) -> Decomposition:
        return Decomposition(self.host, self.bags, self.pattern, strong=False, p=2)

    def to_json(self) -> dict:
        return {"host": {"n": self.host.n, "edges": [list(e) for e in self.host.edges]},
                "bags": [sorted(b) for b in self.bags]}

    @classmethod
    def from_json(cls, data: dict) -> Partition:
        h = data["host"]
        return cls(Graph(int(h["n"]), h["edges"]), tuple(frozenset(b) for b in data["bags"]))


def partition_pattern(p: Partition) -> Graph:
    """Quotient graph: one vertex per bag, an edge wherever a host edge runs between two bags."""
    where = p.bag_of()
    return Graph(len(p.bags), {canon(where[u], where[v]) for u, v in p.host.edges if where[u] != where[v]})


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(g.components())


# ---------------------------------------------------------------------------
# Tree-partitions
# ---------------------------------------------------------------------------


def _layered(g: Graph, comp: set[int], root: set[int]) -> list[frozenset[int]]:
    """BFS layering below ``root``: each child bag is the neighbourhood of its parent inside one component."""
    parts = [frozenset(root)]
    stack = [(frozenset(root), comp - root)]
    while stack:
        par, rest = stack.pop()
        seen: set[int] = set()
        for s in sorted(rest):
            if s in seen:
                continue
            k = {s}
            seen.add(s)
            st = [s]
            while st:
                x = st.pop()
                for y in g.adj[x]:
                    if y in rest and y not in seen:
                        seen.add(y)
                        k.add(y)
                        st.append(y)
            child = frozenset(v for v in k if g.adj[v] & par)
            parts.append(child)
            stack.append((child, k - child))
    return parts


def _heuristic_td(g: Graph) -> Decomposition:
    """Tree decomposition from the min-degree elimination heuristic."""
    if g.n == 0:
        return Decomposition(g, (), Graph(0), strong=True, p=2)
    _, tree = nx.algorithms.approximation.treewidth_min_degree(g.to_networkx() if g.m else _with_nodes(g))
    nodes = sorted(tree.nodes(), key=lambda b: sorted(b))
    idx = {b: i for i, b in enumerate(nodes)}
    es = [canon(idx[a], idx[b]) for a, b in tree.edges()]
    return Decomposition(g, tuple(frozenset(b) for b in nodes), Graph(len(nodes), es), strong=True, p=2)


def _with_nodes(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    return h


def tree_partition(g: Graph, td: Decomposition | None = None) -> Partition:
    """Partition with a forest pattern, trying vertices, tree-decomposition bags and half-bags as roots."""
    if td is None:
        td = _heuristic_td(g)
    else:
        rep = validate(td, check_planar=False)
        if td.host != g or not rep.ok or not td.strong or not is_forest(td.dgraph):
            raise DecompositionError("td must be a valid strong tree decomposition of g")
    roots: list[frozenset[int]] = [frozenset((v,)) for v in range(g.n)]
    for b in td.bags:
        if b:
            s = sorted(b)
            roots.append(frozenset(s))
            roots.append(frozenset(s[: max(1, len(s) // 2)]))
    bags: list[frozenset[int]] = []
    for comp in g.components():
        cs = set(comp)
        best = None
        for r in roots:
            if not r <= cs:
                continue
            parts = _layered(g, cs, set(r))
            key = (max(len(p) for p in parts), len(parts) * -1)
            if best is None or key < best[0]:
                best = (key, parts)
        assert best is not None
        bags.extend(best[1])
    return Partition(g, tuple(bags))


def width_bound(tw: int, delta: int) -> float:
    """Target tree-partition width ``5/2 (tw+1)(7/2 Delta - 1)``."""
    return 2.5 * (tw + 1) * (3.5 * delta - 1)


# ---------------------------------------------------------------------------
# Drawings from partitions
# ---------------------------------------------------------------------------


@dataclass
class PartitionDrawing:
    drawing: Drawing
    report: CrossingReport
    partition: Partition
    per_edge_bound: int  # 2 Delta (width - 1)
    total_bound: int  # (width - 1) Delta |E|
    shares_bag: bool  # every crossing pair has endpoints in a common bag
    convex_agrees: bool | None = None  # only for convex drawings

    @property
    def bounds_ok(self) -> bool:
        return (self.report.ok and self.report.max_per_edge <= self.per_edge_bound
                and self.report.total <= self.total_bound and self.shares_bag)


def _shares_bag(p: Partition, report: CrossingReport) -> bool:
    where = p.bag_of()
    g = p.host
    for a, b in report.pairs:
        ea, eb = g.edges[a], g.edges[b]
        if set(ea) & set(eb):
            return False
        if not {where[v] for v in ea} & {where[v] for v in eb}:
            return False
    return True


def _bounds(p: Partition) -> tuple[int, int]:
    delta = p.host.max_degree()
    w = max(p.width, 1)
    return 2 * delta * (w - 1), (w - 1) * delta * p.host.m


def produce_drawing(g: Graph, p: Partition, seed: int = 0) -> PartitionDrawing:
    """Straight-line drawing from a partition with a planar pattern."""
    if p.host != g:
        raise GraphError("partition does not belong to this graph")
    d = p.as_decomposition()
    if not planar(d.dgraph):
        raise GraphError("pattern is not planar")
    res = render(d, seed=seed, uncross=False)
    pe, tot = _bounds(p)
    return PartitionDrawing(res.drawing, res.report, p, pe, tot, _shares_bag(p, res.report))


def produce_convex_drawing(g: Graph, p: Partition, seed: int = 0) -> PartitionDrawing:
    """Convex drawing: bags are consecutive on the circle, in the outer order of the pattern."""
    if p.host != g:
        raise GraphError("partition does not belong to this graph")
    pat = p.pattern
    if not is_outerplanar(pat):
        raise GraphError("pattern is not outerplanar")
    order = [v for b in outerplanar_order(pat) for v in sorted(p.bags[b])]
    dr = convex_drawing(g, order, seed=seed)
    rep = count_crossings(dr)
    if not rep.ok:
        raise DrawingError("convex placement is degenerate")
    cc = convex_count(order, g)
    pe, tot = _bounds(p)
    return PartitionDrawing(dr, rep, p, pe, tot, _shares_bag(p, rep), cc.total == rep.total)


@dataclass
class TreewidthPipelineResult:
    partition: Partition
    treewidth: int
    exact_treewidth: bool
    width_bound: float
    drawing: PartitionDrawing
    per_edge_target: int  # 5 Delta (tw+1)(7 Delta - 1), strict
    total_target: float  # 17/2 (tw+1) Delta^2 |E|, strict

    @property
    def width_ok(self) -> bool:
        return self.partition.width <= self.width_bound

    @property
    def pattern_is_forest(self) -> bool:
        return is_forest(self.partition.pattern)

    @property
    def crossings_ok(self) -> bool:
        r = self.drawing.report
        return r.ok and r.max_per_edge < self.per_edge_target and r.total < self.total_target


def convex_treewidth_pipeline(g: Graph, td: Decomposition | None = None, seed: int = 0) -> TreewidthPipelineResult:
    """Tree-partition the graph and draw it convexly from the partition."""
    exact = g.n <= oracle_caps()[0]
    if exact:
        tw = max(0, treewidth_exact_small(g))
    else:
        tdh = td if td is not None else _heuristic_td(g)
        tw = max(0, tdh.width - 1)
    p = tree_partition(g, td)
    pd = produce_convex_drawing(g, p, seed=seed)
    delta = g.max_degree()
    return TreewidthPipelineResult(
        p, tw, exact, width_bound(tw, delta), pd,
        5 * delta * (tw + 1) * (7 * delta - 1), 8.5 * (tw + 1) * delta * delta * g.m,
    )


__all__ = [
    "Partition", "partition_pattern", "is_forest", "tree_partition", "width_bound", "PartitionDrawing",
    "produce_drawing", "produce_convex_drawing", "TreewidthPipelineResult", "convex_treewidth_pipeline",
    "is_outerplanar",
]
