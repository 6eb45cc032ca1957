"""From drawings back to decompositions.

A drawing is planarised (every crossing becomes a node) and each crossing
node gets a bag made of one endpoint from each of the two crossing edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .decomposition import Decomposition, compose, contract_groups
from .drawing import CrossingReport, Drawing, DrawingError, count_crossings
from .graph import Graph, canon
from .planar import planar_embedding_or_raise, triangulate_planar


class ConvexPreconditionError(DrawingError):
    def __init__(self, msg: str, witness: tuple[int, int]) -> None:
        super().__init__(msg)
        self.witness = witness


@dataclass
class Planarisation:
    """Uncontracted decomposition built from a drawing plus bookkeeping."""

    decomposition: Decomposition
    vertex_node: dict[int, int]  # non-isolated vertex -> node id of its singleton bag
    first_on_side: dict[tuple[int, int], int]  # (edge, endpoint) -> adjacent crossing node
    split_node: dict[int, int]  # edge -> subdivision node (strong only)
    covered: set[int]
    crossings: int
    isolated: list[int]


def _crossing_param(poly, seg: int, pt) -> tuple[int, Fraction]:
    (ax, ay), (bx, by) = poly[seg], poly[seg + 1]
    dx, dy = bx - ax, by - ay
    t = ((pt[0] - ax) * dx + (pt[1] - ay) * dy) / (dx * dx + dy * dy)
    return seg, t


def planarise(dr: Drawing, strong: bool, report: CrossingReport | None = None,
              pair_isolated: bool = True) -> Planarisation:
    g = dr.host
    report = count_crossings(dr) if report is None else report
    if not report.ok:
        raise DrawingError("degenerate drawing: " + "; ".join(report.degeneracies[:3]))
    along: list[list[tuple[tuple[int, Fraction], int]]] = [[] for _ in range(g.m)]
    for c, ((ea, sa, eb, sb), pt) in enumerate(zip(report.details, report.points)):
        along[ea].append((_crossing_param(dr.polyline(ea), sa, pt), c))
        along[eb].append((_crossing_param(dr.polyline(eb), sb, pt), c))
    for lst in along:
        lst.sort()
    r = [len(lst) for lst in along]

    # Split points: crossings 1..t of edge e carry its first endpoint, the rest its second.
    covered: set[int] = set()
    split = [0] * g.m
    single = []
    for e, (u, w) in enumerate(g.edges):
        if r[e] >= 2:
            split[e] = (r[e] + 1) // 2
            covered.update((u, w))
        elif r[e] == 1:
            single.append(e)
    # Edges with one crossing cover one endpoint each; maximise coverage by matching.
    bip = nx.Graph()
    tops = [("e", e) for e in single]
    bip.add_nodes_from(tops)
    for e in single:
        for v in g.edges[e]:
            if v not in covered:
                bip.add_edge(("e", e), ("v", v))
    mate = nx.bipartite.hopcroft_karp_matching(bip, top_nodes=tops) if bip.number_of_edges() else {}
    for e in single:
        v = mate.get(("e", e))
        if v is None:
            split[e] = 1
        else:
            split[e] = 1 if v[1] == g.edges[e][0] else 0
            covered.add(v[1])

    label: dict[tuple[int, int], int] = {}  # (crossing, edge) -> endpoint
    for e, lst in enumerate(along):
        u, w = g.edges[e]
        for i, (_, c) in enumerate(lst):
            label[(c, e)] = u if i < split[e] else w

    bags: list[frozenset[int]] = []
    isolated = [v for v in range(g.n) if not g.adj[v]]
    vertex_node: dict[int, int] = {}
    for v in range(g.n):
        if g.adj[v] or not pair_isolated:
            vertex_node[v] = len(bags)
            bags.append(frozenset((v,)))
    if pair_isolated:
        for i in range(0, len(isolated), 2):
            bags.append(frozenset(isolated[i:i + 2]))
    cnode = []
    for c, (ea, _, eb, _) in enumerate(report.details):
        cnode.append(len(bags))
        bags.append(frozenset((label[(c, ea)], label[(c, eb)])))
    dedges: set[tuple[int, int]] = set()
    first_on_side: dict[tuple[int, int], int] = {}
    split_node: dict[int, int] = {}
    for e, (u, w) in enumerate(g.edges):
        path = [vertex_node[u]] + [cnode[c] for _, c in along[e]] + [vertex_node[w]]
        if split[e] > 0:
            first_on_side[(e, u)] = path[1]
        if split[e] < r[e]:
            first_on_side[(e, w)] = path[-2]
        if strong:
            s = len(bags)
            bags.append(frozenset((u, w)))
            split_node[e] = s
            t = split[e]
            path = path[: t + 1] + [s] + path[t + 1:]
        for a, b in zip(path, path[1:]):
            if a != b:
                dedges.add(canon(a, b))
    d = Decomposition(g, tuple(bags), Graph(len(bags), dedges), strong=strong, p=2)
    return Planarisation(d, vertex_node, first_on_side, split_node, covered, len(report.details), isolated)


def drawing_to_decomposition(dr: Drawing, strong: bool = False) -> Decomposition:
    """Planar width-2 decomposition of the drawn graph.

    Every vertex whose singleton bag can be merged into an adjacent crossing bag
    is merged; with ``strong`` the remaining singletons merge into the
    subdivision bag of an incident edge.
    """
    pl = planarise(dr, strong)
    g = dr.host
    groups = []
    for v, node in sorted(pl.vertex_node.items()):
        target = None
        for e in sorted(g.edge_index(v, w) for w in g.adj[v]):
            if (e, v) in pl.first_on_side:
                target = pl.first_on_side[(e, v)]
                break
        if target is None and strong:
            for e in sorted(g.edge_index(v, w) for w in g.adj[v]):
                target = pl.split_node[e]
                break
        if target is not None:
            groups.append((node, target))
    return contract_groups(pl.decomposition, groups)


def expected_orders(dr: Drawing, report: CrossingReport | None = None) -> dict[str, int]:
    """The closed-form order targets ``ceil(n0/2)+q+c`` and ``ceil(n0/2)+c+|E|``."""
    g = dr.host
    report = count_crossings(dr) if report is None else report
    crossed = {v for e, k in enumerate(report.per_edge) if k for v in g.edges[e]}
    n0 = sum(1 for v in range(g.n) if not g.adj[v])
    q = sum(1 for v in range(g.n) if g.adj[v] and v not in crossed)
    c = report.total
    return {"n0": n0, "q": q, "c": c, "non_strong": -(-n0 // 2) + q + c, "strong": -(-n0 // 2) + c + g.m}


# ---------------------------------------------------------------------------
# Convex drawings to tree decompositions
# ---------------------------------------------------------------------------


@dataclass
class ConvexTreeResult:
    decomposition: Decomposition  # strong tree decomposition of the host
    k: int
    depth: int  # BFS depth of the auxiliary graph from the super-root
    aux_width: int  # width of the tree decomposition of the auxiliary graph
    width_bound: int  # 6 * floor(k / 2) + 12

    @property
    def width_ok(self) -> bool:
        return self.decomposition.width <= self.width_bound


def check_k_condition(dr: Drawing, k: int, report: CrossingReport | None = None) -> tuple[int, int] | None:
    """A crossing pair where both edges cross more than ``k`` edges, or ``None``."""
    report = count_crossings(dr) if report is None else report
    for a, b in report.pairs:
        if min(report.per_edge[a], report.per_edge[b]) > k:
            return (a, b)
    return None


def convex_to_treedecomp(dr: Drawing, k: int) -> ConvexTreeResult:
    if not dr.convex:
        raise DrawingError("a convex drawing is required")
    report = count_crossings(dr)
    if not report.ok:
        raise DrawingError("degenerate drawing: " + "; ".join(report.degeneracies[:3]))
    bad = check_k_condition(dr, k, report)
    if bad is not None:
        a, b = bad
        raise ConvexPreconditionError(
            f"edges {dr.host.edges[a]} and {dr.host.edges[b]} cross and both cross more than {k} edges", bad)
    pl = planarise(dr, strong=True, report=report, pair_isolated=False)
    dd = pl.decomposition
    dg = dd.dgraph
    root = dg.n
    aux = Graph(dg.n + 1, list(dg.edges) + [(x, root) for x in pl.vertex_node.values()])
    if aux.n < 3:
        tree = Decomposition(dg, (frozenset(range(dg.n)),), Graph(1), strong=True, p=2)
        return ConvexTreeResult(compose(dd, tree), k, 1, tree.width, 6 * (k // 2) + 12)
    tri, emb = triangulate_planar(planar_embedding_or_raise(aux))
    dist = [-1] * tri.n
    parent = [-1] * tri.n
    dist[root] = 0
    dq = deque([root])
    while dq:
        x = dq.popleft()
        for y in sorted(tri.adj[x]):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                parent[y] = x
                dq.append(y)
    tree_edges = {canon(y, parent[y]) for y in range(tri.n) if parent[y] >= 0}
    faces = [tuple(f) for f in emb.faces]
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(faces):
        for j in range(3):
            by_edge.setdefault(canon(f[j], f[(j + 1) % 3]), []).append(i)
    fedges = [(fs[0], fs[1]) for e, fs in sorted(by_edge.items()) if e not in tree_edges and len(fs) == 2]

    def root_path(x: int) -> list[int]:
        out = []
        while x != root:
            out.append(x)
            x = parent[x]
        return out

    paths = [root_path(x) for x in range(tri.n)]
    bags = tuple(frozenset(y for x in f for y in paths[x]) for f in faces)
    tree = Decomposition(dg, bags, Graph(len(faces), fedges), strong=True, p=2)
    out = compose(dd, tree)
    return ConvexTreeResult(out, k, max(dist), tree.width, 6 * (k // 2) + 12)


__all__ = [
    "drawing_to_decomposition", "planarise", "Planarisation", "expected_orders",
    "convex_to_treedecomp", "ConvexTreeResult", "ConvexPreconditionError", "check_k_condition",
]
