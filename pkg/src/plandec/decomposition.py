"""Graph decompositions: the type, a validator, and the manipulation tools."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, GraphError, canon, clique_number, degeneracy_order, enumerate_cliques, is_matching, max_matching
from .planar import planar, triangulate_planar, planar_embedding_or_raise


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class DecompMetrics:
    width: int
    spread: int
    order: int
    per_vertex_spread: tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """A graph ``dgraph`` whose vertices are bags (vertex subsets of ``host``).

    ``strong`` and ``p`` are claims checked by :func:`validate`. Bags form a
    multiset: two bag ids may hold equal contents.
    """

    host: Graph
    bags: tuple[frozenset[int], ...]
    dgraph: Graph
    strong: bool = False
    p: int = 2

    def __post_init__(self) -> None:
        if self.dgraph.n != len(self.bags):
            raise DecompositionError("dgraph must have one vertex per bag")

    @property
    def order(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def bags_of(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.host.n)]
        for i, bag in enumerate(self.bags):
            for v in bag:
                out[v].append(i)
        return out

    def spread(self, v: int | None = None) -> int:
        counts = [len(b) for b in self.bags_of()]
        if v is not None:
            return counts[v]
        return max(counts, default=0)

    def metrics(self) -> DecompMetrics:
        counts = tuple(len(b) for b in self.bags_of())
        return DecompMetrics(self.width, max(counts, default=0), self.order, counts)

    def size_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for b in self.bags:
            hist[len(b)] = hist.get(len(b), 0) + 1
        return hist

    def with_claims(self, strong: bool | None = None, p: int | None = None) -> Decomposition:
        return Decomposition(
            self.host, self.bags, self.dgraph,
            self.strong if strong is None else strong,
            self.p if p is None else p,
        )

    def to_json(self) -> dict:
        return {
            "host": {"n": self.host.n, "edges": [list(e) for e in self.host.edges]},
            "bags": [sorted(b) for b in self.bags],
            "dedges": [list(e) for e in self.dgraph.edges],
            "strong": self.strong,
            "p": self.p,
        }

    @classmethod
    def from_json(cls, data: dict) -> Decomposition:
        h = data["host"]
        host = Graph(int(h["n"]), [tuple(e) for e in h["edges"]])
        bags = tuple(frozenset(int(v) for v in b) for b in data["bags"])
        dg = Graph(len(bags), [tuple(e) for e in data["dedges"]])
        return cls(host, bags, dg, bool(data.get("strong", False)), int(data.get("p", 2)))


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str]
    metrics: DecompMetrics
    planar: bool | None = None
    edge_bound: tuple[int, int] = (0, 0)  # (|E(G)|, right-hand side of the edge-count inequality)
    notes: list[str] = field(default_factory=list)


def _touch(d: Decomposition, A: Sequence[int], B: Sequence[int]) -> bool:
    sb = set(B)
    for x in A:
        if x in sb or d.dgraph.adj[x] & sb:
            return True
    return False


def _connected_within(g: Graph, nodes: Sequence[int]) -> bool:
    if not nodes:
        return False
    inside = set(nodes)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in inside and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(inside)


def validate(d: Decomposition, check_planar: bool = True) -> ValidationReport:
    """Check every defining property of ``d`` and its claimed qualifiers."""
    g = d.host
    viol: list[str] = []
    for i, bag in enumerate(d.bags):
        bad = [v for v in bag if not 0 <= v < g.n]
        if bad:
            viol.append(f"bag {i} holds non-vertices {bad}")
    bags_of = [[] for _ in range(g.n)]  # type: list[list[int]]
    for i, bag in enumerate(d.bags):
        for v in bag:
            if 0 <= v < g.n:
                bags_of[v].append(i)
    for v in range(g.n):
        if not bags_of[v] or not _connected_within(d.dgraph, bags_of[v]):
            viol.append(f"D({v}) empty or disconnected")
    for v, w in g.edges:
        if d.strong:
            if not set(bags_of[v]) & set(bags_of[w]):
                viol.append(f"D({v}) and D({w}) do not intersect (edge {v}{w}, strong claimed)")
        elif not _touch(d, bags_of[v], bags_of[w]):
            viol.append(f"D({v}) and D({w}) do not touch (edge {v}{w})")
    if d.p > 2:
        adjacent_pairs = [(d.bags[a], d.bags[b]) for a, b in d.dgraph.edges]
        for c in enumerate_cliques(g, d.p):
            if len(c) < 3:
                continue
            cs = set(c)
            if any(cs <= b for b in d.bags):
                continue
            if d.strong:
                viol.append(f"clique {list(c)} not inside one bag (strong {d.p}-decomposition claimed)")
            elif not any(cs <= (a | b) for a, b in adjacent_pairs):
                viol.append(f"clique {list(c)} not covered by one bag or two adjacent bags")
    k = d.width
    if d.strong:
        rhs = math.comb(k, 2) * d.order
    else:
        rhs = k * k * d.dgraph.m + math.comb(k, 2) * d.order
    if not viol and g.m > rhs:
        viol.append(f"edge count {g.m} exceeds {rhs}")
    pl = planar(d.dgraph) if check_planar else None
    return ValidationReport(not viol, viol, d.metrics(), pl, (g.m, rhs))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def identity_decomposition(g: Graph) -> Decomposition:
    return Decomposition(g, tuple(frozenset((v,)) for v in range(g.n)), g, strong=g.m == 0)


def quadratic_decomp(g: Graph) -> Decomposition:
    """Strong planar width-2 decomposition on the grid of pairs ``{i, j}``, ``i <= j``."""
    n = g.n
    ids: dict[tuple[int, int], int] = {}
    bags = []
    for i in range(n):
        for j in range(i, n):
            ids[(i, j)] = len(bags)
            bags.append(frozenset((i, j)))
    es = set()
    for i in range(n - 1):
        for j in range(n):
            a, b = ids[canon(i, j) if i != j else (i, i)], ids[canon(i + 1, j) if i + 1 != j else (j, j)]
            if a != b:
                es.add(canon(a, b))
    return Decomposition(g, tuple(bags), Graph(len(bags), es), strong=True, p=2)


def degen_omega(g: Graph) -> Decomposition:
    """Bags ``{v} | N^-(v)`` over an acyclic orientation of indegree at most the degeneracy."""
    _, _, orient = degeneracy_order(g)
    inn: list[set[int]] = [set() for _ in range(g.n)]
    for t, h in orient.arcs:
        inn[h].add(t)
    bags = tuple(frozenset({v} | inn[v]) for v in range(g.n))
    return Decomposition(g, bags, g, strong=True, p=max(2, clique_number(g)))


# ---------------------------------------------------------------------------
# Contraction tools
# ---------------------------------------------------------------------------


def contract_groups(d: Decomposition, groups: Iterable[Iterable[int]]) -> Decomposition:
    """Merge each group of bag ids into one bag (the union of their contents).

    Every bag id not mentioned stays on its own. New ids follow the smallest
    old id of each group. Groups are expected to induce connected subgraphs.
    """
    parent = list(range(d.order))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for grp in groups:
        grp = list(grp)
        for x in grp[1:]:
            a, b = find(grp[0]), find(x)
            if a != b:
                parent[max(a, b)] = min(a, b)
    roots = sorted({find(x) for x in range(d.order)})
    new_id = {r: i for i, r in enumerate(roots)}
    contents: list[set[int]] = [set() for _ in roots]
    for x in range(d.order):
        contents[new_id[find(x)]] |= d.bags[x]
    es = set()
    for a, b in d.dgraph.edges:
        ra, rb = new_id[find(a)], new_id[find(b)]
        if ra != rb:
            es.add(canon(ra, rb))
    return Decomposition(d.host, tuple(frozenset(c) for c in contents), Graph(len(roots), es), d.strong, d.p)


def contract_edge(d: Decomposition, x: int, y: int) -> Decomposition:
    if not d.dgraph.has_edge(x, y):
        raise DecompositionError(f"bags {x} and {y} are not adjacent")
    return contract_groups(d, [(x, y)])


def contract_matching(d: Decomposition, m: Iterable[Sequence[int]]) -> Decomposition:
    m = [tuple(e) for e in m]
    if not is_matching(d.dgraph, m):
        raise DecompositionError("not a matching of the decomposition graph")
    return contract_groups(d, m)


@dataclass(frozen=True)
class ReduceResult:
    decomposition: Decomposition
    iterations: int
    planned_iterations: int
    c: float


def reduce_order(d: Decomposition, target: int | None = None) -> ReduceResult:
    """Triangulate, contract a maximum matching, repeat until order <= ``target``.

    ``target`` defaults to ``|V(G)|``. At most ``ceil(log_{3/2} c)`` rounds are
    planned with ``c = order / target``; each round is a planar contraction.
    """
    if not planar(d.dgraph):
        raise DecompositionError("reduce_order needs a planar decomposition")
    target = d.host.n if target is None else target
    target = max(target, 1)
    c = d.order / target
    planned = 0 if c <= 1 else math.ceil(math.log(c, 1.5) - 1e-12)
    cur = d
    it = 0
    while cur.order > target and it < max(planned, 1) + 2:
        it += 1
        dg = cur.dgraph
        if dg.n >= 3:
            emb = planar_embedding_or_raise(dg)
            tri, _ = triangulate_planar(emb)
        else:
            tri = Graph(dg.n, combinations(range(dg.n), 2))
        cur = Decomposition(cur.host, cur.bags, tri, cur.strong, cur.p)
        cur = contract_matching(cur, max_matching(tri))
    return ReduceResult(cur, it, planned, c)


# ---------------------------------------------------------------------------
# Composition and omega decompositions
# ---------------------------------------------------------------------------


def compose(d: Decomposition, j: Decomposition) -> Decomposition:
    """Compose ``d`` (of ``G``) with ``j`` (a decomposition of ``d.dgraph``)."""
    if j.host != d.dgraph:
        raise DecompositionError("j must decompose the graph of d")
    bags = tuple(frozenset().union(*(d.bags[x] for x in y)) if y else frozenset() for y in j.bags)
    return Decomposition(d.host, bags, j.dgraph, d.strong, d.p)


def to_omega(d: Decomposition, g: Graph | None = None) -> Decomposition:
    """Strong omega-decomposition isomorphic to ``d.dgraph`` of width at most ``k(d+1)``."""
    g = d.host if g is None else g
    if g != d.host:
        raise DecompositionError("d must decompose g")
    base = degen_omega(g)
    # base has dgraph == g, and d is a decomposition of g: compose d over base.
    return compose(base, Decomposition(g, d.bags, d.dgraph, d.strong, d.p))


# ---------------------------------------------------------------------------
# Clique sums
# ---------------------------------------------------------------------------


def covering_pair(bags: Sequence[frozenset[int]], dedges: Iterable[tuple[int, int]], clique: Iterable[int],
                  single_only: bool = False) -> tuple[int, int] | None:
    """A bag containing ``clique`` as ``(x, x)``, else an adjacent covering pair."""
    c = frozenset(clique)
    for i, b in enumerate(bags):
        if c <= b:
            return (i, i)
    if single_only:
        return None
    best = None
    for a, b in dedges:
        if c <= (bags[a] | bags[b]):
            cand = (min(a, b), max(a, b))
            if best is None or cand < best:
                best = cand
    return best


def sum_graphs(g1: Graph, g2: Graph, join: Sequence[tuple[int, int]], deleted: Iterable[Sequence[int]] = ()
               ) -> tuple[Graph, list[int], list[int]]:
    """Clique-sum of ``g1`` and ``g2`` identifying ``join`` pairs ``(v1, v2)``.

    Returns the sum graph with the vertex maps of both summands. ``deleted``
    lists join edges (in the sum's ids) removed after identification.
    """
    for side, g in ((0, g1), (1, g2)):
        vs = [p[side] for p in join]
        if len(set(vs)) != len(vs) or any(not g.has_edge(a, b) for a, b in combinations(vs, 2)):
            raise DecompositionError("join set must be a clique in both summands")
    map1 = list(range(g1.n))
    map2 = [-1] * g2.n
    for v1, v2 in join:
        map2[v2] = v1
    nxt = g1.n
    for v in range(g2.n):
        if map2[v] < 0:
            map2[v] = nxt
            nxt += 1
    es = [(map1[u], map1[v]) for u, v in g1.edges] + [(map2[u], map2[v]) for u, v in g2.edges]
    gone = {canon(*e) for e in deleted}
    joined = {map1[v1] for v1, _ in join}
    for e in gone:
        if not set(e) <= joined:
            raise DecompositionError("only join edges may be deleted")
    g = Graph(nxt, [e for e in es if canon(*e) not in gone])
    return g, map1, map2


def raw_clique_sum(bags1: list[frozenset[int]], ed1: Iterable[tuple[int, int]],
                   bags2: list[frozenset[int]], ed2: Iterable[tuple[int, int]],
                   clique: Iterable[int], strong: bool) -> tuple[list[frozenset[int]], set[tuple[int, int]], tuple[int, int, int, int]]:
    """Join two decompositions over a shared vertex namespace along ``clique``.

    Returns the bags, edges and the covering ids ``(X1, Y1, X2, Y2)`` (offsets applied).
    """
    ed1, ed2 = list(ed1), list(ed2)
    c = list(clique)
    p1 = covering_pair(bags1, ed1, c, single_only=strong)
    p2 = covering_pair(bags2, ed2, c, single_only=strong)
    if p1 is None or p2 is None:
        raise DecompositionError(f"no bag or adjacent pair covers the join set {sorted(c)}")
    off = len(bags1)
    bags = list(bags1) + list(bags2)
    es = {canon(a, b) for a, b in ed1} | {canon(a + off, b + off) for a, b in ed2}
    x1, y1 = p1
    x2, y2 = p2[0] + off, p2[1] + off
    if bags1 and bags2:
        for a in {x1, y1}:
            for b in {x2, y2}:
                es.add(canon(a, b))
    return bags, es, (x1, y1, x2, y2)


def clique_sum_decomp(d1: Decomposition, d2: Decomposition, join: Sequence[tuple[int, int]],
                      deleted: Iterable[Sequence[int]] = (), merge_nested: bool = False) -> Decomposition:
    """Planar decomposition of a clique-sum from planar decompositions of the summands.

    The order is ``|V(D1)| + |V(D2)|``; with ``merge_nested`` an edge ``X1X2``
    with one bag inside the other is contracted afterwards.
    """
    g, map1, map2 = sum_graphs(d1.host, d2.host, join, deleted)
    q = min(d1.p, d2.p)
    if len(join) > q and len(join) > 2:
        raise DecompositionError(f"join of size {len(join)} exceeds clique level {q}")
    b1 = [frozenset(map1[v] for v in b) for b in d1.bags]
    b2 = [frozenset(map2[v] for v in b) for b in d2.bags]
    clique = [map1[v1] for v1, _ in join]
    strong = d1.strong and d2.strong
    bags, es, (x1, y1, x2, y2) = raw_clique_sum(b1, d1.dgraph.edges, b2, d2.dgraph.edges, clique, strong)
    out = Decomposition(g, tuple(bags), Graph(len(bags), es), strong, q)
    if merge_nested and b1 and b2:
        for a in (x1, y1):
            for b in (x2, y2):
                if bags[a] <= bags[b] or bags[b] <= bags[a]:
                    return contract_edge(out, a, b)
    return out


def decomposition_from_raw(host: Graph, bags: Sequence[Iterable[int]], dedges: Iterable[tuple[int, int]],
                           strong: bool = False, p: int = 2) -> Decomposition:
    bt = tuple(frozenset(b) for b in bags)
    return Decomposition(host, bt, Graph(len(bt), [canon(a, b) for a, b in dedges if a != b]), strong, p)


__all__ = [
    "Decomposition", "DecompMetrics", "DecompositionError", "ValidationReport", "ReduceResult",
    "validate", "identity_decomposition", "quadratic_decomp", "degen_omega", "contract_groups",
    "contract_edge", "contract_matching", "reduce_order", "compose", "to_omega", "covering_pair",
    "sum_graphs", "raw_clique_sum", "clique_sum_decomp", "decomposition_from_raw", "GraphError",
]
