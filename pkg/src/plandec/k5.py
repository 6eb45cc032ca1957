"""Decompositions and drawings of K5-minor-free graphs.

Every K5-minor-free graph is a spanning subgraph of an edge-maximal one,
which is a clique-sum of 4-connected triangulations (plus ``K3`` and ``K4``)
and copies of V8. The completion is built from the clique-sum tree, the
edges are split into three classes that meet every triangle once, and the
decompositions below are glued leaf by leaf along the tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .coloring import four_colouring
from .converse import drawing_to_decomposition
from .decomposition import Decomposition, DecompositionError, covering_pair
from .drawing import Drawing
from .graph import Graph, GraphError, canon, clique_number, v8_cycle, v8_graph
from .planar import planar_embedding_or_raise, triangulate_planar
from .render import RenderResult, render
from .sumtree import wagner_k5_decompose

Edge = tuple[int, int]


@dataclass(frozen=True)
class Leaf:
    verts: tuple[int, ...]
    edges: tuple[Edge, ...]
    kind: str  # "tri" (a triangulation without separating triangles, or K_n with n <= 4) or "V8"
    cycle: tuple[int, ...] | None = None  # rim order of a V8 leaf

    def local(self) -> tuple[Graph, dict[int, int]]:
        idx = {v: i for i, v in enumerate(self.verts)}
        return Graph(len(self.verts), [(idx[u], idx[v]) for u, v in self.edges]), idx


@dataclass(frozen=True)
class MaxTree:
    """Clique-sum tree of an edge-maximal K5-minor-free supergraph ``completion`` of ``host``."""

    host: Graph
    completion: Graph
    leaves: tuple[Leaf, ...]
    joins: tuple[tuple[int, int, tuple[int, ...]], ...]

    def is_tree(self) -> bool:
        if len(self.joins) != max(0, len(self.leaves) - 1):
            return False
        parent = list(range(len(self.leaves)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in self.joins:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    def kinds(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for lf in self.leaves:
            key = lf.kind if lf.kind == "V8" else f"K{len(lf.verts)}" if len(lf.verts) <= 4 else "tri"
            out[key] = out.get(key, 0) + 1
        return out


# ---------------------------------------------------------------------------
# Completion
# ---------------------------------------------------------------------------


class _Unit:
    def __init__(self, kind: str, verts: set[int], edges: set[Edge], cycle=None) -> None:
        self.kind = kind
        self.verts = verts
        self.edges = edges
        self.cycle = cycle


def _v8_rim(verts, edges) -> tuple[int, ...]:
    vs = sorted(verts)
    idx = {v: i for i, v in enumerate(vs)}
    cyc = v8_cycle(Graph(8, [(idx[u], idx[v]) for u, v in edges]))
    if cyc is None:
        raise GraphError("piece labelled V8 is not a V8")
    return tuple(vs[i] for i in cyc)


def _split_separating(verts: list[int], edges: set[Edge]) -> tuple[list[tuple[list[int], set[Edge]]], list[tuple[int, int, tuple]]]:
    """Cut a triangulation at separating triangles until none is left."""
    leaves: list[tuple[list[int], set[Edge]]] = []
    joins: list[tuple[int, int, tuple]] = []

    def sep_triangle(vs: list[int], es: set[Edge]):
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        if len(vs) <= 4:
            return None, adj
        for u, v in sorted(es):
            for w in sorted(adj[u] & adj[v]):
                if w <= v:
                    continue
                t = {u, v, w}
                start = next(x for x in vs if x not in t)
                seen = {start}
                stack = [start]
                while stack:
                    x = stack.pop()
                    for y in adj[x]:
                        if y not in t and y not in seen:
                            seen.add(y)
                            stack.append(y)
                if len(seen) < len(vs) - 3:
                    return (u, v, w), adj
        return None, adj

    def rec(vs: list[int], es: set[Edge]) -> list[int]:
        t, adj = sep_triangle(vs, es)
        if t is None:
            leaves.append((sorted(vs), es))
            return [len(leaves) - 1]
        ts = set(t)
        rest = [x for x in vs if x not in ts]
        seen: set[int] = set()
        parts = []
        for s in rest:
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in ts and y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            part = comp | ts
            parts.append((sorted(part), {e for e in es if e[0] in part and e[1] in part}))
        made = [rec(pv, pe) for pv, pe in parts]
        reps = []
        for ids in made:
            reps.append(next(i for i in ids if ts <= set(leaves[i][0])))
        for r in reps[1:]:
            joins.append((reps[0], r, tuple(sorted(t))))
        return [i for ids in made for i in ids]

    rec(sorted(verts), set(edges))
    return leaves, joins


def k5_max_tree(g: Graph) -> MaxTree:
    """Edge-maximal K5-minor-free supergraph of ``g`` with its clique-sum tree."""
    st = wagner_k5_decompose(g)
    np_ = len(st.pieces)
    parent = list(range(np_))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    planar_piece = [p.kind == "planar" for p in st.pieces]
    for j in st.joins:
        if planar_piece[j.a] and planar_piece[j.b] and len(j.clique) <= 2:
            ra, rb = find(j.a), find(j.b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    units: list[_Unit] = []
    unit_of: dict[int, int] = {}
    for i, p in enumerate(st.pieces):
        r = find(i) if planar_piece[i] else i
        if r not in unit_of:
            unit_of[r] = len(units)
            units.append(_Unit("tri" if planar_piece[i] else "V8", set(), set()))
        u = units[unit_of[r]]
        u.verts.update(p.verts)
        u.edges.update(p.edges)
    for u in units:
        if u.kind == "V8":
            u.cycle = _v8_rim(u.verts, u.edges)

    def grow_point(v8: _Unit, clique: tuple[int, ...]) -> tuple[int, ...]:
        """Vertices of ``v8`` to carry into a planar neighbour so the join is an edge."""
        if clique:
            c = clique[0]
            return (min(x for e in v8.edges if c in e for x in e if x != c),)
        return min(v8.edges)

    ujoins: list[tuple[int, int, tuple[int, ...]]] = []
    for j in st.joins:
        a, b = unit_of[find(j.a) if planar_piece[j.a] else j.a], unit_of[find(j.b) if planar_piece[j.b] else j.b]
        if a == b:
            continue
        c = tuple(j.clique)
        ua, ub = units[a], units[b]
        if len(c) >= 2 or (ua.kind == "tri" and ub.kind == "tri"):
            ujoins.append((a, b, c))
            continue
        if ua.kind == "V8" and ub.kind == "V8":
            # Bridge two V8 copies through a small planar unit.
            extra_a, extra_b = grow_point(ua, c), grow_point(ub, c)
            vs = set(c) | set(extra_a) | set(extra_b)
            es = set()
            for side in (extra_a, extra_b):
                pts = tuple(c) + tuple(side)
                es.update(canon(x, y) for x, y in combinations(pts, 2))
            k = len(units)
            units.append(_Unit("tri", vs, es))
            ujoins.append((a, k, tuple(sorted(set(c) | set(extra_a)))))
            ujoins.append((k, b, tuple(sorted(set(c) | set(extra_b)))))
            continue
        v8i, tri = (a, b) if ua.kind == "V8" else (b, a)
        extra = grow_point(units[v8i], c)
        pts = tuple(c) + tuple(extra)
        units[tri].verts.update(pts)
        units[tri].edges.update(canon(x, y) for x, y in combinations(pts, 2))
        ujoins.append((v8i, tri, tuple(sorted(pts))))

    # Planar units with at most two vertices sit inside a neighbouring V8.
    alive = [True] * len(units)
    for k, u in enumerate(units):
        if u.kind != "tri" or len(u.verts) > 2:
            continue
        hosts = [b if a == k else a for a, b, _ in ujoins if k in (a, b)]
        if not hosts:
            continue
        tgt = hosts[0]
        alive[k] = False
        ujoins = [((tgt if a == k else a), (tgt if b == k else b), c) for a, b, c in ujoins]
        ujoins = [(a, b, c) for a, b, c in ujoins if a != b]

    leaves: list[Leaf] = []
    unit_leaves: dict[int, list[int]] = {}
    joins: list[tuple[int, int, tuple[int, ...]]] = []
    for k, u in enumerate(units):
        if not alive[k]:
            continue
        if u.kind == "V8":
            unit_leaves[k] = [len(leaves)]
            leaves.append(Leaf(tuple(sorted(u.verts)), tuple(sorted(u.edges)), "V8", u.cycle))
            continue
        vs = sorted(u.verts)
        if len(vs) <= 3:
            es = {canon(x, y) for x, y in combinations(vs, 2)}
            unit_leaves[k] = [len(leaves)]
            leaves.append(Leaf(tuple(vs), tuple(sorted(es)), "tri"))
            continue
        idx = {v: i for i, v in enumerate(vs)}
        loc = Graph(len(vs), [(idx[x], idx[y]) for x, y in u.edges])
        tri, _ = triangulate_planar(planar_embedding_or_raise(loc))
        es = {canon(vs[x], vs[y]) for x, y in tri.edges}
        parts, pjoins = _split_separating(vs, es)
        off = len(leaves)
        unit_leaves[k] = [off + i for i in range(len(parts))]
        for pv, pe in parts:
            leaves.append(Leaf(tuple(pv), tuple(sorted(pe)), "tri"))
        joins.extend((off + a, off + b, c) for a, b, c in pjoins)

    def leaf_with(k: int, clique: tuple[int, ...]) -> int:
        cs = set(clique)
        for i in unit_leaves[k]:
            if cs <= set(leaves[i].verts):
                return i
        raise GraphError("internal error: join set not found after splitting")

    for a, b, c in ujoins:
        joins.append((leaf_with(a, c), leaf_with(b, c), tuple(sorted(c))))
    h = Graph(g.n, {e for lf in leaves for e in lf.edges})
    missing = [e for e in g.edges if not h.has_edge(*e)]
    if missing:
        raise GraphError(f"internal error: completion lost edges {missing[:3]}")
    return MaxTree(g, h, tuple(leaves), tuple(joins))


def maximal_k5_completion(g: Graph) -> Graph:
    """An edge-maximal K5-minor-free graph containing ``g`` as a spanning subgraph."""
    return k5_max_tree(g).completion


# ---------------------------------------------------------------------------
# Edge tripartition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeTripartition:
    """Three edge classes of the completion; every triangle has one edge in each."""

    tree: MaxTree
    classes: tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]

    def isolated(self, i: int) -> list[int]:
        """Vertices with no incident edge in class ``i``."""
        covered = {v for e in self.classes[i] for v in e}
        return [v for v in range(self.tree.completion.n) if v not in covered]

    @property
    def E(self) -> tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]:
        return self.classes

    @property
    def V(self) -> tuple[list[int], list[int], list[int]]:
        return (self.isolated(0), self.isolated(1), self.isolated(2))

    def class_of(self) -> dict[Edge, int]:
        return {e: i for i, cl in enumerate(self.classes) for e in cl}


def _leaf_classes(lf: Leaf) -> dict[Edge, int]:
    if lf.kind == "V8":
        c = lf.cycle
        assert c is not None
        out = {}
        for i in range(8):
            out[canon(c[i], c[(i + 1) % 8])] = i % 2
        for i in range(4):
            out[canon(c[i], c[i + 4])] = 2
        return out
    loc, idx = lf.local()
    col = four_colouring(loc)
    vs = lf.verts
    out = {}
    for x, y in loc.edges:
        out[canon(vs[x], vs[y])] = (col[x] ^ col[y]) - 1
    return out


def edge_partition_k5(g_or_tree: Graph | MaxTree) -> EdgeTripartition:
    """Tait-style edge classes aligned across the clique-sum tree.

    A graph argument must already be edge-maximal; pass a :class:`MaxTree`
    to partition the completion of an arbitrary K5-minor-free graph.
    """
    if isinstance(g_or_tree, MaxTree):
        tree = g_or_tree
    else:
        tree = k5_max_tree(g_or_tree)
        if tree.completion != g_or_tree:
            raise GraphError("graph is not edge-maximal K5-minor-free; complete it first")
    nl = len(tree.leaves)
    local = [_leaf_classes(lf) for lf in tree.leaves]
    nbrs: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(nl)]
    for a, b, c in tree.joins:
        nbrs[a].append((b, c))
        nbrs[b].append((a, c))
    glob: dict[Edge, int] = {}
    perm: list[tuple[int, ...] | None] = [None] * nl
    for root in range(nl):
        if perm[root] is not None:
            continue
        perm[root] = (0, 1, 2)
        dq = deque([root])
        while dq:
            x = dq.popleft()
            px = perm[x]
            assert px is not None
            for e, c in local[x].items():
                want = px[c]
                if glob.setdefault(e, want) != want:
                    raise GraphError(f"edge classes disagree on {e}")
            for y, c in nbrs[x]:
                if perm[y] is not None:
                    continue
                ce = [canon(u, v) for u, v in combinations(c, 2)]
                for cand in permutations(range(3)):
                    if all(cand[local[y][e]] == glob[e] for e in ce):
                        perm[y] = cand
                        break
                else:
                    raise GraphError(f"no consistent class alignment across join {c}")
                dq.append(y)
    classes = tuple(frozenset(e for e, i in glob.items() if i == k) for k in range(3))
    return EdgeTripartition(tree, classes)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Omega decomposition from one edge class
# ---------------------------------------------------------------------------


def _leaf_omega(lf: Leaf, cls: set[Edge]) -> tuple[list[frozenset[int]], set[Edge]]:
    """Bags (class edges and uncovered vertices) and decomposition edges for one leaf."""
    vs = lf.verts
    mine = [e for e in lf.edges if e in cls]
    if lf.kind == "V8":
        bags = [frozenset(e) for e in mine]
        return bags, {canon(a, b) for a, b in combinations(range(len(bags)), 2)}
    if len(vs) <= 4:
        covered = {v for e in mine for v in e}
        bags = [frozenset(e) for e in mine] + [frozenset((v,)) for v in vs if v not in covered]
        return bags, {canon(a, b) for a, b in combinations(range(len(bags)), 2)}
    # Nodes {v} and one node per class edge; each face joins its class edge to its apex.
    node = {v: i for i, v in enumerate(vs)}
    bags = [frozenset((v,)) for v in vs]
    enode = {}
    for e in mine:
        enode[e] = len(bags)
        bags.append(frozenset(e))
    es: set[Edge] = set()
    for (a, b), x in enode.items():
        es.add(canon(node[a], x))
        es.add(canon(node[b], x))
    adj: dict[int, set[int]] = {v: set() for v in vs}
    for a, b in lf.edges:
        adj[a].add(b)
        adj[b].add(a)
    for (a, b), x in enode.items():
        for u in adj[a] & adj[b]:
            es.add(canon(node[u], x))
    return _absorb(bags, es)


def _absorb(bags: list[frozenset[int]], es: set[Edge]) -> tuple[list[frozenset[int]], set[Edge]]:
    """Contract decomposition edges whose one bag lies inside the other."""
    parent = list(range(len(bags)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    content = list(bags)
    changed = True
    while changed:
        changed = False
        for a, b in sorted(es):
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            if content[ra] <= content[rb] or content[rb] <= content[ra]:
                keep, drop = (rb, ra) if content[ra] <= content[rb] else (ra, rb)
                parent[drop] = keep
                content[keep] = content[keep] | content[drop]
                changed = True
    roots = sorted({find(x) for x in range(len(bags))})
    nid = {r: i for i, r in enumerate(roots)}
    out_edges = {canon(nid[find(a)], nid[find(b)]) for a, b in es if find(a) != find(b)}
    return [content[r] for r in roots], out_edges


def _glue(tree: MaxTree, per_leaf: list[tuple[list[frozenset[int]], set[Edge]]], strong: bool,
          merge_equal_triangles: bool = False) -> tuple[list[frozenset[int]], set[Edge]]:
    """Clique-sum the leaf decompositions along the tree (shared vertex ids)."""
    offs = []
    bags: list[frozenset[int]] = []
    es: set[Edge] = set()
    for lb, le in per_leaf:
        offs.append(len(bags))
        es.update(canon(a + len(bags), b + len(bags)) for a, b in le)
        bags.extend(lb)
    merge = []
    for a, b, c in tree.joins:
        pa = covering_pair(per_leaf[a][0], per_leaf[a][1], c, single_only=strong)
        pb = covering_pair(per_leaf[b][0], per_leaf[b][1], c, single_only=strong)
        if pa is None or pb is None:
            raise DecompositionError(f"join set {list(c)} not covered in a leaf decomposition")
        xa = {offs[a] + pa[0], offs[a] + pa[1]}
        xb = {offs[b] + pb[0], offs[b] + pb[1]}
        if strong:
            xa, xb = {min(xa)}, {min(xb)}
        for x in xa:
            for y in xb:
                es.add(canon(x, y))
        if merge_equal_triangles and len(c) == 3:
            merge.append((min(xa), min(xb)))
    if merge:
        parent = list(range(len(bags)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x, y in merge:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
        roots = sorted({find(x) for x in range(len(bags))})
        nid = {r: i for i, r in enumerate(roots)}
        content = [frozenset()] * len(roots)
        for x in range(len(bags)):
            content[nid[find(x)]] = content[nid[find(x)]] | bags[x]
        es = {canon(nid[find(a)], nid[find(b)]) for a, b in es if find(a) != find(b)}
        bags = list(content)
    return bags, es


def _check_hypothesis(h: Graph, cls: set[Edge]) -> None:
    for u, v in h.edges:
        for w in h.adj[u] & h.adj[v]:
            if w > v:
                k = sum(e in cls for e in (canon(u, v), canon(u, w), canon(v, w)))
                if k != 1:
                    raise GraphError(f"triangle {(u, v, w)} has {k} edges in the class, expected 1")


def omega_decomp_from_E(g: Graph, E, tree: MaxTree | None = None) -> Decomposition:
    """Planar decomposition whose bags are the edges of ``E`` and the vertices they miss.

    ``g`` must be edge-maximal K5-minor-free (or pass its ``tree``) and every
    triangle must have exactly one edge in ``E``.
    """
    if tree is None:
        tree = k5_max_tree(g)
        if tree.completion != g:
            raise GraphError("graph is not edge-maximal K5-minor-free; pass the completion tree")
    cls = {canon(*e) for e in E}
    _check_hypothesis(tree.completion, cls)
    per_leaf = [_leaf_omega(lf, cls) for lf in tree.leaves]
    bags, es = _glue(tree, per_leaf, strong=False)
    bags, es = _absorb(bags, es)
    p = max(2, clique_number(g))
    return Decomposition(g, tuple(bags), Graph(len(bags), es), strong=False, p=p)


def best_class(part: EdgeTripartition) -> int:
    """The class leaving the fewest vertices uncovered (ties: fewer edges, then lower index)."""
    return min(range(3), key=lambda i: (len(part.isolated(i)), len(part.classes[i]), i))


def planar_omega_decomp_k5(g: Graph) -> Decomposition:
    """Planar width-2 omega-decomposition of a K5-minor-free graph."""
    if g.n < 3:
        raise GraphError("need at least 3 vertices")
    part = edge_partition_k5(k5_max_tree(g))
    return omega_decomp_from_E(g, part.classes[best_class(part)], tree=part.tree)


def crossings_k5(g: Graph, seed: int = 0) -> RenderResult:
    """Drawing of a K5-minor-free graph rendered from its omega-decomposition."""
    return render(planar_omega_decomp_k5(g), seed=seed)


# ---------------------------------------------------------------------------
# Strong decompositions
# ---------------------------------------------------------------------------


def v8_one_crossing_drawing() -> Drawing:
    """V8 (rim ``0..7``, chords ``i, i+4``) drawn with exactly one crossing."""
    g = v8_graph()
    f = Fraction
    pts = tuple((f(i), f(1)) for i in range(4)) + tuple((f(i), f(0)) for i in range(4))
    routes = []
    for u, v in g.edges:
        if (u, v) == (3, 4):
            routes.append(((f(4), f(2)), (f(-1), f(2))))
        elif (u, v) == (0, 7):
            routes.append(((f(-1), f(-1)), (f(4), f(-1))))
        else:
            routes.append(())
    return Drawing(g, pts, tuple(routes))


def _leaf_strong3(lf: Leaf) -> tuple[list[frozenset[int]], set[Edge]]:
    vs = lf.verts
    if lf.kind == "V8":
        d = drawing_to_decomposition(v8_one_crossing_drawing(), strong=True)
        cyc = lf.cycle
        assert cyc is not None
        return [frozenset(cyc[x] for x in b) for b in d.bags], set(d.dgraph.edges)
    if len(vs) <= 3:
        return [frozenset(vs)], set()
    loc, _ = lf.local()
    emb = planar_embedding_or_raise(loc)
    faces = [frozenset(f) for f in emb.faces]
    by_edge: dict[Edge, list[int]] = {}
    for k, f in enumerate(faces):
        for a, b in combinations(sorted(f), 2):
            by_edge.setdefault((a, b), []).append(k)
    es = {canon(*fs) for fs in by_edge.values() if len(fs) == 2}
    return [frozenset(vs[x] for x in f) for f in faces], es


def strong_3_decomp_k5(g: Graph) -> Decomposition:
    """Strong planar 3-decomposition of width 3 for a K5-minor-free graph."""
    if g.n < 3:
        raise GraphError("need at least 3 vertices")
    tree = k5_max_tree(g)
    per_leaf = [_leaf_strong3(lf) for lf in tree.leaves]
    bags, es = _glue(tree, per_leaf, strong=True, merge_equal_triangles=True)
    return Decomposition(g, tuple(bags), Graph(len(bags), es), strong=True, p=3)


def _leaf_strong_omega(lf: Leaf, cls: set[Edge]) -> tuple[list[frozenset[int]], set[Edge]]:
    vs = lf.verts
    if lf.kind == "V8":
        c = lf.cycle
        assert c is not None
        bags = [frozenset((c[i], c[i + 1], c[i + 4], c[(i + 5) % 8])) for i in range(4)]
        return bags, {(0, 1), (1, 2), (2, 3), (0, 3)}
    if len(vs) <= 4:
        return [frozenset(vs)], set()
    adj: dict[int, set[int]] = {v: set() for v in vs}
    for a, b in lf.edges:
        adj[a].add(b)
        adj[b].add(a)
    mine = sorted(e for e in lf.edges if e in cls)
    bags = [frozenset(e) | frozenset(adj[e[0]] & adj[e[1]]) for e in mine]
    # Each vertex node joins the class-edge node of lowest index holding it.
    home = {v: min(k for k, b in enumerate(bags) if v in b) for v in vs}
    es: set[Edge] = set()
    for k, b in enumerate(bags):
        for v in b:
            if home[v] != k:
                es.add(canon(home[v], k))
    return bags, es


def strong_omega_decomp_k5(g: Graph) -> Decomposition:
    """Strong planar omega-decomposition of width 4 for a K5-minor-free graph."""
    if g.n < 4:
        raise GraphError("need at least 4 vertices")
    part = edge_partition_k5(k5_max_tree(g))
    tree = part.tree
    cls = set(part.classes[0])
    per_leaf = [_leaf_strong_omega(lf, cls) for lf in tree.leaves]
    bags, es = _glue(tree, per_leaf, strong=True)
    p = max(2, clique_number(g))
    return Decomposition(g, tuple(bags), Graph(len(bags), es), strong=True, p=p)


__all__ = [
    "Leaf", "MaxTree", "k5_max_tree", "maximal_k5_completion", "EdgeTripartition", "edge_partition_k5",
    "omega_decomp_from_E", "best_class", "planar_omega_decomp_k5", "crossings_k5",
    "strong_3_decomp_k5", "strong_omega_decomp_k5", "v8_one_crossing_drawing",
]
