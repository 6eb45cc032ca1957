"""Random instance generators whose class membership holds by construction."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .decomposition import Decomposition
from .drawing import Drawing, convex_drawing, count_crossings
from .graph import Graph, canon, complete_graph, v8_graph

Edge = tuple[int, int]


def random_triangulation(n: int, rng: random.Random, max_degree: int | None = None, flips: int | None = None) -> Graph:
    """Random maximal planar graph: stacked insertions followed by random edge flips."""
    if n < 3:
        return complete_graph(n)
    # The initial triangle bounds two faces, inner and outer.
    tri_faces = [(0, 1, 2), (0, 1, 2)]
    edges = {(0, 1), (0, 2), (1, 2)}
    for x in range(3, n):
        i = rng.randrange(len(tri_faces))
        a, b, c = tri_faces[i]
        tri_faces[i] = (a, b, x)
        tri_faces.extend([(b, c, x), (a, c, x)])
        edges.update({canon(a, x), canon(b, x), canon(c, x)})
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    flips = 3 * n if flips is None else flips
    by_edge: dict[Edge, list[int]] = {}

    def index() -> None:
        by_edge.clear()
        for fi, f in enumerate(tri_faces):
            for u, v in combinations(f, 2):
                by_edge.setdefault(canon(u, v), []).append(fi)

    index()
    for _ in range(flips):
        e = rng.choice(sorted(edges))
        fs = by_edge.get(e, [])
        if len(fs) != 2 or n < 4:
            continue
        a, b = e
        c = next(x for x in tri_faces[fs[0]] if x not in e)
        d = next(x for x in tri_faces[fs[1]] if x not in e)
        if c == d or canon(c, d) in edges or deg[a] <= 3 or deg[b] <= 3:
            continue
        if max_degree is not None:
            if max(deg[c], deg[d]) + 1 > max_degree and max(deg[a], deg[b]) <= max_degree:
                continue
        edges.discard(e)
        edges.add(canon(c, d))
        deg[a] -= 1
        deg[b] -= 1
        deg[c] += 1
        deg[d] += 1
        tri_faces[fs[0]] = (a, c, d)
        tri_faces[fs[1]] = (b, c, d)
        index()
    if max_degree is not None:
        # Greedy flips aimed at the largest degree.
        for _ in range(10 * n):
            top = max(range(n), key=lambda v: deg[v])
            if deg[top] <= max_degree:
                break
            done = False
            for w in sorted(x for e in edges if top in e for x in e if x != top):
                e = canon(top, w)
                fs = by_edge.get(e, [])
                if len(fs) != 2:
                    continue
                c = next(x for x in tri_faces[fs[0]] if x not in e)
                d = next(x for x in tri_faces[fs[1]] if x not in e)
                if c == d or canon(c, d) in edges or deg[w] <= 3:
                    continue
                if max(deg[c], deg[d]) + 1 >= deg[top]:
                    continue
                a, b = e
                edges.discard(e)
                edges.add(canon(c, d))
                for x, dl in ((a, -1), (b, -1), (c, 1), (d, 1)):
                    deg[x] += dl
                tri_faces[fs[0]] = (a, c, d)
                tri_faces[fs[1]] = (b, c, d)
                index()
                done = True
                break
            if not done:
                break
    return Graph(n, edges)


def _triangles(edges: set[Edge], adj: dict[int, set[int]]) -> list[tuple[int, int, int]]:
    out = []
    for u, v in sorted(edges):
        for w in adj[u] & adj[v]:
            if w > v:
                out.append((u, v, w))
    return out


def _glue(rng: random.Random, n_target: int, max_degree: int | None, delete_prob: float,
          make_piece, join_sizes) -> Graph:
    edges: set[Edge] = set()
    adj: dict[int, set[int]] = {}
    n = 0

    def add_piece(piece: Graph, mapping: dict[int, int]) -> None:
        nonlocal n
        for v in range(piece.n):
            if v not in mapping:
                mapping[v] = n
                adj[n] = set()
                n += 1
        for u, v in piece.edges:
            e = canon(mapping[u], mapping[v])
            if e not in edges:
                edges.add(e)
                adj[e[0]].add(e[1])
                adj[e[1]].add(e[0])

    first = make_piece(rng, None)
    add_piece(first, {})
    stall = 0
    while n < n_target and stall < 200:
        piece = make_piece(rng, n_target - n)
        sizes = join_sizes(piece)
        k = rng.choice(sizes)
        if k == 3:
            cands = _triangles(edges, adj)
        elif k == 2:
            cands = sorted(edges)
        elif k == 1:
            cands = [(v,) for v in sorted(adj)]
        else:
            cands = [()]
        pcands = [c for c in _cliques_of(piece, k)]
        if not cands or not pcands:
            stall += 1
            continue
        ok = False
        for _ in range(20):
            c = list(rng.choice(cands))
            pc = list(rng.choice(pcands))
            rng.shuffle(pc)
            if max_degree is not None:
                if any(len(adj[c[i]]) + piece.degree(pc[i]) - (k - 1) > max_degree for i in range(k)):
                    continue
            ok = True
            break
        if not ok:
            stall += 1
            continue
        stall = 0
        add_piece(piece, {pc[i]: c[i] for i in range(k)})
        if k >= 2 and delete_prob > 0:
            for u, v in combinations(c, 2):
                if rng.random() < delete_prob:
                    e = canon(u, v)
                    edges.discard(e)
                    adj[u].discard(v)
                    adj[v].discard(u)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def _cliques_of(g: Graph, k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    if k == 1:
        return [(v,) for v in range(g.n)]
    if k == 2:
        return list(g.edges)
    return [(u, v, w) for u, v in g.edges for w in g.adj[u] & g.adj[v] if w > v]


def random_k5_free(rng: random.Random, n_target: int, max_degree: int | None = 8, delete_prob: float = 0.0,
                   v8_prob: float = 0.3, piece_size: tuple[int, int] = (4, 12)) -> Graph:
    """Random (<=3)-sums of maximal planar graphs and V8 (optionally deleting join edges)."""

    def make(r: random.Random, room: int | None) -> Graph:
        if r.random() < v8_prob and (room is None or room >= 6):
            return v8_graph()
        hi = piece_size[1] if room is None else max(piece_size[0], min(piece_size[1], room + 3))
        return random_triangulation(r.randint(piece_size[0], hi), r, max_degree=max_degree - 2 if max_degree else None)

    def sizes(p: Graph) -> list[int]:
        return [1, 2, 2, 2] if p.n == 8 and p.m == 12 else [1, 2, 3, 3, 3, 3]

    return _glue(rng, n_target, max_degree, delete_prob, make, sizes)


def random_k33_free(rng: random.Random, n_target: int, max_degree: int | None = None, delete_prob: float = 0.0,
                    k5_prob: float = 0.35, piece_size: tuple[int, int] = (3, 10)) -> Graph:
    """Random (<=2)-sums of maximal planar graphs and K5 (optionally deleting join edges)."""

    def make(r: random.Random, room: int | None) -> Graph:
        if r.random() < k5_prob:
            return complete_graph(5)
        hi = piece_size[1] if room is None else max(piece_size[0], min(piece_size[1], room + 2))
        return random_triangulation(r.randint(piece_size[0], hi), r, max_degree=max_degree - 2 if max_degree else None)

    return _glue(rng, n_target, max_degree, delete_prob, make, lambda p: [0, 1, 2, 2, 2])


def random_planar_decomposition(rng: random.Random, n: int, k: int, edge_prob: float = 0.5) -> Decomposition:
    """A random valid planar decomposition of width at most ``k`` and the graph it decomposes."""
    order = max(2, rng.randint(max(2, n // 2), max(3, n)))
    dg = random_triangulation(order, rng) if order >= 3 else complete_graph(order)
    dg = dg.without_edges([e for e in dg.edges if rng.random() < 0.3])
    bags: list[set[int]] = [set() for _ in range(order)]
    d_of: list[list[int]] = []
    for v in range(n):
        free = [x for x in range(order) if len(bags[x]) < k]
        if not free:
            bags.append(set())
            dg = Graph(dg.n + 1, list(dg.edges) + [(dg.n, rng.randrange(dg.n))])
            free = [len(bags) - 1]
        start = rng.choice(free)
        size = rng.randint(1, 3)
        mine = [start]
        bags[start].add(v)
        frontier = [start]
        while frontier and len(mine) < size:
            x = frontier.pop(rng.randrange(len(frontier)))
            for y in sorted(dg.adj[x]):
                if len(mine) < size and y not in mine and len(bags[y]) < k:
                    mine.append(y)
                    bags[y].add(v)
                    frontier.append(y)
        d_of.append(mine)
    edges = []
    for v, w in combinations(range(n), 2):
        sv, sw = set(d_of[v]), set(d_of[w])
        touch = bool(sv & sw) or any(dg.adj[x] & sw for x in sv)
        if touch and rng.random() < edge_prob:
            edges.append((v, w))
    host = Graph(n, edges)
    return Decomposition(host, tuple(frozenset(b) for b in bags), dg, strong=False, p=2)


def random_polyline_drawing(rng: random.Random, n: int, m: int, max_bends: int = 2, box: int = 100_000,
                            attempts: int = 200) -> Drawing:
    """Random graph drawn with random monotone bends; resampled until in general position."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    g = Graph(n, pairs[:m])
    for _ in range(attempts):
        cells = rng.sample(range((box + 1) ** 2), n + g.m * max_bends)
        pts = [(Fraction(c % (box + 1)), Fraction(c // (box + 1))) for c in cells]
        vpts = tuple(pts[:n])
        rest = pts[n:]
        routes = []
        for u, v in g.edges:
            (ux, uy), (vx, vy) = vpts[u], vpts[v]

            def proj(p: tuple[Fraction, Fraction]) -> Fraction:
                return (p[0] - ux) * (vx - ux) + (p[1] - uy) * (vy - uy)

            # Bends strictly between the endpoints, in projection order, keep the route monotone.
            hi = proj(vpts[v])
            bends = sorted((p for p in rest[: rng.randint(0, max_bends)] if 0 < proj(p) < hi), key=proj)
            routes.append(tuple(bends))
            rest = rest[max_bends:]
        dr = Drawing(g, vpts, tuple(routes))
        if count_crossings(dr).ok:
            return dr
    raise RuntimeError("no general-position drawing found")


def random_convex(rng: random.Random, n: int, edge_prob: float) -> Drawing:
    g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < edge_prob])
    order = list(range(n))
    rng.shuffle(order)
    return convex_drawing(g, order, seed=rng.randrange(1 << 30))


def random_bounded_treewidth(rng: random.Random, n: int, k: int, max_degree: int) -> Graph:
    """Random partial k-tree thinned to maximum degree ``max_degree``."""
    base = list(range(min(n, k + 1)))
    edges = {canon(u, v) for u, v in combinations(base, 2)}
    cliques = [tuple(base)]
    for v in range(len(base), n):
        c = rng.choice(cliques)
        sub = tuple(rng.sample(c, min(k, len(c))))
        for u in sub:
            edges.add(canon(u, v))
        cliques.append(sub + (v,))
    edges_l = sorted(edges)
    rng.shuffle(edges_l)
    deg = [0] * n
    keep = []
    for u, v in edges_l:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < 0.85:
            keep.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, keep)


__all__ = [
    "random_triangulation", "random_k5_free", "random_k33_free", "random_planar_decomposition",
    "random_polyline_drawing", "random_convex", "random_bounded_treewidth",
]
