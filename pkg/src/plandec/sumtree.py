"""Clique-sum trees for K5-minor-free and K3,3-minor-free graphs.

Pieces are split off at cut vertices, then at separation pairs, and (for the
K5 case only) at 3-separators, until every piece is planar or one of the
exceptional graphs (V8 for K5-free graphs, K5 for K3,3-free graphs). Split
sets are made cliques by adding virtual edges, which the join records as
deleted whenever they are absent from the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .graph import Graph, GraphError, canon, is_V8
from .planar import planar

Edge = tuple[int, int]


class NotMinorFreeError(GraphError):
    """Raised with the piece that could not be split into allowed leaves."""

    def __init__(self, msg: str, verts: tuple[int, ...], edges: tuple[Edge, ...]) -> None:
        super().__init__(msg)
        self.verts = verts
        self.edges = edges


@dataclass(frozen=True)
class Piece:
    verts: tuple[int, ...]
    edges: tuple[Edge, ...]  # global ids, virtual join edges included
    kind: str  # "planar", "V8" or "K5"

    def local(self) -> tuple[Graph, list[int]]:
        idx = {v: i for i, v in enumerate(self.verts)}
        return Graph(len(self.verts), [(idx[u], idx[v]) for u, v in self.edges]), list(self.verts)

    def to_json(self) -> dict:
        return {"verts": list(self.verts), "edges": [list(e) for e in self.edges], "kind": self.kind}


@dataclass(frozen=True)
class Join:
    a: int
    b: int
    clique: tuple[int, ...]
    deleted: tuple[Edge, ...] = ()

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "set": list(self.clique), "deleted": [list(e) for e in self.deleted]}


@dataclass(frozen=True)
class SumTree:
    n: int
    pieces: tuple[Piece, ...]
    joins: tuple[Join, ...]

    def recompose(self) -> Graph:
        es = {e for p in self.pieces for e in p.edges}
        gone = {e for j in self.joins for e in j.deleted}
        return Graph(self.n, es - gone)

    def is_tree(self) -> bool:
        if not self.pieces:
            return not self.joins
        if len(self.joins) != len(self.pieces) - 1:
            return False
        parent = list(range(len(self.pieces)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for j in self.joins:
            a, b = find(j.a), find(j.b)
            if a == b:
                return False
            parent[a] = b
        return True

    def joins_are_cliques(self) -> bool:
        for j in self.joins:
            for p in (self.pieces[j.a], self.pieces[j.b]):
                es = set(p.edges)
                vs = set(p.verts)
                if not set(j.clique) <= vs:
                    return False
                if any(canon(u, v) not in es for u, v in combinations(j.clique, 2)):
                    return False
        return True

    def kinds(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for p in self.pieces:
            out[p.kind] = out.get(p.kind, 0) + 1
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "pieces": [p.to_json() for p in self.pieces], "joins": [j.to_json() for j in self.joins]}

    @classmethod
    def from_json(cls, data: dict) -> SumTree:
        pieces = tuple(
            Piece(tuple(p["verts"]), tuple(canon(*e) for e in p["edges"]), p["kind"]) for p in data["pieces"]
        )
        joins = tuple(
            Join(int(j["a"]), int(j["b"]), tuple(j["set"]), tuple(canon(*e) for e in j["deleted"]))
            for j in data["joins"]
        )
        return cls(int(data["n"]), pieces, joins)


# ---------------------------------------------------------------------------
# Connectivity helpers on adjacency dictionaries
# ---------------------------------------------------------------------------


def _adjacency(verts, edges) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _components(adj: dict[int, set[int]], removed: set[int]) -> list[list[int]]:
    seen = set(removed)
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def _articulation_points(adj: dict[int, set[int]], removed: set[int]) -> list[int]:
    """Cut vertices of the graph minus ``removed`` (iterative Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[int] = set()
    t = 0
    for root in sorted(adj):
        if root in removed or root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w in removed or w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        children += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        out.add(parent)
        if children > 1:
            out.add(root)
    return sorted(out)


def _separation_pair(adj: dict[int, set[int]]) -> tuple[int, int] | None:
    for a in sorted(adj):
        cut = _articulation_points(adj, {a})
        if cut:
            return (a, cut[0])
    return None


def _three_separators(adj: dict[int, set[int]], edges: set[Edge]) -> list[tuple[int, int, int]]:
    """All 3-vertex separators, the ones spanning more edges first."""
    found: set[tuple[int, int, int]] = set()
    # Triangles are the usual culprits, so test them before the full search.
    for u, v in sorted(edges):
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                t = (u, v, w)
                if len(_components(adj, set(t))) > 1:
                    found.add(t)
    if not found:
        vs = sorted(adj)
        for a, b in combinations(vs, 2):
            for c in _articulation_points(adj, {a, b}):
                found.add(tuple(sorted((a, b, c))))  # type: ignore[arg-type]
    return sorted(found, key=lambda t: (-sum(canon(x, y) in edges for x, y in combinations(t, 2)), t))


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def _classify_k5(verts, edges) -> str | None:
    if _is_planar_edges(verts, edges):
        return "planar"
    if len(verts) == 8 and len(edges) == 12:
        g, _ = Piece(tuple(verts), tuple(edges), "").local()
        if is_V8(g):
            return "V8"
    return None


def _classify_k33(verts, edges) -> str | None:
    if _is_planar_edges(verts, edges):
        return "planar"
    if len(verts) == 5 and len(edges) == 10:
        return "K5"
    return None


def _is_planar_edges(verts, edges) -> bool:
    if len(edges) <= 8 or len(verts) <= 4:
        return True
    if len(edges) > 3 * len(verts) - 6:
        return False
    g, _ = Piece(tuple(sorted(verts)), tuple(edges), "").local()
    return planar(g)


class _Builder:
    def __init__(self, g: Graph, classify: Callable, three_sums: bool, name: str) -> None:
        self.g = g
        self.real = set(g.edges)
        self.classify = classify
        self.three_sums = three_sums
        self.name = name
        self.pieces: list[Piece] = []
        self.joins: list[Join] = []
        self.failed: set[tuple[frozenset, frozenset]] = set()

    # Each build returns the indices of the leaves it created.
    def leaf_with(self, leaves: list[int], clique) -> int:
        cs = set(clique)
        for i in leaves:
            p = self.pieces[i]
            if cs <= set(p.verts):
                es = set(p.edges)
                if all(canon(u, v) in es for u, v in combinations(sorted(cs), 2)):
                    return i
        raise GraphError("internal error: join set lost during splitting")

    def join(self, a: int, b: int, clique) -> None:
        c = tuple(sorted(clique))
        deleted = tuple(e for e in (canon(u, v) for u, v in combinations(c, 2)) if e not in self.real)
        self.joins.append(Join(a, b, c, deleted))

    def build(self, verts: list[int], edges: set[Edge]) -> list[int]:
        kind = self.classify(verts, edges)
        if kind is not None:
            self.pieces.append(Piece(tuple(sorted(verts)), tuple(sorted(edges)), kind))
            return [len(self.pieces) - 1]
        adj = _adjacency(verts, edges)
        comps = _components(adj, set())
        if len(comps) > 1:
            return self._split(adj, edges, set(), comps)
        cut = _articulation_points(adj, set())
        if cut:
            c = cut[0]
            return self._split(adj, edges, {c}, _components(adj, {c}))
        pair = _separation_pair(adj)
        if pair is not None:
            return self._split(adj, edges, set(pair), _components(adj, set(pair)))
        if self.three_sums:
            res = self._try_three_sums(adj, edges)
            if res is not None:
                return res
        raise NotMinorFreeError(
            f"piece on {len(verts)} vertices is not planar and cannot be split ({self.name})",
            tuple(sorted(verts)), tuple(sorted(edges)),
        )

    def _split(self, adj, edges: set[Edge], sep: set[int], comps: list[list[int]]) -> list[int]:
        sep_edges = {canon(u, v) for u, v in combinations(sorted(sep), 2)}
        parts = []
        for comp in comps:
            vs = set(comp) | sep
            es = {e for e in edges if e[0] in vs and e[1] in vs} | sep_edges
            parts.append((sorted(vs), es))
        results = [self.build(vs, es) for vs, es in parts]
        reps = []
        for res in results:
            if sep:
                reps.append(self.leaf_with(res, sep))
            else:
                planar_first = [i for i in res if self.pieces[i].kind == "planar"]
                reps.append((planar_first or res)[0])
        for r in reps[1:]:
            self.join(reps[0], r, sep)
        return [i for res in results for i in res]

    def _try_three_sums(self, adj, edges: set[Edge]) -> list[int] | None:
        key = (frozenset(adj), frozenset(edges))
        if key in self.failed:
            return None
        for sep in _three_separators(adj, edges):
            comps = _components(adj, set(sep))
            mark = (len(self.pieces), len(self.joins))
            try:
                return self._split(adj, edges, set(sep), comps)
            except NotMinorFreeError:
                del self.pieces[mark[0]:]
                del self.joins[mark[1]:]
        self.failed.add(key)
        return None


def _decompose(g: Graph, classify, three_sums: bool, name: str) -> SumTree:
    b = _Builder(g, classify, three_sums, name)
    if g.n:
        b.build(list(range(g.n)), set(g.edges))
    return SumTree(g.n, tuple(b.pieces), tuple(b.joins))


def wagner_k5_decompose(g: Graph) -> SumTree:
    """Split a K5-minor-free graph into planar and V8 pieces joined by (<=3)-sums."""
    return _decompose(g, _classify_k5, True, "K5 minor suspected")


def wagner_k33_decompose(g: Graph) -> SumTree:
    """Split a K3,3-minor-free graph into planar and K5 pieces joined by (<=2)-sums."""
    return _decompose(g, _classify_k33, False, "K3,3 minor suspected")


__all__ = [
    "SumTree", "Piece", "Join", "NotMinorFreeError", "wagner_k5_decompose", "wagner_k33_decompose",
]
