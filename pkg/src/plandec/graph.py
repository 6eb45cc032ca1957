"""Simple undirected graphs on dense integer vertex ids, plus small graph utilities."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored canonically as ``(u, v)`` with ``u < v`` in sorted order,
    so two graphs with the same edge set compare and hash equal.
    """

    __slots__ = ("n", "edges", "adj", "_index", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise GraphError("negative vertex count")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            es.add(canon(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._index: dict[Edge, int] | None = None
        self._hash: int | None = None

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_index(self, u: int, v: int) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        return self._index[canon(u, v)]

    def is_isolated(self, v: int) -> bool:
        return not self.adj[v]

    # -- derived graphs ------------------------------------------------

    def with_edges(self, extra: Iterable[Sequence[int]]) -> Graph:
        return Graph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def without_edges(self, removed: Iterable[Sequence[int]]) -> Graph:
        gone = {canon(*e) for e in removed}
        return Graph(self.n, [e for e in self.edges if e not in gone])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old ids."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        es = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), es), old

    def relabel(self, mapping: Sequence[int], n: int | None = None) -> Graph:
        n = self.n if n is None else n
        return Graph(n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        nodes = sorted(g.nodes())
        if nodes != list(range(len(nodes))):
            idx = {v: i for i, v in enumerate(nodes)}
            return cls(len(nodes), [(idx[u], idx[v]) for u, v in g.edges() if u != v])
        return cls(len(nodes), [(u, v) for u, v in g.edges() if u != v])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Orientation:
    """Orientation of every edge of ``host``; ``arcs`` holds ``(tail, head)`` pairs."""

    host: Graph
    arcs: tuple[Edge, ...]

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(t for t, h in self.arcs if h == v)

    def out_neighbors(self, v: int) -> list[int]:
        return sorted(h for t, h in self.arcs if t == v)

    def indegrees(self) -> list[int]:
        deg = [0] * self.host.n
        for _, h in self.arcs:
            deg[h] += 1
        return deg

    def is_acyclic(self) -> bool:
        indeg = self.indegrees()
        out: list[list[int]] = [[] for _ in range(self.host.n)]
        for t, h in self.arcs:
            out[t].append(h)
        queue = [v for v in range(self.host.n) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.host.n


# ---------------------------------------------------------------------------
# Standard graphs
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid_graph(rows: int, cols: int) -> Graph:
    es = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                es.append((v, v + 1))
            if r + 1 < rows:
                es.append((v, v + cols))
    return Graph(rows * cols, es)


def v8_graph() -> Graph:
    """Moebius ladder on 8 vertices: the 8-cycle plus its four antipodal chords.

    Vertex ``i`` here is vertex ``i + 1`` of the usual 1..8 numbering.
    """
    return Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def octahedron() -> Graph:
    """Octahedron with antipodal (non-adjacent) pairs 0-5, 2-4, 1-3."""
    anti = {(0, 5), (2, 4), (1, 3)}
    return Graph(6, [e for e in combinations(range(6), 2) if e not in anti])


# ---------------------------------------------------------------------------
# Degeneracy, cliques, matchings
# ---------------------------------------------------------------------------


def degeneracy_order(g: Graph) -> tuple[int, list[int], Orientation]:
    """Smallest-last ordering.

    Returns the degeneracy ``d``, the removal order, and the orientation that
    points every edge from the later-removed endpoint to the earlier one, so each
    vertex has indegree at most ``d``.
    """
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    d = 0
    while heap:
        k, v = heapq.heappop(heap)
        if removed[v] or k != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d = max(d, k)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    pos = {v: i for i, v in enumerate(order)}
    arcs = tuple(sorted((u, v) if pos[u] > pos[v] else (v, u) for u, v in g.edges))
    return d, order, Orientation(g, arcs)


def enumerate_cliques(g: Graph, p: int) -> list[tuple[int, ...]]:
    """All nonempty cliques with at most ``p`` vertices, each sorted, in sorted order."""
    if p < 1:
        raise GraphError("p must be at least 1")
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], cand: list[int]) -> None:
        out.append(clique)
        if len(clique) == p:
            return
        for i, w in enumerate(cand):
            grow(clique + (w,), [x for x in cand[i + 1:] if x in g.adj[w]])

    for v in range(g.n):
        grow((v,), [w for w in g.neighbors(v) if w > v])
    out.sort(key=lambda c: (len(c), c))
    return out


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = 1
    for c in nx.find_cliques(g.to_networkx()):
        best = max(best, len(c))
    return best


def max_matching(g: Graph) -> list[Edge]:
    """Maximum-cardinality matching (Edmonds' blossom algorithm via networkx)."""
    mate = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return sorted(canon(u, v) for u, v in mate)


def is_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_V8(g: Graph) -> bool:
    """True iff ``g`` is isomorphic to the 8-vertex Moebius ladder."""
    if g.n != 8 or g.m != 12 or any(g.degree(v) != 3 for v in range(8)):
        return False
    if any(g.adj[u] & g.adj[v] for u, v in g.edges):
        return False  # triangle
    # A cubic triangle-free graph on 8 vertices is V8 iff it has a Hamiltonian
    # cycle whose missing edges join antipodal positions.
    return _has_antipodal_hamiltonian_cycle(g)


def _has_antipodal_hamiltonian_cycle(g: Graph) -> bool:
    return v8_cycle(g) is not None


def v8_cycle(g: Graph) -> list[int] | None:
    """Rim order ``c0..c7`` of a V8 (chords join ``c_i`` and ``c_{i+4}``), or ``None``."""
    if g.n != 8:
        return None

    def extend(path: list[int]) -> bool:
        if len(path) == 8:
            if not g.has_edge(path[-1], path[0]):
                return False
            return all(g.has_edge(path[i], path[i + 4]) for i in range(4))
        for w in g.neighbors(path[-1]):
            if w not in path:
                path.append(w)
                if extend(path):
                    return True
                path.pop()
        return False

    path = [0]
    return path if extend(path) else None


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    tokens = [t for line in text.splitlines() for t in line.split("#", 1)[0].split()]
    if len(tokens) < 2:
        raise GraphError("missing header 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * m:
        raise GraphError(f"header says {m} edges, found {len(body) / 2:g}")
    pairs = [(body[2 * i], body[2 * i + 1]) for i in range(m)]
    if len({canon(u, v) for u, v in pairs}) != m:
        raise GraphError("parallel edges are not allowed")
    return Graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
