"""Planarity testing, rotation systems, triangulation and straight-line layout."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING

import networkx as nx
from networkx.algorithms.planar_drawing import combinatorial_embedding_to_pos, triangulate_embedding

from .graph import Graph, GraphError, canon

if TYPE_CHECKING:
    from .drawing import Drawing


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system of a planar graph.

    ``rotation[v]`` lists the neighbours of ``v`` in clockwise order. Faces are
    traced by following, at each vertex, the counter-clockwise successor of the
    vertex we arrived from.
    """

    host: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer_face: int = 0
    _faces: list[tuple[int, ...]] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    @property
    def faces(self) -> list[tuple[int, ...]]:
        if self._faces is None:
            object.__setattr__(self, "_faces", _trace_faces(self.rotation))
        return self._faces

    def face_edges(self, f: int) -> list[tuple[int, int]]:
        walk = self.faces[f]
        return [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]

    def euler_ok(self) -> bool:
        """Euler's formula summed over the connected components."""
        g = self.host
        comps = [c for c in g.components()]
        isolated = sum(1 for c in comps if len(c) == 1)
        f = len(self.faces) + isolated
        return g.n - g.m + f == 1 + len(comps)

    def to_networkx(self) -> nx.PlanarEmbedding:
        emb = nx.PlanarEmbedding()
        emb.add_nodes_from(range(self.host.n))
        for v, rot in enumerate(self.rotation):
            prev = None
            for w in rot:
                emb.add_half_edge(v, w, ccw=prev) if prev is not None else emb.add_half_edge(v, w)
                prev = w
        return emb

    @classmethod
    def from_networkx(cls, host: Graph, emb: nx.PlanarEmbedding) -> PlanarEmbedding:
        rotation = tuple(tuple(emb.neighbors_cw_order(v)) if v in emb else () for v in range(host.n))
        e = cls(host, rotation)
        faces = e.faces
        outer = max(range(len(faces)), key=lambda i: (len(faces[i]), -i)) if faces else 0
        return cls(host, rotation, outer)

    def to_json(self) -> dict:
        g = self.host
        return {
            "rotation": [[g.edge_index(v, w) for w in rot] for v, rot in enumerate(self.rotation)],
            "outer": self.outer_face,
        }

    @classmethod
    def from_json(cls, host: Graph, data: dict) -> PlanarEmbedding:
        rotation = []
        for v, ids in enumerate(data["rotation"]):
            rot = []
            for i in ids:
                a, b = host.edges[i]
                rot.append(b if a == v else a)
            rotation.append(tuple(rot))
        return cls(host, tuple(rotation), int(data.get("outer", 0)))


def _trace_faces(rotation: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    pos = [{w: i for i, w in enumerate(rot)} for rot in rotation]
    seen: set[tuple[int, int]] = set()
    faces = []
    for v, rot in enumerate(rotation):
        for w in rot:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rb = rotation[b]
                nxt = rb[(pos[b][a] - 1) % len(rb)]
                a, b = b, nxt
            faces.append(tuple(walk))
    return faces


def is_planar(g: Graph) -> tuple[bool, PlanarEmbedding | None]:
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        return False, None
    return True, PlanarEmbedding.from_networkx(g, emb)


def planar(g: Graph) -> bool:
    return is_planar(g)[0]


def is_outerplanar(g: Graph) -> bool:
    """Outerplanar iff adding one vertex adjacent to everything keeps it planar."""
    apex = g.n
    return planar(Graph(g.n + 1, list(g.edges) + [(v, apex) for v in range(g.n)]))


def outerplanar_order(g: Graph) -> list[int]:
    """A cyclic vertex order in which the convex drawing of ``g`` is plane."""
    apex = g.n
    aug = Graph(g.n + 1, list(g.edges) + [(v, apex) for v in range(g.n)])
    ok, emb = is_planar(aug)
    if not ok:
        raise GraphError("graph is not outerplanar")
    assert emb is not None
    return list(emb.rotation[apex])


def triangulate_planar(e: PlanarEmbedding) -> tuple[Graph, PlanarEmbedding]:
    """Add edges until every face (outer face included) is a triangle."""
    g = e.host
    if g.n < 3:
        raise GraphError("triangulation needs at least 3 vertices")
    tri, _ = triangulate_embedding(e.to_networkx(), fully_triangulate=True)
    h = Graph(g.n, [canon(u, v) for u, v in tri.edges()])
    if h.m != 3 * g.n - 6:
        # The library pass can leave a face untriangulated when a chord already
        # exists elsewhere; fall back to a fresh embedding of the supergraph.
        h = _complete_triangulation(h)
    ok, emb = is_planar(h)
    if not ok or h.m != 3 * g.n - 6:
        raise GraphError("triangulation failed")
    assert emb is not None
    return h, emb


def _complete_triangulation(h: Graph) -> Graph:
    for _ in range(3 * h.n):
        ok, emb = is_planar(h)
        assert ok and emb is not None
        tri, _ = triangulate_embedding(emb.to_networkx(), fully_triangulate=True)
        nh = Graph(h.n, [canon(u, v) for u, v in tri.edges()])
        if nh.m == 3 * h.n - 6 or nh == h:
            return nh
        h = nh
    return h


def is_triangulation(g: Graph) -> bool:
    return g.n >= 3 and g.m == 3 * g.n - 6 and planar(g)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges:
        for w in g.adj[u] & g.adj[v]:
            if w > v:
                out.append((u, v, w))
    return sorted(out)


def separating_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """Triangles whose removal disconnects the graph."""
    out = []
    for t in triangles(g):
        rest = [v for v in range(g.n) if v not in t]
        if not rest:
            continue
        sub, _ = g.induced(rest)
        if not sub.is_connected():
            out.append(t)
    return out


def straight_line_layout(e: PlanarEmbedding) -> Drawing:
    """Crossing-free straight-line drawing on an integer grid (shift method)."""
    from .drawing import Drawing

    g = e.host
    if g.n == 0:
        return Drawing(g, (), tuple(() for _ in g.edges))
    if g.n == 1:
        return Drawing(g, ((Fraction(0), Fraction(0)),), ())
    if g.n == 2:
        pts = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
        return Drawing(g, pts, tuple(() for _ in g.edges))
    pos = combinatorial_embedding_to_pos(e.to_networkx(), fully_triangulate=False)
    pts = tuple((Fraction(int(pos[v][0])), Fraction(int(pos[v][1]))) for v in range(g.n))
    return Drawing(g, pts, tuple(() for _ in g.edges))


def planar_embedding_or_raise(g: Graph) -> PlanarEmbedding:
    ok, emb = is_planar(g)
    if not ok:
        raise GraphError("graph is not planar")
    assert emb is not None
    return emb


def dual_of_triangulation(g: Graph, emb: PlanarEmbedding) -> tuple[list[frozenset[int]], list[tuple[int, int]]]:
    """Faces of a triangulation as vertex sets, and face pairs sharing an edge."""
    faces = [frozenset(f) for f in emb.faces]
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(faces):
        for a, b in combinations(sorted(f), 2):
            by_edge.setdefault((a, b), []).append(i)
    dual = sorted({(min(fs), max(fs)) for fs in by_edge.values() if len(fs) == 2})
    return faces, dual
