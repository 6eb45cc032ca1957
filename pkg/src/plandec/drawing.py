"""Polyline drawings with exact rational coordinates and exact crossing counts."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .graph import Graph, GraphError

Point = tuple[Fraction, Fraction]


class DrawingError(ValueError):
    pass


def as_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Drawing:
    """Vertex points plus one bend list per host edge (in ``host.edges`` order)."""

    host: Graph
    points: tuple[Point, ...]
    routes: tuple[tuple[Point, ...], ...]
    convex: bool = False
    order: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.points) != self.host.n:
            raise DrawingError("one point per vertex required")
        if len(self.routes) != self.host.m:
            raise DrawingError("one route per edge required")

    def polyline(self, i: int) -> list[Point]:
        u, v = self.host.edges[i]
        return [self.points[u], *self.routes[i], self.points[v]]

    def bends(self) -> list[int]:
        return [len(r) for r in self.routes]

    def is_rectilinear(self) -> bool:
        return all(not r for r in self.routes)

    def total_length(self) -> float:
        tot = 0.0
        for i in range(self.host.m):
            pl = self.polyline(i)
            for a, b in zip(pl, pl[1:]):
                tot += math.hypot(float(a[0] - b[0]), float(a[1] - b[1]))
        return tot

    # -- serialisation -------------------------------------------------

    def to_json(self) -> dict:
        def enc(p: Point) -> list[int]:
            return [p[0].numerator, p[0].denominator, p[1].numerator, p[1].denominator]

        data = {
            "n": self.host.n,
            "edges": [list(e) for e in self.host.edges],
            "points": [enc(p) for p in self.points],
            "routes": [[enc(p) for p in r] for r in self.routes],
        }
        if self.convex:
            data["convex"] = True
            data["order"] = list(self.order)
        return data

    @classmethod
    def from_json(cls, data: dict) -> Drawing:
        def dec(q: Sequence[int]) -> Point:
            if len(q) != 4:
                raise DrawingError("points are [num, den, num, den]")
            return (Fraction(q[0], q[1]), Fraction(q[2], q[3]))

        host = Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
        if [list(e) for e in host.edges] != [sorted(e) for e in data["edges"]]:
            raise DrawingError("edges must be listed in canonical sorted order")
        return cls(
            host,
            tuple(dec(p) for p in data["points"]),
            tuple(tuple(dec(p) for p in r) for r in data["routes"]),
            bool(data.get("convex", False)),
            tuple(data.get("order", ())),
        )

    def to_svg(self, report: CrossingReport | None = None, size: int = 600) -> str:
        pts = list(self.points) + [p for r in self.routes for p in r]
        if not pts:
            return f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"/>\n'
        xs = [float(p[0]) for p in pts]
        ys = [float(p[1]) for p in pts]
        minx, maxx, miny, maxy = min(xs), max(xs), min(ys), max(ys)
        span = max(maxx - minx, maxy - miny, 1e-9)
        pad = 0.05 * span

        def f(p: Point) -> str:
            return f"{float(p[0]):.6f},{-float(p[1]):.6f}"

        r = span / 150
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="{minx - pad:.6f} {-maxy - pad:.6f} {span + 2 * pad:.6f} {span + 2 * pad:.6f}">'
        ]
        for i in range(self.host.m):
            coords = " ".join(f(p) for p in self.polyline(i))
            out.append(f'<polyline points="{coords}" fill="none" stroke="black" stroke-width="{r / 3:.6f}"/>')
        for v, p in enumerate(self.points):
            out.append(f'<circle cx="{float(p[0]):.6f}" cy="{-float(p[1]):.6f}" r="{r:.6f}" fill="steelblue"><title>{v}</title></circle>')
        if report is not None:
            for p in report.points:
                out.append(f'<circle cx="{float(p[0]):.6f}" cy="{-float(p[1]):.6f}" r="{r / 2:.6f}" fill="red"/>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


@dataclass
class CrossingReport:
    total: int
    per_edge: list[int]
    pairs: list[tuple[int, int]] = field(default_factory=list)
    points: list[Point] = field(default_factory=list)
    # (edge a, segment index on a, edge b, segment index on b), aligned with pairs
    details: list[tuple[int, int, int, int]] = field(default_factory=list)
    degeneracies: list[str] = field(default_factory=list)
    charges: dict[tuple[int, int, int], int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.degeneracies

    @property
    def max_per_edge(self) -> int:
        return max(self.per_edge, default=0)

    @property
    def max_charge(self) -> int:
        return max(self.charges.values(), default=0)

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "max_per_edge": self.max_per_edge,
            "per_edge": self.per_edge,
            "pairs": [list(p) for p in self.pairs],
            "degeneracies": self.degeneracies,
            "max_charge": self.max_charge,
        }


# ---------------------------------------------------------------------------
# Exact crossing counting
# ---------------------------------------------------------------------------


def _to_integer_grid(points: Iterable[Point]) -> tuple[int, dict[Point, tuple[int, int]]]:
    pts = list(dict.fromkeys(points))
    den = 1
    for x, y in pts:
        den = lcm(den, x.denominator, y.denominator)
    return den, {p: (int(p[0] * den), int(p[1] * den)) for p in pts}


def _orient(ax: int, ay: int, bx: int, by: int, cx: int, cy: int) -> int:
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _segment_pairs_python(seg: list[tuple[int, int, int, int]], owner_pos: list[tuple[int, int]]):
    """Exact sweep over x-extents with Python integers (unbounded coordinates)."""
    order = sorted(range(len(seg)), key=lambda i: min(seg[i][0], seg[i][2]))
    active: list[int] = []
    pairs, codes = [], []
    for i in order:
        ax, ay, bx, by = seg[i]
        lo = min(ax, bx)
        active = [j for j in active if max(seg[j][0], seg[j][2]) >= lo]
        for j in active:
            if owner_pos[i][0] == owner_pos[j][0] and abs(owner_pos[i][1] - owner_pos[j][1]) == 1:
                continue
            cx, cy, dx, dy = seg[j]
            if max(cy, dy) < min(ay, by) or min(cy, dy) > max(ay, by):
                continue
            o1 = _orient(ax, ay, bx, by, cx, cy)
            o2 = _orient(ax, ay, bx, by, dx, dy)
            o3 = _orient(cx, cy, dx, dy, ax, ay)
            o4 = _orient(cx, cy, dx, dy, bx, by)
            if o1 * o2 < 0 and o3 * o4 < 0:
                code = kernels.CROSS
            elif o1 * o2 <= 0 and o3 * o4 <= 0:
                code = kernels.TOUCH
            else:
                continue
            pairs.append((min(i, j), max(i, j)))
            codes.append(code)
        active.append(i)
    return pairs, codes


def _intersection(s: tuple[int, int, int, int], t: tuple[int, int, int, int]) -> tuple[int, int, int]:
    """Proper intersection point of two segments as reduced ``(X, Y, D)`` meaning ``(X/D, Y/D)``."""
    ax, ay, bx, by = s
    cx, cy, dx, dy = t
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    den = rx * sy - ry * sx
    num = (cx - ax) * sy - (cy - ay) * sx
    X = ax * den + num * rx
    Y = ay * den + num * ry
    if den < 0:
        X, Y, den = -X, -Y, -den
    g = gcd(gcd(X, Y), den)
    return X // g, Y // g, den // g


def _collinear(s: tuple[int, int, int, int], t: tuple[int, int, int, int]) -> bool:
    ax, ay, bx, by = s
    cx, cy, dx, dy = t
    return _orient(ax, ay, bx, by, cx, cy) == 0 and _orient(ax, ay, bx, by, dx, dy) == 0


def _meet_only_at_shared_end(s, t, ends_s, ends_t) -> bool:
    """Segments sharing one endpoint touch only there unless collinear and overlapping."""
    if not _collinear(s, t):
        return True
    ps = (s[0], s[1]) if ends_s[0] in ends_t else (s[2], s[3])
    a = (s[2], s[3]) if ends_s[0] in ends_t else (s[0], s[1])
    b = (t[2], t[3]) if ends_t[0] in ends_s else (t[0], t[1])
    return (a[0] - ps[0]) * (b[0] - ps[0]) + (a[1] - ps[1]) * (b[1] - ps[1]) < 0


def count_crossings(dr: Drawing) -> CrossingReport:
    """Exact crossing count of a polyline drawing.

    Degenerate configurations (an edge through a vertex, touching or overlapping
    edges, coincident points, self-intersecting routes, three edges through one
    crossing point) are reported in ``degeneracies`` rather than counted.
    """
    g = dr.host
    per_edge = [0] * g.m
    report = CrossingReport(0, per_edge)
    # Point ids: vertices 0..n-1, bends numbered afterwards.
    polys: list[list[tuple[Point, int]]] = []
    nid = g.n
    for i, (u, v) in enumerate(g.edges):
        pl = [(dr.points[u], u)]
        for b in dr.routes[i]:
            pl.append((b, nid))
            nid += 1
        pl.append((dr.points[v], v))
        polys.append(pl)
    all_pts = [p for p in dr.points] + [b for r in dr.routes for b in r]
    if len(set(all_pts)) != len(all_pts):
        seen: dict[Point, int] = {}
        for k, p in enumerate(all_pts):
            if p in seen:
                report.degeneracies.append(f"coincident points {seen[p]} and {k}")
            else:
                seen[p] = k
    if g.m == 0:
        return report
    den, grid = _to_integer_grid(all_pts)
    seg: list[tuple[int, int, int, int]] = []
    seg_ids: list[tuple[int, int]] = []  # (edge, index along polyline)
    seg_ends: list[tuple[int, int]] = []
    for i, pl in enumerate(polys):
        for k in range(len(pl) - 1):
            (p, a), (q, b) = pl[k], pl[k + 1]
            if p == q:
                report.degeneracies.append(f"zero-length segment on edge {i}")
            seg.append((*grid[p], *grid[q]))
            seg_ids.append((i, k))
            seg_ends.append((a, b))
    # Isolated vertices own no segment, so the pair sweep cannot see an edge through them.
    for v in range(g.n):
        if g.adj[v]:
            continue
        px, py = grid[dr.points[v]]
        for k, (ax, ay, bx, by) in enumerate(seg):
            if (_orient(ax, ay, bx, by, px, py) == 0 and min(ax, bx) <= px <= max(ax, bx)
                    and min(ay, by) <= py <= max(ay, by)):
                report.degeneracies.append(f"edge {g.edges[seg_ids[k][0]]} passes through vertex {v}")
    big = max((abs(c) for s in seg for c in s), default=0)
    if big < kernels.INT_COORD_LIMIT:
        arr = np.array(seg, dtype=np.int64).reshape(-1, 4)
        pr, cd = kernels.segment_pairs(arr, np.array(seg_ids, dtype=np.int64).reshape(-1, 2))
        pairs = [(int(a), int(b)) for a, b in pr]
        codes = [int(c) for c in cd]
    else:
        pairs, codes = _segment_pairs_python(seg, seg_ids)

    at_point: dict[tuple[int, int, int], list[tuple[int, int]]] = {}
    for (a, b), code in zip(pairs, codes):
        ea, eb = seg_ids[a][0], seg_ids[b][0]
        if code == kernels.TOUCH:
            shared = set(seg_ends[a]) & set(seg_ends[b])
            legit = (
                ea != eb
                and len(shared) == 1
                and next(iter(shared)) < g.n
                and _meet_only_at_shared_end(seg[a], seg[b], seg_ends[a], seg_ends[b])
            )
            if not legit:
                report.degeneracies.append(f"edges {g.edges[ea]} and {g.edges[eb]} touch or overlap")
            continue
        if ea == eb:
            report.degeneracies.append(f"edge {g.edges[ea]} crosses itself")
            continue
        pt = _intersection(seg[a], seg[b])
        if ea > eb:
            a, b, ea, eb = b, a, eb, ea
        at_point.setdefault(pt, []).append((ea, seg_ids[a][1], eb, seg_ids[b][1]))
    for pt, lst in at_point.items():
        if len(lst) > 1:
            report.degeneracies.append(f"{len(lst)} crossing pairs meet at one point")
        for det in lst:
            per_edge[det[0]] += 1
            per_edge[det[2]] += 1
            report.details.append(det)
            report.points.append((Fraction(pt[0], pt[2] * den), Fraction(pt[1], pt[2] * den)))
    order = sorted(range(len(report.details)), key=lambda k: report.details[k])
    report.details = [report.details[k] for k in order]
    report.points = [report.points[k] for k in order]
    report.pairs = [(d[0], d[2]) for d in report.details]
    report.total = len(report.pairs)
    return report


def convex_count(order: Sequence[int], g: Graph) -> CrossingReport:
    """Crossings of the convex drawing with vertices placed in circular ``order``."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    chords = np.array([sorted((pos[u], pos[v])) for u, v in g.edges], dtype=np.int64).reshape(-1, 2)
    pr, per = kernels.interleavings(chords)
    pairs = sorted((int(a), int(b)) for a, b in pr)
    return CrossingReport(len(pairs), [int(x) for x in per], pairs)


def circle_points(k: int, seed: int = 0, jitter: float = 0.25) -> list[Point]:
    """``k`` exact rational points on the unit circle in counter-clockwise order."""
    rng = random.Random(seed)
    out = []
    ts = []
    for i in range(k):
        theta = -math.pi + 2 * math.pi * (i + 0.5 + jitter * (rng.random() - 0.5)) / k
        t = Fraction(math.tan(theta / 2)).limit_denominator(997 + rng.randrange(1000))
        ts.append(t)
    ts.sort()
    for t in ts:
        d = 1 + t * t
        out.append(((1 - t * t) / d, 2 * t / d))
    if len(set(out)) != len(out):
        raise DrawingError("circle points collided")
    return out


def convex_drawing(g: Graph, order: Sequence[int], seed: int = 0, attempts: int = 50) -> Drawing:
    """Geometric convex drawing realising ``order`` with no three chords concurrent."""
    for a in range(attempts):
        pts = circle_points(g.n, seed + 7919 * a) if g.n else []
        loc = [None] * g.n
        for i, v in enumerate(order):
            loc[v] = pts[i]
        dr = Drawing(g, tuple(loc), tuple(() for _ in g.edges), True, tuple(order))  # type: ignore[arg-type]
        if count_crossings(dr).ok:
            return dr
    raise DrawingError("could not place points in general position on the circle")
