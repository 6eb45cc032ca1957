"""Turn a planar decomposition into a polyline drawing with certified crossings.

Pipeline: straight-line layout of the decomposition graph, a disc of radius
``eps`` around every bag, one point per vertex and a pool of bend points per
bag inside the discs, shortest feasible routes through the bags, then local
swaps of bend points that strictly shorten the drawing until no crossing
tuple is charged more than twice.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .decomposition import Decomposition, DecompositionError, validate
from .drawing import CrossingReport, Drawing, count_crossings
from .graph import Graph
from .planar import planar_embedding_or_raise, straight_line_layout

COORD_BUDGET = 1 << 29
MIN_EPS = 16


@dataclass
class RenderResult:
    drawing: Drawing
    report: CrossingReport
    bag_routes: list[list[int]]
    bound: int  # 2 * Delta^2 * sum_X C(|X|+1, 2)
    tuple_bound: int  # twice the number of charge tuples
    swaps: int
    attempts: int
    scale: int
    eps: int
    lengths: list[float] = field(default_factory=list)
    bend_limits: list[int] = field(default_factory=list)  # s(v) + s(w) - 2 per edge

    @property
    def bends_ok(self) -> bool:
        return all(b <= lim for b, lim in zip(self.drawing.bends(), self.bend_limits))

    @property
    def bound_ok(self) -> bool:
        return self.report.ok and self.report.total <= self.bound


def crossing_bound(d: Decomposition) -> int:
    delta = d.host.max_degree()
    return 2 * delta * delta * sum(math.comb(len(b) + 1, 2) for b in d.bags)


def tuple_count(d: Decomposition) -> int:
    deg = [d.host.degree(v) for v in range(d.host.n)]
    tot = 0
    for b in d.bags:
        s = [deg[v] for v in b]
        tot += (sum(s) ** 2 + sum(x * x for x in s)) // 2
    return tot


def _layout(dg: Graph) -> list[tuple[int, int]]:
    emb = planar_embedding_or_raise(dg)
    dr = straight_line_layout(emb)
    return [(int(p[0]), int(p[1])) for p in dr.points]


def _min_clearance_sq(pos: np.ndarray, edges: list[tuple[int, int]]) -> float:
    """Smallest squared distance vertex-vertex or vertex to non-incident edge."""
    n = pos.shape[0]
    best = math.inf
    if n >= 2:
        diff = pos[:, None, :] - pos[None, :, :]
        d2 = (diff ** 2).sum(axis=2)
        d2[np.arange(n), np.arange(n)] = np.inf
        best = float(d2.min())
    if edges and n >= 3:
        e = np.array(edges, dtype=np.int64)
        a, b = pos[e[:, 0]], pos[e[:, 1]]  # (m, 2)
        ab = b - a
        ll = (ab ** 2).sum(axis=1)
        ap = pos[:, None, :] - a[None, :, :]  # (n, m, 2)
        t = np.clip((ap * ab[None]).sum(axis=2) / ll[None], 0.0, 1.0)
        proj = a[None] + t[..., None] * ab[None]
        dd = ((pos[:, None, :] - proj) ** 2).sum(axis=2)
        idx = np.arange(n)[:, None]
        dd[(idx == e[:, 0][None]) | (idx == e[:, 1][None])] = np.inf
        best = min(best, float(dd.min()))
    return best


def _routes(d: Decomposition, bags_of: list[list[int]]) -> list[list[int]]:
    """Shortest bag sequences: first bags containing ``v``, then bags containing ``w``."""
    dg = d.dgraph
    out = []
    for v, w in d.host.edges:
        sv, sw = bags_of[v][0], bags_of[w][0]
        if sv == sw:
            out.append([sv])
            continue
        inv, inw = set(bags_of[v]), set(bags_of[w])
        start = (sv, 0)
        dist = {start: 0}
        prev: dict[tuple[int, int], tuple[int, int]] = {}
        dq = deque([start])
        goal = (sw, 1)
        while dq:
            x, side = state = dq.popleft()
            if state == goal:
                break
            nxt = []
            if side == 0 and x in inw:
                nxt.append(((x, 1), 0))
            for y in sorted(dg.adj[x]):
                if side == 0 and y in inv:
                    nxt.append(((y, 0), 1))
                if y in inw:
                    nxt.append(((y, 1), 1))
            for st, c in nxt:
                nd = dist[state] + c
                if st not in dist or nd < dist[st]:
                    dist[st] = nd
                    prev[st] = state
                    if c == 0:
                        dq.appendleft(st)
                    else:
                        dq.append(st)
        if goal not in dist:
            raise DecompositionError(f"no feasible route for edge {v}{w}")
        seq = [goal]
        while seq[-1] != start:
            seq.append(prev[seq[-1]])
        bags = []
        for x, _ in reversed(seq):
            if not bags or bags[-1] != x:
                bags.append(x)
        out.append(bags)
    return out


def _disc_point(rng: random.Random, c: tuple[int, int], eps: int, used: set[tuple[int, int]]) -> tuple[int, int]:
    r2 = eps * eps
    while True:
        a = rng.randint(-eps + 1, eps - 1)
        b = rng.randint(-eps + 1, eps - 1)
        if a * a + b * b < r2:
            p = (c[0] + a, c[1] + b)
            if p not in used:
                used.add(p)
                return p


def _pt(p: tuple[int, int]) -> tuple[Fraction, Fraction]:
    return (Fraction(p[0]), Fraction(p[1]))


def _seg_len(p, q) -> float:
    return math.hypot(float(p[0] - q[0]), float(p[1] - q[1]))


def render(d: Decomposition, seed: int = 0, max_attempts: int = 100, uncross: bool = True,
           check: bool = True) -> RenderResult:
    """Draw ``d.host`` from the planar decomposition ``d``."""
    if check:
        rep = validate(d)
        if not rep.ok:
            raise DecompositionError("invalid decomposition: " + "; ".join(rep.violations[:3]))
        if not rep.planar:
            raise DecompositionError("decomposition graph is not planar")
    g = d.host
    bags_of = d.bags_of()
    if g.n == 0:
        dr = Drawing(g, (), ())
        return RenderResult(dr, count_crossings(dr), [], 0, 0, 0, 0, 1, 0)
    lay = _layout(d.dgraph)
    pos = np.array(lay, dtype=np.float64).reshape(-1, 2)
    clear2 = _min_clearance_sq(pos, list(d.dgraph.edges))
    if not math.isfinite(clear2):
        clear2 = 4.0
    big = max(1, max(max(abs(x), abs(y)) for x, y in lay))
    scale = max(1, COORD_BUDGET // (big + 1))
    eps = math.isqrt(int(scale * scale * clear2 * 0.999)) // 3
    if eps < MIN_EPS:
        scale = math.ceil(scale * MIN_EPS / max(eps, 1)) + 1
        eps = math.isqrt(int(scale * scale * clear2 * 0.999)) // 3
    centers = [(scale * x, scale * y) for x, y in lay]
    bag_routes = _routes(d, bags_of)
    limits = [len(bags_of[v]) + len(bags_of[w]) - 2 for v, w in g.edges]
    deg = [g.degree(v) for v in range(g.n)]

    for attempt in range(max_attempts):
        rng = random.Random(seed * 1_000_003 + attempt)
        used: set[tuple[int, int]] = set()
        vpts = [_disc_point(rng, centers[bags_of[v][0]], eps, used) for v in range(g.n)]
        pools = []
        for x, bag in enumerate(d.bags):
            need = sum(deg[v] for v in bag)
            pools.append([_disc_point(rng, centers[x], eps, used) for _ in range(need)])
        taken = [0] * d.order
        routes: list[list[tuple[int, int]]] = []
        for seq in bag_routes:
            r = []
            for x in seq[1:-1]:
                r.append(pools[x][taken[x]])
                taken[x] += 1
            routes.append(r)
        dr = _build(g, vpts, routes)
        report = count_crossings(dr)
        if not report.ok:
            continue
        swaps = 0
        lengths = [dr.total_length()]
        if uncross:
            res = _uncross(g, vpts, routes, bag_routes, report, lengths)
            if res is None:
                continue
            dr, report, swaps = res
        report.charges = _charges(report, bag_routes)
        res = RenderResult(dr, report, bag_routes, crossing_bound(d), 2 * tuple_count(d), swaps,
                           attempt + 1, scale, eps, lengths, limits)
        return res
    raise DecompositionError("could not reach general position within the resample cap")


def _build(g: Graph, vpts, routes) -> Drawing:
    return Drawing(g, tuple(_pt(p) for p in vpts), tuple(tuple(_pt(p) for p in r) for r in routes))


def _segment_bags(seq: list[int], k: int) -> set[int]:
    if len(seq) == 1:
        return {seq[0]}
    return {seq[k], seq[k + 1]}


def _charges(report: CrossingReport, bag_routes: list[list[int]]) -> dict[tuple[int, int, int], int]:
    charges: dict[tuple[int, int, int], int] = {}
    for ea, sa, eb, sb in report.details:
        shared = _segment_bags(bag_routes[ea], sa) & _segment_bags(bag_routes[eb], sb)
        if not shared:
            raise DecompositionError(f"edges {ea} and {eb} cross away from any common bag")
        key = (ea, eb, min(shared))
        charges[key] = charges.get(key, 0) + 1
    return charges


def _uncross(g, vpts, routes, bag_routes, report, lengths, cap: int = 10_000):
    """Swap bend points of two edges in a common bag while that shortens the drawing."""
    bend_at = [{x: k for k, x in enumerate(seq) if 0 < k < len(seq) - 1} for seq in bag_routes]
    swaps = 0
    frozen: set[tuple[int, int, int]] = set()
    dr = _build(g, vpts, routes)
    for _ in range(cap):
        cnt: dict[tuple[int, int, int], int] = {}
        for ea, sa, eb, sb in report.details:
            shared = _segment_bags(bag_routes[ea], sa) & _segment_bags(bag_routes[eb], sb)
            for x in shared:
                if x in bend_at[ea] and x in bend_at[eb]:
                    cnt[(ea, eb, x)] = cnt.get((ea, eb, x), 0) + 1
        todo = sorted(k for k, c in cnt.items() if c >= 3 and k not in frozen)
        if not todo:
            return dr, report, swaps
        busy: set[int] = set()
        applied = []
        for ea, eb, x in todo:
            if ea in busy or eb in busy:
                continue
            ka, kb = bend_at[ea][x], bend_at[eb][x]
            pa, pb = routes[ea][ka - 1], routes[eb][kb - 1]
            poly_a = [vpts[g.edges[ea][0]], *routes[ea], vpts[g.edges[ea][1]]]
            poly_b = [vpts[g.edges[eb][0]], *routes[eb], vpts[g.edges[eb][1]]]
            a0, a1 = poly_a[ka - 1], poly_a[ka + 1]
            b0, b1 = poly_b[kb - 1], poly_b[kb + 1]
            before = _seg_len(a0, pa) + _seg_len(pa, a1) + _seg_len(b0, pb) + _seg_len(pb, b1)
            after = _seg_len(a0, pb) + _seg_len(pb, a1) + _seg_len(b0, pa) + _seg_len(pa, b1)
            if not after < before:
                frozen.add((ea, eb, x))
                continue
            routes[ea][ka - 1], routes[eb][kb - 1] = pb, pa
            busy.update((ea, eb))
            applied.append((ea, eb, x, ka, kb, pa, pb))
        if not applied:
            return dr, report, swaps
        dr = _build(g, vpts, routes)
        new_report = count_crossings(dr)
        if not new_report.ok:
            # undo this round and never retry these swaps
            for ea, eb, x, ka, kb, pa, pb in applied:
                routes[ea][ka - 1], routes[eb][kb - 1] = pa, pb
                frozen.add((ea, eb, x))
            dr = _build(g, vpts, routes)
            continue
        swaps += len(applied)
        report = new_report
        lengths.append(dr.total_length())
    return dr, report, swaps


__all__ = ["render", "RenderResult", "crossing_bound", "tuple_count"]
