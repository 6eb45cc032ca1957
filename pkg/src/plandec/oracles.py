"""Exact small-scale oracles: minor containment and tree-width."""

from __future__ import annotations

import os
from functools import lru_cache

import networkx as nx

from . import kernels
from .graph import Graph, GraphError, canon

DEFAULT_TW_CAP = 18
DEFAULT_MINOR_CAP = 25


def oracle_caps() -> tuple[int, int]:
    """``(treewidth cap, minor cap)``; ``PLANDEC_ORACLE_CAP`` may hold ``"a/b"`` or one integer."""
    raw = os.environ.get("PLANDEC_ORACLE_CAP", "").strip()
    if not raw:
        return DEFAULT_TW_CAP, DEFAULT_MINOR_CAP
    parts = raw.split("/")
    try:
        if len(parts) == 1:
            v = int(parts[0])
            return v, v
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"bad PLANDEC_ORACLE_CAP value {raw!r}") from None


# ---------------------------------------------------------------------------
# Minor containment
# ---------------------------------------------------------------------------

_TARGETS = {"K5": (5, 10, 4), "K33": (6, 9, 3)}  # vertices, edges, degree

EdgeSet = frozenset[tuple[int, int]]


def _reduce(edges: EdgeSet, marks: EdgeSet, hdeg: int) -> tuple[EdgeSet, EdgeSet] | None:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices away from marked edges.

    Both targets are 3-connected with minimum degree 3, so this keeps the answer.
    Returns ``None`` when the marks can no longer be honoured.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    marks = set(marks)
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            marked = [w for w in adj[v] if canon(v, w) in marks]
            if marked and d < hdeg and len(marked) == d:
                return None  # v must be a branch set on its own and has too few edges
            if marked:
                continue
            if d <= 1:
                for w in adj.pop(v):
                    adj[w].discard(v)
                changed = True
            elif d == 2:
                a, b = adj.pop(v)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    ids = {v: i for i, v in enumerate(sorted(adj))}
    es = frozenset(canon(ids[u], ids[v]) for u in adj for v in adj[u] if u < v)
    return es, frozenset(canon(ids[u], ids[v]) for u, v in marks)


def _kuratowski(edges: EdgeSet) -> tuple[bool, list[tuple[int, int]] | None]:
    g = nx.Graph(list(edges))
    ok, cert = nx.check_planarity(g, counterexample=True)
    if ok:
        return True, None
    return False, [canon(u, v) for u, v in cert.edges()]


def _contract(edges: EdgeSet, e: tuple[int, int]) -> EdgeSet:
    a, b = e
    out = set()
    for u, v in edges:
        if (u, v) == e:
            continue
        u = a if u == b else u
        v = a if v == b else v
        if u != v:
            out.add(canon(u, v))
    return frozenset(out)


def _adj(edges: EdgeSet) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _split(edges: EdgeSet) -> list[EdgeSet] | None:
    """Split at a cut vertex or a separation pair; ``None`` when already 3-connected.

    A pair ``{a, b}`` adds the virtual edge ``ab`` to both sides. Each side is
    2-connected, so the other side supplies an a-b path and a 3-connected minor
    of the whole graph survives in one side.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    verts = sorted(adj)

    def parts(removed: set[int]) -> list[set[int]]:
        seen = set(removed)
        out = []
        for s in verts:
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            out.append(comp)
        return out

    def side(keep: set[int], extra: tuple[int, int] | None) -> EdgeSet:
        es = {e for e in edges if e[0] in keep and e[1] in keep}
        if extra is not None:
            es.add(canon(*extra))
        return frozenset(es)

    for sep in [()] + [(a,) for a in verts] + [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]]:
        comps = parts(set(sep))
        if len(comps) < 2:
            continue
        if not sep:
            return [side(c, None) for c in comps]
        c = comps[0]
        rest = set(verts) - c
        extra = tuple(sep) if len(sep) == 2 else None
        return [side(c | set(sep), extra), side(rest, extra)]
    return None


def has_minor_small(g: Graph, h: str) -> bool:
    """Exact test for a ``K5`` or ``K33`` minor.

    Graphs that are not 3-connected are split first. Otherwise an edge of a
    Kuratowski witness is deleted, contracted, or frozen as the edge joining two
    branch sets. Frozen edges are never touched again, so the three branches
    cover every minor model.
    """
    if h not in _TARGETS:
        raise GraphError("target must be 'K5' or 'K33'")
    cap = oracle_caps()[1]
    if g.n > cap:
        raise GraphError(f"minor oracle limited to {cap} vertices (got {g.n})")
    hn, hm, hdeg = _TARGETS[h]

    @lru_cache(maxsize=None)
    def solve(edges: EdgeSet, marks: EdgeSet) -> bool:
        verts = {v for e in edges for v in e}
        n, m = len(verts), len(edges)
        if n < hn or m < hm or len(marks) > hm:
            return False
        mdeg: dict[int, int] = {}
        for u, v in marks:
            mdeg[u] = mdeg.get(u, 0) + 1
            mdeg[v] = mdeg.get(v, 0) + 1
        if max(mdeg.values(), default=0) > hdeg:
            return False
        # Graphs without the minor have at most 3n-6 (K5) or 3n-5 (K33) edges.
        if m > 3 * n - (6 if h == "K5" else 5):
            return True
        ok, cert = _kuratowski(edges)
        if ok:
            return False
        assert cert is not None
        if h == "K5" and min(len(a) for a in _adj(edges).values()) >= 4 and \
                nx.node_connectivity(nx.Graph(list(edges))) >= 4:
            return True  # K5-minor-free graphs that are 4-connected are planar
        pieces = _split(edges)
        if pieces is not None:
            # The target is 3-connected; marks are dropped since each piece is an exact subproblem.
            return any(solve(*nxt) for p in pieces
                       if (nxt := _reduce(p, frozenset(), hdeg)) is not None)
        cv = {x for e in cert for x in e}
        branch_v = [v for v in cv if sum(v in e for e in cert) >= 3]
        if len(branch_v) == hn:
            return True
        free = [e for e in cert if e not in marks] or sorted(edges - marks)
        if not free:
            return False  # every edge frozen and no subdivision of the target found
        e = min(free)
        # Contracting first raises density, which settles positive instances early.
        for nxt in (_reduce(_contract(edges, e), _contract(marks, e), hdeg),
                    _reduce(edges - {e}, marks, hdeg),
                    _reduce(edges, marks | {e}, hdeg)):
            if nxt is not None and solve(*nxt):
                return True
        return False

    start = _reduce(frozenset(g.edges), frozenset(), hdeg)
    assert start is not None
    return solve(*start)


# ---------------------------------------------------------------------------
# Tree-width
# ---------------------------------------------------------------------------


def treewidth_exact_small(g: Graph) -> int:
    """Exact tree-width by subset dynamic programming, one component at a time."""
    cap = oracle_caps()[0]
    if g.n > cap:
        raise GraphError(f"tree-width oracle limited to {cap} vertices (got {g.n})")
    if g.n == 0:
        return -1
    best = 0
    for comp in g.components():
        if len(comp) <= best + 1:
            continue
        sub, _ = g.induced(comp)
        masks = [0] * sub.n
        for u, v in sub.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        best = max(best, kernels.treewidth_dp(masks, sub.n))
    return best


__all__ = ["has_minor_small", "treewidth_exact_small", "oracle_caps"]
