"""Independent brute-force checkers used as test oracles.

Nothing here calls into the code under test beyond reading plain attributes,
so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import networkx as nx

from plandec.decomposition import Decomposition
from plandec.drawing import Drawing


def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def naive_crossings(dr: Drawing) -> tuple[int, list[int]]:
    """All-pairs proper segment intersections between distinct edges, exact rationals."""
    g = dr.host
    polys = []
    for i, (u, v) in enumerate(g.edges):
        pts = [dr.points[u], *dr.routes[i], dr.points[v]]
        polys.append([(pts[k], pts[k + 1]) for k in range(len(pts) - 1)])
    per = [0] * g.m
    total = 0
    for i, j in combinations(range(g.m), 2):
        for a, b in polys[i]:
            for c, d in polys[j]:
                if _orient(a, b, c) * _orient(a, b, d) < 0 and _orient(c, d, a) * _orient(c, d, b) < 0:
                    total += 1
                    per[i] += 1
                    per[j] += 1
    return total, per


def brute_is_decomposition(d: Decomposition) -> bool:
    """The defining properties checked directly with networkx, no shortcuts."""
    g, dg = d.host, nx.Graph()
    dg.add_nodes_from(range(len(d.bags)))
    dg.add_edges_from(d.dgraph.edges)
    if any(v < 0 or v >= g.n for b in d.bags for v in b):
        return False
    D = {v: {i for i, b in enumerate(d.bags) if v in b} for v in range(g.n)}
    for v in range(g.n):
        if not D[v] or not nx.is_connected(dg.subgraph(D[v])):
            return False
    for v, w in g.edges:
        if D[v] & D[w]:
            continue
        if d.strong:
            return False
        if not any(dg.has_edge(x, y) for x in D[v] for y in D[w]):
            return False
    if d.p > 2:
        hg = nx.Graph()
        hg.add_nodes_from(range(g.n))
        hg.add_edges_from(g.edges)
        for c in nx.enumerate_all_cliques(hg):
            if len(c) > d.p:
                break
            if len(c) < 3:
                continue
            cs = set(c)
            if any(cs <= b for b in d.bags):
                continue
            if d.strong:
                return False
            if not any(cs <= (d.bags[x] | d.bags[y]) for x, y in dg.edges):
                return False
    k = max((len(b) for b in d.bags), default=0)
    bound = math.comb(k, 2) * len(d.bags) if d.strong else k * k * dg.number_of_edges() + math.comb(k, 2) * len(d.bags)
    return g.m <= bound


def is_planar_nx(n: int, edges) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.check_planarity(h)[0]


def frac_pt(x, y) -> tuple[Fraction, Fraction]:
    return (Fraction(x), Fraction(y))


def brute_has_minor(n: int, edges, target: str) -> bool:
    """Enumerate branch-set assignments directly (tiny graphs only)."""
    k = 5 if target == "K5" else 6
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    lab = [-1] * n

    def connected(vs: list[int]) -> bool:
        seen, stack = {vs[0]}, [vs[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if lab[y] == lab[vs[0]] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    def good() -> bool:
        sets = [[v for v in range(n) if lab[v] == i] for i in range(k)]
        if any(not s or not connected(s) for s in sets):
            return False
        touch = {frozenset((lab[u], lab[v])) for u, v in edges if lab[u] >= 0 and lab[v] >= 0 and lab[u] != lab[v]}
        if target == "K5":
            return len(touch) == 10
        # some split of the six sets into two sides must be fully joined
        return any(all(frozenset((a, b)) in touch for a in side for b in range(6) if b not in side)
                   for side in combinations(range(6), 3))

    def rec(v: int, used: int) -> bool:
        # restricted growth labelling: a new set is opened only with the next free label
        if v == n:
            return used == k and good()
        if n - v < k - used:
            return False
        for lbl in range(-1, min(used + 1, k)):
            lab[v] = lbl
            if rec(v + 1, max(used, lbl + 1)):
                return True
        lab[v] = -1
        return False

    return rec(0, 0)
