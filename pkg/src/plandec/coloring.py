"""Proper 4-colourings of planar graphs."""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, GraphError, degeneracy_order

K = 4


def _kempe_swap(g: Graph, col: list[int], start: int, a: int, b: int) -> None:
    """Swap colours ``a`` and ``b`` on the two-coloured component containing ``start``."""
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in seen and col[y] in (a, b):
                seen.add(y)
                stack.append(y)
    for x in seen:
        col[x] = b if col[x] == a else a


def _repair(g: Graph, col: list[int], v: int) -> bool:
    """Free a colour at ``v`` by one Kempe-chain swap."""
    for a, b in permutations(range(K), 2):
        for u in sorted(g.adj[v]):
            if col[u] != a:
                continue
            saved = col[:]
            _kempe_swap(g, col, u, a, b)
            if all(col[w] != a for w in g.adj[v]):
                col[v] = a
                return True
            col[:] = saved
    return False


def _dsatur(g: Graph, budget: int) -> list[int]:
    col = [-1] * g.n
    steps = 0

    def pick() -> int:
        best, key = -1, None
        for v in range(g.n):
            if col[v] < 0:
                sat = len({col[w] for w in g.adj[v] if col[w] >= 0})
                k = (sat, g.degree(v), -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def solve(left: int) -> bool:
        nonlocal steps
        if left == 0:
            return True
        steps += 1
        if steps > budget:
            raise GraphError("4-colouring search budget exhausted")
        v = pick()
        used = {col[w] for w in g.adj[v]}
        for c in range(K):
            if c not in used:
                col[v] = c
                if solve(left - 1):
                    return True
        col[v] = -1
        return False

    if not solve(g.n):
        raise GraphError("graph is not 4-colourable")
    return col


def four_colouring(g: Graph, budget: int = 200_000) -> list[int]:
    """Colours in ``0..3``: smallest-last greedy with Kempe repair, then exact search."""
    _, order, _ = degeneracy_order(g)
    col = [-1] * g.n
    for v in reversed(order):
        used = {col[w] for w in g.adj[v]}
        free = [c for c in range(K) if c not in used]
        if free:
            col[v] = free[0]
        elif not _repair(g, col, v):
            return _dsatur(g, budget)
    return col


def is_proper(g: Graph, col: list[int]) -> bool:
    return len(col) == g.n and all(col[u] != col[v] for u, v in g.edges)


__all__ = ["four_colouring", "is_proper"]
