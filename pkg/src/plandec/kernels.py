"""Hot inner loops with a numba path and a pure numpy / Python fallback.

Set ``PLANDEC_NO_NUMBA=1`` to force the fallback path (also used automatically
when numba is not importable). Both paths are exact: segment predicates run on
int64 coordinates bounded by ``INT_COORD_LIMIT`` so every orientation
determinant fits in 63 bits.
"""

from __future__ import annotations

import os

import numpy as np

INT_COORD_LIMIT = 1 << 30

try:
    if os.environ.get("PLANDEC_NO_NUMBA", "").strip() not in ("", "0"):
        raise ImportError("numba disabled by PLANDEC_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised with the env flag
    HAVE_NUMBA = False

# Contact classification codes for segment pairs.
NONE, CROSS, TOUCH = 0, 1, 2


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# Segment pair classification
# ---------------------------------------------------------------------------


def _segment_pairs_numpy(seg: np.ndarray, skip: np.ndarray, chunk: int = 512) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised all-pairs test; returns ``(pairs, codes)`` for nonzero codes.

    ``seg`` is an ``(s, 4)`` int64 array ``x1, y1, x2, y2``; ``skip[i, :]`` is
    not materialised, instead ``skip`` holds the polyline id of each segment and
    its position, so consecutive segments of one polyline are ignored.
    """
    s = seg.shape[0]
    out_pairs = []
    out_codes = []
    x1, y1, x2, y2 = seg[:, 0], seg[:, 1], seg[:, 2], seg[:, 3]
    lox, hix = np.minimum(x1, x2), np.maximum(x1, x2)
    loy, hiy = np.minimum(y1, y2), np.maximum(y1, y2)
    owner, pos = skip[:, 0], skip[:, 1]
    for start in range(0, s, chunk):
        stop = min(s, start + chunk)
        i = np.arange(start, stop)[:, None]
        j = np.arange(s)[None, :]
        mask = j > i
        mask &= (lox[j] <= hix[i]) & (lox[i] <= hix[j]) & (loy[j] <= hiy[i]) & (loy[i] <= hiy[j])
        same = (owner[i] == owner[j]) & (np.abs(pos[i] - pos[j]) == 1)
        mask &= ~same
        ii, jj = np.nonzero(mask)
        if ii.size == 0:
            continue
        ii = ii + start
        ax, ay, bx, by = x1[ii], y1[ii], x2[ii], y2[ii]
        cx, cy, dx, dy = x1[jj], y1[jj], x2[jj], y2[jj]
        o1 = np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
        o2 = np.sign((bx - ax) * (dy - ay) - (by - ay) * (dx - ax))
        o3 = np.sign((dx - cx) * (ay - cy) - (dy - cy) * (ax - cx))
        o4 = np.sign((dx - cx) * (by - cy) - (dy - cy) * (bx - cx))
        cross = (o1 * o2 < 0) & (o3 * o4 < 0)
        touch = ~cross & (o1 * o2 <= 0) & (o3 * o4 <= 0)
        code = np.where(cross, CROSS, np.where(touch, TOUCH, NONE))
        keep = code != NONE
        out_pairs.append(np.stack([ii[keep], jj[keep]], axis=1))
        out_codes.append(code[keep])
    if not out_pairs:
        return np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(out_pairs).astype(np.int64), np.concatenate(out_codes).astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _sgn(x):  # pragma: no cover - compiled
        return (x > 0) - (x < 0)

    @njit(cache=True)
    def _segment_pairs_numba(seg, skip):  # pragma: no cover - compiled
        s = seg.shape[0]
        cap = 1024
        pairs = np.empty((cap, 2), dtype=np.int64)
        codes = np.empty(cap, dtype=np.int64)
        k = 0
        for i in range(s):
            ax, ay, bx, by = seg[i, 0], seg[i, 1], seg[i, 2], seg[i, 3]
            lxi, hxi = min(ax, bx), max(ax, bx)
            lyi, hyi = min(ay, by), max(ay, by)
            for j in range(i + 1, s):
                cx, cy, dx, dy = seg[j, 0], seg[j, 1], seg[j, 2], seg[j, 3]
                if max(cx, dx) < lxi or min(cx, dx) > hxi or max(cy, dy) < lyi or min(cy, dy) > hyi:
                    continue
                if skip[i, 0] == skip[j, 0] and abs(skip[i, 1] - skip[j, 1]) == 1:
                    continue
                o1 = _sgn((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
                o2 = _sgn((bx - ax) * (dy - ay) - (by - ay) * (dx - ax))
                o3 = _sgn((dx - cx) * (ay - cy) - (dy - cy) * (ax - cx))
                o4 = _sgn((dx - cx) * (by - cy) - (dy - cy) * (bx - cx))
                code = 0
                if o1 * o2 < 0 and o3 * o4 < 0:
                    code = 1
                elif o1 * o2 <= 0 and o3 * o4 <= 0:
                    code = 2
                if code == 0:
                    continue
                if k == cap:
                    cap *= 2
                    np2 = np.empty((cap, 2), dtype=np.int64)
                    nc2 = np.empty(cap, dtype=np.int64)
                    np2[:k] = pairs[:k]
                    nc2[:k] = codes[:k]
                    pairs, codes = np2, nc2
                pairs[k, 0] = i
                pairs[k, 1] = j
                codes[k] = code
                k += 1
        return pairs[:k], codes[:k]


def segment_pairs(seg: np.ndarray, owner_pos: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Classify every pair of segments as crossing (1) or touching (2).

    Coordinates must satisfy ``|x|, |y| < INT_COORD_LIMIT``. Consecutive
    segments of the same polyline (``owner_pos`` rows ``(owner, index)``) are
    skipped since they legitimately share a bend.
    """
    seg = np.ascontiguousarray(seg, dtype=np.int64)
    owner_pos = np.ascontiguousarray(owner_pos, dtype=np.int64)
    if seg.shape[0] < 2:
        return np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64)
    if HAVE_NUMBA:
        return _segment_pairs_numba(seg, owner_pos)
    return _segment_pairs_numpy(seg, owner_pos)


# ---------------------------------------------------------------------------
# Convex (circular) crossing count
# ---------------------------------------------------------------------------


def _interleave_numpy(chords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a, b = chords[:, 0][:, None], chords[:, 1][:, None]
    c, d = chords[:, 0][None, :], chords[:, 1][None, :]
    hit = ((a < c) & (c < b) & (b < d)) | ((c < a) & (a < d) & (d < b))
    hit = np.triu(hit, 1)
    per = hit.sum(axis=0) + hit.sum(axis=1)
    ii, jj = np.nonzero(hit)
    return np.stack([ii, jj], axis=1).astype(np.int64), per.astype(np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _interleave_numba(chords):  # pragma: no cover - compiled
        m = chords.shape[0]
        per = np.zeros(m, dtype=np.int64)
        cap = 1024
        pairs = np.empty((cap, 2), dtype=np.int64)
        k = 0
        for i in range(m):
            a, b = chords[i, 0], chords[i, 1]
            for j in range(i + 1, m):
                c, d = chords[j, 0], chords[j, 1]
                if (a < c and c < b and b < d) or (c < a and a < d and d < b):
                    per[i] += 1
                    per[j] += 1
                    if k == cap:
                        cap *= 2
                        p2 = np.empty((cap, 2), dtype=np.int64)
                        p2[:k] = pairs[:k]
                        pairs = p2
                    pairs[k, 0] = i
                    pairs[k, 1] = j
                    k += 1
        return pairs[:k], per


def interleavings(chords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pairs of chords ``(a, b)``, ``a < b``, whose endpoints interleave.

    Returns the crossing pairs and per-chord crossing counts.
    """
    chords = np.ascontiguousarray(chords, dtype=np.int64).reshape(-1, 2)
    if chords.shape[0] < 2:
        return np.zeros((0, 2), dtype=np.int64), np.zeros(chords.shape[0], dtype=np.int64)
    if HAVE_NUMBA:
        return _interleave_numba(chords)
    return _interleave_numpy(chords)


# ---------------------------------------------------------------------------
# Exact treewidth by dynamic programming over vertex subsets
# ---------------------------------------------------------------------------


def _q_size_py(adj: list[int], s: int, v: int) -> int:
    """Vertices outside ``s | {v}`` reachable from ``v`` through ``s``."""
    seen = 1 << v
    frontier = 1 << v
    while frontier:
        nb = 0
        f = frontier
        while f:
            low = f & -f
            nb |= adj[low.bit_length() - 1]
            f ^= low
        nb &= ~seen
        frontier = nb & s
        seen |= nb
    return bin(seen & ~s & ~(1 << v)).count("1")


def _treewidth_py(adj: list[int], n: int) -> int:
    full = (1 << n) - 1
    tw = [0] * (1 << n)
    tw[0] = -1
    for s in range(1, 1 << n):
        best = n
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s ^ low
            cand = max(tw[prev], _q_size_py(adj, prev, v))
            if cand < best:
                best = cand
        tw[s] = best
    return tw[full]


if HAVE_NUMBA:

    @njit(cache=True)
    def _popcount(x):  # pragma: no cover - compiled
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c

    @njit(cache=True)
    def _treewidth_numba(adj, n):  # pragma: no cover - compiled
        size = 1 << n
        tw = np.empty(size, dtype=np.int8)
        tw[0] = -1
        for s in range(1, size):
            best = n
            rest = s
            while rest:
                low = rest & -rest
                v = 0
                t = low
                while t > 1:
                    t >>= 1
                    v += 1
                rest ^= low
                prev = s ^ low
                if tw[prev] >= best:
                    continue
                seen = low
                frontier = low
                while frontier:
                    nb = 0
                    f = frontier
                    while f:
                        lb = f & -f
                        u = 0
                        t = lb
                        while t > 1:
                            t >>= 1
                            u += 1
                        nb |= adj[u]
                        f ^= lb
                    nb &= ~seen
                    frontier = nb & prev
                    seen |= nb
                q = _popcount(seen & ~prev & ~low)
                cand = tw[prev] if tw[prev] > q else q
                if cand < best:
                    best = cand
            tw[s] = best
        return tw[size - 1]


def treewidth_dp(adj_masks: list[int], n: int) -> int:
    """Exact treewidth from adjacency bitmasks (``n`` at most ~20)."""
    if n == 0:
        return -1
    if HAVE_NUMBA:
        return int(_treewidth_numba(np.array(adj_masks, dtype=np.int64), n))
    return _treewidth_py(adj_masks, n)
