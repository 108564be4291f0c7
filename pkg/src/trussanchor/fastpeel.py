"""Array-based re-peel kernels for bulk gain evaluation.

Compiled with numba when importable (set TRUSSANCHOR_NO_NUMBA=1 to force the
interpreted path). Produces trussness only, no layers: enough for gain sums
and exhaustive enumeration, which is what the callers need in bulk.
"""

from __future__ import annotations

import os

import numpy as np

HAVE_NUMBA = False
if not os.environ.get("TRUSSANCHOR_NO_NUMBA"):
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover
        pass

if not HAVE_NUMBA:
    def njit(*args, **kwargs):  # type: ignore[misc]
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def _support_init(indptr, nbrs, eu, ev, sup):
    m = eu.shape[0]
    for e in range(m):
        u = eu[e]
        v = ev[e]
        i = indptr[u]
        iu = indptr[u + 1]
        j = indptr[v]
        jv = indptr[v + 1]
        s = 0
        while i < iu and j < jv:
            a = nbrs[i]
            b = nbrs[j]
            if a == b:
                s += 1
                i += 1
                j += 1
            elif a < b:
                i += 1
            else:
                j += 1
        sup[e] = s


@njit(cache=True)
def _peel_into(indptr, nbrs, eids, eu, ev, anchor_mask, sup0,
               sup, alive, inq, queue, t):
    m = eu.shape[0]
    remaining = 0
    for e in range(m):
        sup[e] = sup0[e]
        alive[e] = True
        inq[e] = False
        t[e] = 0
        if not anchor_mask[e]:
            remaining += 1
    k = 2
    while remaining > 0:
        thresh = k - 2
        head = 0
        tail = 0
        for e in range(m):
            if alive[e] and (not anchor_mask[e]) and sup[e] <= thresh:
                queue[tail] = e
                tail += 1
                inq[e] = True
        while head < tail:
            e = queue[head]
            head += 1
            alive[e] = False
            t[e] = k
            remaining -= 1
            u = eu[e]
            v = ev[e]
            if indptr[u + 1] - indptr[u] > indptr[v + 1] - indptr[v]:
                u, v = v, u
            lo0 = indptr[v]
            hi0 = indptr[v + 1]
            for i in range(indptr[u], indptr[u + 1]):
                e1 = eids[i]
                if not alive[e1]:
                    continue
                w = nbrs[i]
                lo = lo0
                hi = hi0
                e2 = -1
                while lo < hi:
                    mid = (lo + hi) // 2
                    val = nbrs[mid]
                    if val == w:
                        e2 = eids[mid]
                        break
                    if val < w:
                        lo = mid + 1
                    else:
                        hi = mid
                if e2 < 0 or not alive[e2]:
                    continue
                sup[e1] -= 1
                sup[e2] -= 1
                if (not inq[e1]) and (not anchor_mask[e1]) and sup[e1] <= thresh:
                    inq[e1] = True
                    queue[tail] = e1
                    tail += 1
                if (not inq[e2]) and (not anchor_mask[e2]) and sup[e2] <= thresh:
                    inq[e2] = True
                    queue[tail] = e2
                    tail += 1
        k += 1


@njit(cache=True)
def _exact_scan(b, indptr, nbrs, eids, eu, ev, sup0, base_t,
                anchor_mask, sup, alive, inq, queue, t):
    """Lexicographic scan of all size-b anchor sets; first best wins."""
    m = eu.shape[0]
    best = np.int64(-1)
    b0 = -1
    b1 = -1
    b2 = -1
    if b == 1:
        for i in range(m):
            anchor_mask[i] = True
            _peel_into(indptr, nbrs, eids, eu, ev, anchor_mask, sup0,
                       sup, alive, inq, queue, t)
            gain = np.int64(0)
            for e in range(m):
                if not anchor_mask[e]:
                    gain += t[e] - base_t[e]
            if gain > best:
                best = gain
                b0 = i
            anchor_mask[i] = False
    elif b == 2:
        for i in range(m):
            anchor_mask[i] = True
            for j in range(i + 1, m):
                anchor_mask[j] = True
                _peel_into(indptr, nbrs, eids, eu, ev, anchor_mask, sup0,
                           sup, alive, inq, queue, t)
                gain = np.int64(0)
                for e in range(m):
                    if not anchor_mask[e]:
                        gain += t[e] - base_t[e]
                if gain > best:
                    best = gain
                    b0 = i
                    b1 = j
                anchor_mask[j] = False
            anchor_mask[i] = False
    else:
        for i in range(m):
            anchor_mask[i] = True
            for j in range(i + 1, m):
                anchor_mask[j] = True
                for k in range(j + 1, m):
                    anchor_mask[k] = True
                    _peel_into(indptr, nbrs, eids, eu, ev, anchor_mask, sup0,
                               sup, alive, inq, queue, t)
                    gain = np.int64(0)
                    for e in range(m):
                        if not anchor_mask[e]:
                            gain += t[e] - base_t[e]
                    if gain > best:
                        best = gain
                        b0 = i
                        b1 = j
                        b2 = k
                    anchor_mask[k] = False
                anchor_mask[j] = False
            anchor_mask[i] = False
    return best, b0, b1, b2


class PeelKernel:
    """CSR snapshot of a graph plus scratch arrays for repeated peels."""

    def __init__(self, g) -> None:
        self.g = g
        n, m = g.n, g.m
        self.m = m
        indptr = np.zeros(n + 1, np.int64)
        for u in range(n):
            indptr[u + 1] = indptr[u] + g.degree(u)
        size = max(2 * m, 1)
        nbrs = np.zeros(size, np.int64)
        eids = np.zeros(size, np.int64)
        pos = 0
        for u in range(n):
            for w in g.neighbors(u):
                nbrs[pos] = w
                eids[pos] = g.edge_id(u, w)
                pos += 1
        self.indptr = indptr
        self.nbrs = nbrs
        self.eids = eids
        self.eu = np.array([uv[0] for uv in g.endpoints] or [0], np.int64)[:m]
        self.ev = np.array([uv[1] for uv in g.endpoints] or [0], np.int64)[:m]
        self.sup0 = np.zeros(m, np.int64)
        if m:
            _support_init(indptr, nbrs, self.eu, self.ev, self.sup0)
        self._sup = np.zeros(m, np.int64)
        self._alive = np.zeros(m, np.bool_)
        self._inq = np.zeros(m, np.bool_)
        self._queue = np.zeros(max(m, 1), np.int64)
        self._t = np.zeros(m, np.int64)
        self._mask = np.zeros(m, np.bool_)
        self.base_t = self.t_array(())

    def t_array(self, anchors=()) -> np.ndarray:
        """Trussness under the given pinned edges; pinned entries read 0."""
        if self.m == 0:
            return np.zeros(0, np.int64)
        mask = self._mask
        mask[:] = False
        for a in anchors:
            mask[a] = True
        _peel_into(self.indptr, self.nbrs, self.eids, self.eu, self.ev,
                   mask, self.sup0, self._sup, self._alive, self._inq,
                   self._queue, self._t)
        return self._t.copy()

    def gain(self, anchors, base: np.ndarray | None = None) -> int:
        if base is None:
            base = self.base_t
        t = self.t_array(anchors)
        keep = ~self._mask
        return int(np.sum(t[keep] - base[keep]))

    def exact_best(self, b: int) -> tuple[int, tuple[int, ...]]:
        """Best size-b anchor set by full enumeration (b in 1..3),
        lexicographically smallest among ties."""
        if not 1 <= b <= 3:
            raise ValueError("exact_best handles b in 1..3")
        mask = self._mask
        mask[:] = False
        best, b0, b1, b2 = _exact_scan(
            b, self.indptr, self.nbrs, self.eids, self.eu, self.ev,
            self.sup0, self.base_t, mask, self._sup, self._alive,
            self._inq, self._queue, self._t)
        mask[:] = False
        combo = (b0, b1, b2)[:b]
        return int(best), tuple(int(c) for c in combo)
