"""numba kernels for truncated BFS balls and protected peeling.

Scratch arrays are sized ``n`` and reused across calls with a stamp counter, so
one set of scratch must not be shared between threads.
"""

import numpy as np
from numba import njit

from ._rng import counter_index

NO_CAP = np.iinfo(np.int64).max


@njit(cache=True)
def explore(indptr, indices, root, K, radius_cap, stamp, mark, dist, order):
    """Level-synchronous BFS from ``root``.

    Writes members into ``order[:S]`` (BFS order) and their distances into
    ``dist``; members are exactly the vertices with ``mark == stamp``.
    A level is only kept if the cumulative size stays <= K and its radius
    is <= radius_cap.  Returns ``(S, R, truncated)``.
    """
    mark[root] = stamp
    dist[root] = 0
    order[0] = root
    lo, hi = 0, 1
    r = 0
    while True:
        if r == radius_cap:
            for i in range(lo, hi):
                u = order[i]
                for k in range(indptr[u], indptr[u + 1]):
                    if mark[indices[k]] != stamp:
                        return hi, r, True
            return hi, r, False
        size = hi
        overflow = False
        for i in range(lo, hi):
            u = order[i]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if mark[w] != stamp:
                    if size >= K:
                        overflow = True
                        break
                    mark[w] = stamp
                    dist[w] = r + 1
                    order[size] = w
                    size += 1
            if overflow:
                break
        if overflow:
            # drop the partial level
            for i in range(hi, size):
                mark[order[i]] = 0
            return hi, r, True
        if size == hi:
            return hi, r, False
        lo, hi = hi, size
        r += 1


@njit(cache=True)
def protected_peel(indptr, indices, S, R, protect, stamp, mark, dist, order, local, alive, queue):
    """2-core peeling inside the ball with +1 virtual degree on distance-R vertices if ``protect``.

    Returns ``(root_survives, root_component_touches_frontier)``.  ``alive[:S]``
    holds the survivor flags in BFS order.
    """
    for i in range(S):
        local[order[i]] = i
    deg = np.empty(S, dtype=np.int64)
    qh = 0
    qt = 0
    for i in range(S):
        u = order[i]
        d = 0
        for k in range(indptr[u], indptr[u + 1]):
            if mark[indices[k]] == stamp:
                d += 1
        if protect and dist[u] == R:
            d += 1
        deg[i] = d
        alive[i] = True
        if d <= 1:
            alive[i] = False
            queue[qt] = i
            qt += 1
    while qh < qt:
        i = queue[qh]
        qh += 1
        u = order[i]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if mark[w] == stamp:
                j = local[w]
                if alive[j]:
                    deg[j] -= 1
                    if deg[j] <= 1:
                        alive[j] = False
                        queue[qt] = j
                        qt += 1
    if not alive[0]:
        return False, False
    if not protect:
        return True, False
    # BFS among survivors from the root looking for a frontier vertex
    seen = np.zeros(S, dtype=np.bool_)
    seen[0] = True
    queue[0] = 0
    qh = 0
    qt = 1
    while qh < qt:
        i = queue[qh]
        qh += 1
        u = order[i]
        if dist[u] == R:
            return True, True
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if mark[w] == stamp:
                j = local[w]
                if alive[j] and not seen[j]:
                    seen[j] = True
                    queue[qt] = j
                    qt += 1
    return True, False


@njit(cache=True, nogil=True)
def estimate_range(indptr, indices, n, K, key, t0, t1, literal, out_v, out_i2, out_i2inf):
    """Run samples ``t0..t1-1``; sample t draws its root from counter (key, t)."""
    mark = np.zeros(n, dtype=np.int64)
    dist = np.zeros(n, dtype=np.int64)
    local = np.zeros(n, dtype=np.int64)
    order = np.empty(min(n, K + 1), dtype=np.int64)
    alive = np.empty(min(n, K + 1), dtype=np.bool_)
    queue = np.empty(min(n, K + 1), dtype=np.int64)
    stamp = 0
    for t in range(t0, t1):
        v = counter_index(key, t, n)
        out_v[t] = v
        if indptr[v + 1] - indptr[v] >= K:
            out_i2[t] = 1
            out_i2inf[t] = 1
            continue
        stamp += 1
        S, R, trunc = explore(indptr, indices, v, K, NO_CAP, stamp, mark, dist, order)
        surv, touch = protected_peel(indptr, indices, S, R, trunc, stamp, mark, dist, order,
                                     local, alive, queue)
        out_i2[t] = 1 if surv else 0
        if literal:
            out_i2inf[t] = 1 if (surv and trunc) else 0
        else:
            out_i2inf[t] = 1 if touch else 0


@njit(cache=True)
def c2_ell_mask(indptr, indices, n, ell):
    """Membership in the radius-ell planted-ray set, for every vertex."""
    mark = np.zeros(n, dtype=np.int64)
    dist = np.zeros(n, dtype=np.int64)
    local = np.zeros(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    alive = np.empty(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    out = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        stamp = v + 1
        S, R, trunc = explore(indptr, indices, v, NO_CAP, ell, stamp, mark, dist, order)
        if R < ell:
            continue  # no vertex at distance ell, so no planted rays
        surv, touch = protected_peel(indptr, indices, S, R, True, stamp, mark, dist, order,
                                     local, alive, queue)
        out[v] = touch
    return out


@njit(cache=True)
def peel_two_core(indptr, indices, n):
    """Boolean mask of the 2-core (iterated removal of degree <= 1 vertices)."""
    deg = np.empty(n, dtype=np.int64)
    alive = np.ones(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    qt = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] <= 1:
            alive[v] = False
            queue[qt] = v
            qt += 1
    qh = 0
    while qh < qt:
        u = queue[qh]
        qh += 1
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    alive[w] = False
                    queue[qt] = w
                    qt += 1
    return alive


@njit(cache=True)
def core_numbers(indptr, indices, n):
    """Bucket-queue peeling in O(n + m) (Batagelj-Zaversnik)."""
    deg = np.empty(n, dtype=np.int64)
    md = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        md = max(md, deg[v])
    bin_ = np.zeros(md + 2, dtype=np.int64)
    for v in range(n):
        bin_[deg[v]] += 1
    start = 0
    for d in range(md + 1):
        num = bin_[d]
        bin_[d] = start
        start += num
    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    for v in range(n):
        pos[v] = bin_[deg[v]]
        vert[pos[v]] = v
        bin_[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_[d] = bin_[d - 1]
    bin_[0] = 0
    for i in range(n):
        v = vert[i]
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bin_[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bin_[du] += 1
                deg[u] -= 1
    return deg
