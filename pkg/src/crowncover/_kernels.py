"""Array kernels for the flow solver and geometric pair tests.

The hot loops are compiled with numba when it is importable. Set
CROWNCOVER_NO_NUMBA=1 to force the plain numpy/Python path instead; both
paths run the identical algorithm and produce identical results. The
undecorated implementations stay importable (``_dinic_impl``, ...) so tests
and benchmarks can compare the two paths inside one process.
"""

from __future__ import annotations

import os

import numpy as np

USING_NUMBA = os.environ.get("CROWNCOVER_NO_NUMBA", "") not in ("1", "true", "yes")

if USING_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USING_NUMBA = False

if not USING_NUMBA:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


def _dinic_impl(num_nodes, arc_to, arc_cap, adj_off, adj_arc, source, sink):
    # Residual arcs come in pairs: the partner of arc a is a ^ 1.
    # arc_cap is mutated in place and holds the residual capacities on return.
    level = np.empty(num_nodes, np.int64)
    it = np.empty(num_nodes, np.int64)
    queue = np.empty(num_nodes, np.int64)
    stack = np.empty(num_nodes + 1, np.int64)
    path = np.empty(num_nodes + 1, np.int64)
    flow = 0
    while True:
        for i in range(num_nodes):
            level[i] = -1
        level[source] = 0
        queue[0] = source
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(adj_off[u], adj_off[u + 1]):
                a = adj_arc[k]
                v = arc_to[a]
                if arc_cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[tail] = v
                    tail += 1
        if level[sink] < 0:
            break
        for i in range(num_nodes):
            it[i] = adj_off[i]
        # Repeated DFS in the level graph until the blocking flow is complete.
        while True:
            top = 0
            stack[0] = source
            found = False
            while top >= 0:
                u = stack[top]
                if u == sink:
                    found = True
                    break
                advanced = False
                while it[u] < adj_off[u + 1]:
                    a = adj_arc[it[u]]
                    v = arc_to[a]
                    if arc_cap[a] > 0 and level[v] == level[u] + 1:
                        path[top] = a
                        top += 1
                        stack[top] = v
                        advanced = True
                        break
                    it[u] += 1
                if not advanced:
                    level[u] = -1
                    top -= 1
                    if top >= 0:
                        it[stack[top]] += 1
            if not found:
                break
            aug = arc_cap[path[0]]
            for i in range(1, top):
                if arc_cap[path[i]] < aug:
                    aug = arc_cap[path[i]]
            for i in range(top):
                a = path[i]
                arc_cap[a] -= aug
                arc_cap[a ^ 1] += aug
            flow += aug
    return flow


def _reachable_impl(num_nodes, arc_to, arc_cap, adj_off, adj_arc, source):
    # BFS over arcs with positive residual capacity.
    seen = np.zeros(num_nodes, np.bool_)
    queue = np.empty(num_nodes, np.int64)
    seen[source] = True
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(adj_off[u], adj_off[u + 1]):
            a = adj_arc[k]
            v = arc_to[a]
            if arc_cap[a] > 0 and not seen[v]:
                seen[v] = True
                queue[tail] = v
                tail += 1
    return seen


def _disk_pairs_impl(xs, ys, rs):
    # Scaled integer coordinates; closed intersection (tangency counts).
    # Two passes: count, then fill, in row-major (i, j) order.
    n = xs.size
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[i] - xs[j]
            dy = ys[i] - ys[j]
            rr = rs[i] + rs[j]
            if dx * dx + dy * dy <= rr * rr:
                count += 1
    us = np.empty(count, np.int64)
    vs = np.empty(count, np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[i] - xs[j]
            dy = ys[i] - ys[j]
            rr = rs[i] + rs[j]
            if dx * dx + dy * dy <= rr * rr:
                us[k] = i
                vs[k] = j
                k += 1
    return us, vs


def _rect_pairs_impl(x1, y1, x2, y2):
    # Closed-interval overlap on both axes.
    n = x1.size
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if x1[i] <= x2[j] and x1[j] <= x2[i] and y1[i] <= y2[j] and y1[j] <= y2[i]:
                count += 1
    us = np.empty(count, np.int64)
    vs = np.empty(count, np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if x1[i] <= x2[j] and x1[j] <= x2[i] and y1[i] <= y2[j] and y1[j] <= y2[i]:
                us[k] = i
                vs[k] = j
                k += 1
    return us, vs


def _disk_pairs_numpy(xs, ys, rs, block=256):
    # Vectorized fallback; emits pairs in the same row-major order as the loop.
    n = xs.size
    cols_u = []
    cols_v = []
    idx = np.arange(n, dtype=np.int64)
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        dx = xs[lo:hi, None] - xs[None, :]
        dy = ys[lo:hi, None] - ys[None, :]
        rr = rs[lo:hi, None] + rs[None, :]
        hit = dx * dx + dy * dy <= rr * rr
        hit &= idx[None, :] > idx[lo:hi, None]
        ii, jj = np.nonzero(hit)
        cols_u.append(ii + lo)
        cols_v.append(jj)
    if not cols_u:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(cols_u), np.concatenate(cols_v)


def _rect_pairs_numpy(x1, y1, x2, y2, block=256):
    n = x1.size
    cols_u = []
    cols_v = []
    idx = np.arange(n, dtype=np.int64)
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        overlap_x = (x1[lo:hi, None] <= x2[None, :]) & (x1[None, :] <= x2[lo:hi, None])
        overlap_y = (y1[lo:hi, None] <= y2[None, :]) & (y1[None, :] <= y2[lo:hi, None])
        hit = overlap_x & overlap_y
        hit &= idx[None, :] > idx[lo:hi, None]
        ii, jj = np.nonzero(hit)
        cols_u.append(ii + lo)
        cols_v.append(jj)
    if not cols_u:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(cols_u), np.concatenate(cols_v)


if USING_NUMBA:
    dinic = njit(cache=True)(_dinic_impl)
    residual_reachable = njit(cache=True)(_reachable_impl)
    disk_pairs = njit(cache=True)(_disk_pairs_impl)
    rect_pairs = njit(cache=True)(_rect_pairs_impl)
else:
    dinic = _dinic_impl
    residual_reachable = _reachable_impl
    disk_pairs = _disk_pairs_numpy
    rect_pairs = _rect_pairs_numpy
