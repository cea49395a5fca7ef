"""Pure-Python flow/cut kernels.

All functions take a flat capacity matrix ``caps`` (row-major, length
n*n, caps[u*n+v] = number of parallel u->v arcs) and return vertex sets
as bitmasks.  The Cython twin (_cimpl.pyx) implements the same
signatures with identical semantics and identical tie-breaking, so the
two backends are interchangeable; tests assert bit-for-bit agreement.

Masks are plain Python ints, so this backend has no vertex-count limit.
"""

from collections import deque

BACKEND = "py"


def st_max_flow(n, caps, s, t, limit=-1):
    """Max s->t flow by BFS augmentation.

    Stops early once ``limit`` augmenting units are found (limit < 0
    means unbounded).  Returns (flow, side_mask) where side_mask is the
    set of vertices reachable from s in the final residual graph; it is
    a minimum cut side only when the search exhausted (flow < limit or
    limit < 0).
    """
    res = list(caps)
    flow = 0
    parent = [-1] * n
    while limit < 0 or flow < limit:
        for i in range(n):
            parent[i] = -1
        parent[s] = s
        q = deque([s])
        while q:
            u = q.popleft()
            if u == t:
                break
            base = u * n
            for v in range(n):
                if parent[v] < 0 and res[base + v] > 0:
                    parent[v] = u
                    q.append(v)
        if parent[t] < 0:
            break
        # bottleneck along the parent chain
        bott = -1
        v = t
        while v != s:
            u = parent[v]
            c = res[u * n + v]
            if bott < 0 or c < bott:
                bott = c
            v = u
        if limit >= 0 and flow + bott > limit:
            bott = limit - flow
        v = t
        while v != s:
            u = parent[v]
            res[u * n + v] -= bott
            res[v * n + u] += bott
            v = u
        flow += bott
    # residual reach from s
    mask = 1 << s
    q = deque([s])
    while q:
        u = q.popleft()
        base = u * n
        for v in range(n):
            if not (mask >> v) & 1 and res[base + v] > 0:
                mask |= 1 << v
                q.append(v)
    return flow, mask


def strong_deficient_cut(n, caps):
    """Side S with no arcs leaving S, or -1 if strongly connected (n>=1)."""
    full = (1 << n) - 1
    # forward reach from 0
    mask = 1
    stack = [0]
    while stack:
        u = stack.pop()
        base = u * n
        for v in range(n):
            if not (mask >> v) & 1 and caps[base + v] > 0:
                mask |= 1 << v
                stack.append(v)
    if mask != full:
        return mask
    # backward reach to 0
    rmask = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if not (rmask >> v) & 1 and caps[v * n + u] > 0:
                rmask |= 1 << v
                stack.append(v)
    if rmask != full:
        return full & ~rmask
    return -1


def karc_deficient_cut(n, caps, k):
    """Side S (nonempty, proper) with d+(S) < k, or -1 if none.

    Scans local arc-connectivity to and from vertex 0; deterministic:
    the first deficiency in scan order (v ascending, 0->v before v->0)
    is returned.
    """
    if n <= 1:
        return -1
    if k == 1:
        return strong_deficient_cut(n, caps)
    for v in range(1, n):
        flow, mask = st_max_flow(n, caps, 0, v, k)
        if flow < k:
            return mask
        flow, mask = st_max_flow(n, caps, v, 0, k)
        if flow < k:
            return mask
    return -1


def global_min_cut(n, caps):
    """(value, side_mask) of a minimum cut of a symmetric matrix (n>=2).

    Fixed-root scan: min over v>0 of maxflow(0, v).  Deterministic: the
    first v attaining the running minimum supplies the side.
    """
    best = -1
    best_mask = 0
    for v in range(1, n):
        flow, mask = st_max_flow(n, caps, 0, v, best if best >= 0 else -1)
        if best < 0 or flow < best:
            best = flow
            best_mask = mask
            if best == 0:
                break
    return best, best_mask
