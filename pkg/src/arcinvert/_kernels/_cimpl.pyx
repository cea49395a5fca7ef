# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled flow/cut kernels: line-for-line twin of _pyimpl.

Same signatures, same deterministic tie-breaking, same return values.
Limited to n <= 62 (vertex sets are C unsigned 64-bit masks); the
dispatch layer routes larger instances to the pure backend.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

BACKEND = "c"
MAX_N = 62


cdef unsigned long long _residual_reach(int n, long long* res, int s) noexcept:
    cdef unsigned long long mask = (<unsigned long long>1) << s
    cdef int* stack = <int*>malloc(n * sizeof(int))
    cdef int top = 0, u, v
    stack[top] = s
    top += 1
    while top > 0:
        top -= 1
        u = stack[top]
        for v in range(n):
            if not (mask >> v) & 1 and res[u * n + v] > 0:
                mask |= (<unsigned long long>1) << v
                stack[top] = v
                top += 1
    free(stack)
    return mask


def st_max_flow(int n, caps, int s, int t, long long limit=-1):
    """Max s->t flow by BFS augmentation; see _pyimpl.st_max_flow."""
    cdef long long* res = <long long*>malloc(n * n * sizeof(long long))
    cdef int* parent = <int*>malloc(n * sizeof(int))
    cdef int* q = <int*>malloc(n * sizeof(int))
    cdef long long flow = 0, bott, c
    cdef int i, u, v, qh, qt, base
    if res == NULL or parent == NULL or q == NULL:
        raise MemoryError()
    for i in range(n * n):
        res[i] = caps[i]
    try:
        while limit < 0 or flow < limit:
            for i in range(n):
                parent[i] = -1
            parent[s] = s
            qh = 0
            qt = 0
            q[qt] = s
            qt += 1
            while qh < qt:
                u = q[qh]
                qh += 1
                if u == t:
                    break
                base = u * n
                for v in range(n):
                    if parent[v] < 0 and res[base + v] > 0:
                        parent[v] = u
                        q[qt] = v
                        qt += 1
            if parent[t] < 0:
                break
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
        mask = _residual_reach(n, res, s)
        return flow, mask
    finally:
        free(res)
        free(parent)
        free(q)


def strong_deficient_cut(int n, caps):
    """Side with no leaving arcs, or -1 if strongly connected."""
    cdef long long* cp = <long long*>malloc(n * n * sizeof(long long))
    cdef int* stack = <int*>malloc(n * sizeof(int))
    cdef unsigned long long mask, rmask, full
    cdef int i, u, v, top
    if cp == NULL or stack == NULL:
        raise MemoryError()
    for i in range(n * n):
        cp[i] = caps[i]
    try:
        full = ((<unsigned long long>1) << n) - 1
        mask = 1
        top = 0
        stack[top] = 0
        top += 1
        while top > 0:
            top -= 1
            u = stack[top]
            for v in range(n):
                if not (mask >> v) & 1 and cp[u * n + v] > 0:
                    mask |= (<unsigned long long>1) << v
                    stack[top] = v
                    top += 1
        if mask != full:
            return mask
        rmask = 1
        top = 0
        stack[top] = 0
        top += 1
        while top > 0:
            top -= 1
            u = stack[top]
            for v in range(n):
                if not (rmask >> v) & 1 and cp[v * n + u] > 0:
                    rmask |= (<unsigned long long>1) << v
                    stack[top] = v
                    top += 1
        if rmask != full:
            return full & ~rmask
        return -1
    finally:
        free(cp)
        free(stack)


def karc_deficient_cut(int n, caps, int k):
    """First side in scan order with d+(S) < k, or -1; see _pyimpl."""
    cdef int v
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


def global_min_cut(int n, caps):
    """(value, side_mask) of a minimum cut of a symmetric matrix (n>=2)."""
    cdef long long best = -1
    best_mask = 0
    cdef int v
    for v in range(1, n):
        flow, mask = st_max_flow(n, caps, 0, v, best if best >= 0 else -1)
        if best < 0 or flow < best:
            best = flow
            best_mask = mask
            if best == 0:
                break
    return best, best_mask
