"""Exact and brute-force oracles, trustworthy at desk scale.

These are the reference implementations everything else is tested
against: GF(2) reachability of a k-arc-strong orientation under
bounded-size inversions, existence of k-arc-strong orientations of a
multigraph, exact minimum inversion families by branch and bound, exact
path-packing and hypergraph-matching solvers, and plain exponential
brute-force computations of cuts, connectivity and frames.

Dual routes are kept deliberately independent: the brute-force helpers
scan all 2^n subsets without touching the flow kernels, and the BFS
orientation-state oracle decides reachability without the GF(2) span.
"""

import random
from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .core import (
    INFINITY,
    InversionFamily,
    MultiDigraph,
    Multigraph,
    apply_inversions,
    edge_connectivity,
    is_k_arc_strong,
)
from .errors import InvalidArgumentError

# -- GF(2) machinery ----------------------------------------------------


class Gf2Basis:
    """Row basis over GF(2) with combination tracking.

    Vectors are int bitmasks.  Each stored row remembers which input
    rows (by insertion index bit) combine to it, so membership queries
    can report a witnessing subset."""

    def __init__(self):
        self.rows = []  # list of (vector, combo), echelon by leading bit

    def _reduce(self, vec, combo=0):
        for v, c in self.rows:
            if vec ^ v < vec:  # leading bit of v is set in vec
                vec ^= v
                combo ^= c
        return vec, combo

    def add(self, vec, combo):
        """Insert a row; returns True if it enlarged the span."""
        vec, combo = self._reduce(vec, combo)
        if vec == 0:
            return False
        self.rows.append((vec, combo))
        self.rows.sort(key=lambda rc: -rc[0])
        return True

    def solve(self, target):
        """Subset of inserted rows XOR-ing to target, as a combo mask;
        None if target is outside the span."""
        vec, combo = self._reduce(target)
        return combo if vec == 0 else None

    @property
    def dim(self):
        return len(self.rows)


def _nullspace(rows, width):
    """Basis of {w : row . w = 0 for all rows}, vectors as bitmasks."""
    basis = Gf2Basis()
    for r in rows:
        basis.add(r, 0)
    pivots = []
    reduced = []
    for v, _c in basis.rows:
        reduced.append(v)
        pivots.append(v.bit_length() - 1)
    # back-substitute to RREF so each pivot occurs in exactly one row
    for i in range(len(reduced)):
        for j in range(len(reduced)):
            if i != j and (reduced[j] >> pivots[i]) & 1:
                reduced[j] ^= reduced[i]
    pivot_set = set(pivots)
    out = []
    for f in range(width):
        if f in pivot_set:
            continue
        w = 1 << f
        for v, p in zip(reduced, pivots):
            if (v >> f) & 1:
                w |= 1 << p
        out.append(w)
    return out


# -- GF(2) reachability of a k-arc-strong orientation -------------------


def _candidate_sets(n, p, mode, indicator):
    """Vertex sets with a nonzero flip indicator, ordered canonically."""
    sizes = [p] if mode == "exact-size" else list(range(2, p + 1))
    cands = []
    for size in sizes:
        if size > n:
            continue
        for xs in combinations(range(n), size):
            ind = indicator(xs)
            if ind:
                cands.append((xs, ind))
    return cands


def _validate_kp(k, p, mode):
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive int, got {k!r}")
    if not isinstance(p, int) or p < 2:
        raise InvalidArgumentError(f"p must be an int >= 2, got {p!r}")
    if mode not in ("exact-size", "at-most"):
        raise InvalidArgumentError(f"mode must be 'exact-size' or 'at-most', got {mode!r}")


def gf2_reachable(D, k, p, mode="exact-size"):
    """Inversion family (sets of size p, or <= p) making D k-arc-strong,
    or None if no such family exists.  Exact for digraphs of any size,
    intended for small n.

    The effect of any family on the simple arcs (arcs without an
    opposite arc; digons never change) is the GF(2) sum of the flip
    indicators of its sets, so the reachable orientations form a coset
    of the indicator span.  The search walks exactly that coset: the
    orthogonal complement of the span is echelonized so that each of
    its constraints forces one bit during the DFS, and a cheap
    refutation over forced-parity cuts (every cut of underlying size 2k
    must end up with exactly k arcs out) proves most "no" instances,
    k-obstructions included, without search."""
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("gf2_reachable expects a MultiDigraph")
    if not D.is_digraph():
        raise InvalidArgumentError("input has parallel arcs; a digraph is required")
    _validate_kp(k, p, mode)
    n = D.n
    G = D.underlying()
    if edge_connectivity(G) < 2 * k:
        return None  # inversions keep the underlying multigraph
    if is_k_arc_strong(D, k):
        return InversionFamily([])

    simple = D.simple_arcs()
    m = len(simple)
    pos = {}
    for i, (t, h) in enumerate(simple):
        pos[(t, h)] = i
        pos[(h, t)] = i

    def indicator(xs):
        ind = 0
        s = set(xs)
        for i, (t, h) in enumerate(simple):
            if t in s and h in s:
                ind |= 1 << i
        return ind

    cands = _candidate_sets(n, p, mode, indicator)
    span = Gf2Basis()
    for i, (_xs, ind) in enumerate(cands):
        span.add(ind, 1 << i)

    if n <= 16 and _forced_parity_refuted(D, k, simple, span):
        return None

    # complement constraints, echelonized by highest bit so that during
    # the DFS (bits assigned in ascending order) each constraint fires
    # exactly when its last bit is reached
    complement = _nullspace([v for v, _ in span.rows], m)
    forced_by = {}
    cbasis = Gf2Basis()
    for w in complement:
        cbasis.add(w, 0)
    for w, _ in cbasis.rows:
        forced_by[w.bit_length() - 1] = w

    caps = [0] * (n * n)
    for (t, h), mm in D._m.items():
        if (t, h) not in pos:  # digon arcs are fixed
            caps[t * n + h] = mm
    out_need = [k] * n  # still-needed out-degree, capped at 0
    in_need = [k] * n
    remaining = [0] * n
    for v in range(n):
        base = sum(caps[v * n + u] for u in range(n))
        out_need[v] = max(0, k - base)
        in_need[v] = max(0, k - sum(caps[u * n + v] for u in range(n)))
        remaining[v] = sum(1 for (t, h) in simple if t == v or h == v)

    solution = []

    def place(i, flipped):
        t, h = simple[i]
        if flipped:
            t, h = h, t
        caps[t * n + h] += 1
        out_need[t] = max(0, out_need[t] - 1)
        in_need[h] = max(0, in_need[h] - 1)
        remaining[simple[i][0]] -= 1
        remaining[simple[i][1]] -= 1

    def unplace(i, flipped, saved):
        t, h = simple[i]
        if flipped:
            t, h = h, t
        caps[t * n + h] -= 1
        out_need[t], in_need[h] = saved
        remaining[simple[i][0]] += 1
        remaining[simple[i][1]] += 1

    def dfs(i, diff):
        if i == m:
            if _kernels.karc_deficient_cut(n, caps, k) == -1:
                combo = span.solve(diff)
                if combo is None:
                    raise RuntimeError("internal error: parity-feasible leaf outside span")
                solution.append(combo)
                return True
            return False
        w = forced_by.get(i)
        choices = (0, 1)
        if w is not None:
            forced = bin(diff & w).count("1") & 1
            choices = (forced,)
        t0, h0 = simple[i]
        for bit in choices:
            t, h = (h0, t0) if bit else (t0, h0)
            saved = (out_need[t], in_need[h])
            place(i, bit)
            ok = (
                out_need[simple[i][0]] <= remaining[simple[i][0]]
                and in_need[simple[i][0]] <= remaining[simple[i][0]]
                and out_need[simple[i][1]] <= remaining[simple[i][1]]
                and in_need[simple[i][1]] <= remaining[simple[i][1]]
            )
            if ok and dfs(i + 1, diff | (bit << i)):
                return True
            unplace(i, bit, saved)
        return False

    if not dfs(0, 0):
        return None
    combo = solution[0]
    fam = InversionFamily([cands[i][0] for i in range(len(cands)) if (combo >> i) & 1])
    result = apply_inversions(D, fam)
    if not is_k_arc_strong(result, k):
        raise RuntimeError("internal error: reconstructed family does not verify")
    return fam


def _forced_parity_refuted(D, k, simple, span):
    """Provable-'no' check: find tight cuts whose forced flip parities
    are GF(2)-inconsistent with the candidate span.

    Every S with d_G(S) = 2k must have exactly k arcs out in any
    k-arc-strong orientation, which forces the parity of flipped simple
    edges across S.  If some XOR of these constraint vectors is
    orthogonal to the whole span while its parities XOR to 1, no family
    can work."""
    n = D.n
    G = D.underlying()
    deg = [G.degree(v) for v in range(n)]
    # internal edge weight per mask, DP over lowest bit
    internal = [0] * (1 << n)
    edge_w = [[0] * n for _ in range(n)]
    for (u, v), mm in G._m.items():
        edge_w[u][v] += mm
        edge_w[v][u] += mm
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        internal[mask] = internal[rest] + sum(
            edge_w[low][v] for v in range(n) if (rest >> v) & 1
        )
    span_vecs = [v for v, _ in span.rows]
    rows = []
    for mask in range(1, (1 << n) - 1):
        dsum = sum(deg[v] for v in range(n) if (mask >> v) & 1)
        if dsum - 2 * internal[mask] != 2 * k:
            continue
        delta = 0
        for i, (t, h) in enumerate(simple):
            if ((mask >> t) & 1) != ((mask >> h) & 1):
                delta |= 1 << i
        digon_cross = 0
        simple_out = 0
        for (t, h), mm in D._m.items():
            if (mask >> t) & 1 and not (mask >> h) & 1:
                if D.has_arc(h, t):
                    digon_cross += mm
                else:
                    simple_out += mm
        pi = (k - digon_cross - simple_out) % 2
        sig = 0
        for j, bv in enumerate(span_vecs):
            if bin(delta & bv).count("1") & 1:
                sig |= 1 << (j + 1)
        rows.append(sig | pi)  # parity bit lives at position 0
    full = Gf2Basis()
    nosig = Gf2Basis()
    for r in rows:
        full.add(r, 0)
        nosig.add(r & ~1, 0)
    return full.dim > nosig.dim


def orientation_bfs_reachable(D, k, p, mode="exact-size"):
    """Reference oracle: BFS over all orientations of the simple arcs,
    moves are single (=p or <=p) inversions.  True iff some reachable
    orientation is k-arc-strong.  Exponential in the number of simple
    arcs; use at n <= 6."""
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("orientation_bfs_reachable expects a MultiDigraph")
    if not D.is_digraph():
        raise InvalidArgumentError("input has parallel arcs; a digraph is required")
    _validate_kp(k, p, mode)
    n = D.n
    simple = D.simple_arcs()
    m = len(simple)
    if m > 20:
        raise InvalidArgumentError("state space too large; use gf2_reachable")

    def indicator(xs):
        ind = 0
        s = set(xs)
        for i, (t, h) in enumerate(simple):
            if t in s and h in s:
                ind |= 1 << i
        return ind

    moves = [ind for _xs, ind in _candidate_sets(n, p, mode, indicator)]
    base = [0] * (n * n)
    for (t, h), mm in D._m.items():
        if D.has_arc(h, t):
            base[t * n + h] = mm

    def strong(state):
        caps = list(base)
        for i, (t, h) in enumerate(simple):
            if (state >> i) & 1:
                caps[h * n + t] += 1
            else:
                caps[t * n + h] += 1
        return _kernels.karc_deficient_cut(n, caps, k) == -1

    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for st in frontier:
            if strong(st):
                return True
            for mv in moves:
                st2 = st ^ mv
                if st2 not in seen:
                    seen.add(st2)
                    nxt.append(st2)
        frontier = nxt
    return False


# -- k-arc-strong orientations of a multigraph ---------------------------


def exists_k_arc_strong_orientation(G, k):
    """An orientation of G that is k-arc-strong, or None.

    None is returned exactly when G is not 2k-edge-connected (a cut
    with at most 2k-1 edges caps one direction at k-1); otherwise a
    witness is found and verified.  Search order: pair parallel edges
    into digons (always safe: the paired partial orientation is
    completable iff the graph is 2k-edge-connected), orient the
    leftover simple edges by an Eulerian circuit when all their degrees
    are even, else seeded sampling followed by exhaustive DFS with
    degree pruning.  Intended for n <= 12."""
    if not isinstance(G, Multigraph):
        raise InvalidArgumentError("exists_k_arc_strong_orientation expects a Multigraph")
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive int, got {k!r}")
    n = G.n
    if n <= 1:
        return MultiDigraph(n)
    if edge_connectivity(G) < 2 * k:
        return None
    arcs = []
    free = []
    for u, v, mm in G.edges():
        pairs, odd = divmod(mm, 2)
        if pairs:
            arcs.append((u, v, pairs))
            arcs.append((v, u, pairs))
        if odd:
            free.append((u, v))

    def finish(orientation_bits):
        out = list(arcs)
        for i, (u, v) in enumerate(free):
            if (orientation_bits >> i) & 1:
                out.append((v, u, 1))
            else:
                out.append((u, v, 1))
        D = MultiDigraph(n, out)
        if not is_k_arc_strong(D, k):
            raise RuntimeError("internal error: orientation witness failed verification")
        if D.underlying() != G:
            raise RuntimeError("internal error: witness is not an orientation of G")
        return D

    fdeg = [0] * n
    for u, v in free:
        fdeg[u] += 1
        fdeg[v] += 1
    if all(d % 2 == 0 for d in fdeg):
        return finish(_eulerian_bits(n, free))

    caps = [0] * (n * n)
    for t, h, mm in arcs:
        caps[t * n + h] = mm

    rng = random.Random(0xA5C1)
    mf = len(free)
    for _ in range(400):
        bits = rng.getrandbits(mf) if mf else 0
        trial = list(caps)
        for i, (u, v) in enumerate(free):
            if (bits >> i) & 1:
                trial[v * n + u] += 1
            else:
                trial[u * n + v] += 1
        if _kernels.karc_deficient_cut(n, trial, k) == -1:
            return finish(bits)

    # exhaustive DFS over free-edge orientations with degree pruning
    out_have = [sum(caps[v * n + u] for u in range(n)) for v in range(n)]
    in_have = [sum(caps[u * n + v] for u in range(n)) for v in range(n)]
    rem = list(fdeg)
    work = list(caps)

    def dfs(i, bits):
        if i == mf:
            if _kernels.karc_deficient_cut(n, work, k) == -1:
                return bits
            return None
        u, v = free[i]
        rem[u] -= 1
        rem[v] -= 1
        for bit in (0, 1):
            t, h = (v, u) if bit else (u, v)
            work[t * n + h] += 1
            out_have[t] += 1
            in_have[h] += 1
            if (
                out_have[u] + rem[u] >= k
                and in_have[u] + rem[u] >= k
                and out_have[v] + rem[v] >= k
                and in_have[v] + rem[v] >= k
            ):
                got = dfs(i + 1, bits | (bit << i))
                if got is not None:
                    work[t * n + h] -= 1
                    out_have[t] -= 1
                    in_have[h] -= 1
                    rem[u] += 1
                    rem[v] += 1
                    return got
            work[t * n + h] -= 1
            out_have[t] -= 1
            in_have[h] -= 1
        rem[u] += 1
        rem[v] += 1
        return None

    bits = dfs(0, 0)
    if bits is None:
        # contradicts orientability of 2k-edge-connected multigraphs
        raise RuntimeError("internal error: no orientation found despite 2k-edge-connectivity")
    return finish(bits)


def _eulerian_bits(n, free):
    """Orientation bits of the free edges along Eulerian circuits (one
    per component); all free-degrees must be even."""
    adj = [[] for _ in range(n)]  # (neighbor, edge index)
    for i, (u, v) in enumerate(free):
        adj[u].append((v, i))
        adj[v].append((u, i))
    used = [False] * len(free)
    bits = 0
    ptr = [0] * n
    for start in range(n):
        if ptr[start] >= len(adj[start]):
            continue
        # Hierholzer from start
        stack = [start]
        path = []
        while stack:
            x = stack[-1]
            advanced = False
            while ptr[x] < len(adj[x]):
                y, ei = adj[x][ptr[x]]
                ptr[x] += 1
                if used[ei]:
                    continue
                used[ei] = True
                stack.append(y)
                path.append((x, y, ei))
                advanced = True
                break
            if not advanced:
                stack.pop()
        for x, _y, ei in path:
            u, _v = free[ei]
            if x != u:  # traversed against the stored (u, v) order
                bits |= 1 << ei
    return bits


# -- exact minimum inversion families ------------------------------------


def exact_inv_kp(D, k, p, mode="exact-size", l_max=4):
    """Minimum family of (=p or <=p)-inversions making D k-arc-strong,
    or None if no family of at most l_max sets works.

    Branch and bound: at each node a violated dicut is computed and the
    next set must contain some crossing pair with asymmetric arc counts
    (otherwise that cut stays below k forever).  Multidigraph inputs
    are allowed; sets act by swapping the two arc bundles of each
    internal pair."""
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("exact_inv_kp expects a MultiDigraph")
    _validate_kp(k, p, mode)
    if not isinstance(l_max, int) or l_max < 0:
        raise InvalidArgumentError(f"l_max must be a non-negative int, got {l_max!r}")
    n = D.n
    if edge_connectivity(D.underlying()) < 2 * k:
        return None  # inversions keep the underlying multigraph
    caps = D.caps_flat()
    adj = [0] * n
    for (t, h) in D._m:
        adj[t] |= 1 << h
        adj[h] |= 1 << t
    sizes = [p] if mode == "exact-size" else list(range(2, p + 1))

    def apply_set(xs):
        for a, b in combinations(xs, 2):
            caps[a * n + b], caps[b * n + a] = caps[b * n + a], caps[a * n + b]

    def deficient_count():
        cnt = 0
        for v in range(n):
            if sum(caps[v * n + u] for u in range(n)) < k:
                cnt += 1
            elif sum(caps[u * n + v] for u in range(n)) < k:
                cnt += 1
        return cnt

    def candidates_for(side_mask):
        pairs = []
        for t in range(n):
            for h in range(n):
                if t < h and ((side_mask >> t) & 1) != ((side_mask >> h) & 1):
                    if caps[t * n + h] != caps[h * n + t]:
                        pairs.append((t, h))
        seen = set()
        out = []
        for (a, b) in pairs:
            others = [v for v in range(n) if v != a and v != b]
            for size in sizes:
                if size - 2 > len(others):
                    continue
                for ext in combinations(others, size - 2):
                    xs = tuple(sorted((a, b) + ext))
                    if xs in seen:
                        continue
                    seen.add(xs)
                    if mode == "at-most":
                        # minimal <=p families never need a vertex with no
                        # neighbor inside its set (dropping it keeps the effect)
                        msk = 0
                        for v in xs:
                            msk |= 1 << v
                        if any(not (adj[v] & (msk ^ (1 << v))) for v in xs):
                            continue
                    out.append(xs)
        # prefer sets that raise the violated cut's out-degree the most
        def gain(xs):
            s = set(xs)
            g = 0
            for a in xs:
                for b in xs:
                    if a < b and ((side_mask >> a) & 1) != ((side_mask >> b) & 1):
                        lo, hi = (a, b) if (side_mask >> a) & 1 else (b, a)
                        g += caps[hi * n + lo] - caps[lo * n + hi]
            return g

        out.sort(key=lambda xs: (-gain(xs), xs))
        return out

    chain = []
    found = []

    def dfs(budget):
        side = _kernels.karc_deficient_cut(n, caps, k)
        if side == -1:
            found.append(list(chain))
            return True
        if budget == 0:
            return False
        if deficient_count() > budget * p:
            return False
        for xs in candidates_for(side):
            if xs in chain:
                continue  # repeated set cancels itself; minimum never repeats
            apply_set(xs)
            chain.append(xs)
            if dfs(budget - 1):
                return True
            chain.pop()
            apply_set(xs)
        return False

    for budget in range(l_max + 1):
        if dfs(budget):
            fam = InversionFamily(found[0])
            check = apply_inversions(D, fam)
            if not is_k_arc_strong(check, k):
                raise RuntimeError("internal error: exact search returned a bad family")
            return fam
    return None


# -- packing and matching -------------------------------------------------


def max_p3_packing(G):
    """Maximum number of vertex-disjoint 3-vertex paths in a simple
    graph, with a witness list of (end, center, end) triples."""
    if not isinstance(G, Multigraph):
        raise InvalidArgumentError("max_p3_packing expects a Multigraph")
    if any(m > 1 for _u, _v, m in G.edges()):
        raise InvalidArgumentError("parallel edges not allowed; a simple graph is required")
    n = G.n
    cands = []
    for b in range(n):
        nb = G.neighbors(b)
        for a, c in combinations(nb, 2):
            cands.append((a, b, c))
    by_vertex = [[] for _ in range(n)]
    for i, (a, b, c) in enumerate(cands):
        for v in (a, b, c):
            by_vertex[v].append(i)
    free = [True] * n
    best = [0, []]
    chosen = []

    def rec(v):
        while v < n and (not free[v] or not any(
            all(free[x] for x in cands[i]) for i in by_vertex[v]
        )):
            v += 1
        free_cnt = sum(free)
        if len(chosen) + free_cnt // 3 <= best[0]:
            return
        if v >= n:
            if len(chosen) > best[0]:
                best[0] = len(chosen)
                best[1] = list(chosen)
            return
        for i in by_vertex[v]:
            trip = cands[i]
            if all(free[x] for x in trip):
                for x in trip:
                    free[x] = False
                chosen.append(trip)
                rec(v + 1)
                chosen.pop()
                for x in trip:
                    free[x] = True
        # leave v unused
        free[v] = False
        rec(v + 1)
        free[v] = True

    rec(0)
    return best[0], [tuple(t) for t in best[1]]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a tuple of frozenset hyperedges."""

    n: int
    edges: tuple

    def __init__(self, n, edges):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgumentError(f"vertex count must be a non-negative int, got {n!r}")
        es = []
        for e in edges:
            fe = frozenset(e)
            for v in fe:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise InvalidArgumentError(f"hyperedge vertex {v!r} out of range")
            if len(fe) < 2:
                raise InvalidArgumentError("hyperedges must have >= 2 vertices")
            es.append(fe)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(es))

    def uniformity(self):
        """Common edge size, or None if edges have mixed sizes."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None


def max_hypergraph_matching(H):
    """Maximum set of pairwise-disjoint hyperedges of an s-uniform
    hypergraph, with a witness.  Non-uniform input is rejected."""
    if not isinstance(H, Hypergraph):
        raise InvalidArgumentError("max_hypergraph_matching expects a Hypergraph")
    s = H.uniformity()
    if H.edges and s is None:
        raise InvalidArgumentError("hypergraph is not uniform")
    edges = list(H.edges)
    best = [0, []]
    chosen = []
    used = set()

    def rec(i):
        if s:
            bound = len(chosen) + (H.n - len(used)) // s
            if bound <= best[0]:
                return
        if i == len(edges):
            if len(chosen) > best[0]:
                best[0] = len(chosen)
                best[1] = list(chosen)
            return
        e = edges[i]
        if not (e & used):
            used.update(e)
            chosen.append(e)
            rec(i + 1)
            chosen.pop()
            used.difference_update(e)
        rec(i + 1)

    rec(0)
    return best[0], best[1]


# -- brute-force references (no kernels, no flows) ------------------------


def brute_min_dicut(D):
    """(value, side) minimizing out-degree over nonempty proper subsets;
    (INFINITY, None) when n <= 1.  Plain 2^n scan."""
    n = D.n
    if n <= 1:
        return INFINITY, None
    items = list(D._m.items())
    best = None
    best_side = None
    for mask in range(1, (1 << n) - 1):
        out = 0
        for (t, h), mm in items:
            if (mask >> t) & 1 and not (mask >> h) & 1:
                out += mm
        if best is None or out < best:
            best = out
            best_side = frozenset(v for v in range(n) if (mask >> v) & 1)
    return best, best_side


def brute_is_k_arc_strong(D, k):
    value, _side = brute_min_dicut(D)
    return value >= k


def brute_edge_connectivity(G):
    """Global edge-connectivity by 2^n cut scan; INFINITY for n <= 1."""
    n = G.n
    if n <= 1:
        return INFINITY
    items = list(G._m.items())
    best = None
    for mask in range(1, (1 << n) - 1):
        cut = 0
        for (u, v), mm in items:
            if ((mask >> u) & 1) != ((mask >> v) & 1):
                cut += mm
        if best is None or cut < best:
            best = cut
    return best


def brute_frames(G, k):
    """Frame blocks as the maximal vertex sets whose induced subgraph is
    k-edge-connected (singletons allowed), by subset scan.  Independent
    of the flow kernels; n <= 10."""
    n = G.n
    if n > 10:
        raise InvalidArgumentError("brute_frames is limited to n <= 10")
    good = []
    for mask in range(1, 1 << n):
        ids = [v for v in range(n) if (mask >> v) & 1]
        if len(ids) == 1:
            good.append(mask)
            continue
        sub, _ = G.induced(ids)
        lam = brute_edge_connectivity(sub)
        if lam >= k:
            good.append(mask)
    maximal = [m for m in good if not any(m != o and m & o == m for o in good)]
    blocks = sorted(
        tuple(v for v in range(n) if (m >> v) & 1) for m in maximal
    )
    covered = sorted(v for b in blocks for v in b)
    if covered != list(range(n)) or len(covered) != n:
        raise RuntimeError("maximal k-edge-connected sets do not partition the vertices")
    return blocks
