"""Simulating one small inversion by a family of (=p)-inversions.

Inverting a pair, triple or quintuple can be reproduced exactly by a
family of inversions all of size p, which is how witnesses for one
inversion size get translated into another.  Every plan built here is
re-verified by application before it is returned.

Size recipes (n >= p+2 throughout):

* p = 3 mod 4: for a triple S take the smallest (p-1)-set X disjoint
  from S; the sets X_i u S over all (p-3)-subsets X_i of X compose to
  exactly Inv(S).  Plan size C(p-1, 2); for p = 3 the plan is {S}.
* p = 1 mod 4: for a quintuple R the same trick works with a (p-3)-set
  and (p-5)-subsets (size C(p-3, 2)); a triple is reduced to quintuples
  through a fixed independent triple I (no edges inside), because
  inverting an independent set is a no-op.  Needs independence number
  >= 3, otherwise UnsupportedError.
* p even >= 4: inverting one arc e is solved as a GF(2) system over the
  p-subsets of a small window containing e and a digon or non-adjacent
  pair (a digon-free tournament is UnsupportedError); the window starts
  at p+2 vertices and grows on failure.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import InversionFamily, MultiDigraph, apply_inversions
from .errors import (
    InvalidArgumentError,
    PreconditionViolatedError,
    UnsupportedError,
)


@dataclass(frozen=True)
class SimulationPlan:
    """Family of (=p)-sets whose application equals inverting target
    (and then companion, when set)."""

    target: tuple
    p: int
    sets: tuple
    companion: tuple | None = None

    def family(self):
        return InversionFamily(self.sets)

    def verify(self, D):
        """True iff applying the plan equals inverting the target(s)."""
        direct = [self.target] + ([self.companion] if self.companion else [])
        return apply_inversions(D, self.sets) == apply_inversions(D, direct)


def _validate_common(D, S, size, p, p_residues):
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("expected a MultiDigraph")
    if not D.is_digraph():
        raise InvalidArgumentError("input has parallel arcs; a digraph is required")
    s = sorted(set(S))
    if len(s) != size:
        raise InvalidArgumentError(f"target must have exactly {size} distinct vertices")
    for v in s:
        if not 0 <= v < D.n:
            raise InvalidArgumentError(f"vertex {v} out of range")
    if not isinstance(p, int) or p < 2:
        raise InvalidArgumentError(f"p must be an int >= 2, got {p!r}")
    if p % 2 == 0 and 1 in p_residues:
        raise InvalidArgumentError(f"p must be odd, got {p}")
    if p % 4 not in p_residues:
        raise InvalidArgumentError(
            f"p mod 4 must be in {sorted(p_residues)}, got {p} (p mod 4 = {p % 4})"
        )
    if D.n < p + 2:
        raise PreconditionViolatedError(f"need n >= p+2 = {p + 2}, got n = {D.n}")
    return s


def _smallest_disjoint(n, avoid, size):
    out = []
    av = set(avoid)
    for v in range(n):
        if v not in av:
            out.append(v)
            if len(out) == size:
                return out
    raise PreconditionViolatedError(f"not enough vertices outside {sorted(av)}")


def _checked(plan, D):
    if not plan.verify(D):
        raise RuntimeError("internal error: simulation plan failed verification")
    return plan


def independent_triple(G, scan_limit=30):
    """Lexicographically smallest 3-set with no edges inside, or None.

    Full scan up to scan_limit vertices; beyond that a greedy sweep
    with one restart per start vertex (can miss, never lies)."""
    n = G.n
    if n <= scan_limit:
        for trip in combinations(range(n), 3):
            a, b, c = trip
            if not (G.adjacent(a, b) or G.adjacent(a, c) or G.adjacent(b, c)):
                return list(trip)
        return None
    for start in range(n):
        picked = [start]
        for u in range(n):
            if u == start:
                continue
            if all(not G.adjacent(u, w) for w in picked):
                picked.append(u)
                if len(picked) == 3:
                    return sorted(picked)
    return None


def simulate_quintuple(D, R, p):
    """Plan of (=p)-sets equal to inverting the 5-set R; p = 1 mod 4."""
    r = _validate_common(D, R, 5, p, {1})
    ext = _smallest_disjoint(D.n, r, p - 3)
    sets = [frozenset(xi) | frozenset(r) for xi in combinations(ext, p - 5)]
    plan = SimulationPlan(target=tuple(r), p=p, sets=tuple(sets))
    return _checked(plan, D)


def simulate_disjoint_triples(D, R, R2, p):
    """Plan of (=p)-sets equal to inverting the disjoint triples R and
    then R2; p = 1 mod 4.

    Composes the quintuple plans of (R minus u) u R2 over u in R: pairs
    inside R are flipped once, pairs inside R2 three times, cross pairs
    twice, which is exactly Inv(R) followed by Inv(R2)."""
    r = _validate_common(D, R, 3, p, {1})
    r2 = sorted(set(R2))
    if len(r2) != 3:
        raise InvalidArgumentError("companion must have exactly 3 distinct vertices")
    for v in r2:
        if not 0 <= v < D.n:
            raise InvalidArgumentError(f"vertex {v} out of range")
    if set(r) & set(r2):
        raise InvalidArgumentError("the two triples must be disjoint")
    parts = []
    for u in r:
        quint = sorted((set(r) - {u}) | set(r2))
        parts.append(simulate_quintuple(D, quint, p).sets)
    fam = InversionFamily.symmetric_difference(*(InversionFamily(s) for s in parts))
    plan = SimulationPlan(target=tuple(r), companion=tuple(r2), p=p, sets=fam.sets)
    return _checked(plan, D)


def simulate_triple(D, S, p):
    """Plan of (=p)-sets equal to inverting the 3-set S; p odd >= 3.

    For p = 1 mod 4 an independent triple I is fixed and S is reduced to
    the disjoint-triples case by |S n I|; independence number < 3 (as
    far as the scan can tell) raises UnsupportedError."""
    s = _validate_common(D, S, 3, p, {1, 3})
    if p % 4 == 3:
        ext = _smallest_disjoint(D.n, s, p - 1)
        sets = [frozenset(xi) | frozenset(s) for xi in combinations(ext, p - 3)]
        plan = SimulationPlan(target=tuple(s), p=p, sets=tuple(sets))
        return _checked(plan, D)
    G = D.underlying()
    a, b, c = s
    if not (G.adjacent(a, b) or G.adjacent(a, c) or G.adjacent(b, c)):
        # inverting an independent set changes nothing
        return _checked(SimulationPlan(target=tuple(s), p=p, sets=()), D)
    ind = independent_triple(G)
    if ind is None:
        raise UnsupportedError(
            "no independent triple found; p = 1 mod 4 needs independence number >= 3"
        )
    return _checked(_triple_via_independent(D, s, ind, p), D)


def _triple_via_independent(D, s, ind, p):
    overlap = len(set(s) & set(ind))
    if overlap == 3:
        return SimulationPlan(target=tuple(s), p=p, sets=())
    if overlap == 0:
        inner = simulate_disjoint_triples(D, s, ind, p)
        return SimulationPlan(target=tuple(s), p=p, sets=inner.sets)
    if overlap == 2:
        s2 = _smallest_disjoint(D.n, set(s) | set(ind), 3)
        first = simulate_disjoint_triples(D, ind, s2, p)
        second = simulate_disjoint_triples(D, s, s2, p)
        fam = InversionFamily.symmetric_difference(first.family(), second.family())
        return SimulationPlan(target=tuple(s), p=p, sets=fam.sets)
    # overlap == 1: route through a triple sharing two vertices with I
    v = _smallest_disjoint(D.n, set(s) | set(ind), 1)[0]
    s2 = sorted((set(ind) - set(s)) | {v})
    first = _triple_via_independent(D, s2, ind, p)
    second = simulate_disjoint_triples(D, s, s2, p)
    fam = InversionFamily.symmetric_difference(first.family(), second.family())
    return SimulationPlan(target=tuple(s), p=p, sets=fam.sets)


def simulate_pair(D, e, p):
    """Plan of (=p)-sets equal to inverting the pair e; p even >= 4.

    A digon or non-adjacent pair is a no-op to invert, so e itself being
    one yields the empty plan; otherwise such a pair is needed in the
    window and a tournament without digons is UnsupportedError."""
    if not isinstance(p, int) or p % 2 == 1:
        raise InvalidArgumentError(f"p must be even, got {p!r}")
    if p < 4:
        raise InvalidArgumentError(f"p must be >= 4, got {p}")
    s = _validate_common(D, e, 2, p, {0, 2})
    u, v = s
    if D.has_arc(u, v) == D.has_arc(v, u):
        # non-adjacent (neither) or digon (both): inverting e is a no-op
        return _checked(SimulationPlan(target=(u, v), p=p, sets=()), D)
    n = D.n
    anchor = None
    for a, b in combinations(range(n), 2):
        if D.has_arc(a, b) == D.has_arc(b, a):
            anchor = (a, b)
            break
    if anchor is None:
        raise UnsupportedError(
            "digon-free tournament: inverting one arc cannot be simulated by (=p)-sets"
        )
    window = sorted({u, v, *anchor})
    for w in range(n):
        if len(window) >= p + 2:
            break
        if w not in window:
            window.append(w)
    window.sort()
    simple = D.simple_arcs()
    while True:
        wset = set(window)
        positions = [i for i, (t, h) in enumerate(simple) if t in wset and h in wset]
        index_of = {pos: j for j, pos in enumerate(positions)}
        target_bit = None
        for i, (t, h) in enumerate(simple):
            if {t, h} == {u, v}:
                target_bit = index_of[i]
        from .oracles import Gf2Basis

        basis = Gf2Basis()
        cands = list(combinations(window, p))
        for ci, xs in enumerate(cands):
            xset = set(xs)
            ind = 0
            for i in positions:
                t, h = simple[i]
                if t in xset and h in xset:
                    ind |= 1 << index_of[i]
            basis.add(ind, 1 << ci)
        combo = basis.solve(1 << target_bit)
        if combo is not None:
            sets = tuple(
                frozenset(cands[ci]) for ci in range(len(cands)) if (combo >> ci) & 1
            )
            plan = SimulationPlan(target=(u, v), p=p, sets=sets)
            return _checked(plan, D)
        grown = False
        for w in range(n):
            if w not in wset:
                window.append(w)
                window.sort()
                grown = True
                break
        if not grown:
            raise RuntimeError(
                "internal error: no (=p)-plan for a single arc although a digon "
                "or non-adjacent pair exists"
            )
