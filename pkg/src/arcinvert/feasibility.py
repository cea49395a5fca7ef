"""Deciding whether p-bounded inversions can make a digraph k-arc-strong.

Above a vertex threshold the answer is structural: for even p it is
exactly 2k-edge-connectivity of the underlying graph, for odd p
additionally the digraph must not carry a k-obstruction partition.
Below the threshold the exhaustive parity-space search decides.  The
threshold is max(p + 2, 2k + 2) for even p and max(p + 2, 4k + 2) for
odd p.

Witnesses are built from a pair or triple family (small sets are easy
to find) whose members are then rewritten into exact-size-p families by
the simulation plans; symmetric differences of the plans compose
because inversion effects add up over GF(2).
"""

from dataclasses import dataclass

from .approx import min_k2_inversion_set
from .core import (
    InversionFamily,
    MultiDigraph,
    apply_inversions,
    edge_connectivity,
    is_k_arc_strong,
)
from .errors import InvalidArgumentError, PreconditionViolatedError, UnsupportedError
from .obstruction import ObstructionCertificate, is_k_obstruction
from .oracles import gf2_reachable
from .simulation import simulate_pair, simulate_triple

REASON_NOT_CONNECTED = "not-2k-edge-connected"
REASON_THEOREM_EVEN = "theorem-even"
REASON_THEOREM_ODD = "theorem-odd"
REASON_OBSTRUCTION = "k-obstruction"
REASON_KERNEL = "kernel-exhaustive"


def threshold(k, p):
    """Smallest n from which feasibility is purely structural."""
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive int, got {k!r}")
    if not isinstance(p, int) or p < 2:
        raise InvalidArgumentError(f"p must be an int >= 2, got {p!r}")
    if p % 2 == 0:
        return max(p + 2, 2 * k + 2)
    return max(p + 2, 4 * k + 2)


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Answer with its justification.

    reason is one of not-2k-edge-connected, theorem-even, theorem-odd,
    k-obstruction, kernel-exhaustive.  certificate carries the
    obstruction partition when that is the reason; witness carries a
    verified inversion family when one was requested and exists."""

    feasible: bool
    reason: str
    certificate: ObstructionCertificate | None = None
    witness: InversionFamily | None = None


def _validate(D, k, p):
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("expected a MultiDigraph")
    if not D.is_digraph():
        raise InvalidArgumentError("feasibility analysis expects a digraph without parallel arcs")
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive int, got {k!r}")
    if not isinstance(p, int) or p < 2:
        raise InvalidArgumentError(f"p must be an int >= 2, got {p!r}")


def is_kp_invertible(D, k, p, witness=False):
    """Can some family of exact-size-p inversions make D k-arc-strong?

    Returns a FeasibilityVerdict.  With witness=True a verified family
    is attached to feasible verdicts."""
    _validate(D, k, p)
    if edge_connectivity(D.underlying()) < 2 * k:
        return FeasibilityVerdict(False, REASON_NOT_CONNECTED)
    if D.n >= threshold(k, p):
        if p % 2 == 0:
            verdict = FeasibilityVerdict(True, REASON_THEOREM_EVEN)
        else:
            cert = is_k_obstruction(D, k)
            if cert is not None:
                return FeasibilityVerdict(False, REASON_OBSTRUCTION, certificate=cert)
            verdict = FeasibilityVerdict(True, REASON_THEOREM_ODD)
        if witness:
            verdict = FeasibilityVerdict(
                True, verdict.reason, witness=construct_witness(D, k, p)
            )
        return verdict
    fam = gf2_reachable(D, k, p, mode="exact-size")
    if fam is None:
        return FeasibilityVerdict(False, REASON_KERNEL)
    return FeasibilityVerdict(True, REASON_KERNEL, witness=fam if witness else None)


def _merge_plans(base, plans):
    """Symmetric difference of the base family with each (target, plan)
    replacement: every target drops out and its plan takes its place."""
    if any(p.companion is not None for p in plans):
        raise RuntimeError("internal error: companion plans cannot be merged into a witness")
    replaced = InversionFamily([p.target for p in plans])
    return InversionFamily.symmetric_difference(
        base, replaced, *(p.family() for p in plans)
    )


def construct_witness(D, k, p):
    """Verified family of exact-size-p inversions making D k-arc-strong.

    Raises PreconditionViolatedError when the instance is infeasible.
    Even p goes through an optimal pair family, odd p through a triple
    family; each small set is rewritten by a simulation plan and the
    plans are merged by symmetric difference.  Inputs where the
    rewriting rules do not apply (digon-free tournaments for even p,
    independence number below 3 for p = 1 mod 4) fall back to the
    exhaustive search, as do instances below the threshold."""
    _validate(D, k, p)
    verdict = is_kp_invertible(D, k, p)
    if not verdict.feasible:
        raise PreconditionViolatedError(f"instance is not ({k},{p})-invertible: {verdict.reason}")
    if verdict.witness is not None:
        return verdict.witness
    if is_k_arc_strong(D, k):
        return InversionFamily([])
    if D.n < threshold(k, p):
        fam = gf2_reachable(D, k, p, mode="exact-size")
        if fam is None:
            raise RuntimeError("internal error: verdict feasible but search found nothing")
        return _finish(D, k, p, fam)
    if p % 2 == 0:
        base = min_k2_inversion_set(D, k)
        if base is None:
            raise RuntimeError("internal error: no pair family above the threshold")
        if p == 2:
            return _finish(D, k, p, base)
        try:
            plans = [simulate_pair(D, sorted(s), p) for s in base.sets]
        except UnsupportedError:
            return _fallback(D, k, p)
        return _finish(D, k, p, _merge_plans(base, plans))
    base = gf2_reachable(D, k, 3, mode="exact-size")
    if base is None:
        raise RuntimeError("internal error: no triple family for a non-obstruction")
    if p == 3:
        return _finish(D, k, p, base)
    try:
        plans = [simulate_triple(D, sorted(s), p) for s in base.sets]
    except UnsupportedError:
        return _fallback(D, k, p)
    return _finish(D, k, p, _merge_plans(base, plans))


def _fallback(D, k, p):
    fam = gf2_reachable(D, k, p, mode="exact-size")
    if fam is None:
        raise RuntimeError("internal error: feasible instance rejected by exhaustive search")
    return _finish(D, k, p, fam)


def _finish(D, k, p, fam):
    if any(len(s) != p for s in fam.sets):
        raise RuntimeError("internal error: witness contains a set of the wrong size")
    if not is_k_arc_strong(apply_inversions(D, fam), k):
        raise RuntimeError("internal error: constructed witness failed verification")
    return fam
