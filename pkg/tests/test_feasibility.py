import random

import pytest

from arcinvert.core import (
    MultiDigraph,
    apply_inversions,
    is_k_arc_strong,
)
from arcinvert.errors import PreconditionViolatedError
from arcinvert.feasibility import (
    construct_witness,
    is_kp_invertible,
    threshold,
)
from arcinvert.obstruction import star_matching_obstruction, verify_certificate
from arcinvert.oracles import gf2_reachable
from arcinvert.reductions import rotative_tournament

from conftest import rand_2kec_digraph, rand_digraph


def test_threshold_closed_form():
    assert threshold(1, 3) == 6
    assert threshold(1, 4) == 6
    assert threshold(2, 3) == 10
    assert threshold(1, 6) == 8
    assert threshold(2, 4) == 6
    assert threshold(3, 4) == 8
    assert threshold(1, 7) == 9
    assert threshold(2, 7) == 10


def test_even_p_above_threshold_is_always_feasible():
    rng = random.Random(601)
    for _ in range(25):
        k = rng.choice([1, 2])
        n = rng.randint(threshold(k, 4), threshold(k, 4) + 3)
        D = rand_2kec_digraph(rng, k, n)
        verdict = is_kp_invertible(D, k, 4, witness=True)
        assert verdict.feasible and verdict.reason == "theorem-even"
        assert verdict.witness is not None
        assert all(len(s) == 4 for s in verdict.witness.sets)
        assert is_k_arc_strong(apply_inversions(D, verdict.witness.sets), k)


def test_odd_p_above_threshold_splits_on_obstructions():
    rng = random.Random(602)
    reasons = {"theorem-odd": 0, "k-obstruction": 0}
    for _ in range(40):
        D = rand_2kec_digraph(rng, 1, rng.randint(6, 8))
        verdict = is_kp_invertible(D, 1, 3, witness=True)
        if verdict.feasible:
            assert verdict.reason == "theorem-odd"
            assert is_k_arc_strong(apply_inversions(D, verdict.witness.sets), 1)
            assert all(len(s) == 3 for s in verdict.witness.sets)
        else:
            assert verdict.reason == "k-obstruction"
            assert verify_certificate(D, verdict.certificate)
        reasons[verdict.reason] += 1
    assert reasons["theorem-odd"] > 20


def test_obstruction_fixture_verdict():
    D, _cert = star_matching_obstruction(3)
    verdict = is_kp_invertible(D, 1, 3, witness=True)
    assert not verdict.feasible
    assert verdict.reason == "k-obstruction"
    assert verify_certificate(D, verdict.certificate)
    assert verdict.witness is None
    # the same digraph is fixable with even sets
    assert is_kp_invertible(D, 1, 4).feasible


def test_not_connected_reason():
    D = MultiDigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    verdict = is_kp_invertible(D, 2, 3)
    assert not verdict.feasible
    assert verdict.reason == "not-2k-edge-connected"


def test_sub_threshold_uses_the_exhaustive_kernel():
    rng = random.Random(603)
    agree = 0
    for _ in range(40):
        n = rng.choice([4, 5])
        D = rand_digraph(rng, n_max=n, n_min=n)
        verdict = is_kp_invertible(D, 1, 3, witness=True)
        want = gf2_reachable(D, 1, 3, mode="exact-size")
        assert verdict.feasible == (want is not None)
        if verdict.feasible:
            assert verdict.reason == "kernel-exhaustive"
            assert is_k_arc_strong(apply_inversions(D, verdict.witness.sets), 1)
        agree += 1
    assert agree == 40


def test_witness_is_empty_when_already_strong():
    T = rotative_tournament(9)
    verdict = is_kp_invertible(T, 1, 3, witness=True)
    assert verdict.feasible
    assert verdict.witness is not None and verdict.witness.sets == ()


def test_construct_witness_rejects_infeasible_inputs():
    D, _cert = star_matching_obstruction(3)
    with pytest.raises(PreconditionViolatedError):
        construct_witness(D, 1, 3)


def test_pair_witness_route():
    rng = random.Random(604)
    for _ in range(10):
        D = rand_2kec_digraph(rng, 1, 6)
        verdict = is_kp_invertible(D, 1, 2, witness=True)
        if not verdict.feasible:
            continue
        assert all(len(s) == 2 for s in verdict.witness.sets)
        assert is_k_arc_strong(apply_inversions(D, verdict.witness.sets), 1)


def test_tournament_even_witness_falls_back_cleanly():
    # digon-free tournament: the windowed pair construction cannot work,
    # the builder must still return a verified exact-size family
    T = rotative_tournament(7)
    flipped = apply_inversions(T, [[0, 1]])
    verdict = is_kp_invertible(flipped, 1, 4, witness=True)
    assert verdict.feasible
    assert all(len(s) == 4 for s in verdict.witness.sets)
    assert is_k_arc_strong(apply_inversions(flipped, verdict.witness.sets), 1)
