import random

import pytest

from arcinvert.core import (
    InversionFamily,
    MultiDigraph,
    Multigraph,
    apply_inversions,
    is_k_arc_strong,
    reverse,
)
from arcinvert.errors import InvalidArgumentError
from arcinvert.oracles import Hypergraph, exact_inv_kp, max_hypergraph_matching, max_p3_packing
from arcinvert.reductions import (
    ReductionInstance,
    gen_do_m22inv,
    gen_hm,
    gen_npsi_22,
    gen_p3p,
    gen_psi_ksi,
    gen_push_n1,
    minimal_pattern_source,
    random_pattern_source,
    rotative_tournament,
)


def test_rotative_tournament_connectivity():
    for m in range(3, 16):
        T = rotative_tournament(m)
        assert T.n == m
        assert T.arc_count() == m * (m - 1) // 2
        assert is_k_arc_strong(T, (m - 1) // 2)
        assert m <= 4 or not is_k_arc_strong(T, (m - 1) // 2 + 1)


def test_planted_families_are_verified_at_construction():
    D = MultiDigraph(3, [(0, 1), (1, 2), (2, 0)])
    bogus = InversionFamily([[0, 1]])  # breaks the cycle
    with pytest.raises(RuntimeError):
        ReductionInstance(D, "p3p", {"k": 1, "p": 3}, {}, bogus)


def test_p3p_on_a_path_matches_the_packing_formula():
    # path on 3 vertices: one triple packs, value = ceil((3 - 1) / 2) = 1
    G = Multigraph(3, [(0, 1), (1, 2)])
    inst = gen_p3p(G, 1)
    y, _packing = max_p3_packing(G)
    assert y == 1
    assert inst.digraph.n == 9
    assert inst.source_meta["predicted_value"] == 1
    assert len(inst.planted.sets) == 1
    out = apply_inversions(inst.digraph, inst.planted.sets)
    assert is_k_arc_strong(out, 1)
    # lower bound: no single at-most-3 inversion below the formula value
    assert exact_inv_kp(inst.digraph, 1, 3, mode="at-most", l_max=0) is None


def test_p3p_odd_leftover_pads_with_an_overlap():
    # no edges: nothing packs, 5 leftover vertices need 3 pair covers
    G = Multigraph(5, [(0, 1)])
    inst = gen_p3p(G, 1)
    assert inst.source_meta["packing_size"] == 0
    assert inst.source_meta["predicted_value"] == 3
    assert len(inst.planted.sets) == 3


def test_p3p_rejects_odd_cycles():
    G = Multigraph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(InvalidArgumentError):
        gen_p3p(G, 1)


def test_hm_matches_the_matching_formula():
    H = Hypergraph(6, [frozenset({0, 1, 2}), frozenset({3, 4, 5})])
    inst = gen_hm(H, 1)
    x, _w = max_hypergraph_matching(H)
    assert x == 2
    assert inst.source_meta["predicted_value"] == 2
    assert len(inst.planted.sets) == 2
    assert is_k_arc_strong(apply_inversions(inst.digraph, inst.planted.sets), 1)


def test_hm_leftover_window_pads():
    H = Hypergraph(4, [frozenset({0, 1, 2})])
    inst = gen_hm(H, 1)
    # one matched edge plus one leftover vertex: ceil(3/2) = 2
    assert inst.source_meta["predicted_value"] == 2
    assert len(inst.planted.sets) == 2


def test_hm_rejects_non_uniform_sources():
    H = Hypergraph(5, [frozenset({0, 1, 2}), frozenset({3, 4})])
    with pytest.raises(InvalidArgumentError):
        gen_hm(H, 1)


def test_do_m22inv_arc_multiplicities():
    G = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    inst = gen_do_m22inv(G, [(0, 1)])
    for (t, h, m) in inst.digraph.arcs():
        assert t < h
        assert m == (1 if (t, h) == (0, 1) else 2)
    assert inst.params == {"k": 2, "p": 2}
    if inst.planted is not None:
        out = apply_inversions(inst.digraph, inst.planted.sets)
        assert is_k_arc_strong(out, 2)


def test_do_m22inv_infeasible_case_has_no_planted():
    # a bridge cannot be in any strong orientation's deletable set
    G = Multigraph(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)])
    inst = gen_do_m22inv(G, [(0, 1), (1, 2), (2, 0)])
    assert inst.planted is None or is_k_arc_strong(
        apply_inversions(inst.digraph, inst.planted.sets), 2
    )


def test_push_n1_parity_of_the_flip_set():
    rng = random.Random(701)
    seen = {0: 0, 1: 0}
    for _ in range(30):
        n = rng.randint(4, 7)
        arcs = [(i, (i + 1) % n) for i in range(n)]
        for u in range(n):
            for v in range(u + 2, n):
                if (u, v) != (0, n - 1) and rng.random() < 0.4:
                    arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        D = MultiDigraph(n, sorted(set(arcs)))
        inst = gen_push_n1(D)
        if inst.planted is None:
            continue
        flip = inst.source_meta["flip_set"]
        assert inst.source_meta["flip_parity"] == len(flip) % 2
        seen[len(flip) % 2] += 1
        assert len(inst.planted.sets) == len(flip)
        for s in inst.planted.sets:
            assert len(s) == n - 1
    assert seen[0] + seen[1] > 10


def test_push_n1_rejects_digons():
    D = MultiDigraph(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(InvalidArgumentError):
        gen_push_n1(D)


def test_psi_ksi_minimal_instance():
    G, parts, H = minimal_pattern_source()
    inst = gen_psi_ksi(G, parts, H, 2)
    assert inst.params == {"k": 2, "p": 9}
    assert inst.digraph.n == 60
    assert inst.planted is not None and len(inst.planted.sets) == 1
    (only,) = inst.planted.sets
    assert len(only) == 9


def test_npsi_22_minimal_instance():
    G, parts, H = minimal_pattern_source()
    inst = gen_npsi_22(G, parts, H)
    assert inst.params["ell"] == 36
    assert inst.digraph.n == 70
    assert len(inst.planted.sets) == 36
    assert all(len(s) == 2 for s in inst.planted.sets)


def test_pattern_normalisation_validation_names_the_failure():
    G, parts, H = minimal_pattern_source()
    with pytest.raises(InvalidArgumentError, match="fewer than 2 parts"):
        gen_psi_ksi(G, [list(range(9))], Multigraph(1, []), 2)
    small = [parts[0][:2], parts[1], parts[2] + parts[0][2:]]
    with pytest.raises(InvalidArgumentError, match="fewer than 3 vertices"):
        gen_psi_ksi(G, small, H, 2)
    inside = Multigraph(9, [(0, 1), (0, 3), (0, 6), (3, 6), (1, 4), (1, 7), (4, 7)])
    with pytest.raises(InvalidArgumentError, match="inside a part"):
        gen_psi_ksi(inside, parts, H, 2)
    sparse = Multigraph(9, [(0, 3), (0, 6), (3, 6), (1, 4), (1, 7)])
    with pytest.raises(InvalidArgumentError, match="fewer than 2 edges between"):
        gen_npsi_22(sparse, parts, H)


def test_random_pattern_sources_build_verified_instances():
    rng = random.Random(702)
    for _ in range(3):
        source = random_pattern_source(rng, r=3, part_size=3, extra_edges=1)
        inst = gen_psi_ksi(*source, 2)
        assert inst.planted is not None
        inst2 = gen_npsi_22(*source)
        assert inst2.planted is not None
        assert len(inst2.planted.sets) == inst2.params["ell"]


def test_push_n1_planted_respects_reversal_symmetry():
    # inverting all (n-1)-complements of an odd flip set reverses the
    # repaired digraph; strongness is invariant under reversal, so the
    # planted family verifies on D directly in either parity
    rng = random.Random(703)
    for _ in range(20):
        n = rng.randint(4, 6)
        arcs = [(i, (i + 1) % n) for i in range(n)]
        D = MultiDigraph(n, arcs)
        inst = gen_push_n1(D)
        assert inst.planted is not None
        out = apply_inversions(D, inst.planted.sets)
        assert is_k_arc_strong(out, 1) or is_k_arc_strong(reverse(out), 1)
