import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcinvert.core import (
    INFINITY,
    InversionFamily,
    MultiDigraph,
    Multigraph,
    apply_inversions,
    dicut,
    edge_connectivity,
    emit_mdg,
    frames,
    is_k_arc_strong,
    parse_mdg,
    push,
    reverse,
    violating_dicut,
)
from arcinvert.errors import InvalidArgumentError, ParseError

from conftest import rand_digraph, rand_family, rand_multidigraph, rand_multigraph


@st.composite
def multidigraphs(draw, n_max=7):
    n = draw(st.integers(min_value=2, max_value=n_max))
    pairs = [(t, h) for t in range(n) for h in range(n) if t != h]
    mults = draw(
        st.lists(st.integers(min_value=0, max_value=2), min_size=len(pairs), max_size=len(pairs))
    )
    return MultiDigraph(n, [(t, h, m) for (t, h), m in zip(pairs, mults) if m])


@st.composite
def graph_and_set(draw, n_max=7):
    D = draw(multidigraphs(n_max))
    size = draw(st.integers(min_value=2, max_value=D.n))
    X = draw(st.permutations(range(D.n)))[:size]
    return D, list(X)


@settings(max_examples=120, deadline=None)
@given(graph_and_set())
def test_inversion_is_an_involution(case):
    D, X = case
    assert apply_inversions(apply_inversions(D, [X]), [X]) == D


@settings(max_examples=120, deadline=None)
@given(graph_and_set(), graph_and_set())
def test_inversions_commute(case_a, case_b):
    D, X = case_a
    _D2, Y_raw = case_b
    Y = [v % D.n for v in Y_raw]
    if len(set(Y)) < 2:
        Y = list(range(2))
    one = apply_inversions(D, [X, Y])
    other = apply_inversions(D, [Y, X])
    assert one == other


@settings(max_examples=120, deadline=None)
@given(graph_and_set())
def test_digons_survive_any_inversion(case):
    D, X = case
    out = apply_inversions(D, [X])
    assert list(out.digon_pairs()) == list(D.digon_pairs())


def test_inversion_flips_exactly_the_inside_arcs():
    D = MultiDigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    out = apply_inversions(D, [[0, 1, 2]])
    assert sorted(out.arcs()) == sorted([(1, 0, 1), (2, 1, 1), (2, 3, 1), (3, 0, 1)])


def test_family_rejects_tiny_sets():
    with pytest.raises(InvalidArgumentError):
        InversionFamily([[3]])


def test_family_lines_round_trip():
    fam = InversionFamily([[0, 2, 5], [1, 3]])
    again = InversionFamily.from_lines(fam.to_lines())
    assert again.sets == fam.sets


def test_symmetric_difference_cancels_duplicates():
    a = InversionFamily([[0, 1], [2, 3]])
    b = InversionFamily([[2, 3], [1, 4]])
    merged = InversionFamily.symmetric_difference(a, b)
    assert set(merged.sets) == {frozenset({0, 1}), frozenset({1, 4})}


def test_push_matches_complement_inversions():
    rng = random.Random(41)
    for _ in range(60):
        D = rand_digraph(rng, n_max=7, n_min=3)
        X = rng.sample(range(D.n), rng.randint(1, D.n - 1))
        pushed = push(D, X)
        fams = [[v for v in range(D.n) if v != x] for x in X]
        direct = apply_inversions(D, fams)
        if len(X) % 2 == 0:
            assert pushed == direct
        else:
            assert pushed == reverse(direct)


def test_push_twice_is_identity():
    rng = random.Random(42)
    for _ in range(40):
        D = rand_multidigraph(rng, n_max=7)
        X = rng.sample(range(D.n), rng.randint(1, D.n))
        assert push(push(D, X), X) == D


def _brute_lambda(G):
    if G.n <= 1:
        return INFINITY
    best = None
    for r in range(1, G.n):
        for side in combinations(range(1, G.n), r - 1):
            cut = G.cut_size({0, *side})
            best = cut if best is None or cut < best else best
    return best


def test_edge_connectivity_matches_brute_force():
    rng = random.Random(43)
    for _ in range(80):
        G = rand_multigraph(rng, n_max=7)
        assert edge_connectivity(G) == _brute_lambda(G)


def _brute_k_arc_strong(D, k):
    # sides containing 0 cover all cuts when both directions are checked
    for r in range(1, D.n):
        for side in combinations(range(1, D.n), r - 1):
            cut = dicut(D, {0, *side})
            if cut.out_size < k or cut.in_size < k:
                return False
    return True


def test_is_k_arc_strong_matches_brute_force():
    rng = random.Random(44)
    for _ in range(60):
        D = rand_multidigraph(rng, n_max=7)
        for k in (1, 2):
            assert is_k_arc_strong(D, k) == _brute_k_arc_strong(D, k)


def test_violating_dicut_reports_a_real_violation():
    rng = random.Random(45)
    seen = 0
    for _ in range(200):
        D = rand_multidigraph(rng, n_max=7)
        cut = violating_dicut(D, 2)
        if cut is None:
            assert is_k_arc_strong(D, 2)
            continue
        seen += 1
        recheck = dicut(D, cut.side)
        assert recheck.out_size == cut.out_size and cut.out_size < 2
    assert seen > 50


def brute_frames(G, k):
    """Maximal vertex sets whose induced subgraph is k-edge-connected
    (singletons count); checks they tile the vertex set."""
    good = []
    for size in range(1, G.n + 1):
        for cand in combinations(range(G.n), size):
            if size == 1:
                good.append(set(cand))
                continue
            sub, _ids = G.induced(set(cand))
            lam = edge_connectivity(sub)
            if lam != INFINITY and lam >= k:
                good.append(set(cand))
    maximal = [s for s in good if not any(s < t for t in good)]
    covered = sorted(v for s in maximal for v in s)
    assert covered == list(range(G.n)), "maximal blocks failed to partition"
    return {tuple(sorted(s)) for s in maximal}


def test_frames_match_brute_force_maximal_blocks():
    rng = random.Random(46)
    for _ in range(40):
        G = rand_multigraph(rng, n_max=6)
        for k in (1, 2, 3):
            part = frames(G, k)
            assert set(part.blocks) == brute_frames(G, k)


def test_mdg_round_trip():
    rng = random.Random(47)
    for _ in range(50):
        D = rand_multidigraph(rng, n_max=9, mult_max=3)
        assert parse_mdg(emit_mdg(D)) == D


def test_parse_reports_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_mdg("mdg 3\na 0 1\na 0 nine\n")
    assert exc.value.line_no == 3
    with pytest.raises(ParseError) as exc:
        parse_mdg("not a header\n")
    assert exc.value.line_no == 1


def test_parse_rejects_out_of_range_vertices():
    with pytest.raises(ParseError):
        parse_mdg("mdg 2\na 0 5\n")


def test_reverse_is_involution_and_flips_cuts():
    rng = random.Random(48)
    for _ in range(30):
        D = rand_multidigraph(rng, n_max=7)
        R = reverse(D)
        assert reverse(R) == D
        side = set(rng.sample(range(D.n), rng.randint(1, D.n - 1)))
        assert dicut(D, side).out_size == dicut(R, side).in_size
