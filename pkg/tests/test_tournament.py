"""Tournament representation, domination queries, and the S_k predicates."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schuette.tournament import (
    BadResidueClassError,
    DuplicatePairError,
    MissingPairError,
    NotPrimeError,
    SelfEdgeError,
    Tournament,
    TournamentSet,
    VertexInSubsetError,
    VertexOutOfRangeError,
    dominates,
    find_dominator,
    is_sk,
    mask_vertices,
    paley,
    undominated_witness,
)


def random_tournament(n: int, rng: random.Random) -> Tournament:
    out = [0] * n
    for i, j in combinations(range(n), 2):
        if rng.random() < 0.5:
            out[i] |= 1 << j
        else:
            out[j] |= 1 << i
    return Tournament(n, tuple(out))


# -- construction ---------------------------------------------------------


def test_trivial_one_vertex():
    t = Tournament.from_edges(1, [])
    assert t.n == 1 and t.out == (0,)


def test_three_cycle(three_cycle):
    assert three_cycle.beats(0, 1)
    assert three_cycle.beats(1, 2)
    assert three_cycle.beats(2, 0)
    assert not three_cycle.beats(1, 0)
    assert sorted(three_cycle.edges()) == [(0, 1), (1, 2), (2, 0)]


def test_duplicate_pair_rejected():
    with pytest.raises(DuplicatePairError):
        Tournament.from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 0)])
    with pytest.raises(DuplicatePairError):
        Tournament.from_edges(2, [(0, 1), (0, 1)])


def test_missing_pair_rejected():
    with pytest.raises(MissingPairError):
        Tournament.from_edges(3, [(0, 1), (1, 2)])


def test_self_edge_rejected():
    with pytest.raises(SelfEdgeError):
        Tournament.from_edges(2, [(0, 0), (0, 1)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(VertexOutOfRangeError):
        Tournament.from_edges(2, [(0, 2)])


def test_mask_construction_validates():
    with pytest.raises(DuplicatePairError):
        Tournament(2, (0b10, 0b01))  # both orientations
    with pytest.raises(MissingPairError):
        Tournament(2, (0, 0))
    with pytest.raises(SelfEdgeError):
        Tournament(2, (0b11, 0))


@given(st.integers(1, 6), st.integers())
@settings(max_examples=60)
def test_fuzzed_tournaments_are_antisymmetric(n, seed):
    t = random_tournament(n, random.Random(seed))
    for i, j in combinations(range(n), 2):
        assert t.beats(i, j) != t.beats(j, i)


def test_tournament_set_needs_shared_order(three_cycle):
    with pytest.raises(ValueError):
        TournamentSet(())
    with pytest.raises(ValueError):
        TournamentSet((three_cycle, Tournament.from_edges(2, [(0, 1)])))


# -- domination -----------------------------------------------------------


def test_dominates_basic(three_cycle):
    assert dominates(three_cycle, 0, [1])
    assert not dominates(three_cycle, 0, [1, 2])
    assert dominates(three_cycle, 0, [])  # vacuous


def test_dominates_vertex_in_subset(three_cycle):
    with pytest.raises(VertexInSubsetError):
        dominates(three_cycle, 1, [0, 1])


def test_dominates_range_checks(three_cycle):
    with pytest.raises(VertexOutOfRangeError):
        dominates(three_cycle, 0, [5])
    with pytest.raises(VertexOutOfRangeError):
        dominates(three_cycle, 7, [1])


def test_find_dominator_lexicographic(three_cycle):
    tau = TournamentSet((three_cycle,))
    assert find_dominator(tau, [1]) == (0, 0)
    assert find_dominator(tau, [0, 1, 2]) is None
    # reversed duplicate member: dominator still reported from member 0 first
    rev = Tournament.from_edges(3, [(1, 0), (2, 1), (0, 2)])
    tau2 = TournamentSet((three_cycle, rev))
    assert find_dominator(tau2, [0]) == (0, 2)


def test_find_dominator_rotational_example():
    from schuette.constructions import rotational_set

    tau = rotational_set(2)
    assert find_dominator(tau, [1, 2]) == (0, 0)


# -- is_sk / witness ------------------------------------------------------


def test_is_sk_vacuous_and_overlarge(three_cycle):
    tau = TournamentSet((three_cycle,))
    assert is_sk(tau, 0)
    assert not is_sk(tau, 3)  # k = n
    assert not is_sk(tau, 5)  # k > n
    with pytest.raises(ValueError):
        is_sk(tau, -1)


def test_three_cycle_is_s1_not_s2(three_cycle):
    tau = TournamentSet((three_cycle,))
    assert is_sk(tau, 1)
    assert not is_sk(tau, 2)
    assert undominated_witness(tau, 2) == (0, 1)


def test_witness_full_vertex_set(three_cycle):
    tau = TournamentSet((three_cycle,))
    assert undominated_witness(tau, 3) == (0, 1, 2)
    with pytest.raises(ValueError):
        undominated_witness(tau, 4)


def test_golden_paley_facts(paley_sets):
    assert is_sk(paley_sets[3], 1)
    assert is_sk(paley_sets[7], 2)
    assert is_sk(paley_sets[19], 3)
    assert not is_sk(paley_sets[3], 2)
    assert not is_sk(paley_sets[7], 3)
    assert not is_sk(paley_sets[19], 4)


def test_paley19_k4_witness_exists(paley_sets):
    w = undominated_witness(paley_sets[19], 4)
    assert w is not None and len(w) == 4
    # and it really is undominated
    assert find_dominator(paley_sets[19], w) is None


@given(st.integers(2, 7), st.integers(0, 7), st.integers())
@settings(max_examples=120)
def test_witness_soundness_random(n, k, seed):
    if k >= n:
        k = n - 1
    tau = TournamentSet(tuple(random_tournament(n, random.Random(seed + i)) for i in range(2)))
    w = undominated_witness(tau, k)
    assert is_sk(tau, k) == (w is None)
    if w is not None:
        assert find_dominator(tau, w) is None


@given(st.integers(2, 7), st.integers())
@settings(max_examples=80)
def test_monotone_in_k_random(n, seed):
    tau = TournamentSet((random_tournament(n, random.Random(seed)),))
    held = [k for k in range(n) if is_sk(tau, k)]
    # S_k implies S_k' for all k' <= k, so the true region is a prefix
    assert held == list(range(len(held)))


# -- paley ----------------------------------------------------------------


def test_paley3_is_three_cycle(three_cycle):
    assert paley(3) == three_cycle


def test_paley7_out_neighbors():
    t = paley(7)
    assert sorted(mask_vertices(t.out[0])) == [1, 2, 4]


def test_paley_rejects_bad_inputs():
    with pytest.raises(NotPrimeError):
        paley(9)
    with pytest.raises(NotPrimeError):
        paley(1)
    with pytest.raises(BadResidueClassError):
        paley(5)
    with pytest.raises(BadResidueClassError):
        paley(13)


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23, 31, 43, 47, 67])
def test_paley_regular_out_degree(p):
    t = paley(p)
    assert all(t.out_degree(i) == (p - 1) // 2 for i in range(p))
