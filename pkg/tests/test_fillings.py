import random

import pytest
from hypothesis import given, settings, strategies as st

from nsmac.fillings import (
    Filling,
    coinversion_by_orientation,
    complement_filling,
    count_coinversion_triples,
    count_inversion_triples,
    enumerate_fillings,
    enumerate_non_attacking,
    is_non_attacking,
    pi_transport,
    plain_stats,
    stats,
)
from nsmac.shapes import arm_table, enumerate_triples, pi_shift
from strategies import small_compositions

EXAMPLE_MU = (2, 1, 3, 0, 0, 2)
EXAMPLE_ROWS = [[1, 2, 3, 5], [6, 4, 5], [2]]


@pytest.fixture
def example():
    return Filling.from_rows(EXAMPLE_MU, EXAMPLE_ROWS)


def cyclic(a, b, c):
    return a < b < c or b < c < a or c < a < b


def test_example_is_non_attacking(example):
    assert is_non_attacking(example)


def test_example_stats(example):
    st_ = stats(example)
    assert st_.maj == 3
    assert st_.inv_count == 25
    assert st_.inv == 15
    assert st_.coinv == 2
    assert st_.descents == {(1, 2), (3, 2)}


def test_example_triples(example):
    assert count_coinversion_triples(example) == 2
    assert count_inversion_triples(example) == 15
    co = [tr for tr in enumerate_triples(EXAMPLE_MU) if coinversion_by_orientation(example, tr)]
    assert len(co) == 2
    values = sorted(
        (example.value(t.u), example.value(t.v), example.value(t.w), t.kind.name) for t in co
    )
    # (u, v, w): the 4 over the 3 with the 5 to the right, then the 4 over
    # the 3 with the 6 to the left
    assert values == [(4, 5, 3, "TYPE_I"), (4, 6, 3, "TYPE_II")]


def test_basement_attack():
    sigma = Filling.from_rows((1, 0), [[2]])
    assert not is_non_attacking(sigma)


def test_zero_composition():
    (sigma,) = list(enumerate_non_attacking((0, 0, 0)))
    assert is_non_attacking(sigma)
    assert stats(sigma).maj == 0


@pytest.mark.parametrize("mu, count", [((1, 0, 0), 1), ((0, 1, 0), 2), ((0, 0, 1), 3)])
def test_enumeration_counts(mu, count):
    fills = list(enumerate_non_attacking(mu))
    assert len(fills) == count
    for sigma in fills:
        st_ = stats(sigma)
        assert st_.maj == 0 and st_.coinv == 0


def test_unique_filling_of_100():
    (sigma,) = list(enumerate_non_attacking((1, 0, 0)))
    assert sigma.value((1, 1)) == 1
    st_ = stats(sigma)
    # a((1,1)) = 2, both triples are inversion triples
    assert (st_.maj, st_.inv, st_.coinv) == (0, 2, 0)


def test_plain_stats_examples():
    top_eq = Filling.from_rows((0, 2), [[1], [1]])
    assert plain_stats(top_eq) == plain_stats(top_eq, 2)
    assert (plain_stats(top_eq).maj, plain_stats(top_eq).inv) == (0, 0)
    top_desc = Filling.from_rows((0, 2), [[1], [2]])
    assert plain_stats(top_desc).maj == 1
    # reading order runs right to left, so (2,1) is read before (1,1)
    row = Filling.from_rows((1, 1), [[1, 2]])
    assert (plain_stats(row).maj, plain_stats(row).inv) == (0, 1)
    row = Filling.from_rows((1, 1), [[2, 1]])
    assert (plain_stats(row).maj, plain_stats(row).inv) == (0, 0)


def test_pi_transport_examples(example):
    sigma = Filling.from_rows((1, 0, 0), [[1]])
    moved = pi_transport(sigma)
    assert moved.mu == (1, 1, 0)
    assert moved.value((1, 1)) == 1 and moved.value((2, 1)) == 2
    (zero,) = list(enumerate_non_attacking((0, 0, 0)))
    assert pi_transport(zero).as_dict() == {(1, 1): 1}
    assert stats(pi_transport(example)).coinv == 2


def test_pi_transport_rejects_attacking():
    with pytest.raises(ValueError):
        pi_transport(Filling.from_rows((1, 0), [[2]]))


def test_json_round_trip(example):
    assert Filling.from_json(example.to_json()) == example


def test_from_rows_shape_mismatch():
    with pytest.raises(ValueError):
        Filling.from_rows((2, 1), [[1, 2], [1, 1]])


@given(small_compositions(max_n=4, max_size=4))
@settings(max_examples=40)
def test_enumeration_matches_filter(mu):
    n = len(mu)
    fast = set(enumerate_non_attacking(mu))
    slow = {s for s in enumerate_fillings(mu, alphabet=n, non_attacking=False) if is_non_attacking(s)}
    assert fast == slow


@given(small_compositions(max_n=4, max_size=4))
@settings(max_examples=40)
def test_inv_plus_coinv_is_total_arm(mu):
    total = sum(a for a, _ in arm_table(mu).values())
    for sigma in enumerate_non_attacking(mu):
        st_ = stats(sigma)
        assert st_.inv + st_.coinv == total
        assert st_.inv >= 0 and st_.coinv >= 0


@given(small_compositions(max_n=4, max_size=3))
@settings(max_examples=40)
def test_triple_counts_on_all_fillings(mu):
    for sigma in enumerate_fillings(mu, alphabet=len(mu), non_attacking=False):
        st_ = stats(sigma)
        assert count_inversion_triples(sigma) == st_.inv
        assert count_coinversion_triples(sigma) == st_.coinv


@given(small_compositions(max_n=4, max_size=4))
@settings(max_examples=40)
def test_orientation_criterion(mu):
    for sigma in enumerate_non_attacking(mu):
        co = sum(1 for tr in enumerate_triples(mu) if coinversion_by_orientation(sigma, tr))
        assert co == stats(sigma).coinv


@given(small_compositions(max_n=4, max_size=4))
@settings(max_examples=40)
def test_primed_statistics_via_complement(mu):
    n = len(mu)
    for sigma in enumerate_non_attacking(mu):
        comp = complement_filling(sigma)
        st_ = stats(sigma)
        co = sum(1 for tr in enumerate_triples(mu) if cyclic(comp[tr.u], comp[tr.v], comp[tr.w]))
        assert co == st_.coinv_prime
        maj = 0
        for (i, j), (a, l) in arm_table(mu).items():
            if comp[(i, j)] > comp[(i, j - 1)]:
                maj += l + 1
        assert maj == st_.maj_prime
        assert all(1 <= v <= n for v in comp.values())


@given(small_compositions(max_n=4, max_size=4))
@settings(max_examples=40)
def test_pi_transport_preserves_statistics(mu):
    for sigma in enumerate_non_attacking(mu):
        moved = pi_transport(sigma)
        assert moved.mu == pi_shift(mu)
        assert is_non_attacking(moved)
        a, b = stats(sigma), stats(moved)
        assert b.coinv == a.coinv
        tops = sum(1 for v in sigma.values if v == len(mu))
        assert b.maj == a.maj + mu[-1] - tops


@given(st.integers(0, 10_000))
def test_random_example_filling_triple_count(seed):
    rng = random.Random(seed)
    values = tuple(rng.randint(1, 6) for _ in range(8))
    sigma = Filling(EXAMPLE_MU, values)
    assert count_coinversion_triples(sigma) == stats(sigma).coinv
