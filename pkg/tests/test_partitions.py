import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from minmin.partitions import (
    PartitionError,
    SetPartition,
    coarsenings,
    enumerate_partitions,
    is_refinement,
    restricted_growth_strings,
)

BELL = oracles.bell_numbers(8)


def P(n, text):
    return SetPartition.parse(text, n)


def test_bell_oracle_sequence():
    assert BELL[1:] == [1, 2, 5, 15, 52, 203, 877, 4140]


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_match_bell(n):
    parts = list(enumerate_partitions(n))
    assert len(parts) == BELL[n]
    assert len(set(parts)) == len(parts)


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_by_block_number(n):
    for k in range(1, n + 1):
        assert sum(1 for _ in enumerate_partitions(n, k)) == oracles.stirling2(n, k)


def test_small_listings():
    assert [p.text() for p in enumerate_partitions(3, 2)] == ["0 1|2", "0 2|1", "0|1 2"]
    assert [p.text() for p in enumerate_partitions(1)] == ["0"]


def test_growth_strings_are_lexicographic():
    strings = list(restricted_growth_strings(5))
    assert strings == sorted(strings)
    assert all(s[0] == 0 and all(s[i] <= 1 + max(s[:i]) for i in range(1, 5)) for s in strings)


def test_block_count_out_of_range():
    with pytest.raises(PartitionError):
        list(enumerate_partitions(3, 4))
    with pytest.raises(PartitionError):
        list(enumerate_partitions(3, 0))


def test_setpartition_validation_and_canonical_order():
    assert SetPartition(3, (0b100, 0b011)).blocks == (0b011, 0b100)
    for blocks in [(0b011, 0b110), (0b001, 0b010), (0b111, 0)]:
        with pytest.raises(PartitionError):
            SetPartition(3, blocks)
    p = P(4, "2 3|0 1")
    assert p.text() == "0 1|2 3" and SetPartition.parse(p.text(), 4) == p


def test_coarsening_counts():
    assert sum(1 for _ in coarsenings(P(3, "0|1|2"))) == 5
    assert sum(1 for _ in coarsenings(P(5, "0 1|2 3|4"))) == 5
    assert list(coarsenings(P(3, "0 1 2"))) == [P(3, "0 1 2")]
    assert set(coarsenings(P(3, "0|1|2"))) == set(enumerate_partitions(3))


@pytest.mark.parametrize("n", range(1, 7))
def test_coarsenings_are_exactly_the_coarser_partitions(n):
    everything = list(enumerate_partitions(n))
    for fine in everything[:: max(1, len(everything) // 25)]:
        got = list(coarsenings(fine))
        assert len(got) == len(set(got)) == BELL[len(fine)]
        assert set(got) == {A for A in everything if is_refinement(A, fine)}


def test_is_refinement_examples():
    assert is_refinement(P(3, "0 1 2"), P(3, "0|1 2"))
    assert not is_refinement(P(3, "0 1|2"), P(3, "0 2|1"))
    assert is_refinement(P(3, "0 1|2"), P(3, "0 1|2"))
    with pytest.raises(PartitionError):
        is_refinement(P(3, "0 1 2"), P(4, "0 1 2 3"))


partitions6 = st.sampled_from(list(enumerate_partitions(5)))


@given(partitions6, partitions6, partitions6)
def test_refinement_is_a_partial_order(a, b, c):
    assert is_refinement(a, a)
    if is_refinement(a, b) and is_refinement(b, a):
        assert a == b
    if is_refinement(a, b) and is_refinement(b, c):
        assert is_refinement(a, c)
