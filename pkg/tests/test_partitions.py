from collections import Counter

import pytest
from hypothesis import given, strategies as st

from hilbfock.partitions import (
    EMPTY,
    Partition,
    arm,
    blend,
    charge,
    enumerate_partitions,
    format_partition,
    hook,
    leg,
    nu,
    parse_partition,
    partitions_up_to,
    unblend,
)

from strategies import partitions


@pytest.mark.parametrize("n, count", [(0, 1), (5, 7), (10, 42)])
def test_partition_counts(n, count):
    assert len(enumerate_partitions(n)) == count


def test_enumeration_order():
    assert enumerate_partitions(0) == [EMPTY]
    assert enumerate_partitions(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]


def test_arm_and_leg_outside_the_diagram():
    assert arm((2, 1), (1, 1)) == 1 and leg((2, 1), (1, 1)) == 1
    assert arm((1, 1), (1, 2)) == -1
    assert arm((), (1, 1)) == -1 and leg((), (1, 1)) == -1


def test_hooks():
    assert sorted(Partition([2, 1]).hooks()) == [1, 1, 3]
    assert sorted(Partition([2]).hooks()) == [1, 2]
    with pytest.raises(ValueError):
        hook((1,), (1, 2))


@given(partitions(8))
def test_hooks_invariant_under_transpose(mu):
    assert Counter(mu.hooks()) == Counter(mu.transpose().hooks())
    assert sorted(mu.hooks()) == sorted(hook(mu, c) for c in mu.cells())


@given(partitions(8))
def test_transpose_is_an_involution(mu):
    assert mu.transpose().transpose() == mu
    assert mu.transpose().size == mu.size


@given(partitions(8))
def test_text_round_trip(mu):
    assert parse_partition(format_partition(mu)) == mu


def test_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition([1, 2])
    assert Partition([2, 1, 0]) == Partition([2, 1])


@pytest.mark.parametrize("b, expected", [(0, ()), (1, (2, 1)), (-1, (1,)), (2, (4, 3, 2, 1))])
def test_staircases(b, expected):
    assert nu(b) == Partition(expected)
    assert nu(b).size == 2 * b * b + b


def test_unblend_small_cases():
    assert blend(0, (), ()) == EMPTY
    assert unblend((1,)) == (-1, EMPTY, EMPTY)
    b, first, second = unblend((2,))
    assert b == 0 and first.size + second.size == 1


@given(st.integers(-3, 3), partitions(4), partitions(4))
def test_blend_round_trip_and_size(b, first, second):
    mu = blend(b, first, second)
    assert mu.size == 2 * first.size + 2 * second.size + 2 * b * b + b
    assert unblend(mu) == (b, first, second)
    assert charge(mu) == b


@pytest.mark.parametrize("n", range(9))
def test_blend_is_a_bijection_on_each_size(n):
    images = [unblend(mu) for mu in enumerate_partitions(n)]
    assert len(set(images)) == len(images)
    assert all(blend(*t) == mu for t, mu in zip(images, enumerate_partitions(n)))


def test_partitions_up_to():
    assert len(partitions_up_to(3)) == 1 + 1 + 2 + 3
