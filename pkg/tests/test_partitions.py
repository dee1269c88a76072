from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hilbsym.errors import InputError
from hilbsym.partitions import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    hook_lengths,
    hook_product,
    partition_count,
    pi_set,
    z,
)
from oracles import brute_partitions, centralizer_order

partitions = st.integers(0, 10).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@pytest.mark.parametrize("n", range(0, 11))
def test_enumeration_matches_brute_force(n):
    got = enumerate_partitions(n)
    assert set(got) == brute_partitions(n)
    assert len(got) == len(set(got)) == partition_count(n)


def test_enumeration_is_reverse_lexicographic():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for n in range(8):
        P = enumerate_partitions(n)
        assert P == sorted(P, reverse=True)


def test_partition_count_known_values():
    assert [partition_count(n) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@pytest.mark.parametrize("bad", [[1, 2], [0], [-1], [2, 0], [1.5]])
def test_rejects_malformed(bad):
    with pytest.raises(InputError):
        Partition(bad)


def test_from_parts_sorts():
    assert Partition.from_parts([1, 3, 2]) == (3, 2, 1)


def test_multiplicity_of_zero_is_refused():
    with pytest.raises(ValueError):
        Partition([2, 1]).multiplicity(0)


def test_hooks_small():
    assert sorted(hook_lengths(Partition([3, 1]))) == [1, 1, 2, 4]
    assert hook_product(Partition([2, 1])) == 3


@given(partitions)
def test_hook_product_divides_factorial(lam):
    assert factorial(lam.size) % hook_product(lam) == 0


@given(partitions)
def test_z_matches_oracle(lam):
    assert z(lam) == centralizer_order(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_class_equation(n):
    assert sum(Fraction(1, z(lam)) for lam in enumerate_partitions(n)) == 1


@given(partitions)
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions)
def test_hooks_invariant_under_conjugation(lam):
    assert sorted(hook_lengths(lam)) == sorted(hook_lengths(lam.conjugate()))


@pytest.mark.parametrize("n", range(1, 8))
def test_dominance_partial_order(n):
    P = enumerate_partitions(n)
    for a in P:
        assert dominance_leq(a, a)
        assert dominance_leq(Partition([1] * n), a) and dominance_leq(a, Partition([n]))
        for b in P:
            if a != b and dominance_leq(a, b):
                assert not dominance_leq(b, a)
            # conjugation reverses dominance
            assert dominance_leq(a, b) == dominance_leq(b.conjugate(), a.conjugate())


def test_dominance_incomparable_pair():
    a, b = Partition([3, 1, 1, 1]), Partition([2, 2, 2])
    assert not dominance_leq(a, b) and not dominance_leq(b, a)


def test_dominance_size_mismatch():
    with pytest.raises(InputError):
        dominance_leq(Partition([2]), Partition([1]))


def test_pi_set_example():
    assert pi_set(Partition([1]), 2) == [((3,), 1), ((2, 1), 1)]
    assert pi_set(Partition([2, 1]), 1) == [((3, 1), 1), ((2, 2), 2), ((2, 1, 1), 2)]


@given(partitions, st.integers(1, 5))
def test_pi_set_coefficient_is_multiplicity(lam, i):
    out = pi_set(lam, i)
    assert len({mu for mu, _ in out}) == len(out)
    for mu, a in out:
        assert mu.size == lam.size + i
        assert a >= 1
    assert (lam.add_part(i), lam.add_part(i).count(i)) in out


def test_pi_set_rejects_bad_index():
    with pytest.raises(InputError):
        pi_set(Partition([1]), 0)
