import json
from math import factorial

import pytest

from hilbsym.center import CenterElement, c, s
from hilbsym.errors import CacheCorruptionError
from hilbsym.hilbert import (
    betti_numbers,
    cached_graded_ring,
    check_localization,
    euler_product_dims,
    filtration_degree,
    fixed_point_class,
    graded_ring,
    localization_data,
    star_product,
)
from hilbsym.partitions import Partition, enumerate_partitions, hook_product
from oracles import brute_partitions, euler_product_coefficients


@pytest.mark.parametrize("n", range(0, 13))
def test_betti_against_oracles(n):
    by_length = [0] * max(n, 1)
    for lam in brute_partitions(n):
        by_length[n - len(lam)] += 1
    assert betti_numbers(n) == by_length == euler_product_coefficients(n)
    assert euler_product_dims(n)[n] == by_length


def test_betti_examples():
    assert betti_numbers(3) == [1, 1, 1]
    assert betti_numbers(4) == [1, 1, 2, 1]


def test_filtration_degree():
    assert filtration_degree(Partition([3, 1])) == 2
    assert filtration_degree(Partition([1, 1, 1])) == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_graded_ring_properties(n):
    G = graded_ring(n)
    assert G.is_graded() and G.is_commutative() and G.is_associative()
    assert G.dims() == betti_numbers(n)
    assert G.scalar_action(Partition([1] * n)) == factorial(n)


def test_graded_ring_degree_three():
    G = graded_ring(3)
    # c_(2,1) . c_(2,1) keeps only its top-degree part 4 c_(3)
    assert G.product(Partition([2, 1]), Partition([2, 1])) == {Partition([3]): 4}
    assert G.product(Partition([2, 1]), Partition([3])) == {}


@pytest.mark.parametrize("n", range(1, 7))
def test_star_product_diagonal_on_fixed_points(n):
    P = enumerate_partitions(n)
    for lam in P:
        e = fixed_point_class(lam)
        assert e == s(*lam)
        for mu in P:
            want = e * hook_product(lam) if lam == mu else CenterElement.zero(n, "s")
            assert star_product(e, fixed_point_class(mu)) == want


@pytest.mark.parametrize("n", range(1, 8))
def test_localization(n):
    assert check_localization(n) == []
    data = localization_data(n)
    for lam, d in data.items():
        assert d.hook_product == hook_product(lam)
        assert len(d.tangent_weights) == 2 * n


def test_graded_cache(cache_dir):
    ring = cached_graded_ring(4, cache_dir)
    path = cache_dir / "graded-4.json"
    assert path.exists()
    again = cached_graded_ring(4, cache_dir)
    assert again.constants == ring.constants and again.dims() == ring.dims()
    data = json.loads(path.read_text())
    data["triples"][0][3] = "7/1"
    path.write_text(json.dumps(data))
    with pytest.raises(CacheCorruptionError):
        cached_graded_ring(4, cache_dir)


def test_ring_multiply_with_unit():
    G = graded_ring(4)
    unit = {Partition([1, 1, 1, 1]): 1}
    x = {Partition([3, 1]): 2, Partition([2, 2]): -1}
    assert G.multiply(unit, x) == {k: v * 24 for k, v in x.items()}
