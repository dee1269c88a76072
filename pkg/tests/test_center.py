from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbsym.center import (
    CenterElement,
    brute_force_convolution,
    c,
    c_coords,
    convolution_product,
    h,
    induction_product,
    m,
    s,
    scalar_product,
)
from hilbsym.errors import CapExceededError, DegreeMismatchError, InputError
from hilbsym.partitions import Partition, dominance_leq, enumerate_partitions, hook_product, pi_set, z
from oracles import class_sum_product, power_sum_times_monomial

BASES = ("c", "s", "h", "m")


def element(n, basis, draw_coeffs):
    return CenterElement(n, dict(zip(enumerate_partitions(n), draw_coeffs)), basis)


@st.composite
def elements(draw, n=None, basis=None):
    n = draw(st.integers(1, 6)) if n is None else n
    basis = draw(st.sampled_from(BASES)) if basis is None else basis
    P = enumerate_partitions(n)
    coeffs = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6),
                           min_size=len(P), max_size=len(P)))
    return element(n, basis, coeffs)


# -- worked examples

def test_schur_in_monomials():
    assert s(2, 1).to("m") == m(2, 1) + m(1, 1, 1) * 2


def test_power_sum_in_schur():
    assert c(2).to("s") == s(2) - s(1, 1)


def test_class_products_in_degree_three():
    assert convolution_product(c(2, 1), c(2, 1)) == c(3) * 4 + c(1, 1, 1) * 2
    assert convolution_product(c(2, 1), c(3)) == c(2, 1) * 6


def test_induction_examples():
    assert induction_product(c(2), m(1)) == m(3) + m(2, 1)
    assert induction_product(c(2), m(2, 1)) == m(4, 1) + m(3, 2) + m(2, 2, 1) * 2


def test_h_m_duality_example():
    assert scalar_product(m(2), h(2)) == 1
    assert scalar_product(m(2), h(1, 1)) == 0


def test_unit_of_convolution():
    for n in range(1, 6):
        unit = CenterElement.basis_element("c", [1] * n) * Fraction(1, z(Partition([1] * n)))
        for lam in enumerate_partitions(n):
            assert convolution_product(unit, c(*lam)) == c(*lam)


# -- oracle agreement

@pytest.mark.parametrize("n", range(1, 7))
def test_power_sum_times_monomial_matches_polynomials(n):
    for k in range(0, n):
        for lam in enumerate_partitions(k):
            i = n - k
            oracle = power_sum_times_monomial(i, lam, n)
            got = induction_product(c(i), CenterElement.basis_element("m", lam)).to("m")
            assert {tuple(mu): int(v) for mu, v in got.coords.items()} == oracle
            assert dict(pi_set(lam, i)) == {Partition(mu): v for mu, v in oracle.items()}


@pytest.mark.parametrize("n", range(1, 6))
def test_convolution_matches_permutation_oracle(n):
    P = enumerate_partitions(n)
    for lam in P:
        for mu in P:
            got = c_coords(convolution_product(c(*lam), c(*mu)))
            assert {tuple(k): v for k, v in got.items()} == class_sum_product(n, lam, mu)


def test_brute_force_limits():
    with pytest.raises(CapExceededError):
        brute_force_convolution(c(*[1] * 8), c(*[1] * 8))
    with pytest.raises(DegreeMismatchError):
        brute_force_convolution(c(2), c(3))


# -- structural properties

@given(elements(), st.sampled_from(BASES))
def test_change_of_basis_round_trip(x, target):
    assert x.to(target).to(x.basis).coords == x.coords
    assert x.to(target) == x


@given(elements(n=4), elements(n=4))
def test_convolution_commutative(x, y):
    assert convolution_product(x, y) == convolution_product(y, x)


@given(elements(n=4), elements(n=4), elements(n=4))
def test_convolution_associative_and_distributive(x, y, w):
    assert convolution_product(convolution_product(x, y), w) == convolution_product(x, convolution_product(y, w))
    assert convolution_product(x, y + w) == convolution_product(x, y) + convolution_product(x, w)


@given(elements(n=3), elements(n=2), elements(n=2))
def test_induction_bilinear_and_commutative(x, y, w):
    assert induction_product(x, y) == induction_product(y, x)
    assert induction_product(x, y + w) == induction_product(x, y) + induction_product(x, w)


@given(elements(n=5), elements(n=5))
def test_scalar_product_symmetric_and_basis_free(x, y):
    assert scalar_product(x, y) == scalar_product(y, x)
    assert scalar_product(x.to("s"), y.to("h")) == scalar_product(x, y)


@given(elements(n=4), elements(n=4), elements(n=4))
def test_convolution_is_self_adjoint(x, y, w):
    # multiplication by a central element is self-adjoint for the pairing (x|y)
    assert scalar_product(convolution_product(x, y), w) == scalar_product(y, convolution_product(x, w))


@pytest.mark.parametrize("n", range(1, 9))
def test_schur_idempotents(n):
    P = enumerate_partitions(n)
    for lam in P:
        for mu in P:
            got = convolution_product(s(*lam).to("c"), s(*mu).to("c")).to("s")
            want = s(*lam) * hook_product(lam) if lam == mu else CenterElement.zero(n, "s")
            assert got == want


@pytest.mark.parametrize("n", range(1, 9))
def test_forms_and_triangularity(n):
    P = enumerate_partitions(n)
    for lam in P:
        x = s(*lam).to("m")
        assert x[lam] == 1
        assert all(dominance_leq(mu, lam) for mu in x.coords)
        for mu in P:
            assert scalar_product(c(*lam), c(*mu)) == (z(lam) if lam == mu else 0)
            assert scalar_product(s(*lam), s(*mu)) == (lam == mu)
            assert scalar_product(h(*lam), m(*mu)) == (lam == mu)


# -- element API

def test_equality_across_bases_and_zero():
    assert c(2) - c(2) == CenterElement.zero(2)
    assert (c(2) - c(2)).is_zero()
    assert c(2, 1) != c(3)
    assert s(1) == c(1) == h(1) == m(1)


def test_alias_p_is_c():
    assert CenterElement.basis_element("p", [2, 1]) == c(2, 1)


def test_degree_checks():
    with pytest.raises(DegreeMismatchError):
        c(2) + c(3)
    with pytest.raises(DegreeMismatchError):
        convolution_product(c(2), c(1, 1, 1))
    with pytest.raises(InputError):
        CenterElement.basis_element("q", [1])
    with pytest.raises(InputError):
        CenterElement(3, {Partition([2]): 1})


def test_json_and_repr():
    x = s(2, 1).to("m")
    assert x.to_json()["coords"] == [[[2, 1], "1"], [[1, 1, 1], "2"]]
    assert repr(x) == "1*m[2, 1] + 2*m[1, 1, 1]"


def test_elements_are_unhashable():
    with pytest.raises(TypeError):
        hash(c(1))
