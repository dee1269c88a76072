from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbsym.center import CenterElement, c, m
from hilbsym.errors import InputError, TruncationError
from hilbsym.fock import (
    FockElement,
    annihilate,
    basis_vectors,
    commutator_check,
    create,
    positive_form,
    twisted_form,
    unsigned_removal,
    vacuum_build,
)
from hilbsym.partitions import Partition, enumerate_partitions

CAP = 7


def fock(lam, cap=CAP):
    return FockElement.from_center(CenterElement.basis_element("c", lam), cap)


@st.composite
def fock_vectors(draw, max_degree=CAP):
    terms = {}
    for n in range(max_degree + 1):
        for lam in enumerate_partitions(n):
            if draw(st.booleans()):
                terms[lam] = draw(st.integers(-5, 5))
    out = FockElement.vacuum(CAP) * 0
    for lam, a in terms.items():
        out = out + fock(lam) * a
    return out


def test_annihilation_rule():
    # P_2* c_(2,2,1) = (+1) * 2 * 2 * c_(2,1)
    assert annihilate(2, fock([2, 2, 1])) == fock([2, 1]) * 4
    assert annihilate(1, fock([2, 1])) == fock([2]) * -1
    assert annihilate(3, fock([2, 1])) == fock([2, 1]) * 0


def test_creation_rule():
    assert create(2, fock([2, 1])) == fock([2, 2, 1])
    assert create(1, FockElement.vacuum(CAP)) == fock([1])


def test_creation_on_monomials():
    x = FockElement.from_center(m(1), CAP)
    assert create(1, x) == FockElement.from_center(m(1, 1) * 2 + m(2), CAP)


def test_truncation_is_loud():
    with pytest.raises(TruncationError):
        create(3, fock([3, 2]))
    with pytest.raises(TruncationError):
        vacuum_build([4, 4], 7)
    with pytest.raises(TruncationError):
        FockElement(3, {4: c(4)})


def test_bad_index():
    with pytest.raises(InputError):
        create(0, FockElement.vacuum(3))
    with pytest.raises(InputError):
        commutator_check(3, 3, 5)


@pytest.mark.parametrize("lam", [lam for n in range(CAP + 1) for lam in enumerate_partitions(n)])
def test_vacuum_build_gives_c_basis(lam):
    assert vacuum_build(lam, CAP) == fock(lam)


@pytest.mark.parametrize("i", range(1, 5))
@pytest.mark.parametrize("j", range(1, 5))
def test_heisenberg_relations(i, j):
    report = commutator_check(i, j, 8)
    assert report.passed, report.first_failure
    assert [f["family"] for f in report.families] == ["[P_i,P_j]", "[P_i*,P_j*]", "[P_i,P_j*]"]
    expected = i * (-1) ** (i - 1) if i == j else 0
    assert report.families[2]["expected_scalar"] == expected


@pytest.mark.parametrize("i", range(1, 4))
def test_commutator_on_explicit_vector(i):
    v = fock([2, 1, 1])
    lhs = create(i, annihilate(i, v)) - annihilate(i, create(i, v))
    assert lhs == v * (i * (-1) ** (i - 1))


@given(fock_vectors(max_degree=CAP - 3), fock_vectors(), st.integers(1, 3))
def test_twisted_adjoint(x, y, i):
    assert twisted_form(create(i, x), y) == twisted_form(x, annihilate(i, y))


@given(fock_vectors(max_degree=CAP - 3), fock_vectors(), st.integers(1, 3))
def test_positive_adjoint_is_unsigned_removal(x, y, i):
    assert positive_form(create(i, x), y) == positive_form(x, unsigned_removal(i, y))


@given(fock_vectors())
def test_positive_form_is_positive(x):
    assert positive_form(x, x) >= 0
    assert (positive_form(x, x) == 0) == x.is_zero()


def test_forms_differ_by_degree_sign():
    x = fock([2, 1])
    assert twisted_form(x, x) == -positive_form(x, x) == Fraction(-2)


def test_basis_vectors_count():
    assert len(basis_vectors(5)) == 1 + 1 + 2 + 3 + 5 + 7
    assert len(basis_vectors(5, 2)) == 4


def test_report_json_shape():
    data = commutator_check(1, 1, 4).to_json()
    assert data["status"] == "pass" and data["first_failure"] is None
    assert {f["family"] for f in data["families"]} == {"[P_i,P_j]", "[P_i*,P_j*]", "[P_i,P_j*]"}
