"""Invariant suites behind the ``verify`` and ``hilb verify`` commands.

Each suite returns a list of ``{"name", "passed", "detail"}`` records.  An
exception raised inside a check is recorded as a failure of that check.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial
from typing import Callable

from .center import (
    CenterElement,
    brute_force_convolution,
    c_coords,
    convolution_product,
    induction_product,
    scalar_product,
    BRUTE_FORCE_MAX_N,
)
from .characters import character_table
from .errors import HilbsymError
from .fock import FockElement, commutator_check, vacuum_build
from .hilbert import (
    betti_numbers,
    check_localization,
    euler_product_dims,
    graded_ring,
    star_product,
)
from .partitions import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    hook_product,
    partition_count,
    pi_set,
    z,
)
from .quotient import (
    age_consistency_check,
    class_w_profile,
    check_w_values,
    enumerate_group,
    subadditivity_check,
    symmetric_group_agreement,
    symmetric_group_spec,
)

MAX_GROUP_DEGREE = 7


def _run(name: str, fn: Callable[[], object]) -> dict:
    try:
        result = fn()
    except HilbsymError as exc:
        return {"name": name, "passed": False, "detail": f"{type(exc).__name__}: {exc}"}
    if isinstance(result, tuple):
        ok, detail = result
    else:
        ok, detail = bool(result), None
    return {"name": name, "passed": ok, "detail": detail}


def _first_bad(items, pred):
    for item in items:
        if not pred(item):
            return False, f"fails at {item!r}"
    return True, None


def _basis(basis: str, lam) -> CenterElement:
    return CenterElement.basis_element(basis, lam)


def partitions_suite(n: int) -> list[dict]:
    P = enumerate_partitions(n)
    return [
        _run("partition_count", lambda: (len(P) == partition_count(n), f"{len(P)} partitions")),
        _run("hook_dimension_integral", lambda: _first_bad(P, lambda l: factorial(n) % hook_product(l) == 0)),
        _run("sum_of_squared_dimensions",
             lambda: sum((factorial(n) // hook_product(l)) ** 2 for l in P) == factorial(n)),
        _run("inverse_centralizer_sum", lambda: sum(Fraction(1, z(l)) for l in P) == 1),
        _run("pi_set_sizes", lambda: _first_bad(
            [(l, i) for l in P for i in range(1, 4)],
            lambda t: all(mu.size == n + t[1] for mu, _ in pi_set(*t)))),
    ]


def characters_suite(n: int) -> list[dict]:
    T = character_table(n)
    P = list(T.partitions)
    k = len(P)

    def rows():
        for a in range(k):
            for b in range(k):
                s = sum(Fraction(T.values[a][c] * T.values[b][c], z(P[c])) for c in range(k))
                if s != (a == b):
                    return False, f"rows {P[a]}, {P[b]}"
        return True

    def cols():
        for a in range(k):
            for b in range(k):
                s = sum(T.values[r][a] * T.values[r][b] for r in range(k))
                if s != (z(P[a]) if a == b else 0):
                    return False, f"columns {P[a]}, {P[b]}"
        return True

    identity = Partition([1] * n)
    return [
        _run("row_orthogonality", rows),
        _run("column_orthogonality", cols),
        _run("hook_dimension", lambda: _first_bad(
            P, lambda l: T(l, identity) * hook_product(l) == factorial(n))),
    ]


def center_suite(n: int) -> list[dict]:
    P = enumerate_partitions(n)

    def first_identity():
        for k in range(0, n):
            for lam in enumerate_partitions(k):
                for i in range(1, n - k + 1):
                    got = induction_product(_basis("c", [i]), _basis("m", lam)).to("m")
                    want = CenterElement(k + i, dict(pi_set(lam, i)), "m")
                    if got != want:
                        return False, f"lambda={list(lam)}, i={i}"
        return True

    def diagonal_product():
        for lam in P:
            for mu in P:
                got = convolution_product(_basis("s", lam).to("c"), _basis("s", mu).to("c")).to("s")
                want = _basis("s", lam) * hook_product(lam) if lam == mu else CenterElement.zero(n, "s")
                if got != want:
                    return False, f"s{list(lam)} . s{list(mu)}"
        return True

    def brute_force():
        if n > min(BRUTE_FORCE_MAX_N, 6):
            return True, "skipped above n=6"
        for lam in P:
            for mu in P:
                x, y = _basis("c", lam), _basis("c", mu)
                if convolution_product(x, y) != brute_force_convolution(x, y):
                    return False, f"c{list(lam)} . c{list(mu)}"
        return True

    def gram():
        return _first_bad([(a, b) for a in P for b in P], lambda t: scalar_product(
            _basis("c", t[0]), _basis("c", t[1])) == (z(t[0]) if t[0] == t[1] else 0))

    def schur_orthonormal():
        return _first_bad([(a, b) for a in P for b in P], lambda t: scalar_product(
            _basis("s", t[0]), _basis("s", t[1])) == (t[0] == t[1]))

    def duality():
        return _first_bad([(a, b) for a in P for b in P], lambda t: scalar_product(
            _basis("h", t[0]), _basis("m", t[1])) == (t[0] == t[1]))

    def unitriangular():
        for lam in P:
            x = _basis("s", lam).to("m")
            if x[lam] != 1:
                return False, f"s{list(lam)} has diagonal {x[lam]}"
            for mu in x.coords:
                if mu != lam and not dominance_leq(mu, lam):
                    return False, f"s{list(lam)} has term m{list(mu)} not below it in dominance"
        return True

    def round_trip():
        for basis in ("s", "h", "m"):
            for other in ("c", "s", "h", "m"):
                for lam in P:
                    x = _basis(basis, lam)
                    if x.to(other).to(basis).coords != x.coords:
                        return False, f"{basis}{list(lam)} via {other}"
        return True

    return [
        _run("induction_by_power_sum_on_monomials", first_identity),
        _run("schur_diagonal_product", diagonal_product),
        _run("convolution_matches_brute_force", brute_force),
        _run("c_gram_matrix_is_diag_z", gram),
        _run("schur_orthonormal", schur_orthonormal),
        _run("h_m_duality", duality),
        _run("schur_monomial_unitriangular_lower", unitriangular),
        _run("basis_round_trip", round_trip),
    ]


def fock_suite(n: int) -> list[dict]:
    cap = max(n, 2)
    top = min(4, cap)
    out = []
    for i in range(1, top + 1):
        for j in range(1, top + 1):
            if i + j <= cap:
                out.append(_run(f"commutators_{i}_{j}", lambda i=i, j=j: (
                    commutator_check(i, j, cap).passed, None)))

    def vacuum():
        for k in range(cap + 1):
            for lam in enumerate_partitions(k):
                if vacuum_build(lam, cap) != FockElement.from_center(_basis("c", lam), cap):
                    return False, f"{list(lam)}"
        return True

    out.append(_run("vacuum_build_is_c_basis", vacuum))
    return out


def hilbert_suite(n: int) -> list[dict]:
    def ring_checks():
        G = graded_ring(n)
        if not G.is_graded():
            return False, "not graded"
        if not G.is_commutative():
            return False, "not commutative"
        if n <= 8 and not G.is_associative():
            return False, "not associative"
        if G.scalar_action(Partition([1] * n)) != factorial(n):
            return False, "c_(1^n) does not act as n! * id"
        return True, None if n <= 8 else "associativity skipped above n=8"

    def star_diagonal():
        P = enumerate_partitions(n)
        for lam in P:
            for mu in P:
                prod = star_product(_basis("c", lam), _basis("c", mu)).to("s")
                xs, ys = _basis("c", lam).to("s"), _basis("c", mu).to("s")
                for rho in P:
                    if prod[rho] != xs[rho] * ys[rho] * hook_product(rho):
                        return False, f"c{list(lam)} * c{list(mu)} at s{list(rho)}"
        return True

    return [
        _run("betti_matches_euler_product", lambda: betti_numbers(n) == euler_product_dims(n)[n]),
        _run("graded_ring_properties", ring_checks),
        _run("graded_dims_match_betti", lambda: graded_ring(n).dims() == betti_numbers(n)),
        _run("top_class_unique", lambda: n == 0 or betti_numbers(n)[-1] == 1),
        _run("star_product_diagonal_on_schur", star_diagonal),
        _run("localization_consistent", lambda: (not check_localization(n), None)),
    ]


def quotient_suite(n: int) -> list[dict]:
    if n > MAX_GROUP_DEGREE:
        return [{"name": "quotient_symmetric_group", "passed": True,
                 "detail": f"skipped above degree {MAX_GROUP_DEGREE}"}]
    data = class_w_profile(enumerate_group(symmetric_group_spec(n)))
    return [
        _run("w_values", lambda: check_w_values(data).passed),
        _run("subadditivity", lambda: subadditivity_check(data).passed),
        _run("age_is_half_w", lambda: age_consistency_check(data).passed),
        _run("symmetric_group_matches_hilbert", lambda: symmetric_group_agreement(n).passed),
    ]


SUITES = {
    "partitions": partitions_suite,
    "characters": characters_suite,
    "center": center_suite,
    "fock": fock_suite,
    "hilbert": hilbert_suite,
    "quotient": quotient_suite,
}


def _run_suite(args: tuple[str, int]) -> tuple[str, list[dict]]:
    name, n = args
    return name, SUITES[name](n)


def run_suites(n: int, names=None, jobs: int = 1) -> dict[str, list[dict]]:
    """Run the named suites (all by default); results keep the suite order regardless of ``jobs``."""
    names = list(SUITES) if names is None else list(names)
    work = [(name, n) for name in names]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_suite, work))
    else:
        results = [_run_suite(w) for w in work]
    return dict(results)


def all_passed(results: dict[str, list[dict]]) -> bool:
    return all(check["passed"] for checks in results.values() for check in checks)
