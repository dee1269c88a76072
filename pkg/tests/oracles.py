"""Independent reference implementations used only by the tests.

Nothing here imports the library; each oracle recomputes its answer from
first principles (brute enumeration, explicit polynomials, explicit
permutations) so agreement with the library is meaningful.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from itertools import permutations
from math import factorial


def brute_partitions(n: int) -> set[tuple[int, ...]]:
    """All partitions of n, from compositions."""
    if n == 0:
        return {()}
    out = set()
    for first in range(1, n + 1):
        for rest in brute_partitions(n - first):
            out.add(tuple(sorted((first,) + rest, reverse=True)))
    return out


def euler_product_coefficients(n: int) -> list[int]:
    """Coefficients of t^n q^k, k = 0..n-1, in prod_{i>=1} (1 - t^i q^(i-1))^(-1)."""
    series = {(0, 0): 1}
    for i in range(1, n + 1):
        nxt = defaultdict(int)
        for (a, b), v in series.items():
            e = 0
            while a + e * i <= n:
                nxt[a + e * i, b + e * (i - 1)] += v
                e += 1
        series = nxt
    return [series.get((n, k), 0) for k in range(max(n, 1))]


def centralizer_order(lam) -> int:
    out = 1
    for part, mult in Counter(lam).items():
        out *= part ** mult * factorial(mult)
    return out


# -- symmetric polynomials in N variables, as {exponent tuple: coefficient}

def poly_mul(a: dict, b: dict) -> dict:
    out = defaultdict(int)
    for ea, va in a.items():
        for eb, vb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += va * vb
    return {e: v for e, v in out.items() if v}


def monomial_polynomial(lam, nvars: int) -> dict:
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return {e: 1 for e in set(permutations(padded))}


def power_sum_polynomial(k: int, nvars: int) -> dict:
    return {tuple(k if j == r else 0 for j in range(nvars)): 1 for r in range(nvars)}


def monomial_coefficients(poly: dict) -> dict[tuple[int, ...], int]:
    """Expand a symmetric polynomial in the monomial basis (read off sorted exponents)."""
    return {tuple(p for p in e if p): v for e, v in poly.items() if list(e) == sorted(e, reverse=True)}


def power_sum_times_monomial(i: int, lam, nvars: int) -> dict[tuple[int, ...], int]:
    return monomial_coefficients(poly_mul(power_sum_polynomial(i, nvars), monomial_polynomial(lam, nvars)))


def frobenius_character(lam, mu) -> int:
    """chi^lam(mu) as the coefficient of x^(lam + delta) in a_delta * p_mu."""
    nvars = max(len(lam), 1)
    p = {(0,) * nvars: 1}
    for part in mu:
        p = poly_mul(p, power_sum_polynomial(part, nvars))
    delta = list(range(nvars - 1, -1, -1))
    target = [(lam[j] if j < len(lam) else 0) + delta[j] for j in range(nvars)]
    total = 0
    for perm in permutations(range(nvars)):
        inversions = sum(1 for a in range(nvars) for b in range(a + 1, nvars) if perm[a] > perm[b])
        exp = tuple(target[j] - delta[perm[j]] for j in range(nvars))
        if min(exp) >= 0:
            total += (-1) ** inversions * p.get(exp, 0)
    return total


# -- explicit permutations

def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        k, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def class_sum_product(n: int, lam, mu) -> dict[tuple[int, ...], Fraction]:
    """c_lam . c_mu in c coordinates, where c_lam = z_lam * (sum of permutations of type lam)."""
    perms = list(permutations(range(n)))
    A = [p for p in perms if cycle_type(p) == tuple(lam)]
    B = [p for p in perms if cycle_type(p) == tuple(mu)]
    counts = Counter(cycle_type(tuple(a[b[x]] for x in range(n))) for a in A for b in B)
    scale = centralizer_order(lam) * centralizer_order(mu)
    # each class of type nu appears counts[nu] / |class nu| times per element
    out = {}
    for nu, cnt in counts.items():
        class_size = factorial(n) // centralizer_order(nu)
        out[nu] = Fraction(scale * cnt, class_size * centralizer_order(nu))
    return out
