"""Small exact dense linear algebra over Q and cyclotomic fields.

Matrices are tuples of row tuples; entries are ``Fraction`` or
:class:`~hilbsym.cyclotomic.Cyclotomic`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Sequence

Matrix = tuple


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
                 for row in a)


def transpose(a: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*a))


def subtract(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _is_rational(a: Sequence[Sequence]) -> bool:
    return all(isinstance(x, Rational) for row in a for x in row)


def bareiss_rank(a: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank, prev = 0, 1
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, rows):
            f = m[r][col]
            for k in range(col, cols):
                m[r][k] = (p * m[r][k] - f * m[rank][k]) // prev
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def _field_rank(a: Sequence[Sequence]) -> int:
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        for r in range(rank + 1, rows):
            f = m[r][col]
            if f != 0:
                f = f * inv
                for k in range(col, cols):
                    m[r][k] = m[r][k] - f * m[rank][k]
        rank += 1
    return rank


def rank(a: Sequence[Sequence]) -> int:
    """Exact rank.  Rational input is scaled to integers and eliminated fraction-free."""
    if not a:
        return 0
    if _is_rational(a):
        ints = []
        for row in a:
            row = [Fraction(x) for x in row]
            scale = lcm(*(x.denominator for x in row)) if row else 1
            ints.append([int(x * scale) for x in row])
        return bareiss_rank(ints)
    return _field_rank(a)


def inverse(a: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse; raises ``ZeroDivisionError`` when singular."""
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)
