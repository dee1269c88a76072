"""Integer partitions: enumeration, hooks, multiplicities, dominance and the
part-exchange rule used for multiplying monomials by power sums.

Partitions are stored with weakly decreasing parts.  Every partition-indexed
vector in the package uses the order returned by :func:`enumerate_partitions`
(reverse lexicographic, so ``(n)`` comes first and ``(1, ..., 1)`` last).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import InputError, InvariantViolation


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    ``Partition([1, 2])`` is rejected; use :meth:`from_parts` to sort.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p <= 0:
                raise InputError(f"partition parts must be positive integers: {parts!r}")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise InputError(f"partition parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to ``i``; by convention infinite for ``i == 0``."""
        if i == 0:
            raise ValueError("multiplicity of 0 is infinite by convention")
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def remove_part(self, k: int) -> "Partition":
        parts = list(self)
        parts.remove(k)
        return Partition(parts)

    def add_part(self, k: int) -> "Partition":
        return Partition.from_parts(self + (k,))

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition.from_parts(tuple(self) + tuple(other))

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def as_partition(parts: Iterable[int]) -> Partition:
    if isinstance(parts, Partition):
        return parts
    return Partition(parts)


def _generate(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_tuple(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _generate(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"n must be a nonnegative integer, got {n!r}")
    return list(_partitions_tuple(n))


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict[Partition, int]:
    return {lam: k for k, lam in enumerate(_partitions_tuple(n))}


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths ``arm + leg + 1`` of every cell, row by row (English convention)."""
    conj = Partition(lam).conjugate()
    return [
        (row_len - col - 1) + (conj[col] - row - 1) + 1
        for row, row_len in enumerate(lam)
        for col in range(row_len)
    ]


def hook_product(lam: Partition) -> int:
    return prod(hook_lengths(lam))


def z(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``lam``."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (all partial sums of ``mu`` are at most those of ``lam``)."""
    if sum(mu) != sum(lam):
        raise InputError(f"dominance compares partitions of equal size, got {mu} and {lam}")
    s_mu = s_lam = 0
    for k in range(max(len(mu), len(lam))):
        s_mu += mu[k] if k < len(mu) else 0
        s_lam += lam[k] if k < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def pi_set(lam: Partition, i: int) -> list[tuple[Partition, int]]:
    """Partitions reachable from ``lam`` by trading one part ``k`` for a part ``i + k``.

    ``k = 0`` means a fresh part ``i`` is appended (it is always allowed).  Each
    result is paired with the multiplicity of ``i + k`` in the new partition,
    which is the coefficient of ``m_mu`` in ``p_i * m_lam``.  Results follow the
    canonical order of partitions of ``|lam| + i``.
    """
    lam = as_partition(lam)
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise InputError(f"i must be a positive integer, got {i!r}")
    found: dict[Partition, tuple[int, int]] = {}
    for k in [0] + sorted(set(lam)):
        mu = lam.add_part(i) if k == 0 else lam.remove_part(k).add_part(i + k)
        if mu in found:
            raise InvariantViolation(
                f"pi_set({lam}, {i}): {mu} reached from k={found[mu][0]} and k={k}"
            )
        found[mu] = (k, mu.count(i + k))
    index = partition_index(lam.size + i)
    return sorted(((mu, a) for mu, (_, a) in found.items()), key=lambda t: index[t[0]])


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
