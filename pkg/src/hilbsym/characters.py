"""Irreducible characters of symmetric groups by the Murnaghan-Nakayama rule.

Tables can be persisted to disk.  A cache file is JSON with the layout::

    {
      "format": "hilbsym-character-table",
      "version": 1,
      "n": 3,
      "partitions": [[3], [2, 1], [1, 1, 1]],
      "values": [1, 1, 1, -1, 0, 2, 1, -1, 1],      # row-major, rows = characters
      "checksum": "<sha256 hex>"
    }

The checksum is the SHA-256 of the canonical JSON (sorted keys, no spaces) of
every other field.  Files are written to a temporary name and renamed into place.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .cache import checksum, read_json_checked, write_json_atomic
from .errors import CacheCorruptionError, CapExceededError, InputError
from .partitions import Partition, as_partition, enumerate_partitions, partition_index

log = logging.getLogger(__name__)

CACHE_FORMAT = "hilbsym-character-table"
CACHE_VERSION = 1
DEFAULT_MAX_N = 20


def _beta_set(lam: tuple[int, ...]) -> list[int]:
    l = len(lam)
    return [lam[j] + (l - 1 - j) for j in range(l)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    l = len(beta)
    return Partition(p for p in (beta[j] - (l - 1 - j) for j in range(l)) if p > 0)


def rim_hooks(lam: Partition, r: int) -> list[tuple[Partition, int]]:
    """Shapes left after removing a border strip of size ``r``, with the strip's height."""
    beta = _beta_set(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        rest = [c for c in beta if c != b] + [target]
        out.append((_from_beta(rest), height))
    return out


@dataclass
class _MNEvaluator:
    memo: dict = field(default_factory=dict)

    def value(self, lam: Partition, mu: tuple[int, ...]) -> int:
        if not mu:
            return 1 if not lam else 0
        key = (lam, mu)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        r, rest = mu[0], mu[1:]
        total = 0
        for shape, height in rim_hooks(lam, r):
            v = self.value(shape, rest)
            total += -v if height % 2 else v
        self.memo[key] = total
        return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """The character value chi^lam at a permutation of cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise InputError(f"character of {lam} evaluated on class {mu} of a different degree")
    return _MNEvaluator().value(lam, tuple(mu))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    version: int = CACHE_VERSION

    def __call__(self, lam, mu) -> int:
        index = partition_index(self.n)
        return self.values[index[as_partition(lam)]][index[as_partition(mu)]]

    def row(self, lam) -> tuple[int, ...]:
        return self.values[partition_index(self.n)[as_partition(lam)]]

    def column(self, mu) -> tuple[int, ...]:
        k = partition_index(self.n)[as_partition(mu)]
        return tuple(r[k] for r in self.values)

    @property
    def checksum(self) -> str:
        return checksum(_payload(self))

    def to_json(self) -> dict:
        payload = _payload(self)
        payload["checksum"] = checksum(payload)
        return payload


def _payload(table: CharacterTable) -> dict:
    return {
        "format": CACHE_FORMAT,
        "version": table.version,
        "n": table.n,
        "partitions": [list(p) for p in table.partitions],
        "values": [v for row in table.values for v in row],
    }


def compute_character_table(n: int) -> CharacterTable:
    parts = tuple(enumerate_partitions(n))
    evaluator = _MNEvaluator()
    values = tuple(tuple(evaluator.value(lam, tuple(mu)) for mu in parts) for lam in parts)
    return CharacterTable(n=n, partitions=parts, values=values)


def cache_path(cache_dir: Path, n: int) -> Path:
    return Path(cache_dir) / f"chartable-{n}.json"


def load_cached_table(path: Path, n: int) -> CharacterTable:
    """Read and validate a cache file; any defect raises :class:`CacheCorruptionError`."""
    data = read_json_checked(path, CACHE_FORMAT, CACHE_VERSION)
    expected = enumerate_partitions(n)
    try:
        parts = tuple(Partition(p) for p in data["partitions"])
        flat = data["values"]
        ok = data["n"] == n and list(parts) == expected and len(flat) == len(parts) ** 2
    except (KeyError, InputError, TypeError) as exc:
        raise CacheCorruptionError(f"{path}: malformed table") from exc
    if not ok or not all(isinstance(v, int) for v in flat):
        raise CacheCorruptionError(f"{path}: table shape does not match n={n}")
    k = len(parts)
    values = tuple(tuple(flat[r * k:(r + 1) * k]) for r in range(k))
    return CharacterTable(n=n, partitions=parts, values=values)


def write_cached_table(path: Path, table: CharacterTable) -> None:
    write_json_atomic(path, _payload(table))


@lru_cache(maxsize=64)
def _in_memory_table(n: int) -> CharacterTable:
    return compute_character_table(n)


def character_table(
    n: int,
    cache_dir: Optional[os.PathLike] = None,
    *,
    use_cache: bool = True,
    max_n: int = DEFAULT_MAX_N,
) -> CharacterTable:
    """Full character table of S_n, read from ``cache_dir`` when a valid file exists.

    Without ``cache_dir`` the table lives only in a process-wide memo.  A
    corrupt cache file raises :class:`CacheCorruptionError` rather than being
    silently recomputed.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"n must be a nonnegative integer, got {n!r}")
    if n > max_n:
        raise CapExceededError(f"n={n} exceeds the configured maximum {max_n}")
    if cache_dir is None or not use_cache:
        return _in_memory_table(n)
    path = cache_path(Path(cache_dir), n)
    if path.exists():
        log.debug("loading character table n=%d from %s", n, path)
        return load_cached_table(path, n)
    table = _in_memory_table(n)
    write_cached_table(path, table)
    return table
