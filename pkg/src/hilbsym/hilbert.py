"""Cohomology of the Hilbert scheme of points on the plane, modelled on Z_n.

The middle-degree equivariant cohomology with its ``star`` product is Z_n with
the group-algebra product; the torus-fixed-point classes go to the irreducible
characters ``s_lam``.  Filtering Z_n by ``n - length(lam)`` on the ``c`` basis
and taking the associated graded ring gives the ordinary cohomology ring, with
``Gr_p`` sitting in cohomological degree ``2p``.  The equivariant parameter
never appears: degrees are tracked directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
import os
from pathlib import Path
from typing import Hashable, Mapping, Optional

from .cache import read_json_checked, write_json_atomic
from .center import CenterElement, c_coords, convolution_product, scalar_product
from .errors import CacheCorruptionError, InputError, InvariantViolation
from .partitions import Partition, as_partition, enumerate_partitions, hook_lengths, hook_product


def star_product(x: CenterElement, y: CenterElement) -> CenterElement:
    """Product on middle cohomology; identical to :func:`convolution_product`."""
    return convolution_product(x, y)


def fixed_point_class(lam) -> CenterElement:
    """Image of the fixed-point class attached to ``lam`` (the character ``s_lam``)."""
    return CenterElement.basis_element("s", as_partition(lam))


def filtration_degree(lam) -> int:
    lam = as_partition(lam)
    return lam.size - lam.length


def betti_numbers(n: int) -> list[int]:
    """Even Betti numbers ``[b_0, b_2, ..., b_{2(n-1)}]``; odd ones vanish."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"n must be a nonnegative integer, got {n!r}")
    out = [0] * max(n, 1)
    for lam in enumerate_partitions(n):
        out[filtration_degree(lam)] += 1
    return out


def euler_product_dims(max_n: int) -> dict[int, list[int]]:
    """Coefficients of ``t^n q^k`` in ``prod_{i>=1} 1/(1 - t^i q^(i-1))`` for ``n <= max_n``."""
    series = {(0, 0): 1}
    for i in range(1, max_n + 1):
        new = dict(series)
        # multiply by the geometric series in t^i q^(i-1), ascending in n so repeats accumulate
        for n in range(i, max_n + 1):
            for k in range(0, n):
                prev = new.get((n - i, k - (i - 1)), 0) if k >= i - 1 else 0
                if prev:
                    new[n, k] = new.get((n, k), 0) + prev
        series = new
    out = {}
    for n in range(max_n + 1):
        dims = [series.get((n, k), 0) for k in range(max(n, 1))]
        out[n] = dims
    return out


@dataclass(frozen=True)
class LocalizationData:
    partition: Partition
    hook_product: int
    euler_scalar: int
    tangent_weights: tuple[int, ...]

    def to_json(self) -> dict:
        return {"partition": list(self.partition), "hook_product": self.hook_product,
                "euler_scalar": self.euler_scalar, "tangent_weights": list(self.tangent_weights)}


def localization_data(n: int) -> dict[Partition, LocalizationData]:
    """Tangent weights ``{+h(s), -h(s)}`` and Euler scalar ``(-1)^n h(lam)^2`` at each fixed point."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"n must be a nonnegative integer, got {n!r}")
    out = {}
    for lam in enumerate_partitions(n):
        hooks = hook_lengths(lam)
        weights = tuple(sorted(hooks + [-x for x in hooks], reverse=True))
        hp = hook_product(lam)
        out[lam] = LocalizationData(lam, hp, (-1) ** n * hp * hp, weights)
    return out


def check_localization(n: int) -> list[str]:
    """Problems found in the localization table of degree ``n`` (empty list means consistent)."""
    problems = []
    data = localization_data(n)
    for lam, d in data.items():
        if len(d.tangent_weights) != 2 * n:
            problems.append(f"{lam}: {len(d.tangent_weights)} weights, expected {2 * n}")
        if sorted(d.tangent_weights) != sorted(-w for w in d.tangent_weights):
            problems.append(f"{lam}: weights not closed under negation")
        positive = 1
        for w in d.tangent_weights:
            if w > 0:
                positive *= w
        if d.euler_scalar != (-1) ** n * positive**2:
            problems.append(f"{lam}: Euler scalar {d.euler_scalar} != (-1)^n * {positive}^2")
        for mu in data:
            want = 1 if mu == lam else 0
            if scalar_product(fixed_point_class(lam), fixed_point_class(mu)) != want:
                problems.append(f"fixed-point classes {lam}, {mu} not orthonormal")
    return problems


@dataclass(frozen=True, eq=False)
class GradedRing:
    """Associated graded ring of a filtered commutative algebra with a distinguished basis.

    ``constants[(a, b)]`` maps basis labels to nonzero coefficients of the
    top-degree part of ``a * b``.
    """

    labels: tuple[Hashable, ...]
    degrees: Mapping[Hashable, int]
    constants: Mapping[tuple, Mapping[Hashable, Fraction]] = field(repr=False)

    def product(self, a, b) -> dict:
        return dict(self.constants.get((a, b), {}))

    def multiply(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for a, u in x.items():
            for b, v in y.items():
                for c_, g in self.constants.get((a, b), {}).items():
                    out[c_] = out.get(c_, 0) + u * v * g
        return {k: v for k, v in out.items() if v}

    def dims(self) -> list[int]:
        top = max(self.degrees.values(), default=0)
        out = [0] * (top + 1)
        for a in self.labels:
            out[self.degrees[a]] += 1
        return out

    def is_graded(self) -> bool:
        return all(self.degrees[c_] == self.degrees[a] + self.degrees[b]
                   for (a, b), row in self.constants.items() for c_ in row)

    def is_commutative(self) -> bool:
        return all(self.product(a, b) == self.product(b, a) for a, b in product(self.labels, repeat=2))

    def is_associative(self) -> bool:
        for a, b, c_ in product(self.labels, repeat=3):
            left = self.multiply(self.product(a, b), {c_: 1})
            right = self.multiply({a: 1}, self.product(b, c_))
            if left != right:
                return False
        return True

    def scalar_action(self, a) -> Optional[Fraction]:
        """The scalar by which ``a`` acts, if it acts as a multiple of the identity."""
        scalar = None
        for b in self.labels:
            got = self.product(a, b)
            if set(got) - {b}:
                return None
            value = got.get(b, Fraction(0))
            if scalar is None:
                scalar = value
            elif value != scalar:
                return None
        return scalar

    def triples(self) -> list[tuple]:
        return [(a, b, c_, g) for (a, b), row in self.constants.items() for c_, g in row.items()]


@lru_cache(maxsize=None)
def graded_ring(n: int) -> GradedRing:
    """``Gr^F`` of Z_n for the length filtration, on the ``c`` basis.

    Every product ``c_lam . c_mu`` is computed in full; a component of degree
    above ``deg(lam) + deg(mu)`` would break the filtration and raises
    :class:`InvariantViolation`.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"n must be a nonnegative integer, got {n!r}")
    parts = tuple(enumerate_partitions(n))
    degrees = {lam: filtration_degree(lam) for lam in parts}
    constants = {}
    for lam in parts:
        for mu in parts:
            full = c_coords(convolution_product(CenterElement.basis_element("c", lam),
                                                CenterElement.basis_element("c", mu)))
            target = degrees[lam] + degrees[mu]
            bad = [nu for nu in full if degrees[nu] > target]
            if bad:
                raise InvariantViolation(
                    f"c{list(lam)} . c{list(mu)} has components {bad} above filtration degree {target}")
            top = {nu: g for nu, g in full.items() if degrees[nu] == target}
            if top:
                constants[lam, mu] = top
    return GradedRing(labels=parts, degrees=degrees, constants=constants)


GRADED_FORMAT = "hilbsym-graded-ring"
GRADED_VERSION = 1


def graded_ring_payload(ring: GradedRing, n: int) -> dict:
    triples = [[list(a), list(b), list(c_), f"{g.numerator}/{g.denominator}"]
               for a, b, c_, g in ring.triples()]
    return {"format": GRADED_FORMAT, "version": GRADED_VERSION, "n": n,
            "partitions": [list(p) for p in ring.labels], "triples": sorted(triples)}


def cached_graded_ring(n: int, cache_dir: Optional[os.PathLike] = None) -> GradedRing:
    """:func:`graded_ring`, persisted as ``graded-<n>.json`` next to the character tables."""
    if cache_dir is None:
        return graded_ring(n)
    path = Path(cache_dir) / f"graded-{n}.json"
    if not path.exists():
        ring = graded_ring(n)
        write_json_atomic(path, graded_ring_payload(ring, n))
        return ring
    data = read_json_checked(path, GRADED_FORMAT, GRADED_VERSION)
    try:
        parts = tuple(Partition(p) for p in data["partitions"])
        if data["n"] != n or list(parts) != enumerate_partitions(n):
            raise CacheCorruptionError(f"{path}: partition list does not match n={n}")
        constants: dict = {}
        for a, b, c_, g in data["triples"]:
            constants.setdefault((Partition(a), Partition(b)), {})[Partition(c_)] = Fraction(g)
    except (KeyError, ValueError, TypeError) as exc:
        raise CacheCorruptionError(f"{path}: malformed graded ring") from exc
    return GradedRing(labels=parts, degrees={lam: filtration_degree(lam) for lam in parts},
                      constants=constants)
