"""The center Z_n of the group algebra of S_n in symmetric-function coordinates.

Coordinates are chosen so that the basis vector ``c_lam`` is the power sum
``p_lam``.  Inside the group algebra this is ``z_lam`` times the sum of the
permutations of cycle type ``lam``.  With that normalization:

* ``s_lam`` is the irreducible character, i.e. the Schur function;
* ``h_lam`` is the character of the permutation module on cosets of the
  Young subgroup, i.e. the complete homogeneous function;
* ``m_lam`` is the basis dual to ``h`` (monomial functions);
* the induction product is multiplication of symmetric functions;
* the group-algebra product is diagonal on the ``s`` basis with eigenvalue
  the hook product;
* the scalar product has ``(c_lam | c_mu) = delta * z_lam``.

Basis ``"p"`` is accepted as an alias of ``"c"``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from numbers import Rational
from typing import Iterable, Mapping

from .characters import character_table
from .errors import CapExceededError, DegreeMismatchError, InputError, InvariantViolation
from .partitions import (
    Partition,
    as_partition,
    enumerate_partitions,
    hook_product,
    partition_index,
    pi_set,
    z,
)

BASES = ("c", "s", "h", "m")
_ALIASES = {"p": "c"}
BRUTE_FORCE_MAX_N = 7

Coords = dict  # Partition -> Fraction


def normalize_basis(basis: str) -> str:
    basis = _ALIASES.get(basis, basis)
    if basis not in BASES:
        raise InputError(f"unknown basis {basis!r}; expected one of c, s, h, m, p")
    return basis


@dataclass(frozen=True, eq=False)
class CenterElement:
    """An element of Z_n with exact rational coordinates in a named basis."""

    n: int
    coords: Mapping[Partition, Fraction]
    basis: str = "c"

    def __post_init__(self):
        clean = {}
        for lam, v in dict(self.coords).items():
            lam = as_partition(lam)
            if lam.size != self.n:
                raise DegreeMismatchError(f"{lam} is not a partition of {self.n}")
            v = Fraction(v)
            if v:
                clean[lam] = clean.get(lam, 0) + v
        index = partition_index(self.n)
        ordered = {lam: clean[lam] for lam in sorted(clean, key=index.__getitem__) if clean[lam]}
        object.__setattr__(self, "coords", ordered)
        object.__setattr__(self, "basis", normalize_basis(self.basis))

    @classmethod
    def basis_element(cls, basis: str, parts: Iterable[int]) -> "CenterElement":
        lam = Partition(parts)
        return cls(lam.size, {lam: Fraction(1)}, basis)

    @classmethod
    def zero(cls, n: int, basis: str = "c") -> "CenterElement":
        return cls(n, {}, basis)

    def __getitem__(self, lam) -> Fraction:
        return self.coords.get(as_partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coords

    def to(self, basis: str) -> "CenterElement":
        return to_basis(self, basis)

    def _check_compatible(self, other: "CenterElement") -> "CenterElement":
        if not isinstance(other, CenterElement):
            raise TypeError(f"expected CenterElement, got {type(other).__name__}")
        if other.n != self.n:
            raise DegreeMismatchError(f"degrees differ: {self.n} vs {other.n}")
        return other.to(self.basis)

    def __add__(self, other):
        if not isinstance(other, CenterElement):
            return NotImplemented
        other = self._check_compatible(other)
        out = dict(self.coords)
        for lam, v in other.coords.items():
            out[lam] = out.get(lam, 0) + v
        return CenterElement(self.n, out, self.basis)

    def __neg__(self):
        return CenterElement(self.n, {k: -v for k, v in self.coords.items()}, self.basis)

    def __sub__(self, other):
        if not isinstance(other, CenterElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        return CenterElement(self.n, {k: v * scalar for k, v in self.coords.items()}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CenterElement):
            return NotImplemented
        if other.n != self.n:
            return False
        return dict(other.to(self.basis).coords) == dict(self.coords)

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "coords": [[list(lam), _fraction_str(v)] for lam, v in self.coords.items()],
        }

    def __repr__(self) -> str:
        if not self.coords:
            return f"0 in Z_{self.n}"
        terms = [f"{_fraction_str(v)}*{self.basis}{list(lam)}" for lam, v in self.coords.items()]
        return " + ".join(terms)


def _fraction_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def c(*parts: int) -> CenterElement:
    return CenterElement.basis_element("c", parts)


def s(*parts: int) -> CenterElement:
    return CenterElement.basis_element("s", parts)


def h(*parts: int) -> CenterElement:
    return CenterElement.basis_element("h", parts)


def m(*parts: int) -> CenterElement:
    return CenterElement.basis_element("m", parts)


# ---------------------------------------------------------------------------
# raw coordinate helpers (dicts keyed by Partition)


def _add_into(acc: dict, vec: Mapping, scale) -> None:
    for lam, v in vec.items():
        acc[lam] = acc.get(lam, 0) + scale * v


def _induce_c(x: Mapping, y: Mapping) -> dict:
    out: dict = {}
    for lam, a in x.items():
        for mu, b in y.items():
            key = lam.union(mu)
            out[key] = out.get(key, 0) + a * b
    return {k: v for k, v in out.items() if v}


def _p_times_m(i: int, y: Mapping) -> dict:
    """Multiply a monomial-basis vector by the power sum ``p_i`` using ``pi_set``."""
    out: dict = {}
    for lam, coeff in y.items():
        for mu, a in pi_set(lam, i):
            out[mu] = out.get(mu, 0) + a * coeff
    return out


@lru_cache(maxsize=None)
def power_sum_in_m(lam: Partition) -> dict:
    """``p_lam`` expanded on the monomial basis, built one part at a time with ``pi_set``."""
    lam = as_partition(lam)
    if not lam:
        return {Partition(): Fraction(1)}
    return _p_times_m(lam[-1], power_sum_in_m(Partition(lam[:-1])))


@lru_cache(maxsize=None)
def _complete_in_c(k: int) -> dict:
    return {mu: Fraction(1, z(mu)) for mu in enumerate_partitions(k)}


class _Transitions:
    """All change-of-basis data for one degree, expressed through c coordinates."""

    def __init__(self, n: int):
        self.n = n
        self.parts = enumerate_partitions(n)
        table = character_table(n)
        chi = {(lam, mu): table.values[a][b]
               for a, lam in enumerate(table.partitions)
               for b, mu in enumerate(table.partitions)}
        P = self.parts

        s_to_c = {lam: {mu: Fraction(chi[lam, mu], z(mu)) for mu in P if chi[lam, mu]} for lam in P}
        c_to_s = {mu: {lam: Fraction(chi[lam, mu]) for lam in P if chi[lam, mu]} for mu in P}

        h_to_c = {}
        for lam in P:
            vec = {Partition(): Fraction(1)}
            for part in lam:
                vec = _induce_c(vec, _complete_in_c(part))
            h_to_c[lam] = vec

        c_to_m = {lam: dict(power_sum_in_m(lam)) for lam in P}
        m_to_c = self._invert_triangular(c_to_m)
        # m is dual to h, so the h-coordinate of x is (x | m_lam).
        c_to_h = {mu: {lam: z(mu) * m_to_c[lam][mu] for lam in P if m_to_c[lam].get(mu)}
                  for mu in P}

        self.to_c = {"c": {lam: {lam: Fraction(1)} for lam in P},
                     "s": s_to_c, "h": h_to_c, "m": m_to_c}
        self.from_c = {"c": self.to_c["c"], "s": c_to_s, "h": c_to_h, "m": c_to_m}

    def _invert_triangular(self, c_to_m: dict) -> dict:
        """Invert ``p_lam = sum A[lam][mu] m_mu``; ``A`` is triangular in the canonical order."""
        index = partition_index(self.n)
        m_to_c: dict = {}
        for lam in self.parts:
            row = c_to_m[lam]
            if any(index[mu] > index[lam] for mu in row) or not row.get(lam):
                raise InvariantViolation(f"power-sum to monomial matrix not triangular at {lam}")
            vec = {lam: Fraction(1)}
            for mu, a in row.items():
                if mu != lam:
                    _add_into(vec, m_to_c[mu], -a)
            diag = row[lam]
            m_to_c[lam] = {k: v / diag for k, v in vec.items() if v}
        return m_to_c


@lru_cache(maxsize=None)
def transitions(n: int) -> _Transitions:
    return _Transitions(n)


def _apply(matrix: Mapping, vec: Mapping) -> dict:
    out: dict = {}
    for lam, a in vec.items():
        _add_into(out, matrix[lam], a)
    return {k: v for k, v in out.items() if v}


def c_coords(x: CenterElement) -> dict:
    if x.basis == "c":
        return dict(x.coords)
    return _apply(transitions(x.n).to_c[x.basis], x.coords)


def from_c_coords(n: int, vec: Mapping, basis: str) -> CenterElement:
    basis = normalize_basis(basis)
    if basis == "c":
        return CenterElement(n, vec, "c")
    return CenterElement(n, _apply(transitions(n).from_c[basis], vec), basis)


def to_basis(x: CenterElement, target: str) -> CenterElement:
    """Re-express ``x`` in basis ``target``; the degree is preserved."""
    target = normalize_basis(target)
    if target == x.basis:
        return x
    return from_c_coords(x.n, c_coords(x), target)


def induction_product(x: CenterElement, y: CenterElement) -> CenterElement:
    """The product Z_m x Z_n -> Z_{m+n} induced by induction; result in ``x``'s basis."""
    vec = _induce_c(c_coords(x), c_coords(y))
    return from_c_coords(x.n + y.n, vec, x.basis)


def convolution_product(x: CenterElement, y: CenterElement) -> CenterElement:
    """The group-algebra product on Z_n; diagonal on ``s`` with weights ``hook_product``."""
    if x.n != y.n:
        raise DegreeMismatchError(f"convolution needs equal degrees, got {x.n} and {y.n}")
    xs, ys = x.to("s"), y.to("s")
    prod = {lam: a * ys.coords[lam] * hook_product(lam)
            for lam, a in xs.coords.items() if lam in ys.coords}
    return CenterElement(x.n, prod, "s").to(x.basis)


def scalar_product(x: CenterElement, y: CenterElement) -> Fraction:
    """Symmetric form with ``(s_lam | s_mu) = delta``; equivalently ``(c_lam | c_mu) = delta z_lam``."""
    if x.n != y.n:
        raise DegreeMismatchError(f"scalar product needs equal degrees, got {x.n} and {y.n}")
    xc, yc = c_coords(x), c_coords(y)
    return sum((a * yc[lam] * z(lam) for lam, a in xc.items() if lam in yc), Fraction(0))


# ---------------------------------------------------------------------------
# brute-force oracle for the convolution product


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[q[k]] for k in range(len(q)))


def _inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def cycle_type(p: tuple) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = p[k]
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


@lru_cache(maxsize=None)
def _symmetric_group_classes(n: int) -> dict:
    classes = defaultdict(list)
    for p in permutations(range(n)):
        classes[cycle_type(p)].append(p)
    return dict(classes)


@lru_cache(maxsize=None)
def _class_product_counts(n: int, lam: Partition) -> dict:
    """For each class ``mu`` and target class ``nu``: #{x in C_lam : x^-1 * rep(nu) in C_mu}."""
    classes = _symmetric_group_classes(n)
    counts: dict = defaultdict(int)
    for nu, members in classes.items():
        rep = members[0]
        for x in classes[lam]:
            counts[cycle_type(_compose(_inverse(x), rep)), nu] += 1
    return dict(counts)


def brute_force_convolution(x: CenterElement, y: CenterElement) -> CenterElement:
    """Group-algebra product computed from actual permutations of {0..n-1}.

    Uses ``c_lam = z_lam * (class sum)``; independent of the character table.
    """
    if x.n != y.n:
        raise DegreeMismatchError(f"convolution needs equal degrees, got {x.n} and {y.n}")
    n = x.n
    if n > BRUTE_FORCE_MAX_N:
        raise CapExceededError(f"brute-force convolution limited to n <= {BRUTE_FORCE_MAX_N}")
    xc, yc = c_coords(x), c_coords(y)
    out: dict = {}
    for lam, a in xc.items():
        counts = _class_product_counts(n, lam)
        for mu, b in yc.items():
            for nu in enumerate_partitions(n):
                cnt = counts.get((mu, nu), 0)
                if cnt:
                    coeff = a * b * z(lam) * z(mu) * cnt
                    out[nu] = out.get(nu, 0) + Fraction(coeff, z(nu))
    return from_c_coords(n, out, x.basis)
