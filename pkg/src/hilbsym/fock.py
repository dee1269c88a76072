"""Truncated Fock space sum_{n <= N} Z_n with creation and annihilation operators.

Components are stored in c coordinates.  The creation operator ``P_i`` appends a
part ``i`` to ``c_lam``; the annihilation operator removes one::

    P_i*(c_lam) = (-1)^i * i * mult_i(lam) * c_{lam minus i}

These satisfy the Heisenberg relations ``[P_i, P_j*] = delta_ij * i * (-1)^(i-1)``
and ``P_i*`` is the adjoint of ``P_i`` for :func:`twisted_form`, which weighs
degree ``n`` by ``(-1)^n``.  The geometric operator built from the other axis
equals ``-P_i``; it is not modelled separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from .center import CenterElement, c_coords, scalar_product
from .errors import InputError, TruncationError
from .partitions import Partition, as_partition, enumerate_partitions


@dataclass(frozen=True, eq=False)
class FockElement:
    cap: int
    components: Mapping[int, CenterElement] = field(default_factory=dict)

    def __post_init__(self):
        if self.cap < 0:
            raise InputError(f"Fock cap must be nonnegative, got {self.cap}")
        clean = {}
        for n, x in dict(self.components).items():
            if x.n != n:
                raise InputError(f"component stored at degree {n} has degree {x.n}")
            if n > self.cap:
                raise TruncationError(f"degree {n} exceeds Fock cap {self.cap}")
            x = x.to("c")
            if not x.is_zero():
                clean[n] = x
        object.__setattr__(self, "components", dict(sorted(clean.items())))

    @classmethod
    def vacuum(cls, cap: int) -> "FockElement":
        return cls(cap, {0: CenterElement(0, {Partition(): 1})})

    @classmethod
    def from_center(cls, x: CenterElement, cap: int) -> "FockElement":
        return cls(cap, {x.n: x})

    @property
    def top_degree(self) -> int:
        return max(self.components, default=-1)

    def is_zero(self) -> bool:
        return not self.components

    def component(self, n: int) -> CenterElement:
        return self.components.get(n, CenterElement.zero(n))

    def _combine(self, other: "FockElement", sign: int) -> "FockElement":
        if other.cap != self.cap:
            raise InputError(f"Fock caps differ: {self.cap} vs {other.cap}")
        out = dict(self.components)
        for n, y in other.components.items():
            out[n] = out[n] + sign * y if n in out else sign * y
        return FockElement(self.cap, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, scalar):
        return FockElement(self.cap, {n: x * scalar for n, x in self.components.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockElement):
            return NotImplemented
        return self.cap == other.cap and self.components == other.components

    __hash__ = None

    def __repr__(self) -> str:
        if not self.components:
            return f"FockElement(cap={self.cap}, 0)"
        return f"FockElement(cap={self.cap}, " + "; ".join(
            f"[{n}] {x!r}" for n, x in self.components.items()) + ")"


def _map_components(x: FockElement, shift: int, rule: Callable) -> FockElement:
    out: dict[int, dict] = {}
    for n, comp in x.components.items():
        for lam, a in c_coords(comp).items():
            for mu, b in rule(lam):
                out.setdefault(n + shift, {})
                out[n + shift][mu] = out[n + shift].get(mu, 0) + a * b
    return FockElement(x.cap, {n: CenterElement(n, vec) for n, vec in out.items()})


def _check_index(i: int) -> None:
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise InputError(f"operator index must be a positive integer, got {i!r}")


def create(i: int, x: FockElement) -> FockElement:
    _check_index(i)
    if not x.is_zero() and x.top_degree + i > x.cap:
        raise TruncationError(
            f"P_{i} maps degree {x.top_degree} to {x.top_degree + i}, above cap {x.cap}")
    return _map_components(x, i, lambda lam: [(lam.add_part(i), 1)])


def annihilate(i: int, x: FockElement) -> FockElement:
    _check_index(i)
    sign = -1 if i % 2 else 1

    def rule(lam: Partition):
        mult = lam.count(i)
        return [(lam.remove_part(i), sign * i * mult)] if mult else []

    return _map_components(x, -i, rule)


def unsigned_removal(i: int, x: FockElement) -> FockElement:
    """``c_lam -> i * mult_i(lam) * c_{lam minus i}``: the adjoint of ``P_i`` for the positive form."""
    _check_index(i)
    return _map_components(
        x, -i, lambda lam: [(lam.remove_part(i), i * lam.count(i))] if i in lam else [])


def vacuum_build(lam: Iterable[int], cap: int) -> FockElement:
    """Apply ``P_1^{mult_1} P_2^{mult_2} ...`` to the vacuum."""
    lam = as_partition(lam)
    if lam.size > cap:
        raise TruncationError(f"|{lam}| = {lam.size} exceeds Fock cap {cap}")
    x = FockElement.vacuum(cap)
    for part in sorted(lam, reverse=True):
        x = create(part, x)
    return x


def positive_form(x: FockElement, y: FockElement) -> Fraction:
    total = Fraction(0)
    for n, a in x.components.items():
        if n in y.components:
            total += scalar_product(a, y.components[n])
    return total


def twisted_form(x: FockElement, y: FockElement) -> Fraction:
    total = Fraction(0)
    for n, a in x.components.items():
        if n in y.components:
            v = scalar_product(a, y.components[n])
            total += -v if n % 2 else v
    return total


def basis_vectors(cap: int, max_degree: Optional[int] = None) -> list[FockElement]:
    top = cap if max_degree is None else max_degree
    return [FockElement.from_center(CenterElement.basis_element("c", lam), cap)
            for n in range(0, top + 1) for lam in enumerate_partitions(n)]


@dataclass
class CommutatorReport:
    i: int
    j: int
    cap: int
    families: list[dict]
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "cap": self.cap, "status": self.status,
                "families": self.families, "first_failure": self.first_failure}


def commutator_check(i: int, j: int, cap: int) -> CommutatorReport:
    """Check the three Heisenberg commutator families on every c-basis vector.

    Each family uses only the degrees where neither composite touches the cap:
    ``[P_i, P_j]`` on degrees ``<= cap - i - j``, ``[P_i*, P_j*]`` on all degrees,
    ``[P_i, P_j*]`` on degrees ``<= cap - i``.
    """
    _check_index(i)
    _check_index(j)
    if i + j > cap:
        raise InputError(f"commutator check needs i + j <= cap, got {i} + {j} > {cap}")
    sign = 1 if i % 2 else -1
    scalar = i * sign if i == j else 0
    families = [
        ("[P_i,P_j]", cap - i - j,
         lambda v: create(i, create(j, v)) - create(j, create(i, v)), 0),
        ("[P_i*,P_j*]", cap,
         lambda v: annihilate(i, annihilate(j, v)) - annihilate(j, annihilate(i, v)), 0),
        ("[P_i,P_j*]", cap - i,
         lambda v: create(i, annihilate(j, v)) - annihilate(j, create(i, v)), scalar),
    ]
    report = CommutatorReport(i=i, j=j, cap=cap, families=[])
    for name, top, op, expected_scalar in families:
        checked = 0
        ok = True
        for v in basis_vectors(cap, top):
            got = op(v)
            want = v * expected_scalar
            checked += 1
            if got != want:
                ok = False
                if report.first_failure is None:
                    (n, comp), = v.components.items()
                    report.first_failure = {
                        "family": name,
                        "vector": list(next(iter(comp.coords))),
                        "expected": repr(want),
                        "got": repr(got),
                    }
        report.families.append({"family": name, "max_degree": top, "vectors_checked": checked,
                                "expected_scalar": expected_scalar, "passed": ok})
    return report
