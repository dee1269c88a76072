"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are polynomials in ``zeta`` with rational coefficients, reduced modulo
the N-th cyclotomic polynomial, so every element has one canonical form and
equality is structural.  Elements whose value is rational compare and hash
equal to the matching :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import InputError

Number = Union[int, Fraction, "Cyclotomic"]


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        factor = a[-1] / lead
        q[shift] = factor
        for k, y in enumerate(b):
            a[shift + k] -= factor * y
        a.pop()
    return _trim(q), _trim(a)


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_order, lowest degree first."""
    if order < 1:
        raise InputError(f"cyclotomic order must be positive, got {order}")
    num = [Fraction(-1)] + [Fraction(0)] * (order - 1) + [Fraction(1)]
    for d in range(1, order):
        if order % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(x) for x in num)


class Cyclotomic:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        phi = cyclotomic_polynomial(order)
        _, rem = _poly_divmod([Fraction(x) for x in coeffs], phi)
        self.order = order
        self.coeffs = tuple(rem)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        power %= order
        return cls(order, [0] * power + [1])

    @classmethod
    def parse(cls, order: int, text) -> "Cyclotomic":
        """Read ``"1/2"``, ``"z^3 - 2*z + 1"`` (``z`` is the root of unity) or a coefficient list."""
        if isinstance(text, (list, tuple)):
            return cls(order, [Fraction(str(x)) for x in text])
        if isinstance(text, (int, Fraction)):
            return cls(order, [text])
        if not isinstance(text, str):
            raise InputError(f"cannot read cyclotomic number from {text!r}")
        src = text.replace(" ", "")
        if not src:
            raise InputError("empty cyclotomic number")
        coeffs: dict[int, Fraction] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", src):
            if "z" in body:
                m = re.fullmatch(r"(?:([0-9/]+)\*?)?z(?:\^([0-9]+))?", body)
                if m is None:
                    raise InputError(f"bad cyclotomic term {body!r} in {text!r}")
                coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
                power = int(m.group(2)) if m.group(2) else 1
            else:
                try:
                    coef, power = Fraction(body), 0
                except (ValueError, ZeroDivisionError) as exc:
                    raise InputError(f"bad cyclotomic term {body!r} in {text!r}") from exc
            coeffs[power] = coeffs.get(power, 0) + (-coef if sign == "-" else coef)
        top = max(coeffs)
        return cls(order, [coeffs.get(k, 0) for k in range(top + 1)])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise InputError(f"mixing Q(zeta_{self.order}) and Q(zeta_{other.order})")
            return other
        if isinstance(other, Rational):
            return Cyclotomic(self.order, [Fraction(other)])
        return NotImplemented

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Cyclotomic(self.order, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.order, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: find u with u * self = 1 mod Phi
        r0, r1 = [Fraction(x) for x in cyclotomic_polynomial(self.order)], list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant because Phi is irreducible
        return Cyclotomic(self.order, [x / r0[0] for x in s0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Cyclotomic(self.order, [1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == ((Fraction(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, x in enumerate(self.coeffs):
            if x:
                terms.append(str(x) if k == 0 else f"{x}*z^{k}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [str(x) for x in self.coeffs]
