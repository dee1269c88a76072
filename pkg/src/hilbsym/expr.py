"""Parser for center-algebra expressions such as ``"2*c[2,1] . s[3] - h[1,1,1]"``.

Grammar (lowest precedence first)::

    expr   := sum ("|" sum)?          scalar product, yields a rational
    sum    := term (("+" | "-") term)*
    term   := unary (("*" | ".") unary)*
                                      "*" is the induction product (or scaling
                                      when one side is a number), "." the
                                      group-algebra product
    unary  := "-" unary | atom
    atom   := BASIS "[" parts "]" | NUMBER | "(" sum ")"

``BASIS`` is one of ``c s h m p``; ``NUMBER`` is an integer or ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .center import CenterElement, convolution_product, induction_product, scalar_product
from .errors import InputError
from .partitions import Partition

Value = Union[Fraction, CenterElement]

_TOKEN = re.compile(r"\s*(?:(?P<elem>[cshmp])\[(?P<parts>[0-9,\s]*)\]|(?P<num>\d+(?:/\d+)?)|(?P<op>[()+\-*.|]))")


def tokenize(text: str) -> list[tuple[str, object]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise InputError(f"cannot parse expression at {text[pos:]!r}")
        pos = m.end()
        if m.group("elem"):
            raw = [p for p in m.group("parts").replace(" ", "").split(",") if p]
            parts = Partition(int(p) for p in raw)
            out.append(("elem", CenterElement.basis_element(m.group("elem"), parts)))
        elif m.group("num"):
            out.append(("num", Fraction(m.group("num"))))
        else:
            out.append(("op", m.group("op")))
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None)

    def take_op(self, ops: str):
        kind, val = self.peek()
        if kind == "op" and val in ops:
            self.k += 1
            return val
        return None

    def expr(self) -> Value:
        left = self.sum()
        if self.take_op("|"):
            right = self.sum()
            if not (isinstance(left, CenterElement) and isinstance(right, CenterElement)):
                raise InputError("scalar product needs two center elements")
            left = scalar_product(left, right)
        if self.k != len(self.tokens):
            raise InputError(f"unexpected token {self.peek()[1]!r}")
        return left

    def sum(self) -> Value:
        value = self.term()
        while (op := self.take_op("+-")) is not None:
            rhs = self.term()
            if isinstance(value, CenterElement) != isinstance(rhs, CenterElement):
                raise InputError("cannot add a number to a center element")
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Value:
        value = self.unary()
        while (op := self.take_op("*.")) is not None:
            rhs = self.unary()
            if op == "*":
                if isinstance(value, CenterElement) and isinstance(rhs, CenterElement):
                    value = induction_product(value, rhs)
                else:
                    value = value * rhs
            else:
                if not (isinstance(value, CenterElement) and isinstance(rhs, CenterElement)):
                    raise InputError("'.' multiplies two center elements of the same degree")
                value = convolution_product(value, rhs)
        return value

    def unary(self) -> Value:
        if self.take_op("-"):
            return -self.unary()
        kind, val = self.peek()
        if kind in ("elem", "num"):
            self.k += 1
            return val
        if self.take_op("("):
            value = self.sum()
            if not self.take_op(")"):
                raise InputError("missing ')'")
            return value
        raise InputError(f"unexpected token {val!r}" if val is not None else "unexpected end of expression")


def evaluate(text: str) -> Value:
    tokens = tokenize(text)
    if not tokens:
        raise InputError("empty expression")
    return _Parser(tokens).expr()
