from fractions import Fraction

import pytest

from hilbsym.center import c, convolution_product, h, induction_product, m, s
from hilbsym.errors import DegreeMismatchError, InputError
from hilbsym.expr import evaluate


@pytest.mark.parametrize("text,want", [
    ("c[2,1] . c[3]", c(2, 1) * 6),
    ("c[2] * m[1]", m(3) + m(2, 1)),
    ("2*s[2] - s[1,1]", s(2) * 2 - s(1, 1)),
    ("-c[1]", c(1) * -1),
    ("(c[1] + c[1]) * c[1]", c(1, 1) * 2),
    ("1/2 * p[2]", c(2) * Fraction(1, 2)),
    ("c[1]*c[1] . h[2]", convolution_product(induction_product(c(1), c(1)), h(2))),
])
def test_evaluate(text, want):
    assert evaluate(text) == want


def test_scalar_product():
    assert evaluate("m[2] | h[2]") == 1
    assert evaluate("c[2,1] | c[2,1]") == 2


def test_precedence():
    # "." binds like "*", left to right
    assert evaluate("c[1] * c[1] . c[2]") == convolution_product(c(1, 1), c(2))


@pytest.mark.parametrize("text", ["", "c[2", "c[2,1] +", "x[1]", "c[2] + 1", "3 | c[1]", "c[1,2]", "(c[1]"])
def test_malformed(text):
    with pytest.raises(InputError):
        evaluate(text)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        evaluate("c[2] + c[3]")
    with pytest.raises(DegreeMismatchError):
        evaluate("c[2] . c[3]")
