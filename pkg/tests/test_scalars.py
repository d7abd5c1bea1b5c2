from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_rationals, rationals
from hyperquat.linalg import Matrix
from hyperquat.scalars import ComplexScalar, format_rational, parse_rational, phi, rational_arith


def test_add():
    assert rational_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_mul_canonical():
    r = rational_arith("mul", Fraction(2, 4), 2)
    assert (r.numerator, r.denominator) == (1, 1)


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        rational_arith("div", 1, 0)


def test_neg_and_unknown_op():
    assert rational_arith("neg", Fraction(3, 7)) == Fraction(-3, 7)
    with pytest.raises(ValueError):
        rational_arith("pow", 1, 2)


@given(rationals, rationals)
def test_add_sub_roundtrip(a, b):
    back = rational_arith("sub", rational_arith("add", a, b), b)
    assert (back.numerator, back.denominator) == (a.numerator, a.denominator)


@given(rationals)
def test_canonical_form(r):
    assert r.denominator > 0
    from math import gcd
    assert gcd(abs(r.numerator), r.denominator) == 1


@given(rationals)
def test_serialization_roundtrip(r):
    assert parse_rational(format_rational(r)) == r


@pytest.mark.parametrize("bad", ["1/0", "1 /2", "+3", "1/-2", "", "a"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_phi_values():
    i = ComplexScalar(0, 1)
    assert phi(i) == Matrix([[0, -1], [1, 0]])
    assert phi(ComplexScalar(1)) == Matrix.identity(2)
    assert phi(i) @ phi(i) == Matrix([[-1, 0], [0, -1]]) == phi(ComplexScalar(-1))


@given(rationals, rationals, rationals, rationals)
def test_phi_is_field_morphism(a, b, c, d):
    z, w = ComplexScalar(a, b), ComplexScalar(c, d)
    assert phi(z * w) == phi(z) @ phi(w)
    assert phi(z + w) == phi(z) + phi(w)
