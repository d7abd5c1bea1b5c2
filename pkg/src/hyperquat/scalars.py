"""Exact scalars.

Rationals are :class:`fractions.Fraction`, which already keeps a positive
denominator and a reduced numerator after every operation, so structural
equality is value equality.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(op: str, lhs: RationalLike, rhs: RationalLike = 0) -> Fraction:
    """Apply ``op`` (add, sub, mul, div or neg) to two rationals.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if op == "neg":
        return -lhs
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and rhs == 0:
        raise ZeroDivisionError(f"{lhs} / 0")
    return fn(lhs, rhs)


def format_rational(r: RationalLike) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (q > 0, no whitespace)."""
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


@dataclass(frozen=True)
class ComplexScalar:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other: ComplexScalar) -> ComplexScalar:
        return ComplexScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: ComplexScalar) -> ComplexScalar:
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __mul__(self, other: ComplexScalar) -> ComplexScalar:
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> ComplexScalar:
        return ComplexScalar(-self.re, -self.im)


def phi(z: ComplexScalar):
    """2x2 real matrix ``[[a, -b], [b, a]]`` of ``z = a + bi``."""
    from hyperquat.linalg import Matrix

    return Matrix([[z.re, -z.im], [z.im, z.re]])
