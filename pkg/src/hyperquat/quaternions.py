"""Real quaternions H and complex quaternions H_C over exact rationals.

Basis {1, e1, e2, e3} with e_n^2 = -1 and e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
A complex quaternion is stored as a pair (x, y) meaning x + i y with x, y in H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[Fraction, int]


class NotInvertible(ArithmeticError):
    pass


@dataclass(frozen=True)
class Quaternion:
    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> Quaternion:
        return cls(*coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2, self.a3)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*(p + q for p, q in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(c * other for c in self.coeffs))
        if not isinstance(other, Quaternion):
            return NotImplemented
        return quat_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(other * c for c in self.coeffs))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("quaternion divided by zero scalar")
            return Quaternion(*(c / other for c in self.coeffs))
        return NotImplemented

    def conj(self) -> Quaternion:
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def star(self) -> Quaternion:
        """Flip the signs of the e2 and e3 coefficients."""
        return Quaternion(self.a0, self.a1, -self.a2, -self.a3)

    def norm(self) -> Fraction:
        return self.a0**2 + self.a1**2 + self.a2**2 + self.a3**2

    def inverse(self) -> Quaternion:
        n = self.norm()
        if n == 0:
            raise NotInvertible("zero quaternion has no inverse")
        return self.conj() / n

    def __str__(self) -> str:
        from hyperquat.literals import format_quat

        return format_quat(self)


ZERO = Quaternion()
ONE = Quaternion(1)
E1 = Quaternion(0, 1)
E2 = Quaternion(0, 0, 1)
E3 = Quaternion(0, 0, 0, 1)
BASIS = (ONE, E1, E2, E3)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = p.coeffs
    b0, b1, b2, b3 = q.coeffs
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def quat_star(q: Quaternion) -> Quaternion:
    return q.star()


def quat_norm(q: Quaternion) -> Fraction:
    return q.norm()


def quat_inverse(q: Quaternion) -> Quaternion:
    return q.inverse()


@dataclass(frozen=True)
class Biquaternion:
    """``x + i y``; ``*`` is the twisted product ``xa - y*b + i(x*b + ya)``."""

    x: Quaternion = ZERO
    y: Quaternion = ZERO

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> Biquaternion:
        c = list(coeffs)
        if len(c) != 8:
            raise ValueError(f"expected 8 coefficients, got {len(c)}")
        return cls(Quaternion(*c[:4]), Quaternion(*c[4:]))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.x.coeffs + self.y.coeffs

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def __add__(self, other: Biquaternion) -> Biquaternion:
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return Biquaternion(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Biquaternion) -> Biquaternion:
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return Biquaternion(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Biquaternion:
        return Biquaternion(-self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Biquaternion(self.x * other, self.y * other)
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return biquat_mul_paper(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Biquaternion(other * self.x, other * self.y)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Biquaternion(self.x / other, self.y / other)
        return NotImplemented

    def conj(self) -> Biquaternion:
        return Biquaternion(self.x.conj(), self.y.conj())

    def star(self) -> Biquaternion:
        # only the real part is starred
        return Biquaternion(self.x.star(), self.y)

    def collapse(self) -> Quaternion:
        return collapse(self)

    def __str__(self) -> str:
        from hyperquat.literals import format_biquat

        return format_biquat(self)


BI_ONE = Biquaternion(ONE)
BI_I = Biquaternion(ZERO, ONE)


def biquat_mul_paper(X: Biquaternion, A: Biquaternion) -> Biquaternion:
    x, y = X.x, X.y
    a, b = A.x, A.y
    return Biquaternion(x * a - y.star() * b, x.star() * b + y * a)


def biquat_mul_classical(X: Biquaternion, A: Biquaternion) -> Biquaternion:
    """Product with a central complex unit: ``xa - yb + i(xb + ya)``."""
    x, y = X.x, X.y
    a, b = A.x, A.y
    return Biquaternion(x * a - y * b, x * b + y * a)


def biquat_conj(Q: Biquaternion) -> Biquaternion:
    return Q.conj()


def biquat_star(Q: Biquaternion) -> Biquaternion:
    return Q.star()


def collapse(Q: Biquaternion) -> Quaternion:
    """Substitute e1 for i: ``x + iy -> x + e1 y``. Not injective."""
    return Q.x + E1 * Q.y
