from fractions import Fraction

import pytest
from hypothesis import given

from conftest import biquats, nonzero_quats, quats, rational_quats
from hyperquat.quaternions import (
    BI_I, BI_ONE, E1, E2, E3, ONE, ZERO, Biquaternion, NotInvertible, Quaternion,
    biquat_mul_classical, biquat_mul_paper, collapse,
)


def test_multiplication_table():
    assert E1 * E2 == E3
    assert E2 * E1 == -E3
    assert E2 * E3 == E1
    assert E3 * E1 == E2
    for e in (E1, E2, E3):
        assert e * e == -ONE


def test_product_examples():
    assert (ONE + E1) * (ONE - E1) == Quaternion(2)


def test_conj_star():
    assert E1.conj() == -E1
    assert ONE.conj() == ONE
    assert Quaternion(1, 2, 3, 4).conj() == Quaternion(1, -2, -3, -4)
    assert E2.star() == -E2
    assert (ONE + E1).star() == ONE + E1


def test_norm():
    assert Quaternion(1, 2, 3, 4).norm() == 30
    assert ZERO.norm() == 0


@given(rational_quats)
def test_norm_is_scalar_part_of_q_conj(q):
    p = q * q.conj()
    assert p == Quaternion(q.norm())


@given(rational_quats, rational_quats)
def test_norm_multiplicative(p, q):
    assert (p * q).norm() == p.norm() * q.norm()


@given(rational_quats)
def test_star_involution(q):
    assert q.star().star() == q


def test_inverse():
    assert E1.inverse() == -E1
    assert Quaternion(2).inverse() == Quaternion(Fraction(1, 2))
    with pytest.raises(NotInvertible):
        ZERO.inverse()


@given(nonzero_quats)
def test_inverse_two_sided(q):
    assert q * q.inverse() == ONE == q.inverse() * q


@given(quats, quats, quats)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(quats, quats, quats)
def test_star_laws(a, b, x):
    assert (a + b).star() == a.star() + b.star()
    assert (x * a).star() == x.star() * a.star()


@given(quats)
def test_e1_identities_collapsed(a):
    assert a.star() * E1 == E1 * a
    assert a * E1 == E1 * a.star()
    assert -a.star() == E1 * a * E1


# complex quaternions

def test_twisted_product_examples():
    assert BI_I * BI_I == -BI_ONE
    X = Biquaternion(ZERO, E2)
    assert biquat_mul_paper(X, BI_I) == Biquaternion(E2)


def test_classical_product_examples():
    X = Biquaternion(ZERO, E2)
    assert biquat_mul_classical(X, BI_I) == Biquaternion(-E2)
    # products agree when x, y are fixed by star
    X, A = Biquaternion(ONE, ONE), Biquaternion(E1, ONE)
    expected = Biquaternion(E1 - ONE, ONE + E1)
    assert biquat_mul_paper(X, A) == expected == biquat_mul_classical(X, A)


@given(biquats)
def test_units(X):
    assert X * BI_ONE == X == BI_ONE * X
    assert biquat_mul_classical(X, BI_ONE) == X == biquat_mul_classical(BI_ONE, X)


@given(biquats, biquats, biquats)
def test_both_products_associative(X, A, B):
    assert (X * A) * B == X * (A * B)
    c = biquat_mul_classical
    assert c(c(X, A), B) == c(X, c(A, B))


@given(biquats, biquats, biquats)
def test_twisted_product_distributes(X, A, B):
    assert X * (A + B) == X * A + X * B
    assert (A + B) * X == A * X + B * X


def test_biquat_conj_star():
    assert Biquaternion(E1, E2).conj() == Biquaternion(-E1, -E2)
    assert BI_ONE.conj() == BI_ONE
    assert Biquaternion(E2, E2).star() == Biquaternion(-E2, E2)
    assert BI_I.star() == BI_I


@given(biquats)
def test_biquat_conj_matches_complex_coefficients(Q):
    # c_k = x_k + i y_k; conj negates c1, c2, c3
    c = list(zip(Q.x.coeffs, Q.y.coeffs))
    expected = [c[0]] + [(-re, -im) for re, im in c[1:]]
    got = list(zip(Q.conj().x.coeffs, Q.conj().y.coeffs))
    assert got == expected


@given(biquats)
def test_biquat_star_involution(Q):
    assert Q.star().star() == Q


def test_collapse():
    assert collapse(BI_I) == E1
    assert collapse(Biquaternion(ONE, E1)) == ZERO
    q = Quaternion(1, 2, 3, 4)
    assert collapse(Biquaternion(q)) == q
