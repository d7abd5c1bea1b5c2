"""Real matrix representations of H and H_C, and vectorization."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from hyperquat.linalg import Matrix, constants
from hyperquat.quaternions import Biquaternion, Quaternion


def lambda_of(a: Quaternion) -> Matrix:
    """Left multiplication by ``a``: column k holds the coefficients of a*e_k."""
    a0, a1, a2, a3 = a.coeffs
    return Matrix([
        [a0, -a1, -a2, -a3],
        [a1, a0, -a3, a2],
        [a2, a3, a0, -a1],
        [a3, -a2, a1, a0],
    ])


def rho_of(a: Quaternion) -> Matrix:
    """Right multiplication by ``a``: column k holds the coefficients of e_k*a."""
    a0, a1, a2, a3 = a.coeffs
    return Matrix([
        [a0, -a1, -a2, -a3],
        [a1, a0, a3, -a2],
        [a2, -a3, a0, a1],
        [a3, a2, -a1, a0],
    ])


def gamma_of(Q: Biquaternion) -> Matrix:
    x, y = Q.x, Q.y
    return Matrix.block([
        [lambda_of(x), -lambda_of(y.star())],
        [lambda_of(y), lambda_of(x.star())],
    ])


def theta_of(Q: Biquaternion) -> Matrix:
    x, y = Q.x, Q.y
    return Matrix.block([
        [rho_of(x), -rho_of(y)],
        [rho_of(y.star()), rho_of(x.star())],
    ])


def epsilon_of(A: Biquaternion) -> Matrix:
    """Block map ``[[rho^t(a), rho^t(b)], [-rho^t(b), rho^t(a)]]``.

    Multiplicative for the central-i product only.
    """
    ra, rb = rho_of(A.x).T, rho_of(A.y).T
    return Matrix.block([[ra, rb], [-rb, ra]])


def vec_quat(x: Quaternion) -> Matrix:
    return Matrix.column(x.coeffs)


def vec_biquat(X: Biquaternion) -> Matrix:
    return Matrix.column(X.coeffs)


def quat_from_vec(v: Matrix | Sequence[Fraction]) -> Quaternion:
    values = v.col(0) if isinstance(v, Matrix) else tuple(v)
    if len(values) != 4:
        raise ValueError("quaternion vector must have 4 entries")
    return Quaternion(*values)


def biquat_from_vec(v: Matrix | Sequence[Fraction]) -> Biquaternion:
    values = v.col(0) if isinstance(v, Matrix) else tuple(v)
    return Biquaternion.from_coeffs(values)


def right_act(column: Matrix, q: Quaternion) -> Matrix:
    """Multiply every entry of a quaternion column on the right by ``q``."""
    return Matrix([[v * q for v in row] for row in column.tolist()])


def _scalar_entry(m: Matrix) -> Quaternion:
    v = m[0, 0]
    return v if isinstance(v, Quaternion) else Quaternion(v)


def reconstruct_gamma(Q: Biquaternion) -> Quaternion:
    """Evaluate ``-(1/4) M8^t Gamma(Q*)^t M8`` (true matrix transpose).

    The result is ``collapse(conj(Q))``; it equals ``collapse(Q)`` only when
    both parts of Q are real multiples of 1.
    """
    M8 = constants().M8
    return _scalar_entry(Fraction(-1, 4) * (M8.T @ gamma_of(Q.star()).T @ M8))


def reconstruct_gamma_untransposed(Q: Biquaternion) -> Quaternion:
    """Evaluate ``-(1/4) M8^t Gamma(Q*) M8``; equals ``x - e1 y*``."""
    M8 = constants().M8
    return _scalar_entry(Fraction(-1, 4) * (M8.T @ gamma_of(Q.star()) @ M8))


def reconstruct_theta(Q: Biquaternion) -> Quaternion:
    """Evaluate ``-(1/4) N1 Theta(Q*)^t N2`` with ``N1 = M8^t M2^t``, ``N2 = M1^t M8``.

    Since ``Gamma^t(X) = M1 Theta(X) M2`` this equals
    :func:`reconstruct_gamma_untransposed`, i.e. ``x - e1 y*``.
    """
    c = constants()
    N1 = c.M8.T @ c.M2.T
    N2 = c.M1.T @ c.M8
    return _scalar_entry(Fraction(-1, 4) * (N1 @ theta_of(Q.star()).T @ N2))


def gamma_star_block_transpose(Q: Biquaternion) -> Matrix:
    """``[[lambda(x*), lambda(y)], [-lambda(y*), lambda(x)]]``.

    The blocks of Gamma(Q*) swapped across the diagonal but not themselves
    transposed. This matrix, not Gamma(Q*)^t, sends M8 to M8 * collapse(Q).
    """
    x, y = Q.x, Q.y
    return Matrix.block([
        [lambda_of(x.star()), lambda_of(y)],
        [-lambda_of(y.star()), lambda_of(x)],
    ])


def reconstruct_block_transpose(Q: Biquaternion) -> Quaternion:
    """``-(1/4) M8^t B M8`` with B from :func:`gamma_star_block_transpose`; equals collapse(Q)."""
    M8 = constants().M8
    return _scalar_entry(Fraction(-1, 4) * (M8.T @ gamma_star_block_transpose(Q) @ M8))
