from fractions import Fraction

from hypothesis import given

from conftest import biquats, quats
from hyperquat.linalg import Matrix, constants
from hyperquat.quaternions import BASIS, BI_I, BI_ONE, E1, E2, ONE, Biquaternion, Quaternion, collapse
from hyperquat.representations import (
    epsilon_of, gamma_of, gamma_star_block_transpose, lambda_of, reconstruct_block_transpose,
    reconstruct_gamma, reconstruct_gamma_untransposed, reconstruct_theta, rho_of, right_act,
    theta_of, vec_biquat, vec_quat,
)

I4, Z4 = Matrix.identity(4), Matrix.zeros(4)


def test_lambda_examples():
    assert lambda_of(E1) == constants().theta
    assert lambda_of(ONE) == I4


@given(quats)
def test_lambda_columns_are_left_products(a):
    # the defining property: column k = coefficients of a * e_k
    for k, e in enumerate(BASIS):
        assert lambda_of(a).col(k) == (a * e).coeffs
        assert rho_of(a).col(k) == (e * a).coeffs


def test_rho_examples():
    assert rho_of(ONE) == I4
    assert rho_of(E1) == Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])


@given(quats, quats)
def test_rho_antimultiplicative(a, b):
    assert rho_of(a) @ rho_of(b) == rho_of(b * a)


def test_gamma_theta_epsilon_units():
    I8 = Matrix.identity(8)
    J = Matrix.block([[Z4, -I4], [I4, Z4]])
    assert gamma_of(BI_ONE) == theta_of(BI_ONE) == epsilon_of(BI_ONE) == I8
    assert gamma_of(BI_I) == J
    assert theta_of(BI_I) == J
    assert epsilon_of(BI_I) == -J
    assert epsilon_of(BI_I) @ epsilon_of(BI_I) == -I8 == epsilon_of(-BI_ONE)


def test_vec():
    assert vec_quat(ONE) == Matrix.column([1, 0, 0, 0])
    assert vec_biquat(BI_I) == Matrix.column([0, 0, 0, 0, 1, 0, 0, 0])


@given(quats, quats, quats)
def test_vec_laws(a, b, x):
    assert vec_quat(a * x) == lambda_of(a) @ vec_quat(x)
    assert vec_quat(x * b) == rho_of(b) @ vec_quat(x)


@given(biquats)
def test_first_columns(X):
    P = constants().P
    assert gamma_of(X).submatrix(slice(None), slice(0, 1)) == vec_biquat(X)
    assert (P @ theta_of(X)).submatrix(slice(None), slice(0, 1)) == vec_biquat(X)


def test_reconstruct_gamma_examples():
    assert reconstruct_gamma(BI_I) == E1
    q = Quaternion(3)
    assert reconstruct_gamma(Biquaternion(q)) == q


@given(biquats)
def test_reconstructions(Q):
    # true transpose recovers collapse(conj Q); the untransposed form gives x - e1 y*
    assert reconstruct_gamma(Q) == collapse(Q.conj())
    assert reconstruct_gamma_untransposed(Q) == Q.x - E1 * Q.y.star()
    assert reconstruct_theta(Q) == reconstruct_gamma_untransposed(Q)
    assert reconstruct_block_transpose(Q) == collapse(Q)


@given(quats)
def test_reconstruct_real_part_is_conjugate(q):
    assert reconstruct_gamma(Biquaternion(q)) == q.conj()
    assert reconstruct_theta(Biquaternion(q)) == q


def test_reconstruct_non_injective_witness():
    Q = Biquaternion(ONE, E1)
    assert collapse(Q) == Quaternion()
    assert reconstruct_block_transpose(Q) == Quaternion()
    # literal transpose gives collapse(1 - i e1) = 2 instead
    assert reconstruct_gamma(Q) == Quaternion(2)


@given(biquats)
def test_block_transpose_sends_M8_to_M8_collapse(Q):
    M8 = constants().M8
    assert gamma_star_block_transpose(Q) @ M8 == right_act(M8, collapse(Q))
    assert gamma_of(Q.star()).T @ M8 == right_act(M8, collapse(Q.conj()))


def test_theta_transpose_counterexample():
    # a concrete instance where Gamma^t(Q*) M8 != M8 collapse(Q)
    Q = Biquaternion(E2)
    M8 = constants().M8
    assert gamma_of(Q.star()).T @ M8 != right_act(M8, collapse(Q))
    assert reconstruct_gamma(Q) == -E2
