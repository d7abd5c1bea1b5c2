"""Exact real matrix representations of real and complex quaternions."""

from hyperquat.linalg import Matrix, SolveResult, constants, mat_det, mat_rank, mat_solve
from hyperquat.literals import ParseError, format_biquat, format_quat, parse_biquat, parse_quat
from hyperquat.quaternions import (
    BI_I, BI_ONE, E1, E2, E3, ONE, ZERO, Biquaternion, NotInvertible, Quaternion,
    biquat_mul_classical, biquat_mul_paper, collapse,
)
from hyperquat.representations import (
    epsilon_of, gamma_of, lambda_of, reconstruct_gamma, reconstruct_theta, rho_of,
    theta_of, vec_biquat, vec_quat,
)
from hyperquat.solver import LinearEquation, SolveOutcome, solve, sylvester
from hyperquat.identities import catalog, check_identity, run_all

__version__ = "0.1.0"
