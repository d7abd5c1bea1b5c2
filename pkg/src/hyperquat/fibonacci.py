"""Fibonacci numbers, Fibonacci quaternions and their matrices.

``F_n = f_n + f_{n+1} e1 + f_{n+2} e2 + f_{n+3} e3`` and
``Q_n = F_n + i F_{n+1}``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from hyperquat.linalg import Matrix, constants, mat_det, mat_rank
from hyperquat.quaternions import Biquaternion, Quaternion
from hyperquat.representations import gamma_of, lambda_of, rho_of, theta_of


def _check_index(n: int):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"Fibonacci index must be a non-negative integer, got {n!r}")


@lru_cache(maxsize=None)
def _fib_int(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib(n: int) -> Fraction:
    _check_index(n)
    return Fraction(_fib_int(n))


def fib_quaternion(n: int) -> Quaternion:
    _check_index(n)
    return Quaternion(*(fib(n + k) for k in range(4)))


def complex_fib_quaternion(n: int) -> Biquaternion:
    _check_index(n)
    return Biquaternion(fib_quaternion(n), fib_quaternion(n + 1))


def closed_forms(n: int) -> dict[str, Fraction]:
    """The published closed-form values at index ``n``, evaluated as printed."""
    _check_index(n)
    f = [fib(n + k) for k in range(5)]
    f2n3 = fib(2 * n + 3)
    g1 = f[0] ** 2 + 2 * f[0] * f[2] + 2 * f[2] ** 2 + f[4] ** 2 + 2 * f[2] * f[4]
    g2 = (f[0] ** 2 - 2 * f[0] * f[2] + 4 * f[1] ** 2 + 2 * f[2] ** 2
          + 4 * f[3] ** 2 + f[4] ** 2 - 2 * f[2] * f[4])
    s = (f[0] + f[2]) ** 2 + (f[2] + f[4]) ** 2
    return {
        "norm_F": 3 * f2n3,
        "det_lambda_F": 9 * f2n3**2,
        "det_rho_F": 9 * f2n3**2,
        "det_gamma_Q_expanded": g1**2 * g2**2,
        "det_gamma_Q": 25 * s**2 * (f[1] ** 2 + f[3] ** 2) ** 2,
        "det_theta_Q": 25 * s**2 * (f[1] ** 2 + f[3] ** 2) ** 2,
        "det_D_expanded": 256 * (f[0] - f[2]) ** 2 * (f[0] + f[2]) ** 2 * g1 * g2,
        "det_D": 1280 * f[1] ** 2 * (f[0] + f[2]) ** 2 * s * (f[1] ** 2 + f[3] ** 2),
        "det_delta_Q": 256 * f[3] ** 4 * (f[2] + f[4]) ** 4,
    }


def equation_matrices(n: int) -> tuple[Matrix, Matrix, Matrix]:
    """``B = G - P T P``, ``D = G + P T P`` and ``delta = G - T`` for Q_n."""
    Q = complex_fib_quaternion(n)
    G, T = gamma_of(Q), theta_of(Q)
    P = constants().P
    PTP = P @ T @ P
    return G - PTP, G + PTP, G - T


def direct_values(n: int) -> dict[str, Fraction]:
    """Ground-truth counterparts of :func:`closed_forms`, from the matrices."""
    F = fib_quaternion(n)
    Q = complex_fib_quaternion(n)
    B, D, delta = equation_matrices(n)
    det_gamma = mat_det(gamma_of(Q))
    det_D = mat_det(D)
    return {
        "norm_F": F.norm(),
        "det_lambda_F": mat_det(lambda_of(F)),
        "det_rho_F": mat_det(rho_of(F)),
        "det_gamma_Q_expanded": det_gamma,
        "det_gamma_Q": det_gamma,
        "det_theta_Q": mat_det(theta_of(Q)),
        "det_D_expanded": det_D,
        "det_D": det_D,
        "det_delta_Q": mat_det(delta),
    }


def closed_form_checks(n: int) -> list[dict]:
    printed = closed_forms(n)
    direct = direct_values(n)
    return [
        {"name": k, "n": n, "printed": printed[k], "direct": direct[k],
         "match": printed[k] == direct[k]}
        for k in printed
    ]


# Published 8x8 layouts; "2f3" means 2*f_{n+3}.
LAYOUTS = {
    "gamma": """
        f0 -f1 -f2 -f3 -f1  f2 -f3 -f4
        f1  f0 -f3  f2 -f2 -f1 -f4  f3
        f2  f3  f0 -f1  f3  f4 -f1  f2
        f3 -f2  f1  f0  f4 -f3 -f2 -f1
        f1 -f2 -f3 -f4  f0 -f1  f2  f3
        f2  f1 -f4  f3  f1  f0  f3 -f2
        f3  f4  f1 -f2 -f2 -f3  f0 -f1
        f4 -f3  f2  f1 -f3  f2  f1  f0
    """,
    "theta": """
        f0 -f1 -f2 -f3 -f1  f2  f3  f4
        f1  f0  f3 -f2 -f2 -f1 -f4  f3
        f2 -f3  f0  f1 -f3  f4 -f1 -f2
        f3  f2 -f1  f0 -f4 -f3  f2 -f1
        f1 -f2  f3  f4  f0 -f1  f2  f3
        f2  f1 -f4  f3  f1  f0 -f3  f2
       -f3  f4  f1  f2 -f2  f3  f0  f1
       -f4 -f3 -f2  f1 -f3 -f2 -f1  f0
    """,
    "B": """
        0    0    0    0    0  0    0    0
        0    0 -2f3  2f2    0  0 -2f4  2f3
        0  2f3    0 -2f1  2f3  0 -2f1    0
        0 -2f2  2f1    0  2f4  0    0 -2f1
        0    0 -2f3 -2f4    0  0  2f2  2f3
        0    0    0    0    0  0    0    0
        0  2f4  2f1    0 -2f2  0    0 -2f1
        0 -2f3    0  2f1 -2f3  0  2f1    0
    """,
    "D": """
        2f0 -2f1 -2f2 -2f3 -2f1  2f2 -2f3 -2f4
        2f1  2f0    0    0 -2f2 -2f1    0    0
        2f2    0  2f0    0    0  2f4    0  2f2
        2f3    0    0  2f0    0 -2f3 -2f2    0
        2f1 -2f2    0    0  2f0 -2f1    0    0
        2f2  2f1 -2f4  2f3  2f1  2f0  2f3 -2f2
        2f3    0    0 -2f2    0 -2f3  2f0    0
        2f4    0  2f2    0    0  2f2    0  2f0
    """,
    "delta": """
          0    0    0    0    0    0 -2f3 -2f4
          0    0 -2f3  2f2    0    0    0    0
          0  2f3    0 -2f1  2f3    0    0  2f2
          0 -2f2  2f1    0  2f4    0 -2f2    0
          0    0 -2f3 -2f4    0    0    0    0
          0    0    0    0    0    0  2f3 -2f2
        2f3    0    0 -2f2    0 -2f3    0 -2f1
        2f4    0  2f2    0    0  2f2  2f1    0
    """,
}

_CELL_RE = re.compile(r"(-?)(\d*)f(\d)")


def layout_matrix(name: str, n: int) -> Matrix:
    """Instantiate a published layout at index ``n``."""
    rows = []
    for line in LAYOUTS[name].strip().splitlines():
        row = []
        for cell in line.split():
            if cell == "0":
                row.append(0)
                continue
            m = _CELL_RE.fullmatch(cell)
            sign = -1 if m[1] else 1
            row.append(sign * int(m[2] or 1) * fib(n + int(m[3])))
        rows.append(row)
    return Matrix(rows)


def layout_checks(n: int) -> list[dict]:
    """Compare each published layout with the matrix assembled from the maps."""
    Q = complex_fib_quaternion(n)
    B, D, delta = equation_matrices(n)
    built = {"gamma": gamma_of(Q), "theta": theta_of(Q), "B": B, "D": D, "delta": delta}
    out = []
    for name, M in built.items():
        ref = layout_matrix(name, n)
        diffs = [(i, j) for i in range(8) for j in range(8) if ref[i, j] != M[i, j]]
        out.append({"name": name, "n": n, "match": not diffs, "differing_entries": diffs})
    return out


def rank_of_B(n: int) -> int:
    return mat_rank(equation_matrices(n)[0])
