"""Registered identity checks over seeded random exact inputs.

Each trial draws its inputs from ``random.Random(f"{seed}:{trial}")``, so a
report depends only on (seed, trials, bound) and not on evaluation order.
Identities that need no random input run over a fixed case list instead and
report the number of cases as ``trials``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from hyperquat import fibonacci as fibo
from hyperquat.linalg import Matrix, constants, mat_det
from hyperquat.literals import format_biquat, format_quat
from hyperquat.quaternions import (
    E1, E2, E3, ONE, Biquaternion, Quaternion, biquat_mul_classical, collapse,
)
from hyperquat.representations import (
    epsilon_of, gamma_of, gamma_star_block_transpose, lambda_of, reconstruct_block_transpose,
    reconstruct_gamma, reconstruct_gamma_untransposed, reconstruct_theta, rho_of,
    right_act, theta_of, vec_biquat, vec_quat,
)
from hyperquat.scalars import format_rational

DEFAULT_TRIALS = 100
DEFAULT_SEED = 61632
DEFAULT_BOUND = 9


@dataclass
class IdentityReport:
    identity: str
    trials: int
    seed: int
    status: str
    counterexamples: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "trials": self.trials,
            "seed": self.seed,
            "status": self.status,
            "counterexamples": self.counterexamples,
        }


def _ser(v):
    if isinstance(v, Matrix):
        return v.to_json()
    if isinstance(v, Quaternion):
        return format_quat(v)
    if isinstance(v, Biquaternion):
        return format_biquat(v)
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_ser(x) for x in v]
    return v


class Sampler:
    """Integer-coefficient inputs in [-bound, bound]."""

    def __init__(self, rng: random.Random, bound: int):
        self.rng = rng
        self.bound = bound

    def int(self) -> int:
        return self.rng.randint(-self.bound, self.bound)

    def rational(self) -> Fraction:
        return Fraction(self.int(), self.rng.randint(1, max(self.bound, 1)))

    def quat(self) -> Quaternion:
        return Quaternion(*(self.int() for _ in range(4)))

    def nonzero_quat(self) -> Quaternion:
        q = self.quat()
        return q if not q.is_zero() else ONE

    def biquat(self) -> Biquaternion:
        return Biquaternion(self.quat(), self.quat())


@dataclass(frozen=True)
class Identity:
    id: str
    check: Callable
    expected: str = "holds"
    cases: tuple | None = None  # fixed case list; None means random trials
    doc: str = ""


CATALOG: dict[str, Identity] = {}


def register(id: str, expected: str = "holds", cases=None):
    def deco(fn):
        CATALOG[id] = Identity(id, fn, expected, None if cases is None else tuple(cases),
                               (fn.__doc__ or "").strip())
        return fn
    return deco


def _cx(inputs: dict, lhs, rhs, part: str | None = None) -> dict:
    inp = {k: _ser(v) for k, v in inputs.items()}
    if part is not None:
        inp["part"] = part
    return {"inputs": inp, "lhs": _ser(lhs), "rhs": _ser(rhs)}


def _compare(parts, inputs) -> dict | None:
    """First failing (label, lhs, rhs) triple, as a counterexample."""
    for label, lhs, rhs in parts:
        if lhs != rhs:
            return _cx(inputs, lhs, rhs, label)
    return None


# real quaternion representations

@register("prop_1_1_lambda_additive")
def _(s):
    x, y = s.quat(), s.quat()
    return _compare([(None, lambda_of(x + y), lambda_of(x) + lambda_of(y))], {"x": x, "y": y})


@register("prop_1_1_lambda_multiplicative")
def _(s):
    x, y = s.quat(), s.quat()
    return _compare([(None, lambda_of(x * y), lambda_of(x) @ lambda_of(y))], {"x": x, "y": y})


@register("prop_1_1_lambda_scalar")
def _(s):
    r, x = s.rational(), s.quat()
    return _compare([(None, lambda_of(r * x), r * lambda_of(x))], {"r": r, "x": x})


@register("prop_1_1_lambda_unit", cases=[None])
def _(_case):
    return _compare([(None, lambda_of(ONE), Matrix.identity(4))], {})


@register("prop_1_1_rho_additive")
def _(s):
    x, y = s.quat(), s.quat()
    return _compare([(None, rho_of(x + y), rho_of(x) + rho_of(y))], {"x": x, "y": y})


@register("prop_1_1_rho_antimultiplicative")
def _(s):
    x, y = s.quat(), s.quat()
    return _compare([(None, rho_of(x * y), rho_of(y) @ rho_of(x))], {"x": x, "y": y})


@register("prop_1_1_rho_scalar")
def _(s):
    r, x = s.rational(), s.quat()
    return _compare([(None, rho_of(r * x), r * rho_of(x))], {"r": r, "x": x})


@register("prop_1_1_rho_unit", cases=[None])
def _(_case):
    return _compare([(None, rho_of(ONE), Matrix.identity(4))], {})


@register("prop_1_1_inverses")
def _(s):
    x = s.nonzero_quat()
    xi = x.inverse()
    I4 = Matrix.identity(4)
    return _compare([
        ("lambda", lambda_of(x) @ lambda_of(xi), I4),
        ("rho", rho_of(x) @ rho_of(xi), I4),
    ], {"x": x})


@register("prop_1_2_vec_left")
def _(s):
    a, x = s.quat(), s.quat()
    return _compare([(None, vec_quat(a * x), lambda_of(a) @ vec_quat(x))], {"a": a, "x": x})


@register("prop_1_2_vec_right")
def _(s):
    b, x = s.quat(), s.quat()
    return _compare([(None, vec_quat(x * b), rho_of(b) @ vec_quat(x))], {"b": b, "x": x})


@register("prop_1_2_vec_both")
def _(s):
    a, b, x = s.quat(), s.quat(), s.quat()
    v = vec_quat(a * x * b)
    return _compare([
        ("lambda_rho", v, lambda_of(a) @ rho_of(b) @ vec_quat(x)),
        ("rho_lambda", v, rho_of(b) @ lambda_of(a) @ vec_quat(x)),
    ], {"a": a, "b": b, "x": x})


@register("prop_1_2_vec_commute")
def _(s):
    a, b = s.quat(), s.quat()
    return _compare([(None, rho_of(b) @ lambda_of(a), lambda_of(a) @ rho_of(b))], {"a": a, "b": b})


@register("prop_1_2_det")
def _(s):
    x = s.quat()
    n2 = x.norm() ** 2
    return _compare([
        ("lambda", mat_det(lambda_of(x)), n2),
        ("rho", mat_det(rho_of(x)), n2),
    ], {"x": x})


@register("prop_2_1_M")
def _(s):
    a = s.quat()
    c = constants()
    return _compare([
        ("lambda_M", lambda_of(a) @ c.M, right_act(c.M, a)),
        ("theta_M", c.theta @ c.M, right_act(c.M, E1)),
        ("lambda_e1_a", lambda_of(E1 * a), c.theta @ lambda_of(a)),
        ("lambda_a_e1", lambda_of(a * E1), lambda_of(a) @ c.theta),
    ], {"a": a})


@register("prop_2_2_star")
def _(s):
    x, a, b = s.quat(), s.quat(), s.quat()
    return _compare([
        ("product", (x * a).star(), x.star() * a.star()),
        ("sum", (a + b).star(), a.star() + b.star()),
        ("involution", a.star().star(), a),
        ("star_a_e1", a.star() * E1, E1 * a),
        ("a_e1", a * E1, E1 * a.star()),
        ("e1_a_e1", -a.star(), E1 * a * E1),
    ], {"x": x, "a": a, "b": b})


# complex quaternion representations

@register("prop_2_3_gamma_multiplicative")
def _(s):
    X, A = s.biquat(), s.biquat()
    return _compare([(None, gamma_of(X * A), gamma_of(X) @ gamma_of(A))], {"X": X, "A": A})


@register("prop_2_5")
def _(s):
    X, A = s.biquat(), s.biquat()
    c = constants()
    e = Matrix.vstack(Matrix.identity(4), Matrix.zeros(4))
    return _compare([
        ("first_column", gamma_of(X) @ e, Matrix.vstack(lambda_of(X.x), lambda_of(X.y))),
        ("first_column_vec", (gamma_of(X) @ e).submatrix(slice(None), slice(0, 1)), vec_biquat(X)),
        ("left_action", vec_biquat(A * X), gamma_of(A) @ vec_biquat(X)),
        ("alpha_star", c.alpha @ vec_quat(X.y.star()), vec_quat(X.y)),
        ("alpha_squared", c.alpha @ c.alpha, Matrix.identity(4)),
    ], {"X": X, "A": A})


@register("prop_2_6_M8", cases=[None])
def _(_case):
    M8 = constants().M8
    return _compare([(None, Fraction(-1, 4) * (M8.T @ M8), Matrix([[ONE]]))], {})


# row vector shown for M8^t in the published proof
PRINTED_M8_ROW = (E1, -ONE, E3, E2, -ONE, E1, E2, E3)


@register("prop_2_6_printed_row_matches_definition", expected="fails", cases=[None])
def _(_case):
    """The printed M8^t row differs from the definition (theta M ; -M) in two signs."""
    printed = Matrix([list(PRINTED_M8_ROW)])
    return _compare([(None, printed, constants().M8.T)], {})


@register("prop_2_6_printed_row_product", cases=[None])
def _(_case):
    """The printed row still squares to -4."""
    printed = Matrix([list(PRINTED_M8_ROW)])
    return _compare([(None, printed @ printed.T, Matrix([[-4 * ONE]]))], {})


@register("thm_2_7_i", expected="fails")
def _(s):
    """Gamma^t(Q*) M8 = M8 collapse(Q); false for the true transpose."""
    Q = s.biquat()
    M8 = constants().M8
    return _compare([(None, gamma_of(Q.star()).T @ M8, right_act(M8, collapse(Q)))], {"Q": Q})


@register("thm_2_7_ii", expected="fails")
def _(s):
    """-(1/4) M8^t Gamma^t(Q*) M8 = collapse(Q); false for the true transpose."""
    Q = s.biquat()
    return _compare([(None, reconstruct_gamma(Q), collapse(Q))], {"Q": Q})


@register("thm_2_7_i_conjugate")
def _(s):
    """With the true transpose, Gamma^t(Q*) M8 = M8 collapse(conj Q)."""
    Q = s.biquat()
    M8 = constants().M8
    return _compare([(None, gamma_of(Q.star()).T @ M8, right_act(M8, collapse(Q.conj())))],
                    {"Q": Q})


@register("thm_2_7_ii_conjugate")
def _(s):
    Q = s.biquat()
    return _compare([(None, reconstruct_gamma(Q), collapse(Q.conj()))], {"Q": Q})


@register("thm_2_7_i_block_transpose")
def _(s):
    """Block-swapped (not transposed) Gamma(Q*) sends M8 to M8 collapse(Q)."""
    Q = s.biquat()
    M8 = constants().M8
    return _compare([(None, gamma_star_block_transpose(Q) @ M8, right_act(M8, collapse(Q)))],
                    {"Q": Q})


@register("thm_2_7_ii_block_transpose")
def _(s):
    Q = s.biquat()
    return _compare([(None, reconstruct_block_transpose(Q), collapse(Q))], {"Q": Q})


@register("thm_2_7_ii_untransposed")
def _(s):
    """-(1/4) M8^t Gamma(Q*) M8 = x - e1 y*."""
    Q = s.biquat()
    return _compare([(None, reconstruct_gamma_untransposed(Q), Q.x - E1 * Q.y.star())],
                    {"Q": Q})


@register("prop_2_8_theta_antimultiplicative")
def _(s):
    X, A = s.biquat(), s.biquat()
    return _compare([(None, theta_of(X * A), theta_of(A) @ theta_of(X))], {"X": X, "A": A})


@register("prop_2_9")
def _(s):
    X, A, B = s.biquat(), s.biquat(), s.biquat()
    P = constants().P
    e = Matrix.vstack(Matrix.identity(4), Matrix.zeros(4))
    PTAP = P @ theta_of(A) @ P
    PTBP = P @ theta_of(B) @ P
    return _compare([
        ("first_column", (P @ theta_of(X) @ e).submatrix(slice(None), slice(0, 1)),
         vec_biquat(X)),
        ("right_action", vec_biquat(X * A), PTAP @ vec_biquat(X)),
        ("commute", gamma_of(A) @ PTBP, PTBP @ gamma_of(A)),
    ], {"X": X, "A": A, "B": B})


@register("thm_2_10")
def _(s):
    a, X = s.quat(), s.biquat()
    c = constants()
    return _compare([
        ("rho_to_lambda_t", c.A1 @ rho_of(a) @ c.A2, lambda_of(a).T),
        ("theta_to_gamma_t", c.M1 @ theta_of(X) @ c.M2, gamma_of(X).T),
    ], {"a": a, "X": X})


@register("remark_2_11", expected="fails")
def _(s):
    """-(1/4) N1 Theta^t(Q*) N2 = collapse(Q)."""
    Q = s.biquat()
    return _compare([(None, reconstruct_theta(Q), collapse(Q))], {"Q": Q})


@register("remark_2_11_untransposed")
def _(s):
    """-(1/4) N1 Theta^t(Q*) N2 = x - e1 y*, the same as the untransposed Gamma form."""
    Q = s.biquat()
    return _compare([
        (None, reconstruct_theta(Q), Q.x - E1 * Q.y.star()),
        ("equals_gamma_form", reconstruct_theta(Q), reconstruct_gamma_untransposed(Q)),
    ], {"Q": Q})


@register("collapse_not_injective", cases=[None])
def _(_case):
    Q = Biquaternion(ONE, E1)
    return _compare([(None, collapse(Q), Quaternion())], {"Q": Q})


@register("prop_2_12_det", expected="fails")
def _(s):
    """det Gamma(Q) = det Theta(Q) = n(aa* + b*b)^2 = n(a*a + b*b)^2.

    The norm forms come from det [[A, B], [C, D]] = det(AD - BC), which needs
    C and D to commute; for random Q they do not.
    """
    Q = s.biquat()
    a, b = Q.x, Q.y
    dg, dt = mat_det(gamma_of(Q)), mat_det(theta_of(Q))
    n1 = (a * a.star() + b.star() * b).norm() ** 2
    n2 = (a.star() * a + b.star() * b).norm() ** 2
    return _compare([
        ("gamma_theta", dg, dt),
        ("gamma_norm", dg, n1),
        ("theta_norm", dt, n2),
        ("norm_forms", n1, n2),
    ], {"Q": Q})


@register("prop_2_12_det_gamma_theta")
def _(s):
    Q = s.biquat()
    return _compare([(None, mat_det(gamma_of(Q)), mat_det(theta_of(Q)))], {"Q": Q})


@register("prop_2_12_det_commuting")
def _(s):
    """The norm forms hold when the off-diagonal blocks commute with the diagonal ones.

    Sampled as: b a real scalar, or a and b both in span{1, e1}.
    """
    a = s.quat()
    cases = [Biquaternion(a, Quaternion(s.int()))]
    cases.append(Biquaternion(Quaternion(s.int(), s.int()), Quaternion(s.int(), s.int())))
    for Q in cases:
        a, b = Q.x, Q.y
        found = _compare([
            ("gamma_norm", mat_det(gamma_of(Q)), (a * a.star() + b.star() * b).norm() ** 2),
            ("theta_norm", mat_det(theta_of(Q)), (a.star() * a + b.star() * b).norm() ** 2),
        ], {"Q": Q})
        if found:
            return found
    return None


@register("remark_3_4_paper_product_fails", expected="fails")
def _(s):
    """epsilon is neither multiplicative nor anti-multiplicative for the twisted product.

    A counterexample is a pair with both equalities violated.
    """
    X, A = s.biquat(), s.biquat()
    lhs = epsilon_of(X * A)
    fwd, bwd = epsilon_of(X) @ epsilon_of(A), epsilon_of(A) @ epsilon_of(X)
    if lhs != fwd and lhs != bwd:
        return _cx({"X": X, "A": A}, lhs, fwd)
    return None


@register("epsilon_classical_multiplicative")
def _(s):
    X, A = s.biquat(), s.biquat()
    return _compare([(None, epsilon_of(biquat_mul_classical(X, A)),
                      epsilon_of(X) @ epsilon_of(A))], {"X": X, "A": A})


# Fibonacci families

@register("fib_norm", cases=range(21))
def _(n):
    return _compare([(None, fibo.fib_quaternion(n).norm(), 3 * fibo.fib(2 * n + 3))], {"n": n})


@register("ex_3_1_det_lambda", cases=range(13))
def _(n):
    F = fibo.fib_quaternion(n)
    v = 9 * fibo.fib(2 * n + 3) ** 2
    return _compare([
        ("lambda", mat_det(lambda_of(F)), v),
        ("rho", mat_det(rho_of(F)), v),
    ], {"n": n})


def _closed(n, names):
    checks = {c["name"]: c for c in fibo.closed_form_checks(n)}
    return _compare([(k, checks[k]["direct"], checks[k]["printed"]) for k in names], {"n": n})


@register("ex_3_2_det_gamma_closed_form", cases=range(11))
def _(n):
    return _closed(n, ["det_gamma_Q_expanded", "det_gamma_Q"])


@register("ex_3_3_det_theta_closed_form", cases=range(11))
def _(n):
    Q = fibo.complex_fib_quaternion(n)
    found = _compare([("gamma_theta", mat_det(gamma_of(Q)), mat_det(theta_of(Q)))], {"n": n})
    return found or _closed(n, ["det_theta_Q"])


@register("ex_3_5_B_singular_rank_4", cases=range(11))
def _(n):
    B, _, _ = fibo.equation_matrices(n)
    return _compare([("det", mat_det(B), 0), ("rank", B.rank(), 4)], {"n": n})


@register("ex_3_5_det_D_closed_form", cases=range(11))
def _(n):
    found = _closed(n, ["det_D_expanded", "det_D"])
    if found is None and fibo.direct_values(n)["det_D"] == 0:
        return _cx({"n": n}, 0, "nonzero")
    return found


@register("ex_3_6_det_delta_closed_form", cases=range(11))
def _(n):
    found = _closed(n, ["det_delta_Q"])
    if found is None and fibo.direct_values(n)["det_delta_Q"] == 0:
        return _cx({"n": n}, 0, "nonzero")
    return found


@register("ex_3_matrix_layouts", cases=range(11))
def _(n):
    for c in fibo.layout_checks(n):
        if not c["match"]:
            return _cx({"n": n, "matrix": c["name"]}, c["differing_entries"], [])
    return None


def catalog() -> list[str]:
    return list(CATALOG)


def _cases(ident: Identity, trials: int, seed: int, bound: int) -> Iterator[tuple]:
    if ident.cases is not None:
        for case in ident.cases:
            yield (case,)
    else:
        for t in range(trials):
            yield (Sampler(random.Random(f"{seed}:{t}"), bound),)


def check_identity(identity_id: str, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                   bound: int = DEFAULT_BOUND) -> IdentityReport:
    try:
        ident = CATALOG[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None
    if trials < 0 or bound < 0 or seed < 0:
        raise ValueError("trials, seed and bound must be non-negative")
    found = []
    n = 0
    for args in _cases(ident, trials, seed, bound):
        n += 1
        cx = ident.check(*args)
        if cx is not None:
            found.append(cx)
    return IdentityReport(identity_id, n, seed, "fails" if found else "holds", found)


def run_all(ids=None, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
            bound: int = DEFAULT_BOUND) -> list[IdentityReport]:
    return [check_identity(i, trials, seed, bound) for i in (ids or catalog())]


def broken(reports: list[IdentityReport]) -> list[IdentityReport]:
    """Reports of identities expected to hold that failed."""
    return [r for r in reports if CATALOG[r.identity].expected == "holds" and r.status == "fails"]
