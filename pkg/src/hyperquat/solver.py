"""Linear equations ``sum_k A_k X B_k = C`` over H_C.

``vec(A X B) = Gamma(A) P Theta(B) P vec(X)`` turns the equation into an
8x8 rational system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hyperquat.linalg import Matrix, constants, mat_solve
from hyperquat.literals import format_biquat, parse_biquat
from hyperquat.quaternions import Biquaternion
from hyperquat.representations import biquat_from_vec, gamma_of, theta_of, vec_biquat


class InvariantBreach(RuntimeError):
    """A returned solution failed direct substitution; this is a bug, not bad input."""


@dataclass(frozen=True)
class LinearEquation:
    terms: tuple[tuple[Biquaternion, Biquaternion], ...]
    rhs: Biquaternion

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((A, B) for A, B in self.terms))
        if not self.terms:
            raise ValueError("equation needs at least one term")

    def lhs(self, X: Biquaternion) -> Biquaternion:
        total = Biquaternion()
        for A, B in self.terms:
            total = total + A * X * B
        return total

    def residual(self, X: Biquaternion) -> Biquaternion:
        return self.lhs(X) - self.rhs

    @classmethod
    def from_json(cls, obj: dict) -> LinearEquation:
        terms = [(parse_biquat(t["A"]), parse_biquat(t["B"])) for t in obj["terms"]]
        return cls(tuple(terms), parse_biquat(obj["rhs"]))

    def to_json(self) -> dict:
        return {
            "terms": [{"A": format_biquat(A), "B": format_biquat(B)} for A, B in self.terms],
            "rhs": format_biquat(self.rhs),
        }


@dataclass(frozen=True)
class SolveOutcome:
    kind: str  # "unique" | "affine" | "inconsistent"
    rank: int
    solution: Biquaternion | None = None
    nullspace: tuple[Biquaternion, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "solution": None if self.solution is None else format_biquat(self.solution),
            "nullspace": [format_biquat(v) for v in self.nullspace],
        }


def system_matrix(eq: LinearEquation) -> Matrix:
    P = constants().P
    total = None
    for A, B in eq.terms:
        term = gamma_of(A) @ P @ theta_of(B) @ P
        total = term if total is None else total + term
    return total


def solve(eq: LinearEquation) -> SolveOutcome:
    res = mat_solve(system_matrix(eq), vec_biquat(eq.rhs))
    if res.kind == "inconsistent":
        return SolveOutcome("inconsistent", rank=res.rank)
    X0 = biquat_from_vec(res.solution)
    kernel = tuple(biquat_from_vec(v) for v in res.nullspace)
    if not eq.residual(X0).is_zero():
        raise InvariantBreach(f"particular solution {X0} does not satisfy the equation")
    homogeneous = LinearEquation(eq.terms, Biquaternion())
    for K in kernel:
        if not homogeneous.residual(K).is_zero():
            raise InvariantBreach(f"kernel vector {K} is not a homogeneous solution")
    return SolveOutcome(res.kind, rank=res.rank, solution=X0, nullspace=kernel)


def sylvester(A: Biquaternion, B: Biquaternion, C: Biquaternion, sign: int = 1) -> LinearEquation:
    """``A X + sign * X B = C``."""
    one = Biquaternion.from_coeffs([1, 0, 0, 0, 0, 0, 0, 0])
    return LinearEquation(((A, one), (sign * one, B)), C)


def equation(terms: Sequence[tuple[Biquaternion, Biquaternion]], rhs: Biquaternion) -> LinearEquation:
    return LinearEquation(tuple(terms), rhs)
