"""Eigenvalue verification, the involution identity, and exact matrix powers.

The eigenvalue attached to column j of an n-dimensional family member is
(-1)^(n+j) a^(2j-n-1), an exact unit of the coefficient ring.  Because
the scaled eigenvector matrix W satisfies W^2 = (1+a^2)^(n-1) I, integer
powers of the Pascal matrix come out of W diag(lambda^m) W divided by
(1+a^2)^(n-1); the division is performed exactly in the ring and any
remainder or leftover a-component is a hard error, which makes the power
routine a self-test of the whole formula chain.

Numeric checks evaluate everything in double precision at the positive
root and report max-norm residuals; exact checks carry zero tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pascal import IntMatrix, RingMatrix, build_r, build_rx, build_u, build_w
from .ring import A, ONE, RingElem, a_pow, metallic_ratio


def default_tolerance(n: int) -> float:
    """Numeric tolerance: 1e-9 through n = 8, 1e-8 beyond (rounding growth)."""
    return 1e-9 if n <= 8 else 1e-8


def _check_index(n: int, j: int) -> None:
    if not 1 <= j <= n:
        raise IndexError(f"index {j} outside 1..{n}")


def eigenvalue(n: int, j: int) -> RingElem:
    """The j-th eigenvalue (-1)^(n+j) a^(2j-n-1), 1 <= j <= n."""
    _check_index(n, j)
    lam = a_pow(2 * j - n - 1)
    return -lam if (n + j) % 2 else lam


def eigenvalue_power(n: int, j: int, m: int) -> RingElem:
    """lambda_j^m for any integer m; negative m negates the a-exponent."""
    _check_index(n, j)
    lam = a_pow(m * (2 * j - n - 1))
    return -lam if ((n + j) % 2 and m % 2) else lam


@dataclass
class EigenPair:
    """Eigenvalue and eigenvector for one column index (1-based)."""

    index: int
    value: RingElem
    vector: tuple[RingElem, ...]


def eigen_pair(n: int, j: int) -> EigenPair:
    return EigenPair(j, eigenvalue(n, j), build_u(n).column(j))


def verify_eigenpair(n: int, p: int, x: int | None = 1) -> bool:
    """Exact check that the matrix maps column p of U to lambda_p times it.

    ``x`` selects the coefficient ring: an integer specializes there
    (default 1, the golden-ratio case), None keeps Z[x] coefficients.
    """
    _check_index(n, p)
    r = build_rx(n)
    u = build_u(n)
    lam = eigenvalue(n, p)
    if x is not None:
        r = r.specialize(x)
        u = u.specialize(x)
        lam = lam.specialize(x)
    col = u.column(p)
    lhs = r.mul_vector(col)
    rhs = tuple(lam * e for e in col)
    return lhs == rhs


def involution_scale(n: int) -> RingElem:
    """(1 + a^2)^(n-1), the scalar square of the W matrix."""
    return (ONE + A * A) ** (n - 1)


def verify_involution(n: int, x: int | None = 1) -> bool:
    """Exact check that W @ W = (1 + a^2)^(n-1) I.

    With ``x=None`` the comparison is over Z[x] coefficients, the
    stronger polynomial-entry form of the statement.
    """
    w = build_w(n)
    scale = involution_scale(n)
    if x is not None:
        w = w.specialize(x)
        scale = scale.specialize(x)
    lhs = w @ w
    rhs = RingMatrix.identity(n, w.x_image).scalar_mul(scale)
    return lhs == rhs


@dataclass
class PowerResult:
    """Closed-form integer power, with the pre-extraction ring matrix."""

    n: int
    exponent: int
    matrix: IntMatrix
    raw: RingMatrix


def matrix_power_closed_form(n: int, m: int) -> PowerResult:
    """m-th power of the n x n Pascal matrix via the spectral identity.

    Computes W diag(lambda_j^m) W at x = 1 and divides each entry by
    (1 + a^2)^(n-1).  Every quotient must be a plain integer; a failed
    division or a leftover a-component raises (ExactDivisionError or
    ValueError) and would signal a formula bug, never an expected state.
    """
    w = build_w(n).specialize(1)
    diag = RingMatrix.diagonal(
        [eigenvalue_power(n, j, m).specialize(1) for j in range(1, n + 1)]
    )
    raw = w @ diag @ w
    scale = involution_scale(n).specialize(1)
    entries = [
        [e.divide_exact(scale).as_int() for e in row] for row in raw.rows
    ]
    return PowerResult(n, m, IntMatrix(entries), raw)


def matrix_power_oracle(n: int, m: int) -> IntMatrix:
    """Independent m-th power: repeated integer multiplication, and for
    negative m the adjugate inverse (the determinant is +/-1)."""
    r = build_r(n)
    if m >= 0:
        return r ** m
    return r.inverse_unimodular() ** (-m)


def eigenvalues_numeric(n: int, x_value: float = 1.0) -> list[float]:
    """All eigenvalues in double precision at the positive root."""
    a = metallic_ratio(x_value)
    return [
        (-1.0 if (n + j) % 2 else 1.0) * a ** (2 * j - n - 1)
        for j in range(1, n + 1)
    ]


def eigen_distinctness(n: int, x_value: float = 1.0) -> float:
    """Minimum pairwise eigenvalue gap; +inf when n = 1."""
    if n == 1:
        return math.inf
    lams = eigenvalues_numeric(n, x_value)
    return min(
        abs(lams[i] - lams[j]) for i in range(n) for j in range(i + 1, n)
    )


def eigenbasis_det_numeric(n: int, x_value: float = 1.0) -> float:
    """Determinant of the numeric eigenvector matrix (independence check)."""
    return float(np.linalg.det(np.array(build_u(n).eval_float(x_value))))


@dataclass
class DiagonalizationReport:
    """Max-norm residuals of the numeric involution and diagonalization."""

    n: int
    x_value: float
    tol: float
    residual_involution: float
    residual_diagonalization: float

    @property
    def passed(self) -> bool:
        return (
            self.residual_involution <= self.tol
            and self.residual_diagonalization <= self.tol
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x": self.x_value,
            "tol": self.tol,
            "residual_involution": self.residual_involution,
            "residual_diagonalization": self.residual_diagonalization,
            "pass": self.passed,
        }


def verify_diagonalization_numeric(
    n: int, x_value: float = 1.0, tol: float | None = None
) -> DiagonalizationReport:
    """Build V = W / (1+a^2)^((n-1)/2) numerically and report
    max-norm residuals of V@V - I and V@R@V - diag(lambda)."""
    if tol is None:
        tol = default_tolerance(n)
    a = metallic_ratio(x_value)
    w = np.array(build_w(n).eval_float(x_value))
    v = w / (1.0 + a * a) ** ((n - 1) / 2.0)
    r = np.array(build_rx(n).eval_float(x_value))
    lam = np.diag(eigenvalues_numeric(n, x_value))
    res_inv = float(np.max(np.abs(v @ v - np.eye(n))))
    res_diag = float(np.max(np.abs(v @ r @ v - lam)))
    return DiagonalizationReport(n, float(x_value), tol, res_inv, res_diag)
