"""Retraction / inverse-retraction pairs on the Stiefel manifold.

Three invertible pairs are provided:

* PF: the classical polar factor retraction, inverted by solving a
  symmetric Sylvester equation.
* PL: the polar-light retraction, which twists the p-by-p block by a
  matrix exponential and has a closed-form inverse built from one small
  SVD and one principal log.
* PL_CAYLEY: the PL pair with exp/log replaced by the Cayley transform
  and its inverse.

All O(n) work is plain matrix-matrix multiplication; decompositions only
touch p-by-p blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import matfun
from .core import StiefelPoint, TangentVector, check_point
from .matfun import DomainError, cay, cay_inv, expm_skew, invsqrtm_spd, logm_so

# Floor on the singular values of U0.T @ U1 below which the PL chart
# (and its inverse) is treated as degenerate.
SIGMA_MIN = 1e-8


@dataclass(frozen=True)
class RetractionKind:
    """Tag selecting a retraction for experiments; 'exp' carries beta."""

    tag: str
    beta: float | None = None

    def __str__(self) -> str:
        if self.tag == "exp":
            return f"exp(beta={self.beta})"
        return self.tag


PF = RetractionKind("pf")
PL = RetractionKind("pl")
PL_CAYLEY = RetractionKind("pl_cayley")


def exp_kind(beta: float) -> RetractionKind:
    return RetractionKind("exp", beta)


def pf_ret(xi: TangentVector) -> StiefelPoint:
    """Polar factor retraction (U + Xi)(I + Xi.T Xi)^{-1/2}."""
    U = xi.base.U
    p = xi.base.p
    N = invsqrtm_spd(np.eye(p) + xi.Xi.T @ xi.Xi)
    return StiefelPoint((U + xi.Xi) @ N)


def pf_inv(base: StiefelPoint, U1: StiefelPoint) -> TangentVector:
    """Inverse polar factor retraction via the Sylvester equation.

    With C = U0.T U1 and X the symmetric solution of C X + X C.T = 2 I,
    the preimage is Xi = U1 X - U0.
    """
    C = base.U.T @ U1.U
    try:
        X = matfun.solve_pf_sylvester(C)
    except DomainError as exc:
        raise DomainError(f"pf_inv: outside PF injectivity domain ({exc})") from exc
    return TangentVector(base, U1.U @ X - base.U)


def pl_ret(xi: TangentVector) -> StiefelPoint:
    """Polar-light retraction.

    (U (exp(A) - A) + Xi)(I + Xi.T Xi + A^2)^{-1/2} with A = U.T Xi.
    The normalizer equals (I + B.T B)^{-1/2} since A.T A + A^2 = 0.
    """
    U = xi.base.U
    p = xi.base.p
    A = U.T @ xi.Xi
    A = 0.5 * (A - A.T)
    S = np.eye(p) + xi.Xi.T @ xi.Xi + A @ A
    N = invsqrtm_spd(0.5 * (S + S.T))
    return StiefelPoint((U @ (expm_skew(A) - A) + xi.Xi) @ N)


class _PlFactors(NamedTuple):
    ortho: np.ndarray  # M R.T, the polar/Procrustes factor of U0.T U1
    r_sinv_rt: np.ndarray  # R S^{-1} R.T


def _pl_factors(base: StiefelPoint, U1: StiefelPoint) -> _PlFactors:
    M, s, Rt = np.linalg.svd(base.U.T @ U1.U)
    if s[-1] <= SIGMA_MIN:
        raise DomainError(
            "pl_inv: U0.T U1 nearly singular, outside chart neighborhood"
        )
    ortho = M @ Rt
    if np.linalg.det(ortho) < 0:
        raise DomainError(
            "pl_inv: polar factor has negative determinant, "
            "outside the path-connected chart neighborhood"
        )
    return _PlFactors(ortho, (Rt.T * (1.0 / s)) @ Rt)


def pl_inv(base: StiefelPoint, U1: StiefelPoint) -> TangentVector:
    """Closed-form inverse of the polar-light retraction.

    With the SVD M diag(s) R.T = U0.T U1, the preimage is
    U0 (log(M R.T) - M R.T) + U1 R diag(1/s) R.T.
    """
    F = _pl_factors(base, U1)
    Xi = base.U @ (logm_so(F.ortho) - F.ortho) + U1.U @ F.r_sinv_rt
    return TangentVector(base, Xi)


def pl_cay_ret(xi: TangentVector) -> StiefelPoint:
    """Polar-light retraction with exp(A) replaced by the Cayley transform."""
    U = xi.base.U
    p = xi.base.p
    A = U.T @ xi.Xi
    A = 0.5 * (A - A.T)
    S = np.eye(p) + xi.Xi.T @ xi.Xi + A @ A
    N = invsqrtm_spd(0.5 * (S + S.T))
    return StiefelPoint((U @ (cay(A) - A) + xi.Xi) @ N)


def pl_cay_inv(base: StiefelPoint, U1: StiefelPoint) -> TangentVector:
    """Inverse of pl_cay_ret, with the log replaced by the inverse Cayley."""
    F = _pl_factors(base, U1)
    A = cay_inv(F.ortho)
    A = 0.5 * (A - A.T)
    Xi = base.U @ (A - F.ortho) + U1.U @ F.r_sinv_rt
    return TangentVector(base, Xi)


class ChartCoordinates(NamedTuple):
    """Coordinates (A skew, B rectangular) of the chart at E = [I; 0]."""

    A: np.ndarray
    B: np.ndarray


def chart_at_E(U: StiefelPoint) -> ChartCoordinates:
    """Chart at the canonical point: the PL inverse specialized to base E.

    A is the principal log of the polar factor of the upper p-by-p block;
    B is the lower block times the inverse of the symmetric factor.
    """
    p = U.p
    U1 = U.U[:p, :]
    U2 = U.U[p:, :]
    M, s, Rt = np.linalg.svd(U1)
    if s[-1] <= SIGMA_MIN:
        raise DomainError("chart_at_E: upper block nearly singular")
    ortho = M @ Rt
    if np.linalg.det(ortho) < 0:
        raise DomainError("chart_at_E: polar factor not in SO(p)")
    inv_spd = (Rt.T * (1.0 / s)) @ Rt
    return ChartCoordinates(logm_so(ortho), U2 @ inv_spd)


def param_at_E(c: ChartCoordinates) -> StiefelPoint:
    """Parameterization inverse to chart_at_E: [exp(A); B](I + B.T B)^{-1/2}."""
    A, B = np.asarray(c.A, dtype=float), np.asarray(c.B, dtype=float)
    p = A.shape[0]
    top = expm_skew(A)
    N = invsqrtm_spd(np.eye(p) + B.T @ B)
    return check_point(np.vstack([top @ N, B @ N]))


RetractFn = Callable[[TangentVector], StiefelPoint]
InverseFn = Callable[[StiefelPoint, StiefelPoint], TangentVector]

# Invertible retractions available to the benchmark harness.
RETRACTION_PAIRS: dict[str, tuple[RetractFn, InverseFn]] = {
    "pf": (pf_ret, pf_inv),
    "pl": (pl_ret, pl_inv),
    "pl_cayley": (pl_cay_ret, pl_cay_inv),
}
