"""Dense matrix functions on small square matrices.

Everything here operates on p-by-p (or 2p-by-2p) arrays; the manifold
routines reduce their work to these kernels plus tall-skinny matrix
products. All functions are pure and validate their structural
preconditions (skewness, orthogonality, positive definiteness) before
computing.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
import scipy.linalg


class ValidationError(ValueError):
    """Input violates a structural precondition (shape, skewness, SPD, ...)."""


class DomainError(ValueError):
    """Input is outside the domain of the requested map (chart, log branch, ...)."""


# Rotation angles above pi - ANGLE_GUARD are rejected by the principal log.
ANGLE_GUARD = 1e-6


def tol_orth(p: int) -> float:
    return 1e-8 * np.sqrt(p)


def tol_skew(p: int) -> float:
    return 1e-8 * np.sqrt(p)


def tol_sym(p: int) -> float:
    return 1e-8 * np.sqrt(p)


def tol_roundtrip(p: int) -> float:
    return 1e-10 * np.sqrt(p)


EPS_SPD = 1e-12


def _check_square(M: np.ndarray, name: str) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValidationError(f"{name} contains non-finite entries")
    return M


def expm_skew(A: np.ndarray) -> np.ndarray:
    """Exponential of a skew-symmetric matrix; the result is in SO(p).

    Uses scaling-and-squaring on the skew input; the output is returned
    as computed, without re-orthogonalization.
    """
    A = _check_square(A, "A")
    p = A.shape[0]
    defect = np.linalg.norm(A + A.T)
    if defect > tol_skew(p):
        raise ValidationError(f"expm_skew: input not skew-symmetric (defect {defect:.3e})")
    return scipy.linalg.expm(A)


def logm_so(Q: np.ndarray) -> np.ndarray:
    """Principal logarithm of a special orthogonal matrix.

    Q is normal, so its complex Schur form is diagonal; the log is
    reassembled from the principal logs i*theta of the unit-modulus
    eigenvalues and skew-symmetrized to remove roundoff asymmetry.

    Raises DomainError when a rotation angle reaches pi (the principal
    branch boundary); this also catches det(Q) = -1 inputs.
    """
    Q = _check_square(Q, "Q")
    p = Q.shape[0]
    defect = np.linalg.norm(Q.T @ Q - np.eye(p))
    if defect > tol_orth(p):
        raise ValidationError(f"logm_so: input not orthogonal (defect {defect:.3e})")
    T, Z = scipy.linalg.schur(Q, output="complex")
    theta = np.angle(np.diagonal(T))
    if np.max(np.abs(theta)) > np.pi - ANGLE_GUARD:
        raise DomainError(
            "logm_so: rotation angle at or near pi, outside principal-log domain"
        )
    A = ((Z * (1j * theta)) @ Z.conj().T).real
    return 0.5 * (A - A.T)


def invsqrtm_spd(S: np.ndarray) -> np.ndarray:
    """Inverse square root of a symmetric positive definite matrix.

    Computed by symmetric eigendecomposition; the result T is the unique
    SPD matrix with T @ S @ T = I.
    """
    S = _check_square(S, "S")
    p = S.shape[0]
    defect = np.linalg.norm(S - S.T)
    if defect > tol_sym(p):
        raise ValidationError(f"invsqrtm_spd: input not symmetric (defect {defect:.3e})")
    w, V = np.linalg.eigh(0.5 * (S + S.T))
    if w[0] <= EPS_SPD:
        raise ValidationError(
            f"invsqrtm_spd: input not positive definite (smallest eigenvalue {w[0]:.3e})"
        )
    T = (V * w**-0.5) @ V.T
    return 0.5 * (T + T.T)


class SvdTriple(NamedTuple):
    left: np.ndarray
    singvals: np.ndarray
    right: np.ndarray


def svd_square(C: np.ndarray) -> SvdTriple:
    """Full SVD of a square matrix, C = left @ diag(singvals) @ right.T."""
    C = _check_square(C, "C")
    M, s, Rt = np.linalg.svd(C)
    return SvdTriple(M, s, Rt.T)


def solve_pf_sylvester(C: np.ndarray) -> np.ndarray:
    """Solve C @ X + X @ C.T = 2*I for symmetric X.

    Route: complex eigendecomposition C = V D V^{-1}; with X = V Y V.T the
    equation decouples into Y_ij = 2 G_ij / (d_i + d_j), G = (V.T V)^{-1}.
    Rejects eigenvalue pairs with d_i + d_j near zero, where the equation
    is singular and the inverse polar factor retraction is undefined.
    """
    C = _check_square(C, "C")
    d, V = np.linalg.eig(C.astype(complex))
    pair_sums = np.abs(d[:, None] + d[None, :])
    eps_sylv = 1e-10 * np.linalg.norm(C, 2)
    if np.min(pair_sums) <= eps_sylv:
        raise DomainError(
            "solve_pf_sylvester: eigenvalue pair sum near zero, "
            "inverse PF retraction undefined/ill-conditioned"
        )
    G = np.linalg.inv(V.T @ V)
    Y = 2.0 * G / (d[:, None] + d[None, :])
    X = (V @ Y @ V.T).real
    return 0.5 * (X + X.T)


def cay(A: np.ndarray) -> np.ndarray:
    """Cayley transform (I - A/2)^{-1} (I + A/2); orthogonal for skew A."""
    A = _check_square(A, "A")
    p = A.shape[0]
    try:
        return np.linalg.solve(np.eye(p) - 0.5 * A, np.eye(p) + 0.5 * A)
    except np.linalg.LinAlgError as exc:
        raise DomainError("cay: I - A/2 is singular") from exc


def cay_inv(Q: np.ndarray) -> np.ndarray:
    """Inverse Cayley transform, 2 (Q - I)(Q + I)^{-1}."""
    Q = _check_square(Q, "Q")
    p = Q.shape[0]
    try:
        A = 2.0 * np.linalg.solve((np.eye(p) + Q).T, (Q - np.eye(p)).T).T
    except np.linalg.LinAlgError as exc:
        raise DomainError("cay_inv: I + Q is singular") from exc
    return A
