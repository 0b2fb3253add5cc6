"""Tour of the manifold basics: points, tangent vectors, metrics, Exp.

Run with: python demos/01_points_tangents_exponential.py
"""

import numpy as np

from stiefel_retractions import (
    BETA_CANONICAL,
    BETA_EUCLIDEAN,
    check_point,
    exp_beta,
    inner,
    project_tangent,
    rand_point,
    rand_tangent,
)

n, p = 50, 8
print(f"St({n},{p}): matrices with orthonormal columns, "
      f"dimension {p * (p - 1) // 2 + (n - p) * p}")

# A seeded random point and the orthonormality defect of its columns.
U0 = rand_point(n, p, seed=0)
print("orthonormality defect:", np.linalg.norm(U0.U.T @ U0.U - np.eye(p)))

# Any matrix can be projected onto the tangent space at U0; the projected
# matrix Z satisfies U0.T Z skew-symmetric.
rng = np.random.default_rng(1)
xi = project_tangent(U0, rng.standard_normal((n, p)))
A = U0.U.T @ xi.Xi
print("tangency defect (skewness of U0.T Xi):", np.linalg.norm(A + A.T))

# Two metrics: Euclidean (beta = 1) and canonical (beta = 1/2). They agree
# on the orthogonal-complement part and differ by a factor 2 on the
# skew block.
print("Euclidean norm^2:", inner(xi, xi, BETA_EUCLIDEAN))
print("canonical norm^2:", inner(xi, xi, BETA_CANONICAL))

# The Riemannian exponential maps tangent vectors to the manifold along
# geodesics; exp_beta(0) is the base point and the initial velocity is xi.
xi = rand_tangent(U0, np.pi / 2, seed=2)
U1 = exp_beta(xi, BETA_EUCLIDEAN)
check_point(U1.U)
print("geodesic endpoint is a valid Stiefel point")

h = 1e-6
fd = (exp_beta(xi.scaled(h)).U - U0.U) / h
print("initial-velocity check ||(Exp(h xi) - U0)/h - xi||:",
      np.linalg.norm(fd - xi.Xi))
