"""Curvature and Einstein-coupling checks.

Riemann curvature is obtained by differentiating the Christoffel symbols
(finite differences of analytic symbols when the metric carries analytic
first derivatives, pure finite differences otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import TensorField, VectorField, fd_tensor_derivative
from .geometry import (
    MetricField,
    christoffel,
    gram_schmidt,
    tensor_divergence,
)

_DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class CurvatureBundle:
    """Riemann (1,3), Ricci (0,2) and scalar curvature at a point."""

    riemann: np.ndarray   # R[a, b, c, d] = R^a_{bcd}
    ricci: np.ndarray     # Ric_ab
    scalar: float

    def einstein(self, g_matrix: np.ndarray) -> np.ndarray:
        """G_ab = Ric_ab - (1/2) Scal g_ab."""
        return self.ricci - 0.5 * self.scalar * np.asarray(g_matrix)


def curvature(metric: MetricField, x) -> CurvatureBundle:
    """R^a_{bcd} = d_c Gamma^a_db - d_d Gamma^a_cb
    + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb."""
    x = np.asarray(x, dtype=float)
    gamma = christoffel(metric, x)
    dgamma = fd_tensor_derivative(lambda y: christoffel(metric, y), x)
    # dgamma[c, a, d, b] = d_c Gamma^a_db
    riemann = (
        np.einsum("cadb->abcd", dgamma)
        - np.einsum("dacb->abcd", dgamma)
        + np.einsum("ace,edb->abcd", gamma, gamma)
        - np.einsum("ade,ecb->abcd", gamma, gamma)
    )
    ricci = np.einsum("abad->bd", riemann)
    ricci = 0.5 * (ricci + ricci.T)
    scalar = float(np.einsum("ab,ab->", metric.inverse(x), ricci))
    return CurvatureBundle(riemann, ricci, scalar)


def einstein_tensor_field(metric: MetricField) -> TensorField:
    return TensorField(
        lambda y: curvature(metric, y).einstein(metric.matrix(y))
    )


def einstein_residual(metric: MetricField, stress, alpha: float, x) -> float:
    """Frobenius norm of the mixed-index form of G - alpha * S."""
    x = np.asarray(x, dtype=float)
    S = np.asarray(stress, dtype=float)
    bundle = curvature(metric, x)
    diff = bundle.einstein(metric.matrix(x)) - float(alpha) * S
    mixed = metric.inverse(x) @ diff
    return float(np.linalg.norm(mixed))


@dataclass(frozen=True)
class AdmissibilityResult:
    isotropic: bool
    mixed: bool
    anisotropy: float
    mixed_norm: float


def admissibility_check(metric: MetricField, U, x,
                        tol: float = _DEFAULT_TOL) -> AdmissibilityResult:
    """A metric can host a perfect fluid along U only if Ric has no mixed
    (horizontal, U) components and its horizontal block is isotropic."""
    x = np.asarray(x, dtype=float)
    Ux = U(x) if isinstance(U, VectorField) else np.asarray(U, dtype=float)
    g = metric.matrix(x)
    ric = curvature(metric, x).ricci
    frame = gram_schmidt(g, list(np.eye(g.shape[0])), against=[(Ux, -1.0)])
    Es = [e for e, _ in frame]
    diag = [float(e @ ric @ e) for e in Es]
    mean = float(np.mean(diag))
    scale = max(1.0, float(np.max(np.abs(ric))))
    aniso = max(
        [abs(d - mean) for d in diag]
        + [abs(float(Es[i] @ ric @ Es[j]))
           for i in range(len(Es)) for j in range(len(Es)) if i != j]
    )
    mixed = max(abs(float(Ux @ ric @ e)) for e in Es)
    return AdmissibilityResult(
        isotropic=aniso < tol * scale,
        mixed=mixed < tol * scale,
        anisotropy=aniso,
        mixed_norm=mixed,
    )


def fluid_from_curvature(metric: MetricField, U, alpha: float, x):
    """Invert the Einstein coupling G = alpha * S for a perfect-fluid source.

    The fluid tensor is T = -2 S, so G = alpha * S reads T = (-2/alpha) G
    and the density/pressure along a unit timelike U are
    rho = (-2/alpha)(Ric(U,U) + Scal/2), p = (-2/(3 alpha))(Ric(U,U) - Scal/2).
    With alpha = -2 this is the direct G = T read-off.
    """
    if alpha == 0:
        raise ZeroDivisionError("coupling constant must be nonzero")
    x = np.asarray(x, dtype=float)
    Ux = U(x) if isinstance(U, VectorField) else np.asarray(U, dtype=float)
    bundle = curvature(metric, x)
    ric_uu = float(Ux @ bundle.ricci @ Ux)
    scale = -2.0 / float(alpha)
    rho = scale * (ric_uu + 0.5 * bundle.scalar)
    p = scale * (ric_uu - 0.5 * bundle.scalar) / 3.0
    return rho, p


def contracted_bianchi_residual(metric: MetricField, x) -> float:
    """Norm of div G; vanishes identically for the Levi-Civita connection."""
    div = tensor_divergence(metric, einstein_tensor_field(metric), np.asarray(x, dtype=float))
    return float(np.linalg.norm(div))
