"""Differential of a submersion, pullback metric, Cauchy-Green tensor and
its Lorentzian eigen-decomposition, elementary symmetric functions, Newton
tensors.

The eigen-decomposition never feeds the full non-symmetric 4x4 matrix to a
general eigensolver: the one-dimensional kernel is computed first (and
checked timelike), then the symmetric positive-definite 3x3 horizontal
problem is solved in a g-orthonormal frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .charts import ChartDomain
from .errors import CausalDegeneracyError, RankDeficiencyError, RegimeError
from .expressions import compile_vector
from .fields import ScalarField, VectorField, fd_jacobian
from .geometry import MetricField, gram_schmidt

_RANK_TOL = 1e-8
_KERNEL_TOL = 1e-10


@dataclass(frozen=True)
class SmoothMap:
    """A map phi: M^m -> N^n with evaluation and jacobian closures.

    ``jac_func(x)`` returns the n x m matrix d phi^i / d x^a; when absent the
    jacobian is taken by central differences of the evaluation.
    """

    func: Callable
    domain: ChartDomain
    codomain: ChartDomain
    jac_func: Optional[Callable] = None
    name: str = ""

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.func(np.asarray(x, dtype=float)), dtype=float)

    def jacobian(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.jac_func is not None:
            return np.asarray(self.jac_func(x), dtype=float)
        return fd_jacobian(self.func, x)

    def fd_jacobian(self, x) -> np.ndarray:
        return fd_jacobian(self.func, np.asarray(x, dtype=float))

    def without_analytic_jacobian(self) -> "SmoothMap":
        return SmoothMap(self.func, self.domain, self.codomain, None, self.name)

    @classmethod
    def from_expressions(cls, entries, domain: ChartDomain, codomain: ChartDomain,
                         name: str = "") -> "SmoothMap":
        value, jacobian = compile_vector(entries, domain.coords)
        return cls(lambda x: value(x), domain, codomain, jacobian, name)


@dataclass(frozen=True)
class CauchyGreenDecomposition:
    """Eigenstructure of the Cauchy-Green endomorphism at one point.

    ``eigenvalues`` holds the three positive horizontal eigenvalues in
    descending order (the fourth, on the kernel, is zero); ``eigenvectors``
    the matching g-orthonormal horizontal vectors; ``U`` the unit timelike
    future-pointing kernel generator.
    """

    point: np.ndarray
    endomorphism: np.ndarray
    pullback: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: tuple
    U: np.ndarray
    g_matrix: np.ndarray

    @property
    def lambdas(self) -> np.ndarray:
        return np.sqrt(self.eigenvalues)

    @property
    def volume_density(self) -> float:
        """n = lambda_1 lambda_2 lambda_3."""
        return float(np.sqrt(np.prod(self.eigenvalues)))

    def to_dict(self) -> dict:
        return {
            "point": [float(v) for v in self.point],
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "U": [float(v) for v in self.U],
            "sigma": [float(sigma_elementary(self, k)) for k in (1, 2, 3)],
        }


def pullback_metric(phi: SmoothMap, h: MetricField, x) -> np.ndarray:
    """(phi^* h)_ab = h_ij d phi^i_a d phi^j_b; rank-3 positive semidefinite."""
    x = np.asarray(x, dtype=float)
    J = phi.jacobian(x)
    if np.linalg.matrix_rank(J, tol=_RANK_TOL) < J.shape[0]:
        raise RankDeficiencyError(f"jacobian rank below {J.shape[0]} at {x}")
    hy = h.matrix(phi(x))
    return J.T @ hy @ J


def pseudo_adjoint(jacobian, g_matrix, h_matrix) -> np.ndarray:
    """Formal adjoint F^t with <F v, w>_h = <v, F^t w>_g."""
    g = np.asarray(g_matrix, dtype=float)
    h = np.asarray(h_matrix, dtype=float)
    F = np.asarray(jacobian, dtype=float)
    return np.linalg.solve(g, F.T @ h)


def cauchy_green_decompose(phi: SmoothMap, g: MetricField, h: MetricField,
                           x) -> CauchyGreenDecomposition:
    x = phi.domain.require(x)
    J = phi.jacobian(x)
    n, m = J.shape
    sv = np.linalg.svd(J, compute_uv=False)
    if sv[n - 1] <= _RANK_TOL * max(1.0, sv[0]):
        raise RankDeficiencyError(f"map not submersive at {x}")

    # kernel of d phi (metric-independent), one-dimensional for a submersion
    if m - n != 1:
        raise RankDeficiencyError(f"kernel of d phi not one-dimensional at {x}")
    _, _, Vt = np.linalg.svd(J)
    v = Vt[-1]

    gx = g.matrix(x)
    norm2 = float(v @ gx @ v)
    if norm2 >= -_KERNEL_TOL:
        raise CausalDegeneracyError(f"kernel of d phi not timelike at {x}")
    U = v / np.sqrt(-norm2)
    t = phi.domain.time_index if phi.domain.time_index is not None else 0
    if U[t] < 0:
        U = -U

    hy = h.matrix(phi(x))
    pullback = J.T @ hy @ J
    C = np.linalg.solve(gx, pullback)

    # symmetric 3x3 horizontal problem in a g-orthonormal frame
    frame = gram_schmidt(gx, list(np.eye(m)), against=[(U, -1.0)])
    E = np.column_stack([e for e, _ in frame])
    B = E.T @ pullback @ E
    evals, evecs = np.linalg.eigh(0.5 * (B + B.T))
    order = np.argsort(evals)[::-1]
    evals = evals[order]
    evecs = evecs[:, order]
    if evals[-1] <= 0:
        raise CausalDegeneracyError(
            f"horizontal Cauchy-Green block not positive-definite at {x}"
        )
    vectors = []
    for i in range(m - 1):
        w = E @ evecs[:, i]
        lead = np.argmax(np.abs(w))
        if w[lead] < 0:
            w = -w
        vectors.append(w)
    return CauchyGreenDecomposition(
        point=x,
        endomorphism=C,
        pullback=pullback,
        eigenvalues=evals,
        eigenvectors=tuple(vectors),
        U=U,
        g_matrix=gx,
    )


def sigma_elementary(decomp: CauchyGreenDecomposition, k: int) -> float:
    """Elementary symmetric function sigma_k of the nonzero eigenvalues."""
    L1, L2, L3 = decomp.eigenvalues
    if k == 1:
        val = L1 + L2 + L3
    elif k == 2:
        val = L1 * L2 + L2 * L3 + L3 * L1
    elif k == 3:
        val = L1 * L2 * L3
    else:
        raise ValueError(f"sigma_{k} undefined for a rank-3 differential")
    if val < 0:
        raise RegimeError(f"negative sigma_{k} outside the timelike-kernel regime")
    return float(val)


@dataclass(frozen=True)
class NewtonTensorSet:
    chi0: np.ndarray
    chi1: np.ndarray
    chi2: np.ndarray


def newton_tensor(decomp: CauchyGreenDecomposition, q: int) -> np.ndarray:
    """Newton tensor chi_q as a (1,1) matrix; chi_1 = sigma_1 Id - C,
    chi_2 = sigma_2 Id - C chi_1."""
    C = decomp.endomorphism
    eye = np.eye(C.shape[0])
    if q == 0:
        return eye
    chi1 = sigma_elementary(decomp, 1) * eye - C
    if q == 1:
        return chi1
    if q == 2:
        return sigma_elementary(decomp, 2) * eye - C @ chi1
    raise ValueError(f"chi_{q} not needed for rank-3 differentials")


def newton_tensors(decomp: CauchyGreenDecomposition) -> NewtonTensorSet:
    return NewtonTensorSet(
        newton_tensor(decomp, 0), newton_tensor(decomp, 1), newton_tensor(decomp, 2)
    )


@dataclass(frozen=True)
class ConformalityResult:
    conformal: bool
    dilation: float


def horizontal_conformality_check(decomp: CauchyGreenDecomposition,
                                  tol: float = 1e-6) -> ConformalityResult:
    ev = decomp.eigenvalues
    gap = float((ev[0] - ev[-1]) / ev[0])
    dilation = float(np.cbrt(np.prod(ev)))
    return ConformalityResult(conformal=gap < tol, dilation=dilation)


def unit_vertical_field(phi: SmoothMap, g: MetricField, h: MetricField) -> VectorField:
    """The unit timelike kernel generator as a vector field over the chart."""
    return VectorField(lambda x: cauchy_green_decompose(phi, g, h, x).U)


def sigma3_field(phi: SmoothMap, g: MetricField, h: MetricField) -> ScalarField:
    return ScalarField(
        lambda x: sigma_elementary(cauchy_green_decompose(phi, g, h, x), 3)
    )


def log_volume_field(phi: SmoothMap, g: MetricField, h: MetricField) -> ScalarField:
    """ln(lambda_1 lambda_2 lambda_3) as a scalar field."""
    return ScalarField(
        lambda x: float(np.log(cauchy_green_decompose(phi, g, h, x).volume_density))
    )


def log_dilation_field(phi: SmoothMap, g: MetricField, h: MetricField) -> ScalarField:
    """ln(lambda) for horizontally conformal maps (geometric-mean dilation)."""
    return ScalarField(
        lambda x: 0.5
        * float(np.log(horizontal_conformality_check(
            cauchy_green_decompose(phi, g, h, x)).dilation))
    )
