"""Lagrangian densities and stress-energy tensors of the sigma-model
families, their numerical divergence, perfect-fluid extraction, and the
(bi)conformal transformation checks.

Sign convention: the stress tensor S carries the opposite sign to the
physics literature; the fluid tensor is T = -2 S for the sigma3-power
family, normalized so extraction yields rho = n^(2k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .errors import RegimeError, SigmaFluidError
from .fields import ScalarField, TensorField, VectorField
from .fluids import FluidState, energy_conservation_residual, euler_residual
from .geometry import (
    MetricField,
    covariant_derivative,
    gram_schmidt,
    tensor_divergence,
)
from .maps import (
    CauchyGreenDecomposition,
    SmoothMap,
    cauchy_green_decompose,
    newton_tensor,
    sigma_elementary,
    unit_vertical_field,
)

_PERFECT_TOL = 1e-8


@dataclass(frozen=True)
class LagrangianSpec:
    """Which energy family drives the stress tensor.

    families: "k-energy" (|d phi|^k / k), "sigma_k" (|wedge^k d phi|^2 / 2),
    "sigma3-power" (sigma_3^k), "general-F" (F(sigma_3)).  The exponent is
    kept rational so equation-of-state ratios are exact.
    """

    family: str = "sigma3-power"
    k: Fraction = Fraction(1)
    F: Optional[Callable] = None
    F_prime: Optional[Callable] = None

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        if self.family == "sigma3-power" and self.k < 0:
            raise ValueError("sigma3-power requires k >= 0 (k = 0 only for "
                             "closed-form stress evaluation)")
        if self.family == "general-F" and (self.F is None or self.F_prime is None):
            raise ValueError("general-F needs F and F_prime")

    @property
    def eos_ratio(self) -> Fraction:
        """p / rho = 2k - 1, exactly, for the sigma3-power family."""
        if self.family != "sigma3-power":
            raise ValueError("EoS ratio defined for sigma3-power only")
        return 2 * self.k - 1

    @classmethod
    def sigma3_power(cls, k) -> "LagrangianSpec":
        k = Fraction(k)
        return cls(
            family="sigma3-power",
            k=k,
            F=lambda u: u ** float(k),
            F_prime=lambda u: float(k) * u ** (float(k) - 1.0) if k != 0 else 0.0,
        )


@dataclass(frozen=True)
class StressTensor:
    components: np.ndarray  # symmetric (0,2) at a point
    provenance: str

    def __array__(self, dtype=None):
        return np.asarray(self.components, dtype=dtype)


def lagrangian_density(spec: LagrangianSpec, decomp: CauchyGreenDecomposition) -> float:
    if spec.family == "k-energy":
        s1 = sigma_elementary(decomp, 1)
        kf = float(spec.k)
        if s1 < 0 and spec.k.denominator != 1:
            raise RegimeError("negative |d phi|^2 with fractional exponent")
        return s1 ** (kf / 2.0) / kf
    if spec.family == "sigma_k":
        return sigma_elementary(decomp, int(spec.k))
    if spec.family == "sigma3-power":
        return sigma_elementary(decomp, 3) ** float(spec.k)
    if spec.family == "general-F":
        return float(spec.F(sigma_elementary(decomp, 3)))
    raise ValueError(f"unknown family {spec.family!r}")


def _metric_split(decomp: CauchyGreenDecomposition):
    g = decomp.g_matrix
    omega = g @ decomp.U
    gV = np.outer(omega, omega)
    gH = g + gV
    return gH, gV


def stress_tensor(spec: LagrangianSpec, decomp: CauchyGreenDecomposition) -> StressTensor:
    """Stress-energy tensor at the decomposition's point.

    sigma3-power uses the eigenvalue closed form
    S = -((2k-1)/2) n^{2k} g^H - (1/2) n^{2k} g^V with n = l1 l2 l3.
    """
    g = decomp.g_matrix
    if spec.family == "k-energy":
        s1 = sigma_elementary(decomp, 1)
        kf = float(spec.k)
        S = (s1 ** (kf / 2.0) / kf) * g - s1 ** ((kf - 2.0) / 2.0) * decomp.pullback
        return StressTensor(S, f"k-energy k={spec.k}")
    if spec.family == "sigma_k":
        kq = int(spec.k)
        chi = newton_tensor(decomp, kq - 1)
        S = 0.5 * sigma_elementary(decomp, kq) * g - chi.T @ decomp.pullback
        return StressTensor(S, f"sigma_{kq} (1/2 normalization)")
    if spec.family == "sigma3-power":
        gH, gV = _metric_split(decomp)
        n2k = decomp.volume_density ** (2.0 * float(spec.k))
        S = -0.5 * float(2 * spec.k - 1) * n2k * gH - 0.5 * n2k * gV
        return StressTensor(S, f"sigma3-power k={spec.k}")
    if spec.family == "general-F":
        # Appendix form: T = p g^H + rho g^V with rho = F(n^2),
        # p = -F + 2 n^2 F'; stored with the S = -T/2 convention.
        gH, gV = _metric_split(decomp)
        u = decomp.volume_density ** 2
        rho = float(spec.F(u))
        p = -rho + 2.0 * u * float(spec.F_prime(u))
        S = -0.5 * (p * gH + rho * gV)
        return StressTensor(S, "general-F")
    raise ValueError(f"unknown family {spec.family!r}")


def stress_tensor_newton(spec: LagrangianSpec, decomp: CauchyGreenDecomposition) -> StressTensor:
    """sigma3-power stress by the Newton-tensor route
    S = 1/2 sigma_3^k g - k sigma_3^(k-1) (phi^* h) o chi_2; independent of
    the eigenvalue closed form (dual-route cross-check)."""
    if spec.family != "sigma3-power":
        raise ValueError("Newton route only for the sigma3-power family")
    if spec.k == 0:
        raise RegimeError("k = 0 stress has no Newton form (constant Lagrangian)")
    s3 = sigma_elementary(decomp, 3)
    kf = float(spec.k)
    chi2 = newton_tensor(decomp, 2)
    S = 0.5 * s3 ** kf * decomp.g_matrix - kf * s3 ** (kf - 1.0) * (chi2.T @ decomp.pullback)
    return StressTensor(S, f"sigma3-power k={spec.k} (newton)")


def fluid_tensor(spec: LagrangianSpec, decomp: CauchyGreenDecomposition) -> StressTensor:
    """T = -2 S for the sigma3-power family: T = p g^H + rho g^V."""
    S = stress_tensor(spec, decomp)
    return StressTensor(-2.0 * S.components, S.provenance + " fluid (T=-2S)")


def stress_field(spec: LagrangianSpec, phi: SmoothMap, g: MetricField,
                 h: MetricField) -> TensorField:
    return TensorField(
        lambda y: stress_tensor(spec, cauchy_green_decompose(phi, g, h, y)).components
    )


def stress_divergence(spec: LagrangianSpec, phi: SmoothMap, g: MetricField,
                      h: MetricField, x) -> np.ndarray:
    """(div S) as a 1-form; its U-component is the energy-conservation
    residual, its horizontal components the Euler/criticality residuals."""
    return tensor_divergence(g, stress_field(spec, phi, g, h), np.asarray(x, dtype=float))


@dataclass(frozen=True)
class FluidExtraction:
    rho: float
    p: float
    is_perfect: bool
    anisotropy: float
    mixed_norm: float


def perfect_fluid_extract(stress, g_matrix, U) -> FluidExtraction:
    """Extract (rho, p) from a fluid tensor T: rho = T(U, U), p = (1/3)
    trace of T on the horizontal bundle; perfect iff mixed terms and
    horizontal anisotropy vanish."""
    T = np.asarray(stress, dtype=float)
    g = np.asarray(g_matrix, dtype=float)
    U = np.asarray(U, dtype=float)
    rho = float(U @ T @ U)
    frame = gram_schmidt(g, list(np.eye(g.shape[0])), against=[(U, -1.0)])
    Es = [e for e, _ in frame]
    diag = [float(e @ T @ e) for e in Es]
    p = float(np.mean(diag))
    scale = max(1.0, float(np.max(np.abs(T))))
    aniso = max(
        [abs(d - p) for d in diag]
        + [abs(float(Es[i] @ T @ Es[j])) for i in range(3) for j in range(3) if i != j]
    )
    mixed = max(abs(float(U @ T @ e)) for e in Es)
    is_perfect = aniso < _PERFECT_TOL * scale and mixed < _PERFECT_TOL * scale
    return FluidExtraction(rho, p, is_perfect, aniso, mixed)


def biconformal_metric(g: MetricField, U: VectorField,
                       varsigma: ScalarField) -> MetricField:
    """g-bar = sigma^-2 g^H - sigma^-6 g^V for a positive scalar field."""

    def comp(x):
        s = varsigma(x)
        if s <= 0:
            raise SigmaFluidError("biconformal factor must be positive")
        gx = g.matrix(x)
        omega = gx @ U(x)
        gV = np.outer(omega, omega)
        gH = gx + gV
        return s ** (-2.0) * gH - s ** (-6.0) * gV

    return MetricField(comp, g.signature, None, name=g.name + "+biconformal")


def biconformal_invariance_check(case, varsigma: ScalarField, x) -> float:
    """Combined Euler + energy residual norm of the transformed stiff fluid
    (sigma^3 U, sigma^6 rho, sigma^6 p) under the biconformal metric.

    ``case`` provides metric_g and the expected (U, rho, p) fields; it must
    be sigma3-critical (k = 1) for the residual to vanish.
    """
    x = np.asarray(x, dtype=float)
    g = case.metric_g
    U, rho, p = case.expected_U, case.expected_rho, case.expected_p
    gbar = biconformal_metric(g, U, varsigma)

    def s(y):
        return varsigma(y)

    U_bar = VectorField(lambda y: s(y) ** 3 * U(y))
    rho_bar = ScalarField(lambda y: s(y) ** 6 * rho(y))
    p_bar = ScalarField(lambda y: s(y) ** 6 * p(y))
    fluid = FluidState(U_bar, rho_bar, p_bar)
    eu = euler_residual(fluid, gbar, x)
    en = energy_conservation_residual(fluid, gbar, x)
    eu_norm = float(np.sqrt(abs(eu @ gbar.matrix(x) @ eu)))
    return float(np.hypot(eu_norm, en))


@dataclass(frozen=True)
class CodomainRescaleResult:
    eigenvalues: np.ndarray
    residual: np.ndarray


def codomain_conformal_rescale(phi: SmoothMap, g: MetricField, h: MetricField,
                               nubar: ScalarField, x) -> CodomainRescaleResult:
    """Conformal rescale h-tilde = nu-bar^2 h of the codomain metric.

    Eigenvalues become (nu lambda_i)^2 with nu = nu-bar o phi; the adjusted
    criticality equation is -3 grad^H ln nu - grad^H ln(l1 l2 l3) + mu^V = 0
    and its residual is returned.
    """
    x = np.asarray(x, dtype=float)
    if nubar(phi(x)) <= 0:
        raise SigmaFluidError("codomain conformal factor must be positive")

    h_tilde = MetricField(
        lambda y: nubar(y) ** 2 * h.matrix(y), h.signature, None, h.name + "+conformal"
    )
    rescaled = cauchy_green_decompose(phi, g, h_tilde, x)

    U = unit_vertical_field(phi, g, h)
    decomp = cauchy_green_decompose(phi, g, h, x)
    gx = g.matrix(x)
    omega = gx @ decomp.U
    perp = np.eye(gx.shape[0]) + np.outer(decomp.U, omega)

    log_nu = ScalarField(lambda y: float(np.log(nubar(phi(y)))))
    log_n = ScalarField(
        lambda y: float(np.log(cauchy_green_decompose(phi, g, h, y).volume_density))
    )
    grad_log_nu = perp @ np.linalg.solve(gx, log_nu.gradient(x))
    grad_log_n = perp @ np.linalg.solve(gx, log_n.gradient(x))
    mu_V = -covariant_derivative(g, U, U, x)
    residual = -3.0 * grad_log_nu - grad_log_n + mu_V
    return CodomainRescaleResult(rescaled.eigenvalues, residual)
