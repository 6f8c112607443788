"""Fluid-side residuals and diagnostics.

Euler and energy-conservation residuals, the fluid index and its
mean-curvature reformulation, shear / heat-flow / Navier-Stokes checks,
the integrability 2-form, r-harmonic-morphism fundamental equation, and
the thermodynamic fragment carried by a sigma-model fluid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad

from .errors import EosSingularityError
from .fields import ScalarField, TensorField, VectorField
from .geometry import (
    MetricField,
    covariant_derivative,
    divergence,
    gradient,
    lie_derivative,
    one_form_exterior_derivative,
    split_from_unit_timelike,
    tensor_divergence,
)
from .maps import (
    SmoothMap,
    cauchy_green_decompose,
    horizontal_conformality_check,
    log_dilation_field,
    sigma3_field,
    unit_vertical_field,
)


@dataclass(frozen=True)
class FluidState:
    """(U, rho, p): unit timelike flow vector plus density and pressure."""

    U: VectorField
    rho: ScalarField
    p: ScalarField

    def split(self, g: MetricField):
        return split_from_unit_timelike(g, self.U)


@dataclass(frozen=True)
class TransportCoefficients:
    eta: float = 0.0   # shear viscosity
    chi: float = 0.0   # heat conduction
    zeta: float = 0.0  # bulk viscosity


@dataclass(frozen=True)
class ThermoState:
    n: float
    rho: float
    p: float
    s: float = 0.0  # sigma-model fluids are isoentropic; s is an input


class EquationOfState:
    """Barotropic EoS rho = rho(p) with the fluid index f(p).

    The index is only defined up to a multiplicative constant; it is pinned
    by f(p_ref) = 1 for quadrature-based kinds, while the linear family uses
    the exact power form |p|^((2k-1)/(2k)) whose log-gradients are what the
    residuals consume.
    """

    def __init__(self, rho_of_p: Callable, drho_dp: Callable,
                 kind: str = "general", k: Optional[Fraction] = None,
                 p_ref: float = 1.0):
        self.rho_of_p = rho_of_p
        self.drho_dp = drho_dp
        self.kind = kind
        self.k = k
        self.p_ref = float(p_ref)

    @classmethod
    def linear(cls, k) -> "EquationOfState":
        """p = (2k - 1) rho.  k = 1 stiff, 2/3 radiation, 1/2 dust, 0
        cosmological constant."""
        k = Fraction(k)
        gamma = 2 * k - 1
        if gamma == 0:
            def rho_of_p(p):
                raise EosSingularityError("dust: rho is not a function of p")
            def drho_dp(p):
                raise EosSingularityError("dust: rho is not a function of p")
        else:
            rho_of_p = lambda p: p / float(gamma)
            drho_dp = lambda p: 1.0 / float(gamma)
        return cls(rho_of_p, drho_dp, kind="linear", k=k)

    @property
    def index_exponent(self) -> Fraction:
        """Exponent e with f(p) = |p|^e for the linear family."""
        if self.kind != "linear":
            raise ValueError("index exponent only defined for linear EoS")
        if self.k == 0 or self.k == Fraction(1, 2):
            raise EosSingularityError("index singular for this linear EoS")
        return (2 * self.k - 1) / (2 * self.k)

    def enthalpy(self, p: float) -> float:
        w = self.rho_of_p(p) + p
        if abs(w) < 1e-300:
            raise EosSingularityError(f"rho + p = 0 at p = {p}")
        return w

    def index(self, p: float) -> float:
        """f(p) = exp int dp / (rho + p), with f(p_ref) = 1 off the linear
        family."""
        if self.kind == "linear":
            e = float(self.index_exponent)
            return abs(p) ** e
        val, _ = quad(lambda q: 1.0 / self.enthalpy(q), self.p_ref, p)
        return float(np.exp(val))

    def dlog_index_dp(self, p: float) -> float:
        return 1.0 / self.enthalpy(p)

    def dlog_index_prime_dp(self, p: float) -> float:
        """d/dp of ln f'(p), using f' = f / (rho + p)."""
        w = self.enthalpy(p)
        return (1.0 - (self.drho_dp(p) + 1.0)) / w


# named EoS constants
STIFF = Fraction(1)
RADIATION = Fraction(2, 3)
DUST = Fraction(1, 2)
COSMOLOGICAL = Fraction(0)
QUINTESSENCE = Fraction(1, 3)  # rho = -3p


def _perp_projector(g: np.ndarray, U: np.ndarray) -> np.ndarray:
    omega = g @ U
    return np.eye(g.shape[0]) + np.outer(U, omega)


def euler_residual(fluid: FluidState, g: MetricField, x) -> np.ndarray:
    """(rho + p) nabla_U U + grad-perp p, orthogonal to U."""
    x = np.asarray(x, dtype=float)
    gx = g.matrix(x)
    Ux = fluid.U(x)
    acc = covariant_derivative(g, fluid.U, fluid.U, x)
    grad_p = np.linalg.solve(gx, fluid.p.gradient(x))
    perp = _perp_projector(gx, Ux)
    w = fluid.rho(x) + fluid.p(x)
    return w * acc + perp @ grad_p


def energy_conservation_residual(fluid: FluidState, g: MetricField, x) -> float:
    """(rho + p) div U + U(rho)."""
    x = np.asarray(x, dtype=float)
    w = fluid.rho(x) + fluid.p(x)
    u_rho = float(fluid.rho.gradient(x) @ fluid.U(x))
    return w * divergence(g, fluid.U, x) + u_rho


def vertical_conservation_residual(phi: SmoothMap, g: MetricField, h: MetricField, x) -> float:
    """div U + U(ln sqrt(sigma_3)); vanishes for any submersion with
    timelike fibers, critical or not."""
    x = np.asarray(x, dtype=float)
    U = unit_vertical_field(phi, g, h)
    s3 = sigma3_field(phi, g, h)
    log_sqrt = ScalarField(lambda y: 0.5 * np.log(s3(y)))
    return divergence(g, U, x) + float(log_sqrt.gradient(x) @ U(x))


def mean_curvature_form_residuals(fluid: FluidState, eos: EquationOfState,
                                  g: MetricField, x):
    """Residuals of the two mean-curvature forms of the fluid equations:

    r_H = mu_H + grad_V ln (f')^(1/3),  r_V = mu_V - grad_H ln f.
    """
    x = np.asarray(x, dtype=float)
    gx = g.matrix(x)
    Ux = fluid.U(x)
    px = fluid.p(x)
    grad_p = np.linalg.solve(gx, fluid.p.gradient(x))
    omega = gx @ Ux
    grad_p_V = -float(omega @ grad_p) * Ux   # projection onto span(U)
    grad_p_H = grad_p - grad_p_V

    mu_H = (divergence(g, fluid.U, x) / 3.0) * Ux
    mu_V = -covariant_derivative(g, fluid.U, fluid.U, x)

    r_H = mu_H + (eos.dlog_index_prime_dp(px) / 3.0) * grad_p_V
    r_V = mu_V - eos.dlog_index_dp(px) * grad_p_H
    return r_H, r_V


def horizontal_metric_field(g: MetricField, U: VectorField) -> TensorField:
    """g^H = g + omega (x) omega as a tensor field."""

    def comp(x):
        gx = g.matrix(x)
        omega = gx @ U(x)
        return gx + np.outer(omega, omega)

    return TensorField(comp)


def vertical_metric_field(g: MetricField, U: VectorField) -> TensorField:
    """g^V = omega (x) omega."""

    def comp(x):
        omega = g.matrix(x) @ U(x)
        return np.outer(omega, omega)

    return TensorField(comp)


def shear_tensor(U: VectorField, g: MetricField, x) -> np.ndarray:
    """(L_U g^H - (2/3) div U g^H) projected onto H; zero iff shear-free."""
    x = np.asarray(x, dtype=float)
    gH = horizontal_metric_field(g, U)
    lie = lie_derivative(U, gH, x)
    raw = lie - (2.0 / 3.0) * divergence(g, U, x) * gH(x)
    P = split_from_unit_timelike(g, U).projector_horizontal(x)
    return P.T @ raw @ P


def frame_tensor_norm(g: MetricField, U: VectorField, x, T: np.ndarray) -> float:
    """Frobenius norm of a horizontal (0,2)-tensor in a g-orthonormal
    horizontal frame (chart-invariant)."""
    frame = split_from_unit_timelike(g, U).horizontal_frame(x)
    comps = [
        float(e1 @ T @ e2) for e1 in frame.vectors for e2 in frame.vectors
    ]
    return float(np.sqrt(np.sum(np.square(comps))))


def heat_flow(U: VectorField, temperature: ScalarField, g: MetricField, x) -> np.ndarray:
    """Q = grad^H T + T nabla_U U."""
    x = np.asarray(x, dtype=float)
    gx = g.matrix(x)
    grad_T = np.linalg.solve(gx, temperature.gradient(x))
    perp = _perp_projector(gx, U(x))
    return perp @ grad_T + temperature(x) * covariant_derivative(g, U, U, x)


def navier_stokes_residual(fluid: FluidState, coeffs: TransportCoefficients,
                           temperature: ScalarField, g: MetricField, x) -> np.ndarray:
    """div of the dissipative stress tensor; with eta = chi = zeta = 0 the
    viscous terms are skipped so the result is term-for-term the
    perfect-fluid residual."""
    x = np.asarray(x, dtype=float)
    U = fluid.U
    gH = horizontal_metric_field(g, U)

    def perfect(y):
        gy = g.matrix(y)
        omega = gy @ U(y)
        return fluid.p(y) * gy + (fluid.p(y) + fluid.rho(y)) * np.outer(omega, omega)

    def viscous(y):
        gy = g.matrix(y)
        omega = gy @ U(y)
        T = np.zeros_like(gy)
        if coeffs.eta != 0.0:
            lie = lie_derivative(U, gH, y)
            T = T - coeffs.eta * (lie - (2.0 / 3.0) * divergence(g, U, y) * gH(y))
        if coeffs.chi != 0.0:
            theta = gy @ heat_flow(U, temperature, g, y)
            T = T - coeffs.chi * (np.outer(theta, omega) + np.outer(omega, theta))
        if coeffs.zeta != 0.0:
            T = T - coeffs.zeta * divergence(g, U, y) * gH(y)
        return T

    res = tensor_divergence(g, TensorField(perfect), x)
    if coeffs.eta != 0.0 or coeffs.chi != 0.0 or coeffs.zeta != 0.0:
        res = res + _horizontal_one_form(
            tensor_divergence(g, TensorField(viscous), x), g.matrix(x), U(x))
    return res


def _horizontal_one_form(theta, gx, Ux) -> np.ndarray:
    """Project a one-form onto the horizontal bundle (remove the omega part).

    The vertical component of a viscous divergence is the dissipated power
    that feeds the entropy balance; only the horizontal part constrains the
    momentum equations."""
    vec = np.linalg.solve(gx, np.asarray(theta, dtype=float))
    perp = _perp_projector(gx, Ux)
    return gx @ (perp @ vec)


def bulk_viscosity_divergence(U: VectorField, g: MetricField, x) -> np.ndarray:
    """Horizontal part of div(div U * g^H), the bulk-viscosity term alone."""
    x = np.asarray(x, dtype=float)
    gH = horizontal_metric_field(g, U)
    field = TensorField(lambda y: divergence(g, U, y) * gH(y))
    return _horizontal_one_form(tensor_divergence(g, field, x), g.matrix(x), U(x))


@dataclass(frozen=True)
class IntegrabilityResult:
    two_form: np.ndarray
    horizontal_norm: float
    reference_norm: float
    integrable: bool


def integrability_two_form(fluid: FluidState, eos: EquationOfState,
                           g: MetricField, x, tol: float = 1e-6) -> IntegrabilityResult:
    """Exterior derivative of the dual of V = (1/f) U; the flow is
    irrotational iff its horizontal-horizontal block vanishes.

    The flag thresholds the H x H block relative to |theta|, so it is
    invariant under constant rescalings of V.
    """
    x = np.asarray(x, dtype=float)

    def theta(y):
        f = eos.index(fluid.p(y))
        return (g.matrix(y) @ fluid.U(y)) / f

    field = VectorField(theta)
    d_theta = one_form_exterior_derivative(field, x)
    frame = split_from_unit_timelike(g, fluid.U).horizontal_frame(x)
    block = np.array([
        [float(e1 @ d_theta @ e2) for e2 in frame.vectors] for e1 in frame.vectors
    ])
    hnorm = float(np.sqrt(np.sum(block ** 2)))
    ref = float(np.linalg.norm(theta(x)))
    return IntegrabilityResult(d_theta, hnorm, ref, hnorm < tol * max(ref, 1e-300))


def rharmonic_fundamental_residual(phi: SmoothMap, g: MetricField, h: MetricField,
                                   r: float, x, conformality_tol: float = 1e-6) -> np.ndarray:
    """(n - r) grad^H ln(lambda) + (m - n) mu^V for a horizontally conformal
    submersion, with m = 4, n = 3; r = 6k ties it to criticality."""
    x = np.asarray(x, dtype=float)
    decomp = cauchy_green_decompose(phi, g, h, x)
    check = horizontal_conformality_check(decomp, conformality_tol)
    if not check.conformal:
        raise ValueError(f"map not horizontally conformal at {x}")
    U = unit_vertical_field(phi, g, h)
    log_lam = log_dilation_field(phi, g, h)
    gx = g.matrix(x)
    grad_H = _perp_projector(gx, decomp.U) @ np.linalg.solve(gx, log_lam.gradient(x))
    mu_V = -covariant_derivative(g, U, U, x)
    n, m = 3.0, 4.0
    return (n - r) * grad_H + (m - n) * mu_V


def thermo_from_density(decomp, spec) -> ThermoState:
    """Particle density n = lambda_1 lambda_2 lambda_3 and the Appendix EoS
    rho = F(n^2), p = -F(n^2) + 2 n^2 F'(n^2)."""
    n = decomp.volume_density
    u = n * n
    rho = spec.F(u)
    p = -spec.F(u) + 2.0 * u * spec.F_prime(u)
    return ThermoState(n=n, rho=float(rho), p=float(p))


def gibbs_residual(rho: ScalarField, p: ScalarField, n: ScalarField,
                   s: ScalarField, temperature: ScalarField, x, direction) -> float:
    """d rho - ((rho + p)/n) dn - n T ds evaluated on a tangent direction."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(direction, dtype=float)
    d_rho = float(rho.gradient(x) @ v)
    d_n = float(n.gradient(x) @ v)
    d_s = float(s.gradient(x) @ v)
    nx = n(x)
    return d_rho - (rho(x) + p(x)) / nx * d_n - nx * temperature(x) * d_s


def entropy_production_rate(n: ScalarField, s: ScalarField, temperature: ScalarField,
                            fluid: FluidState, coeffs: TransportCoefficients,
                            g: MetricField, x) -> float:
    """Diagnostic scalar div(n s U - (chi/T) Q); reported only, no sign
    asserted."""
    x = np.asarray(x, dtype=float)

    def vec(y):
        Q = heat_flow(fluid.U, temperature, g, y)
        return n(y) * s(y) * fluid.U(y) - (coeffs.chi / temperature(y)) * Q

    return divergence(g, VectorField(vec), x)
