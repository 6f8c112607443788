"""Equivariant ansatz machinery: symmetry-reduced profile ODEs, closed-form
profiles, numerical integration for cross-validation, and the reduced
rapidity-form residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np
from scipy.integrate import solve_ivp

from .errors import IntegrationFailureError
from .fields import ScalarField
from .maps import SmoothMap
from .spacetimes import (
    euclidean_spherical_chart,
    minkowski_spherical_chart,
)

FAMILIES = ("stiff-so3", "stiff-so2", "morawetz-log", "corotational-sphere")


@dataclass(frozen=True)
class EquivariantAnsatz:
    """A symmetry ansatz: the profile variable is r/x4 for the SO(3) and
    co-rotational families, x3/x4 for SO(2), and ln((x4^2 - r^2)/r) for the
    Morawetz-log family."""

    family: str
    k: Fraction = Fraction(1)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unsupported ansatz family {self.family!r}")
        object.__setattr__(self, "k", Fraction(self.k))


@dataclass(frozen=True)
class ProfileODE:
    """Reduced profile equation.

    For order 2: rhs(z, f, fp) -> f''; residual(z, f, fp, fpp) is the
    displayed form of the equation.  For order 1: rhs(z, f) -> f' and the
    residual takes (z, f, fp).
    """

    family: str
    order: int
    rhs: Callable
    residual: Callable
    singular_points: tuple = ()
    domain: tuple = (-np.inf, np.inf)


def reduce(ansatz: EquivariantAnsatz) -> ProfileODE:
    fam = ansatz.family
    if fam == "stiff-so3":
        def rhs(z, f, fp):
            return 2.0 * fp * (1.0 + z * z) / (z * (1.0 - z * z)) - 2.0 * fp * fp / f

        def residual(z, f, fp, fpp):
            return (fpp * f * f + 2.0 * fp * fp * f) * z * (1.0 - z * z) \
                - 2.0 * fp * f * f * (1.0 + z * z)

        return ProfileODE(fam, 2, rhs, residual, singular_points=(0.0, 1.0),
                          domain=(0.0, 1.0))
    if fam == "stiff-so2":
        def rhs(z, f, fp):
            return 2.0 * z * fp / (1.0 - z * z)

        def residual(z, f, fp, fpp):
            return fpp * (1.0 - z * z) - 2.0 * z * fp

        return ProfileODE(fam, 2, rhs, residual, singular_points=(-1.0, 1.0),
                          domain=(-1.0, 1.0))
    if fam == "morawetz-log":
        def rhs(z, f, fp):
            return fp * (-3.0 - 2.0 * fp / f)

        def residual(z, f, fp, fpp):
            return fpp / fp + 2.0 * fp / f + 3.0

        return ProfileODE(fam, 2, rhs, residual)
    if fam == "corotational-sphere":
        def rhs(z, f):
            return np.sin(f) / (z * np.sqrt(1.0 - z * z))

        def residual(z, f, fp):
            return fp * z * np.sqrt(1.0 - z * z) - np.sin(f)

        return ProfileODE(fam, 1, rhs, residual, singular_points=(0.0, 1.0),
                          domain=(0.0, 1.0))
    raise ValueError(f"unsupported ansatz family {fam!r}")


_SO3_SERIES_CUTOFF = 0.05


def _so3_bracket(z: float) -> float:
    """2z/(1-z^2) + ln((1-z)/(1+z)); series near 0 to dodge cancellation."""
    if abs(z) < _SO3_SERIES_CUTOFF:
        z2 = z * z
        # sum 2*(2j/(2j+1)) z^(2j+1), j = 1..4
        return z ** 3 * (4.0 / 3.0 + z2 * (8.0 / 5.0 + z2 * (12.0 / 7.0 + z2 * 16.0 / 9.0)))
    return 2.0 * z / (1.0 - z * z) + np.log((1.0 - z) / (1.0 + z))


def _so3_bracket_prime(z: float) -> float:
    return 4.0 * z * z / (1.0 - z * z) ** 2


def closed_form_profile(family: str, z: float, C: float = 1.0) -> float:
    z = float(z)
    if family == "stiff-so3":
        if not 0.0 <= z < 1.0:
            raise ValueError(f"stiff-so3 profile variable out of [0, 1): {z}")
        return C * _so3_bracket(z) ** (1.0 / 3.0)
    if family == "stiff-so2":
        if not -1.0 < z < 1.0:
            raise ValueError(f"stiff-so2 profile variable out of (-1, 1): {z}")
        return C * np.arctanh(z)
    if family == "morawetz-log":
        return C * np.exp(-z)
    if family == "corotational-sphere":
        if C != 1.0:
            raise ValueError("co-rotational profile has no scaling freedom")
        if not 0.0 <= z <= 1.0:
            raise ValueError(f"co-rotational profile variable out of [0, 1]: {z}")
        return float(np.arcsin(z))
    raise ValueError(f"unsupported ansatz family {family!r}")


def closed_form_profile_derivative(family: str, z: float, C: float = 1.0) -> float:
    z = float(z)
    if family == "stiff-so3":
        w = _so3_bracket(z)
        return C * w ** (-2.0 / 3.0) * _so3_bracket_prime(z) / 3.0
    if family == "stiff-so2":
        return C / (1.0 - z * z)
    if family == "morawetz-log":
        return -C * np.exp(-z)
    if family == "corotational-sphere":
        return 1.0 / np.sqrt(1.0 - z * z)
    raise ValueError(f"unsupported ansatz family {family!r}")


def closed_form_profile_second_derivative(family: str, z: float,
                                          C: float = 1.0) -> float:
    z = float(z)
    if family == "stiff-so3":
        w = _so3_bracket(z)
        wp = _so3_bracket_prime(z)
        wpp = 8.0 * z * (1.0 + z * z) / (1.0 - z * z) ** 3
        return C * (wpp / (3.0 * w ** (2.0 / 3.0))
                    - 2.0 * wp * wp / (9.0 * w ** (5.0 / 3.0)))
    if family == "stiff-so2":
        return C * 2.0 * z / (1.0 - z * z) ** 2
    if family == "morawetz-log":
        return C * np.exp(-z)
    raise ValueError(f"no closed-form second derivative for {family!r}")


@dataclass(frozen=True)
class SampledProfile:
    zetas: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray


def integrate_profile(ode: ProfileODE, initial, span, n_samples: int = 101,
                      rtol: float = 1e-10, atol: float = 1e-10,
                      method: str = "adaptive") -> SampledProfile:
    """Integrate the reduced ODE with dense output.

    ``initial`` is (z0, f0, f'0) for order 2 (f'0 ignored for order 1).
    ``method``: "adaptive" (embedded 4(5) pair) or "rk4" (fixed-step
    reproducibility fallback).
    """
    z0, zf = float(span[0]), float(span[1])
    for sp in ode.singular_points:
        if min(z0, zf) <= sp <= max(z0, zf):
            raise IntegrationFailureError(
                f"span {span} contains singular point {sp}")
    if ode.order == 2:
        y0 = [float(initial[1]), float(initial[2])]

        def fun(z, y):
            return [y[1], ode.rhs(z, y[0], y[1])]
    else:
        y0 = [float(initial[1])]

        def fun(z, y):
            return [ode.rhs(z, y[0])]

    zs = np.linspace(z0, zf, n_samples)
    if method == "rk4":
        ys = _rk4(fun, zs, np.array(y0))
    elif method == "adaptive":
        sol = solve_ivp(fun, (z0, zf), y0, method="RK45", rtol=rtol, atol=atol,
                        dense_output=True)
        if not sol.success:
            last = (sol.t[-1], sol.y[:, -1].tolist()) if sol.t.size else None
            raise IntegrationFailureError(sol.message, last_point=last)
        ys = sol.sol(zs).T
    else:
        raise ValueError(f"unknown integration method {method!r}")

    values = ys[:, 0]
    if ode.order == 2:
        derivs = ys[:, 1]
    else:
        derivs = np.array([ode.rhs(z, f) for z, f in zip(zs, values)])
    return SampledProfile(zs, np.asarray(values), np.asarray(derivs))


def _rk4(fun, zs, y0):
    ys = np.empty((zs.size, y0.size))
    ys[0] = y0
    y = np.array(y0, dtype=float)
    for i in range(zs.size - 1):
        z, hstep = zs[i], zs[i + 1] - zs[i]
        k1 = np.asarray(fun(z, y))
        k2 = np.asarray(fun(z + hstep / 2, y + hstep / 2 * k1))
        k3 = np.asarray(fun(z + hstep / 2, y + hstep / 2 * k2))
        k4 = np.asarray(fun(z + hstep, y + hstep * k3))
        y = y + hstep / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        ys[i + 1] = y
    return ys


@dataclass(frozen=True)
class RapidityField:
    """U = cosh(Omega) d/dt + sinh(Omega) d/dr in the (time, radial) plane."""

    omega: ScalarField
    time_axis: int = 0
    radial_axis: int = 1


def rapidity_residual(rapidity: RapidityField, log_volume: ScalarField, k, x) -> float:
    """Reduced single-PDE residual of the criticality equations:
    cosh(O)(O_t + c n_r) + sinh(O)(O_r + c n_t) with c = 2k - 1 and
    n = ln(l1 l2 l3)."""
    x = np.asarray(x, dtype=float)
    c = float(2 * Fraction(k) - 1)
    t, r = rapidity.time_axis, rapidity.radial_axis
    dO = rapidity.omega.gradient(x)
    dn = log_volume.gradient(x)
    O = rapidity.omega(x)
    return float(
        np.cosh(O) * (dO[t] + c * dn[r]) + np.sinh(O) * (dO[r] + c * dn[t])
    )


def so3_profile_map(f: Callable, fprime: Optional[Callable] = None,
                    forward_cone: bool = True) -> SmoothMap:
    """SO(3)-equivariant map (x4, r(cos s, sin s e^(i th))) ->
    f(r/x4)(cos s, sin s e^(i th)) between the spherical charts."""
    domain = minkowski_spherical_chart(forward_cone)
    codomain = euclidean_spherical_chart()

    def func(x):
        x4, r, s, th = x
        return np.array([f(r / x4), s, th])

    jac = None
    if fprime is not None:
        def jac(x):
            x4, r, s, th = x
            z = r / x4
            fp = fprime(z)
            return np.array([
                [-fp * z / x4, fp / x4, 0.0, 0.0],
                [0.0, 0.0, 1.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ])

    return SmoothMap(func, domain, codomain, jac, name="so3-ansatz")
