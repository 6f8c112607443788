"""Symmetry-reduced profile ODEs and their closed forms."""

import numpy as np
import pytest

from sigmafluid.errors import IntegrationFailureError
from sigmafluid.fields import ScalarField
from sigmafluid.reductions import (
    FAMILIES,
    EquivariantAnsatz,
    RapidityField,
    closed_form_profile,
    closed_form_profile_derivative,
    closed_form_profile_second_derivative,
    integrate_profile,
    rapidity_residual,
    reduce,
    so3_profile_map,
)


@pytest.mark.parametrize("family", ["stiff-so3", "stiff-so2", "morawetz-log"])
def test_closed_form_satisfies_ode(family):
    ode = reduce(EquivariantAnsatz(family))
    zs = (np.linspace(0.1, 0.9, 33) if family != "morawetz-log"
          else np.linspace(-1.0, 1.0, 33))
    for z in zs:
        res = ode.residual(z, closed_form_profile(family, z, C=1.3),
                           closed_form_profile_derivative(family, z, C=1.3),
                           closed_form_profile_second_derivative(family, z, C=1.3))
        assert abs(res) < 1e-9


def test_corotational_closed_form_satisfies_ode():
    ode = reduce(EquivariantAnsatz("corotational-sphere"))
    for z in np.linspace(0.1, 0.9, 33):
        f = closed_form_profile("corotational-sphere", z)
        fp = closed_form_profile_derivative("corotational-sphere", z)
        assert abs(ode.residual(z, f, fp)) < 1e-12


@pytest.mark.parametrize("family", ["stiff-so3", "stiff-so2",
                                    "corotational-sphere"])
def test_integration_matches_closed_form(family):
    ode = reduce(EquivariantAnsatz(family))
    z0, zf = 0.1, 0.9
    f0 = closed_form_profile(family, z0)
    fp0 = closed_form_profile_derivative(family, z0)
    profile = integrate_profile(ode, (z0, f0, fp0), (z0, zf))
    worst = max(abs(f - closed_form_profile(family, z))
                for z, f in zip(profile.zetas, profile.values))
    assert worst < 1e-6


def test_morawetz_log_integration():
    ode = reduce(EquivariantAnsatz("morawetz-log"))
    z0, zf = -1.0, 2.0
    f0 = closed_form_profile("morawetz-log", z0)
    fp0 = closed_form_profile_derivative("morawetz-log", z0)
    profile = integrate_profile(ode, (z0, f0, fp0), (z0, zf))
    worst = max(abs(f - closed_form_profile("morawetz-log", z))
                for z, f in zip(profile.zetas, profile.values))
    assert worst < 1e-6


def test_rk4_mode_close_to_adaptive():
    ode = reduce(EquivariantAnsatz("stiff-so2"))
    z0, zf = 0.1, 0.8
    f0 = closed_form_profile("stiff-so2", z0)
    fp0 = closed_form_profile_derivative("stiff-so2", z0)
    fixed = integrate_profile(ode, (z0, f0, fp0), (z0, zf), n_samples=201,
                              method="rk4")
    worst = max(abs(f - closed_form_profile("stiff-so2", z))
                for z, f in zip(fixed.zetas, fixed.values))
    assert worst < 1e-8


def test_singular_span_rejected():
    ode = reduce(EquivariantAnsatz("stiff-so3"))
    with pytest.raises(IntegrationFailureError):
        integrate_profile(ode, (0.5, 1.0, 1.0), (0.5, 1.5))


def test_series_branch_continuous_at_cutoff():
    # the small-zeta series and the log expression must agree where they meet
    eps = 1e-9
    below = closed_form_profile("stiff-so3", 0.05 - eps)
    above = closed_form_profile("stiff-so3", 0.05 + eps)
    assert abs(above - below) < 1e-8


def test_scaling_covariance_of_stiff_so3():
    # C -> 2C scales the profile linearly; induced density is C-independent
    z = 0.4
    assert closed_form_profile("stiff-so3", z, C=2.0) == pytest.approx(
        2.0 * closed_form_profile("stiff-so3", z, C=1.0), rel=1e-14)


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        EquivariantAnsatz("nosuch-family")
    assert set(FAMILIES) == {"stiff-so3", "stiff-so2", "morawetz-log",
                             "corotational-sphere"}


def test_corotational_has_no_scaling_freedom():
    with pytest.raises(ValueError):
        closed_form_profile("corotational-sphere", 0.3, C=2.0)


def test_domain_validation():
    with pytest.raises(ValueError):
        closed_form_profile("stiff-so3", 1.2)
    with pytest.raises(ValueError):
        closed_form_profile("stiff-so2", -1.0)


def test_rapidity_residual_vanishes_for_hwa_bjorken():
    # Omega = arctanh(r/x4) with n = ln((x4^2-r^2)^(-3/2)) solves the reduced
    # criticality PDE for the stiff exponent
    coords = ("x4", "r", "s", "th")
    omega = ScalarField.from_expression("arctanh(r/x4)", coords)
    log_n = ScalarField.from_expression("-(3/2)*ln(x4^2 - r^2)", coords)
    rap = RapidityField(omega)
    for x4, r in ((2.0, 0.5), (2.4, 1.1), (1.8, 0.3)):
        x = np.array([x4, r, 0.7, 0.2])
        assert abs(rapidity_residual(rap, log_n, 1, x)) < 1e-10


def test_rapidity_residual_detects_wrong_rapidity():
    coords = ("x4", "r", "s", "th")
    omega = ScalarField.from_expression("(1/2)*arctanh(r/x4)", coords)
    log_n = ScalarField.from_expression("-(3/2)*ln(x4^2 - r^2)", coords)
    rap = RapidityField(omega)
    x = np.array([2.0, 0.9, 0.7, 0.2])
    assert abs(rapidity_residual(rap, log_n, 1, x)) > 1e-2


def test_so3_profile_map_analytic_jacobian():
    phi = so3_profile_map(lambda z: z ** 2, lambda z: 2.0 * z)
    x = np.array([2.0, 1.0, 0.8, 0.4])
    assert phi.jacobian(x) == pytest.approx(phi.fd_jacobian(x), abs=1e-7)
