"""Acceptance battery: one test per top-level requirement.

Each test states its tolerance inline; ``pytest -v`` gives one pass/fail
line per requirement (parametrized requirements give one line per case).
"""

import json
import time
from fractions import Fraction

import numpy as np
import pytest

from sigmafluid.catalog import CASE_NAMES, load_case
from sigmafluid.fields import ScalarField, VectorField
from sigmafluid.fluids import (
    EquationOfState,
    FluidState,
    bulk_viscosity_divergence,
    euler_residual,
    frame_tensor_norm,
    heat_flow,
    integrability_two_form,
    vertical_conservation_residual,
    rharmonic_fundamental_residual,
    shear_tensor,
)
from sigmafluid.geometry import covariant_derivative
from sigmafluid.gravity import einstein_residual, fluid_from_curvature
from sigmafluid.maps import cauchy_green_decompose, horizontal_conformality_check
from sigmafluid.reductions import (
    EquivariantAnsatz,
    closed_form_profile,
    closed_form_profile_derivative,
    integrate_profile,
    reduce as reduce_ansatz,
    so3_profile_map,
)
from sigmafluid.spacetimes import (
    euclidean_spherical_metric,
    minkowski_spherical_metric,
)
from sigmafluid.stress import (
    LagrangianSpec,
    biconformal_invariance_check,
    fluid_tensor,
    perfect_fluid_extract,
    stress_tensor,
)
from sigmafluid.verification import verify_case

from conftest import get_case


# -- 1. every catalog case satisfies Euler + energy conservation -------------

@pytest.mark.parametrize("fd,tol", [(False, 1e-6), (True, 1e-4)],
                         ids=["analytic", "fd"])
@pytest.mark.parametrize("name", CASE_NAMES)
def test_criterion_1_exact_solutions_satisfy_fluid_equations(name, fd, tol):
    case = get_case(name)
    start = time.monotonic()
    report = verify_case(case, fd=fd)
    elapsed = time.monotonic() - start
    assert report["residuals"]["euler"]["max"] < tol
    assert report["residuals"]["energy"]["max"] < tol
    assert elapsed < 10.0


# -- 2. eigenvalue fields match their closed forms ---------------------------

@pytest.mark.parametrize("name", CASE_NAMES)
def test_criterion_2_eigenvalue_closed_forms(name):
    case = get_case(name)
    for x in case.grid_points():
        d = cauchy_green_decompose(case.phi, case.metric_g, case.metric_h, x)
        expected = case.expected_eigenvalues(x)
        rel = np.abs(d.eigenvalues - expected) / np.abs(expected)
        assert np.max(rel) < 1e-8


# -- 3. extracted pressure law is exactly rational ---------------------------

@pytest.mark.parametrize("k", [Fraction(0), Fraction(1, 2), Fraction(2, 3),
                               Fraction(1)], ids=str)
def test_criterion_3_eos_law_exact(k):
    spec = LagrangianSpec.sigma3_power(k)
    assert spec.eos_ratio == 2 * k - 1          # exact rational arithmetic
    case = get_case("hb1_stiff")
    x = case.grid_points()[0]
    d = cauchy_green_decompose(case.phi, case.metric_g, case.metric_h, x)
    ext = perfect_fluid_extract(fluid_tensor(spec, d), d.g_matrix, d.U)
    if k == Fraction(1, 2):
        assert spec.eos_ratio == 0              # dust: pressureless, exactly
        assert abs(ext.p) < 1e-13
    else:
        assert ext.p == pytest.approx(float(2 * k - 1) * ext.rho, rel=1e-13)


# -- 4. profile ODE integration cross-validates the closed forms -------------

@pytest.mark.parametrize("family", ["stiff-so3", "stiff-so2", "morawetz-log"])
def test_criterion_4_ode_cross_validation(family):
    start = time.monotonic()
    ode = reduce_ansatz(EquivariantAnsatz(family))
    z0, zf = 0.1, 0.9
    f0 = closed_form_profile(family, z0)
    fp0 = closed_form_profile_derivative(family, z0)
    profile = integrate_profile(ode, (z0, f0, fp0), (z0, zf))
    sup = max(abs(f - closed_form_profile(family, z))
              for z, f in zip(profile.zetas, profile.values))
    elapsed = time.monotonic() - start
    assert sup < 1e-6
    assert elapsed < 1.0


# -- 5. vertical conservation holds off-shell, Euler does not ----------------

def test_criterion_5_vertical_conservation_asymmetry():
    g = minkowski_spherical_metric()
    h = euclidean_spherical_metric()
    rng = np.random.default_rng(11)
    checked_points = 0
    for _ in range(50):
        a = rng.uniform(0.3, 2.0, size=3)
        f = lambda z: a[0] * z + a[1] * z ** 2 + a[2] * z ** 3
        fp = lambda z: a[0] + 2 * a[1] * z + 3 * a[2] * z ** 2
        phi = so3_profile_map(f, fp).without_analytic_jacobian()
        for _ in range(2):
            x4 = rng.uniform(1.8, 2.6)
            x = np.array([x4, rng.uniform(0.2, 0.4 * x4),
                          rng.uniform(0.4, 1.2), rng.uniform(0.1, 1.0)])
            assert abs(vertical_conservation_residual(phi, g, h, x)) < 5e-5
            checked_points += 1

        def rho(y):
            d = cauchy_green_decompose(phi, g, h, y)
            return float(np.prod(d.eigenvalues))

        fluid = FluidState(
            U=VectorField(lambda y: cauchy_green_decompose(phi, g, h, y).U),
            rho=ScalarField(rho), p=ScalarField(rho))
        max_euler = max(
            float(np.linalg.norm(euler_residual(fluid, g, probe)))
            for probe in (np.array([2.0, 0.4, 0.8, 0.5]),
                          np.array([2.4, 0.9, 0.6, 0.3]),
                          np.array([1.9, 0.7, 1.1, 0.8])))
        assert max_euler > 1e-2     # the non-critical profile fails Euler
    assert checked_points == 100


# -- 6. biconformal transformation preserves the stiff solution --------------

def test_criterion_6_biconformal_invariance():
    case = get_case("hb1_stiff")
    varsigma = ScalarField(
        lambda y: 1.0 + 0.1 * np.exp(-(y[0] - 2.0) ** 2 - (y[1] - 1.0) ** 2))
    worst = max(biconformal_invariance_check(case, varsigma, x)
                for x in case.grid_points())
    assert worst < 1e-4


# -- 7. kinematic diagnostics match the declared flags -----------------------

def test_criterion_7_diagnostics():
    hb1 = get_case("hb1_stiff")
    x = hb1.grid_points()[0]
    g = hb1.metric_g
    sh = frame_tensor_norm(g, hb1.expected_U, x,
                           shear_tensor(hb1.expected_U, g, x))
    assert sh < 1e-6                                        # shear-free
    eos = EquationOfState.linear(hb1.k)
    assert integrability_two_form(hb1.fluid(), eos, g, x).integrable
    acc = covariant_derivative(g, hb1.expected_U, hb1.expected_U, x)
    assert np.max(np.abs(acc)) < 1e-6                       # unaccelerated
    T = ScalarField.from_expression("(x4^2 - r^2)^(-3/2)", hb1.domain.coords)
    assert np.max(np.abs(heat_flow(hb1.expected_U, T, g, x))) < 1e-6
    assert np.max(np.abs(bulk_viscosity_divergence(hb1.expected_U, g, x))) < 1e-5

    hb2 = get_case("hb2_radiation")
    x2 = hb2.grid_points()[0]
    sh2 = frame_tensor_norm(hb2.metric_g, hb2.expected_U, x2,
                            shear_tensor(hb2.expected_U, hb2.metric_g, x2))
    assert sh2 > 1e-3                                       # this flow shears

    mor = get_case("morawetz_radiation")
    x3 = mor.grid_points()[0]
    acc3 = covariant_derivative(mor.metric_g, mor.expected_U,
                                mor.expected_U, x3)
    gm3 = mor.metric_g.matrix(x3)
    assert np.sqrt(abs(acc3 @ gm3 @ acc3)) > 1e-3           # accelerated
    sh3 = frame_tensor_norm(mor.metric_g, mor.expected_U, x3,
                            shear_tensor(mor.expected_U, mor.metric_g, x3))
    assert sh3 < 1e-6                                       # yet shear-free


# -- 8. Einstein coupling on the cosmological cases --------------------------

@pytest.mark.parametrize("name", ["rw_affine", "rw_sqrt"])
def test_criterion_8_einstein_coupling(name):
    case = get_case(name)
    assert case.alpha == -2.0
    spec = LagrangianSpec.sigma3_power(case.k)
    for x in case.grid_points():
        assert 0.5 <= x[0] <= 2.0
        d = cauchy_green_decompose(case.phi, case.metric_g, case.metric_h, x)
        S = stress_tensor(spec, d)
        assert einstein_residual(case.metric_g, S, case.alpha, x) < 1e-5
        rho, p = fluid_from_curvature(case.metric_g, case.expected_U,
                                      case.alpha, x)
        assert rho == pytest.approx(case.expected_rho(x), abs=1e-6)
        assert p == pytest.approx(case.expected_p(x), abs=1e-6)


# -- 9. r-harmonic morphisms and the conformality/shear dichotomy ------------

@pytest.mark.parametrize("name,r", [("skew_projection", 2),
                                    ("morawetz_radiation", 4)])
def test_criterion_9_rharmonic_fundamental_equation(name, r):
    case = get_case(name)
    for x in case.grid_points():
        res = rharmonic_fundamental_residual(case.phi, case.metric_g,
                                             case.metric_h, r, x)
        assert np.linalg.norm(res) < 1e-6


_EQUIV_CASES = [
    pytest.param(name,
                 marks=pytest.mark.xfail(
                     reason="shear-free scale flow from a non-conformal map",
                     strict=True))
    if name in ("hb1_stiff", "hb1_power") else name
    for name in CASE_NAMES
]


@pytest.mark.parametrize("name", _EQUIV_CASES)
def test_criterion_9_conformality_iff_shear_free(name):
    # Horizontal conformality always forces a shear-free flow; the converse
    # fails for the two scale-flow cases, whose common flow is shear-free
    # while the defining map has unequal horizontal eigenvalues.  The same
    # fibers do admit a conformal representative (the co-rotational case).
    case = get_case(name)
    for x in case.grid_points():
        d = cauchy_green_decompose(case.phi, case.metric_g, case.metric_h, x)
        conformal = horizontal_conformality_check(d).conformal
        sh = frame_tensor_norm(case.metric_g, case.expected_U, x,
                               shear_tensor(case.expected_U, case.metric_g, x))
        assert conformal == (sh < 1e-6)


# -- 10. verification reports are deterministic ------------------------------

@pytest.mark.parametrize("name", CASE_NAMES)
def test_criterion_10_verify_determinism(name):
    case = get_case(name)
    first = json.dumps(verify_case(case), sort_keys=True)
    second = json.dumps(verify_case(case), sort_keys=True)
    assert first == second
