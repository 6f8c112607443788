"""Case registry: loading, parametrization, serialization round-trips."""

from fractions import Fraction

import numpy as np
import pytest

from sigmafluid.catalog import (
    CASE_NAMES,
    case_from_dict,
    load_case,
    registry_json,
)
from sigmafluid.errors import UnknownCaseError

from conftest import get_case

EXPECTED_NAMES = (
    "einstein_universe", "gubser_ds3", "hb1_corotational", "hb1_power",
    "hb1_stiff", "hb2_radiation", "hb2_stiff", "morawetz_radiation",
    "rw_affine", "rw_sqrt", "skew_projection",
)


def test_registry_contents():
    assert CASE_NAMES == EXPECTED_NAMES


def test_unknown_case_raises():
    with pytest.raises(UnknownCaseError, match="available"):
        load_case("nosuchcase")


def test_case_exponents():
    assert get_case("hb1_stiff").k == Fraction(1)
    assert get_case("hb1_power").k == Fraction(2, 3)
    assert get_case("hb2_radiation").k == Fraction(2, 3)
    assert get_case("skew_projection").k == Fraction(1, 3)
    assert get_case("rw_affine").k == Fraction(1, 3)
    assert get_case("rw_sqrt").k == Fraction(2, 3)


def test_grid_points_shape_and_order(catalog_case):
    case = catalog_case
    pts = case.grid_points()
    expected = 1
    for _, (_, _, n) in case.grid.items():
        expected *= n
    assert len(pts) == expected
    assert all(case.domain.contains(x) for x in pts)
    # first coordinate varies slowest
    firsts = [p[0] for p in pts]
    assert firsts == sorted(firsts)


def test_grid_override():
    case = get_case("hb1_stiff")
    pts = case.grid_points({"x4": (2.0, 2.5, 2)})
    assert sorted(set(p[0] for p in pts)) == [2.0, 2.5]


def test_expected_fields_consistent(catalog_case):
    case = catalog_case
    x = case.grid_points()[0]
    sample = case.evaluate_expected(x)
    assert sample.rho > 0
    assert sample.p == pytest.approx(float(2 * case.k - 1) * sample.rho,
                                     rel=1e-10)
    ev = case.expected_eigenvalues(x)
    assert ev[0] >= ev[1] >= ev[2] > 0
    n2 = float(np.prod(ev))
    assert sample.rho == pytest.approx(n2 ** float(case.k), rel=1e-8)


def test_round_trip_through_dict():
    case = get_case("hb2_stiff")
    clone = case_from_dict(case.to_dict())
    assert clone.name == case.name and clone.k == case.k
    x = case.grid_points()[0]
    assert clone.expected_rho(x) == pytest.approx(case.expected_rho(x),
                                                  rel=1e-14)
    assert clone.phi(x) == pytest.approx(case.phi(x), rel=1e-14)


def test_parametrized_loads():
    skew = load_case("skew_projection", q=0.5)
    assert skew.params["q"] == 0.5
    x = np.array([1.0, 0.2, 0.8, 0.5])
    ev = skew.expected_eigenvalues(x)
    assert ev[0] == pytest.approx(1.0 - 0.25 * 0.64, rel=1e-12)

    eu = load_case("einstein_universe", w1=0.0, w2=0.0)
    assert not eu.flags["accelerating"]
    assert eu.flags["irrotational"]


def test_einstein_universe_rotation_bounds():
    with pytest.raises(ValueError):
        load_case("einstein_universe", w1=1.5, w2=0.0)


def test_hb1_power_shares_stiff_map():
    stiff = get_case("hb1_stiff")
    power = get_case("hb1_power")
    x = stiff.grid_points()[0]
    assert power.phi(x) == pytest.approx(stiff.phi(x), rel=1e-14)
    assert power.k != stiff.k


def test_registry_json_lists_all_cases():
    data = registry_json()
    assert sorted(data) == sorted(EXPECTED_NAMES)
    for name, raw in data.items():
        assert case_from_dict(raw).name == name


def test_gravity_coupled_flags():
    for name in CASE_NAMES:
        case = get_case(name)
        coupled = case.flags.get("gravityCoupled", False)
        assert (case.alpha is not None) == coupled
        if coupled:
            assert case.alpha == -2.0
