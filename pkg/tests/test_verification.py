"""Grid verification reports: structure, determinism, FD mode, flags."""

import json

import numpy as np
import pytest

from sigmafluid.verification import (
    CONVENTION,
    DEFAULT_TOLERANCES,
    EQUATIONS,
    FD_TOLERANCES,
    scan_rows,
    verify_case,
)

from conftest import get_case


def test_report_structure_and_pass():
    case = get_case("hb1_stiff")
    report = verify_case(case)
    assert report["pass"] is True
    assert report["case"] == "hb1_stiff"
    assert report["convention"] == CONVENTION
    assert set(report["residuals"]) == set(EQUATIONS)
    for eq in EQUATIONS:
        entry = report["residuals"][eq]
        assert set(entry) == {"max", "mean"}
    assert report["fd_mode"] is False


def test_all_cases_pass_analytic(catalog_case):
    report = verify_case(catalog_case)
    assert report["pass"], json.dumps(report["residuals"], indent=2)


def test_all_cases_pass_fd(catalog_case):
    report = verify_case(catalog_case, fd=True)
    assert report["pass"], json.dumps(report["residuals"], indent=2)
    assert report["fd_mode"] is True


def test_determinism_byte_level():
    case = get_case("gubser_ds3")
    a = json.dumps(verify_case(case), sort_keys=True)
    b = json.dumps(verify_case(case), sort_keys=True)
    assert a == b


def test_flag_mismatch_detected():
    raw = get_case("hb2_stiff").to_dict()
    raw["flags"] = dict(raw["flags"], shearFree=True)  # wrong: this flow shears
    from sigmafluid.catalog import case_from_dict
    report = verify_case(case_from_dict(raw))
    assert not report["flags"]["shearFree"]["match"]
    assert not report["pass"]


def test_tolerance_override_can_fail_a_case():
    case = get_case("hb1_stiff")
    report = verify_case(case, tolerances={"euler": 1e-30})
    assert not report["checks"]["euler"]
    assert not report["pass"]


def test_grid_override_respected():
    case = get_case("rw_affine")
    report = verify_case(case, grid_overrides={"t": (0.7, 1.9, 5)})
    assert report["grid"]["t"] == [0.7, 1.9, 5]
    assert report["points"] == 5 * np.prod(
        [n for ax, (_, _, n) in case.grid.items() if ax != "t"])


def test_default_tolerances_distinct_from_fd():
    assert DEFAULT_TOLERANCES["euler"] == 1e-6
    assert FD_TOLERANCES["euler"] == 1e-4
    assert set(DEFAULT_TOLERANCES) == set(FD_TOLERANCES) == set(EQUATIONS)


def test_scan_rows_layout():
    case = get_case("hb2_radiation")
    rows = scan_rows(case)
    ncoords = len(case.domain.coords)
    assert len(rows) == len(case.grid_points())
    for row in rows:
        assert len(row) == ncoords + len(EQUATIONS)
    # coordinates of the first row are the first grid point
    assert rows[0][:ncoords] == pytest.approx(case.grid_points()[0])


def test_equation_selection():
    case = get_case("skew_projection")
    report = verify_case(case, equations=["euler", "energy"])
    assert set(report["checks"]) == {"euler", "energy"}
    with pytest.raises(ValueError, match="unknown equations"):
        verify_case(case, equations=["nosuch"])


def test_thread_env_does_not_change_results(monkeypatch):
    case = get_case("hb1_power")
    base = json.dumps(verify_case(case), sort_keys=True)
    monkeypatch.setenv("SIGMAFLUID_THREADS", "2")
    threaded = json.dumps(verify_case(case), sort_keys=True)
    assert base == threaded
