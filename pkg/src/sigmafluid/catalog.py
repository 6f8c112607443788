"""Named exact-solution cases.

Each case bundles a domain chart with a Lorentzian metric, a codomain chart
with a Riemannian metric, a submersion, the exponent k, closed-form expected
fluid fields, diagnostic flags, and a recommended sample grid.  Cases are
stored as plain expression-string dictionaries (the JSON schema) and
compiled on load, so user-defined cases round-trip through the same format.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
import sympy as sp

from .charts import ChartDomain, chart
from .errors import UnknownCaseError
from .fields import ScalarField, VectorField
from .fluids import FluidState
from .geometry import MetricField
from .maps import SmoothMap


@dataclass(frozen=True)
class FluidSample:
    """Point sample of the expected closed-form fluid."""

    U: np.ndarray
    rho: float
    p: float


@dataclass(frozen=True)
class SolutionCase:
    name: str
    k: Fraction
    params: dict
    domain: ChartDomain
    codomain: ChartDomain
    metric_g: MetricField
    metric_h: MetricField
    phi: SmoothMap
    expected_U: VectorField
    expected_rho: ScalarField
    expected_p: ScalarField
    eigenvalue_fields: tuple
    flags: dict
    grid: dict
    alpha: Optional[float]
    raw: dict

    def fluid(self) -> FluidState:
        return FluidState(self.expected_U, self.expected_rho, self.expected_p)

    def evaluate_expected(self, x) -> FluidSample:
        x = self.domain.require(x)
        return FluidSample(self.expected_U(x), self.expected_rho(x),
                           self.expected_p(x))

    def expected_eigenvalues(self, x) -> np.ndarray:
        """Closed-form eigenvalues of the Cauchy-Green endomorphism,
        descending."""
        vals = np.array([f(x) for f in self.eigenvalue_fields])
        return np.sort(vals)[::-1]

    def grid_points(self, overrides: Optional[dict] = None) -> np.ndarray:
        """Cartesian-product sample grid as an (N, dim) array, iterated in
        coordinate order (first coordinate slowest)."""
        spec = dict(self.grid)
        if overrides:
            unknown = set(overrides) - set(self.domain.coords)
            if unknown:
                raise ValueError(f"grid axes not in chart: {sorted(unknown)}")
            spec.update(overrides)
        axes = []
        for c in self.domain.coords:
            lo, hi, n = spec[c]
            axes.append(np.linspace(float(lo), float(hi), int(n)))
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def to_dict(self) -> dict:
        return self.raw


def _frac(q) -> str:
    q = Fraction(q)
    return f"({q.numerator}/{q.denominator})"


def _num(v) -> str:
    return f"({float(v)!r})"


def case_from_dict(raw: dict) -> SolutionCase:
    """Compile a case from its expression-string dictionary."""
    dch = raw["charts"]["domain"]
    cch = raw["charts"]["codomain"]
    domain = chart(dch["coords"], dch.get("validity", ()), dch.get("time_index", 0))
    codomain = chart(cch["coords"], cch.get("validity", ()),
                     cch.get("time_index"))
    gspec = raw["metrics"]["g"]
    hspec = raw["metrics"]["h"]
    metric_g = MetricField.from_expressions(
        gspec["entries"], domain.coords, tuple(gspec.get("signature", (1, 3))),
        gspec.get("name", raw["name"] + ":g"))
    metric_h = MetricField.from_expressions(
        hspec["entries"], codomain.coords, tuple(hspec.get("signature", (0, 3))),
        hspec.get("name", raw["name"] + ":h"))
    phi = SmoothMap.from_expressions(raw["map"], domain, codomain,
                                     name=raw["name"])
    exp = raw["expected"]
    expected_U = VectorField.from_expressions(exp["U"], domain.coords)
    expected_rho = ScalarField.from_expression(exp["rho"], domain.coords)
    expected_p = ScalarField.from_expression(exp["p"], domain.coords)
    eig = tuple(
        ScalarField.from_expression(e, domain.coords)
        for e in exp.get("eigenvalues", ())
    )
    grid = {c: tuple(v) for c, v in raw["grid"].items()}
    missing = set(domain.coords) - set(grid)
    if missing:
        raise ValueError(f"grid missing axes: {sorted(missing)}")
    return SolutionCase(
        name=raw["name"],
        k=Fraction(raw["k"]),
        params=dict(raw.get("params", {})),
        domain=domain,
        codomain=codomain,
        metric_g=metric_g,
        metric_h=metric_h,
        phi=phi,
        expected_U=expected_U,
        expected_rho=expected_rho,
        expected_p=expected_p,
        eigenvalue_fields=eig,
        flags=dict(raw["flags"]),
        grid=grid,
        alpha=raw.get("alpha"),
        raw=raw,
    )


# ---------------------------------------------------------------------------
# chart / metric fragments shared by several builders

_MINK_SPH = {
    "coords": ["x4", "r", "s", "th"],
    "validity": ["x4 - r", "r", "s", "pi - s"],
    "time_index": 0,
}
_MINK_SPH_G = {
    "entries": [["-1", "0", "0", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "r^2", "0"],
                ["0", "0", "0", "r^2*sin(s)^2"]],
    "signature": [1, 3],
    "name": "minkowski-spherical",
}
_EUCL_SPH = {"coords": ["R", "s", "th"], "validity": ["R", "s", "pi - s"],
             "time_index": None}
_EUCL_SPH_H = {
    "entries": [["1", "0", "0"],
                ["0", "R^2", "0"],
                ["0", "0", "R^2*sin(s)^2"]],
    "signature": [0, 3],
    "name": "euclidean-spherical",
}

# scale-invariant radial flow (common to all SO(3) power-law cases)
_SCALE_FLOW_U = ["x4/sqrt(x4^2 - r^2)", "r/sqrt(x4^2 - r^2)", "0", "0"]

# profile of the radial-ansatz critical map, normalized so that the
# transversal volume lambda1 lambda2 lambda3 equals (x4^2 - r^2)^(-3/2)
_SO3_PROFILE = ("((3/4)*(2*(r/x4)/(1 - (r/x4)^2)"
                " + ln((1 - r/x4)/(1 + r/x4))))^(1/3)")

_HB1_FLAGS = {"shearFree": True, "irrotational": True,
              "accelerating": False, "gravityCoupled": False}
_HB1_GRID = {"x4": (1.6, 2.8, 3), "r": (0.2, 1.2, 3),
             "s": (0.6, 1.4, 3), "th": (0.5, 0.5, 1)}


def _hb1_power_raw(k=Fraction(2, 3)) -> dict:
    k = Fraction(k)
    rho = f"(x4^2 - r^2)^({_frac(-3 * k)})"
    pair = f"({_SO3_PROFILE})^2/r^2"
    return {
        "name": "hb1_power" if k != 1 else "hb1_stiff",
        "k": f"{k.numerator}/{k.denominator}",
        "params": {"k": str(k)},
        "charts": {"domain": _MINK_SPH, "codomain": _EUCL_SPH},
        "metrics": {"g": _MINK_SPH_G, "h": _EUCL_SPH_H},
        "map": [_SO3_PROFILE, "s", "th"],
        "expected": {
            "U": _SCALE_FLOW_U,
            "rho": rho,
            "p": f"{_frac(2 * k - 1)}*{rho}",
            "eigenvalues": [
                f"(x4^2 - r^2)^(-3)/({pair})^2",
                pair,
                pair,
            ],
        },
        "flags": dict(_HB1_FLAGS),
        "grid": dict(_HB1_GRID),
        "alpha": None,
    }


def _hb1_stiff_raw() -> dict:
    return _hb1_power_raw(Fraction(1))


def _hb1_corotational_raw() -> dict:
    rho = "(x4^2 - r^2)^(-3)"
    return {
        "name": "hb1_corotational",
        "k": "1",
        "params": {},
        "charts": {
            "domain": _MINK_SPH,
            "codomain": {"coords": ["b", "s", "th"],
                         "validity": ["b", "pi/2 - b", "s", "pi - s"],
                         "time_index": None},
        },
        "metrics": {
            "g": _MINK_SPH_G,
            "h": {
                "entries": [
                    ["cos(b)^(-2)", "0", "0"],
                    ["0", "sin(b)^2/cos(b)^2", "0"],
                    ["0", "0", "sin(b)^2*sin(s)^2/cos(b)^2"],
                ],
                "signature": [0, 3],
                "name": "S3-hemisphere",
            },
        },
        "map": ["arcsin(r/x4)", "s", "th"],
        "expected": {
            "U": _SCALE_FLOW_U,
            "rho": rho,
            "p": rho,
            "eigenvalues": ["1/(x4^2 - r^2)"] * 3,
        },
        "flags": dict(_HB1_FLAGS),
        "grid": dict(_HB1_GRID),
        "alpha": None,
    }


def _hb2_stiff_raw() -> dict:
    rho = "(x4^2 - x3^2)^(-1)"
    return {
        "name": "hb2_stiff",
        "k": "1",
        "params": {},
        "charts": {
            "domain": {"coords": ["x4", "x3", "xp", "ph"],
                       "validity": ["x4 - abs(x3)", "xp"],
                       "time_index": 0},
            "codomain": {"coords": ["y3", "yp", "ph"], "validity": ["yp"],
                         "time_index": None},
        },
        "metrics": {
            "g": {
                "entries": [["-1", "0", "0", "0"],
                            ["0", "1", "0", "0"],
                            ["0", "0", "1", "0"],
                            ["0", "0", "0", "xp^2"]],
                "signature": [1, 3],
                "name": "minkowski-cylindrical",
            },
            "h": {
                "entries": [["1", "0", "0"],
                            ["0", "1", "0"],
                            ["0", "0", "yp^2"]],
                "signature": [0, 3],
                "name": "euclidean-cylindrical",
            },
        },
        "map": ["arctanh(x3/x4)", "xp", "ph"],
        "expected": {
            "U": ["x4/sqrt(x4^2 - x3^2)", "x3/sqrt(x4^2 - x3^2)", "0", "0"],
            "rho": rho,
            "p": rho,
            "eigenvalues": [rho, "1", "1"],
        },
        "flags": {"shearFree": False, "irrotational": True,
                  "accelerating": False, "gravityCoupled": False},
        "grid": {"x4": (1.6, 2.8, 3), "x3": (0.2, 1.1, 3),
                 "xp": (0.3, 1.2, 2), "ph": (0.4, 0.4, 1)},
        "alpha": None,
    }


def _hb2_radiation_raw() -> dict:
    return {
        "name": "hb2_radiation",
        "k": "2/3",
        "params": {},
        "charts": {
            "domain": {"coords": ["tau", "eta", "xp", "ph"],
                       "validity": ["tau", "xp"], "time_index": 0},
            "codomain": {"coords": ["y3", "yp", "ph"], "validity": ["yp"],
                         "time_index": None},
        },
        "metrics": {
            "g": {
                "entries": [["-1", "0", "0", "0"],
                            ["0", "tau^2", "0", "0"],
                            ["0", "0", "1", "0"],
                            ["0", "0", "0", "xp^2"]],
                "signature": [1, 3],
                "name": "milne",
            },
            "h": {
                "entries": [["1", "0", "0"],
                            ["0", "1", "0"],
                            ["0", "0", "yp^2"]],
                "signature": [0, 3],
                "name": "euclidean-cylindrical",
            },
        },
        "map": ["eta", "xp", "ph"],
        "expected": {
            "U": ["1", "0", "0", "0"],
            "rho": "tau^(-4/3)",
            "p": "tau^(-4/3)/3",
            "eigenvalues": ["1", "1", "tau^(-2)"],
        },
        "flags": {"shearFree": False, "irrotational": True,
                  "accelerating": False, "gravityCoupled": False},
        "grid": {"tau": (0.6, 2.4, 4), "eta": (-0.5, 0.8, 2),
                 "xp": (0.3, 1.2, 2), "ph": (0.4, 0.4, 1)},
        "alpha": None,
    }


def _gubser_ds3_raw(k=Fraction(2, 3)) -> dict:
    k = Fraction(k)
    rho = f"cosh(rho)^({_frac(-4 * k)})"
    return {
        "name": "gubser_ds3",
        "k": f"{k.numerator}/{k.denominator}",
        "params": {"k": str(k)},
        "charts": {
            "domain": {"coords": ["rho", "s", "ph", "eta"],
                       "validity": ["s", "pi - s"], "time_index": 0},
            "codomain": {"coords": ["s", "ph", "eta"],
                         "validity": ["s", "pi - s"], "time_index": None},
        },
        "metrics": {
            "g": {
                "entries": [["-1", "0", "0", "0"],
                            ["0", "cosh(rho)^2", "0", "0"],
                            ["0", "0", "cosh(rho)^2*sin(s)^2", "0"],
                            ["0", "0", "0", "1"]],
                "signature": [1, 3],
                "name": "dS3xR",
            },
            "h": {
                "entries": [["1", "0", "0"],
                            ["0", "sin(s)^2", "0"],
                            ["0", "0", "1"]],
                "signature": [0, 3],
                "name": "S2xR",
            },
        },
        "map": ["s", "ph", "eta"],
        "expected": {
            "U": ["1", "0", "0", "0"],
            "rho": rho,
            "p": f"{_frac(2 * k - 1)}*{rho}",
            "eigenvalues": ["1", "cosh(rho)^(-2)", "cosh(rho)^(-2)"],
        },
        "flags": {"shearFree": False, "irrotational": True,
                  "accelerating": False, "gravityCoupled": False},
        "grid": {"rho": (-0.8, 1.2, 3), "s": (0.5, 1.2, 3),
                 "ph": (0.7, 0.7, 1), "eta": (0.2, 0.2, 1)},
        "alpha": None,
    }


def _morawetz_radiation_raw() -> dict:
    rho = "(x4^2 - r^2)^(-4)"
    return {
        "name": "morawetz_radiation",
        "k": "2/3",
        "params": {},
        "charts": {"domain": _MINK_SPH, "codomain": _EUCL_SPH},
        "metrics": {"g": _MINK_SPH_G, "h": _EUCL_SPH_H},
        "map": ["r/(x4^2 - r^2)", "s", "th"],
        "expected": {
            "U": ["(x4^2 + r^2)/(x4^2 - r^2)", "2*x4*r/(x4^2 - r^2)", "0", "0"],
            "rho": rho,
            "p": f"{rho}/3",
            "eigenvalues": ["(x4^2 - r^2)^(-2)"] * 3,
        },
        "flags": {"shearFree": True, "irrotational": True,
                  "accelerating": True, "gravityCoupled": False},
        "grid": {"x4": (1.6, 2.8, 3), "r": (0.2, 1.2, 3),
                 "s": (0.6, 1.4, 2), "th": (0.5, 0.5, 1)},
        "alpha": None,
    }


def _skew_projection_raw(q=1.0) -> dict:
    q = float(q)
    if q <= 0:
        raise ValueError("skew projection needs q > 0")
    qs = _num(q)
    lam2 = f"1 - {qs}^2*xp^2"
    w = f"1 - {qs}^2*yp^2"
    return {
        "name": "skew_projection",
        "k": "1/3",
        "params": {"q": q},
        "charts": {
            "domain": {"coords": ["x4", "x3", "xp", "ph"],
                       "validity": ["xp", f"{_num(1.0 / q)} - xp"],
                       "time_index": 0},
            "codomain": {"coords": ["y3", "yp", "ph"],
                         "validity": ["yp", f"{_num(1.0 / q)} - yp"],
                         "time_index": None},
        },
        "metrics": {
            "g": {
                "entries": [["-1", "0", "0", "0"],
                            ["0", "1", "0", "0"],
                            ["0", "0", "1", "0"],
                            ["0", "0", "0", "xp^2"]],
                "signature": [1, 3],
                "name": "minkowski-cylindrical",
            },
            "h": {
                "entries": [[w, "0", "0"],
                            ["0", w, "0"],
                            ["0", "0", "yp^2"]],
                "signature": [0, 3],
                "name": "deformed-cylinder",
            },
        },
        "map": ["x3", "xp", f"ph - {qs}*x4"],
        "expected": {
            "U": [f"1/sqrt({lam2})", "0", "0", f"{qs}/sqrt({lam2})"],
            "rho": lam2,
            "p": f"-({lam2})/3",
            "eigenvalues": [lam2] * 3,
        },
        "flags": {"shearFree": True, "irrotational": False,
                  "accelerating": True, "gravityCoupled": False},
        "grid": {"x4": (0.2, 1.4, 2), "x3": (-0.5, 0.9, 2),
                 "xp": (0.1, 0.8 / q, 3), "ph": (0.4, 2.2, 2)},
        "alpha": None,
    }


def _einstein_target_entries(w1: float, w2: float):
    """Non-standard S^3 metric built from the coframe adapted to the
    rotating flow; reduces to the round metric when both rates vanish."""
    if w1 == 0.0 and w2 == 0.0:
        return [["1", "0", "0"],
                ["0", "cos(s)^2", "0"],
                ["0", "0", "sin(s)^2"]]
    s = sp.Symbol("s", real=True)
    c2, s2 = sp.cos(s) ** 2, sp.sin(s) ** 2
    B = w1 ** 2 * c2 + w2 ** 2 * s2
    A = 1 - B
    e2 = sp.Matrix([w1 * c2, w2 * s2]) / sp.sqrt(B)
    e3 = sp.sin(s) * sp.cos(s) / sp.sqrt(B) * sp.Matrix([w2, -w1])
    block = (e2 * e2.T + A * (e3 * e3.T)) / A ** 2
    block = sp.simplify(block)
    h_ss = sp.simplify(1 / A)
    return [
        [str(h_ss), "0", "0"],
        ["0", str(block[0, 0]), str(block[0, 1])],
        ["0", str(block[1, 0]), str(block[1, 1])],
    ]


def _einstein_universe_raw(w1=0.3, w2=0.5) -> dict:
    w1, w2 = float(w1), float(w2)
    if not (abs(w1) < 1.0 and abs(w2) < 1.0):
        raise ValueError("rotation rates must satisfy |w| < 1")
    a = f"(1 - {_num(w1)}^2*cos(s)^2 - {_num(w2)}^2*sin(s)^2)"
    static = w1 == 0.0 and w2 == 0.0
    return {
        "name": "einstein_universe",
        "k": "2/3",
        "params": {"w1": w1, "w2": w2},
        "charts": {
            "domain": {"coords": ["t", "s", "ph1", "ph2"],
                       "validity": ["s", "pi/2 - s"], "time_index": 0},
            "codomain": {"coords": ["s", "p1", "p2"],
                         "validity": ["s", "pi/2 - s"], "time_index": None},
        },
        "metrics": {
            "g": {
                "entries": [["-1", "0", "0", "0"],
                            ["0", "1", "0", "0"],
                            ["0", "0", "cos(s)^2", "0"],
                            ["0", "0", "0", "sin(s)^2"]],
                "signature": [1, 3],
                "name": "einstein-universe",
            },
            "h": {
                "entries": _einstein_target_entries(w1, w2),
                "signature": [0, 3],
                "name": "S3-adapted",
            },
        },
        "map": ["s", f"ph1 - {_num(w1)}*t", f"ph2 - {_num(w2)}*t"],
        "expected": {
            "U": [f"1/sqrt({a})", "0", f"{_num(w1)}/sqrt({a})",
                  f"{_num(w2)}/sqrt({a})"],
            "rho": f"{a}^(-2)",
            "p": f"{a}^(-2)/3",
            "eigenvalues": [f"1/{a}"] * 3,
        },
        "flags": {"shearFree": True, "irrotational": static,
                  "accelerating": not static, "gravityCoupled": False},
        "grid": {"t": (0.0, 1.0, 2), "s": (0.15, 1.45, 3),
                 "ph1": (0.3, 0.3, 1), "ph2": (1.1, 1.1, 1)},
        "alpha": None,
    }


def _rw_affine_raw(a=1.0, b=1.0, kappa=0.0) -> dict:
    a, b, kappa = float(a), float(b), float(kappa)
    if kappa < 0:
        raise ValueError("negative spatial curvature not cataloged")
    scale = f"({_num(a)}*t + {_num(b)})"
    rho = f"3*({_num(a)}^2 + {_num(kappa)})/{scale}^2"
    lam2 = f"3*({_num(a)}^2 + {_num(kappa)})/{scale}^2"
    return _rw_raw("rw_affine", Fraction(1, 3), scale,
                   3.0 * (a * a + kappa), kappa, rho, f"-({rho})/3", lam2,
                   {"a": a, "b": b, "kappa": kappa})


def _rw_sqrt_raw(a=1.0, kappa=0.0) -> dict:
    a, kappa = float(a), float(kappa)
    if a <= 0:
        raise ValueError("needs a > 0")
    if kappa < 0:
        raise ValueError("negative spatial curvature not cataloged")
    f2 = f"(2*{_num(a)}*t - {_num(kappa)}*t^2)"
    scale = f"sqrt({f2})"
    rho = f"3*{_num(a)}^2/{f2}^2"
    lam2 = f"sqrt(3)*{_num(a)}/{f2}"
    return _rw_raw("rw_sqrt", Fraction(2, 3), scale,
                   math.sqrt(3.0) * a, kappa, rho, f"({rho})/3", lam2,
                   {"a": a, "kappa": kappa})


def _rw_raw(name, k, scale, target_scale, kappa, rho, p, lam2, params) -> dict:
    flat = kappa == 0.0
    if flat:
        coords = ["t", "y1", "y2", "y3"]
        validity = [scale]
        spatial = [f"({scale})^2"] * 3
        ncoords = ["y1", "y2", "y3"]
        nvalidity = []
        hdiag = [_num(target_scale)] * 3
        grid = {"t": (0.5, 2.0, 4), "y1": (0.3, 0.3, 1),
                "y2": (0.4, 0.4, 1), "y3": (0.5, 0.5, 1)}
        themap = ["y1", "y2", "y3"]
    else:
        coords = ["t", "chi", "th", "ph"]
        validity = [scale, "chi", "pi - chi", "th", "pi - th"]
        base = f"({scale})^2/{_num(kappa)}"
        spatial = [base, f"{base}*sin(chi)^2", f"{base}*sin(chi)^2*sin(th)^2"]
        ncoords = ["chi", "th", "ph"]
        nvalidity = ["chi", "pi - chi", "th", "pi - th"]
        hbase = f"{_num(target_scale)}/{_num(kappa)}"
        hdiag = [hbase, f"{hbase}*sin(chi)^2", f"{hbase}*sin(chi)^2*sin(th)^2"]
        grid = {"t": (0.5, 2.0, 4), "chi": (0.8, 0.8, 1),
                "th": (0.9, 0.9, 1), "ph": (1.0, 1.0, 1)}
        themap = ["chi", "th", "ph"]
    g_entries = [["-1", "0", "0", "0"],
                 ["0", spatial[0], "0", "0"],
                 ["0", "0", spatial[1], "0"],
                 ["0", "0", "0", spatial[2]]]
    h_entries = [[hdiag[0], "0", "0"],
                 ["0", hdiag[1], "0"],
                 ["0", "0", hdiag[2]]]
    return {
        "name": name,
        "k": f"{k.numerator}/{k.denominator}",
        "params": params,
        "charts": {
            "domain": {"coords": coords, "validity": validity, "time_index": 0},
            "codomain": {"coords": ncoords, "validity": nvalidity,
                         "time_index": None},
        },
        "metrics": {
            "g": {"entries": g_entries, "signature": [1, 3],
                  "name": name + "-warped"},
            "h": {"entries": h_entries, "signature": [0, 3],
                  "name": name + "-target"},
        },
        "map": themap,
        "expected": {
            "U": ["1", "0", "0", "0"],
            "rho": rho,
            "p": p,
            "eigenvalues": [lam2] * 3,
        },
        "flags": {"shearFree": True, "irrotational": True,
                  "accelerating": False, "gravityCoupled": True},
        "grid": grid,
        "alpha": -2.0,
    }


_REGISTRY = {
    "hb1_stiff": _hb1_stiff_raw,
    "hb1_power": _hb1_power_raw,
    "hb1_corotational": _hb1_corotational_raw,
    "hb2_stiff": _hb2_stiff_raw,
    "hb2_radiation": _hb2_radiation_raw,
    "gubser_ds3": _gubser_ds3_raw,
    "morawetz_radiation": _morawetz_radiation_raw,
    "skew_projection": _skew_projection_raw,
    "einstein_universe": _einstein_universe_raw,
    "rw_affine": _rw_affine_raw,
    "rw_sqrt": _rw_sqrt_raw,
}

CASE_NAMES = tuple(sorted(_REGISTRY))


def load_case(name: str, **params) -> SolutionCase:
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise UnknownCaseError(
            f"unknown case {name!r}; available: {', '.join(CASE_NAMES)}"
        ) from None
    return case_from_dict(builder(**params))


def registry_json() -> dict:
    """Default parameterization of every case in the JSON schema."""
    return {name: _REGISTRY[name]() for name in CASE_NAMES}
