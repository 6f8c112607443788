"""Standard charts and metric expressions used by the solution catalog.

All metrics are expression-backed, so analytic first derivatives (hence
analytic Christoffel symbols) are available everywhere.
"""

from __future__ import annotations

from .charts import ChartDomain, chart
from .geometry import MetricField

# ---------------------------------------------------------------------------
# Minkowski in spherical spatial coordinates (x4, r, s, th), time first.

MINK_SPHERICAL_COORDS = ("x4", "r", "s", "th")


def minkowski_spherical_chart(forward_cone: bool = True) -> ChartDomain:
    validity = ["r", "s", "pi - s"]
    if forward_cone:
        validity.insert(0, "x4 - r")
    return chart(MINK_SPHERICAL_COORDS, validity, time_index=0)


def minkowski_spherical_metric() -> MetricField:
    entries = [
        ["-1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "r^2", "0"],
        ["0", "0", "0", "r^2*sin(s)^2"],
    ]
    return MetricField.from_expressions(entries, MINK_SPHERICAL_COORDS,
                                        (1, 3), "minkowski-spherical")


def euclidean_spherical_chart() -> ChartDomain:
    return chart(("R", "s", "th"), ["R", "s", "pi - s"], time_index=None)


def euclidean_spherical_metric() -> MetricField:
    entries = [
        ["1", "0", "0"],
        ["0", "R^2", "0"],
        ["0", "0", "R^2*sin(s)^2"],
    ]
    return MetricField.from_expressions(entries, ("R", "s", "th"), (0, 3),
                                        "euclidean-spherical")


# ---------------------------------------------------------------------------
# Minkowski in cylindrical spatial coordinates (x4, x3, xp, ph).

MINK_CYL_COORDS = ("x4", "x3", "xp", "ph")


def minkowski_cylindrical_chart(future_wedge: bool = True,
                                radius_bound: float | None = None) -> ChartDomain:
    validity = ["xp"]
    if future_wedge:
        validity.insert(0, "x4 - abs(x3)")
    if radius_bound is not None:
        validity.append(f"{radius_bound!r} - xp")
    return chart(MINK_CYL_COORDS, validity, time_index=0)


def minkowski_cylindrical_metric() -> MetricField:
    entries = [
        ["-1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "xp^2"],
    ]
    return MetricField.from_expressions(entries, MINK_CYL_COORDS, (1, 3),
                                        "minkowski-cylindrical")


def euclidean_cylindrical_chart(radius_bound: float | None = None) -> ChartDomain:
    validity = ["yp"]
    if radius_bound is not None:
        validity.append(f"{radius_bound!r} - yp")
    return chart(("y3", "yp", "ph"), validity, time_index=None)


def euclidean_cylindrical_metric() -> MetricField:
    entries = [
        ["1", "0", "0"],
        ["0", "1", "0"],
        ["0", "0", "yp^2"],
    ]
    return MetricField.from_expressions(entries, ("y3", "yp", "ph"), (0, 3),
                                        "euclidean-cylindrical")


def deformed_cylinder_metric(q: float) -> MetricField:
    w = f"1 - {q!r}^2*yp^2"
    entries = [
        [w, "0", "0"],
        ["0", w, "0"],
        ["0", "0", "yp^2"],
    ]
    return MetricField.from_expressions(entries, ("y3", "yp", "ph"), (0, 3),
                                        f"deformed-cylinder(q={q})")


# ---------------------------------------------------------------------------
# Milne-type chart (tau, eta, xp, ph) for heavy-ion coordinates.

MILNE_COORDS = ("tau", "eta", "xp", "ph")


def milne_chart() -> ChartDomain:
    return chart(MILNE_COORDS, ["tau", "xp"], time_index=0)


def milne_metric() -> MetricField:
    entries = [
        ["-1", "0", "0", "0"],
        ["0", "tau^2", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "0", "0", "xp^2"],
    ]
    return MetricField.from_expressions(entries, MILNE_COORDS, (1, 3), "milne")


# ---------------------------------------------------------------------------
# dS3 x R and its target S2 x R.

DS3R_COORDS = ("rho", "s", "ph", "eta")


def ds3xr_chart() -> ChartDomain:
    return chart(DS3R_COORDS, ["s", "pi - s"], time_index=0)


def ds3xr_metric() -> MetricField:
    entries = [
        ["-1", "0", "0", "0"],
        ["0", "cosh(rho)^2", "0", "0"],
        ["0", "0", "cosh(rho)^2*sin(s)^2", "0"],
        ["0", "0", "0", "1"],
    ]
    return MetricField.from_expressions(entries, DS3R_COORDS, (1, 3), "dS3xR")


def s2xr_chart() -> ChartDomain:
    return chart(("s", "ph", "eta"), ["s", "pi - s"], time_index=None)


def s2xr_metric() -> MetricField:
    entries = [
        ["1", "0", "0"],
        ["0", "sin(s)^2", "0"],
        ["0", "0", "1"],
    ]
    return MetricField.from_expressions(entries, ("s", "ph", "eta"), (0, 3), "S2xR")


# ---------------------------------------------------------------------------
# S3 target for the co-rotational map (hemisphere chart, polar angle first).


def sphere3_chart() -> ChartDomain:
    return chart(("b", "s", "th"), ["b", "pi - b", "s", "pi - s"], time_index=None)


def sphere3_metric() -> MetricField:
    entries = [
        ["1", "0", "0"],
        ["0", "sin(b)^2", "0"],
        ["0", "0", "sin(b)^2*sin(s)^2"],
    ]
    return MetricField.from_expressions(entries, ("b", "s", "th"), (0, 3), "S3-canonical")


def sphere3_hemisphere_metric() -> MetricField:
    """cos^-2(b) times the canonical metric (conformal rescale to the
    hemisphere)."""
    f = "cos(b)^(-2)"
    entries = [
        [f, "0", "0"],
        ["0", f + "*sin(b)^2", "0"],
        ["0", "0", f + "*sin(b)^2*sin(s)^2"],
    ]
    return MetricField.from_expressions(entries, ("b", "s", "th"), (0, 3),
                                        "S3-hemisphere")


# ---------------------------------------------------------------------------
# Einstein static universe R x S3 (t, s, ph1, ph2).

EINSTEIN_COORDS = ("t", "s", "ph1", "ph2")


def einstein_universe_chart() -> ChartDomain:
    return chart(EINSTEIN_COORDS, ["s", "pi/2 - s"], time_index=0)


def einstein_universe_metric() -> MetricField:
    entries = [
        ["-1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "cos(s)^2", "0"],
        ["0", "0", "0", "sin(s)^2"],
    ]
    return MetricField.from_expressions(entries, EINSTEIN_COORDS, (1, 3),
                                        "einstein-universe")


# ---------------------------------------------------------------------------
# Robertson-Walker warped products I x_f N.

RW_FLAT_COORDS = ("t", "y1", "y2", "y3")
RW_SPHERE_COORDS = ("t", "chi", "th", "ph")


def rw_chart(scale_expr: str, curvature: float) -> ChartDomain:
    coords = RW_FLAT_COORDS if curvature == 0 else RW_SPHERE_COORDS
    validity = [scale_expr]
    if curvature != 0:
        validity += ["chi", "pi - chi", "th", "pi - th"]
    return chart(coords, validity, time_index=0)


def rw_metric(scale_expr: str, curvature: float) -> MetricField:
    f2 = f"({scale_expr})^2"
    if curvature == 0:
        entries = [
            ["-1", "0", "0", "0"],
            ["0", f2, "0", "0"],
            ["0", "0", f2, "0"],
            ["0", "0", "0", f2],
        ]
        return MetricField.from_expressions(entries, RW_FLAT_COORDS, (1, 3),
                                            "robertson-walker-flat")
    invk = f"(1/{curvature!r})"
    entries = [
        ["-1", "0", "0", "0"],
        ["0", f2 + "*" + invk, "0", "0"],
        ["0", "0", f2 + "*" + invk + "*sin(chi)^2", "0"],
        ["0", "0", "0", f2 + "*" + invk + "*sin(chi)^2*sin(th)^2"],
    ]
    return MetricField.from_expressions(entries, RW_SPHERE_COORDS, (1, 3),
                                        "robertson-walker-spherical")


def rw_target_chart(curvature: float) -> ChartDomain:
    if curvature == 0:
        return chart(("y1", "y2", "y3"), (), time_index=None)
    return chart(("chi", "th", "ph"), ["chi", "pi - chi", "th", "pi - th"],
                 time_index=None)


def rw_target_metric(scale: float, curvature: float) -> MetricField:
    """(N, scale * h) with h of constant curvature ``curvature``."""
    if curvature == 0:
        c = f"{scale!r}"
        entries = [[c, "0", "0"], ["0", c, "0"], ["0", "0", c]]
        return MetricField.from_expressions(entries, ("y1", "y2", "y3"), (0, 3),
                                            "rw-target-flat")
    c = f"({scale!r}/{curvature!r})"
    entries = [
        [c, "0", "0"],
        ["0", c + "*sin(chi)^2", "0"],
        ["0", "0", c + "*sin(chi)^2*sin(th)^2"],
    ]
    return MetricField.from_expressions(entries, ("chi", "th", "ph"), (0, 3),
                                        "rw-target-spherical")
