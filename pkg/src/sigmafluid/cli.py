"""Command-line front end: case listing, verification, ODE reduction runs,
residual grid scans, and machine-readable reports."""

from __future__ import annotations

import json
import sys

import click

from . import fields
from .catalog import CASE_NAMES, case_from_dict, load_case
from .errors import SigmaFluidError, UnknownCaseError
from .reductions import (
    FAMILIES,
    EquivariantAnsatz,
    closed_form_profile,
    integrate_profile,
    reduce as reduce_ansatz,
)
from .verification import EQUATIONS, scan_rows, verify_case

EXIT_PASS = 0
EXIT_RESIDUAL = 1
EXIT_INVALID = 2


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _parse_grid(items) -> dict:
    out = {}
    for item in items:
        try:
            axis, spec = item.split("=", 1)
            lo, hi, n = spec.split(":")
            out[axis] = (float(lo), float(hi), int(n))
        except ValueError:
            raise click.BadParameter(
                f"grid override {item!r}; expected AX=lo:hi:n") from None
    return out


def _parse_tols(items) -> dict:
    out = {}
    for item in items:
        try:
            eq, value = item.split("=", 1)
            out[eq] = float(value)
        except ValueError:
            raise click.BadParameter(
                f"tolerance override {item!r}; expected EQ=value") from None
    return out


def _resolve_case(name_or_path: str):
    if name_or_path.endswith(".json"):
        with open(name_or_path) as fh:
            return case_from_dict(json.load(fh))
    return load_case(name_or_path)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _report_csv(case, rows) -> str:
    header = list(case.domain.coords) + list(EQUATIONS)
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


@click.group()
def main():
    """Sigma-model / perfect-fluid correspondence toolkit."""


@main.command("list-cases")
def list_cases():
    """List the registered exact-solution cases."""
    for name in CASE_NAMES:
        case = load_case(name)
        flags = ", ".join(f for f, v in sorted(case.flags.items()) if v)
        click.echo(f"{name:22s} k={case.k}  [{flags}]")


@main.command()
@click.argument("case_name")
@click.option("--grid", "grid_items", multiple=True, metavar="AX=lo:hi:n",
              help="Override a grid axis.")
@click.option("--tol", "tol_items", multiple=True, metavar="EQ=value",
              help="Override an equation tolerance.")
@click.option("--fd-step", type=float, default=None,
              help="Finite-difference step factor.")
@click.option("--fd", is_flag=True, help="Force finite-difference jacobians.")
@click.option("--equations", default=None,
              help="Comma-separated residual selection.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the JSON report to this path.")
def verify(case_name, grid_items, tol_items, fd_step, fd, equations, out_path):
    """Verify one case: residuals over its sample grid plus flag checks."""
    try:
        case = _resolve_case(case_name)
        if fd_step is not None:
            fields.FD_STEP_FACTOR = fd_step
        eqs = equations.split(",") if equations else None
        report = verify_case(case, _parse_grid(grid_items),
                             _parse_tols(tol_items), fd=fd, equations=eqs)
    except (UnknownCaseError, SigmaFluidError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)

    for eq in EQUATIONS:
        res = report["residuals"][eq]
        status = "ok" if report["checks"].get(eq, True) else "FAIL"
        mx = "n/a" if res["max"] is None else _fmt(res["max"])
        click.echo(f"{case.name}: {eq:13s} max={mx:24s} {status}")
    for flag, info in sorted(report["flags"].items()):
        if info["observed"] is not None and not info["match"]:
            click.echo(f"{case.name}: flag {flag}: declared="
                       f"{info['declared']} observed={info['observed']}")
    click.echo(f"{case.name}: {'PASS' if report['pass'] else 'FAIL'}")
    if out_path:
        _emit(_report_json(report), out_path)
    sys.exit(EXIT_PASS if report["pass"] else EXIT_RESIDUAL)


@main.command()
@click.argument("family", type=click.Choice(sorted(FAMILIES)))
@click.option("--constant", "c", type=float, default=1.0,
              help="Integration constant of the closed form.")
@click.option("--span", default="0.1:0.9", metavar="lo:hi")
@click.option("--samples", type=int, default=81)
@click.option("--method", type=click.Choice(["adaptive", "rk4"]),
              default="adaptive")
@click.option("--out", "out_path", type=click.Path(), default=None)
def reduce(family, c, span, samples, method, out_path):
    """Integrate a reduced profile ODE and compare with its closed form."""
    try:
        lo, hi = (float(v) for v in span.split(":"))
        ode = reduce_ansatz(EquivariantAnsatz(family))
        kwargs = {"C": c} if family != "corotational-sphere" else {}
        f0 = closed_form_profile(family, lo, **kwargs)
        h = 1e-6
        fp0 = (closed_form_profile(family, lo + h, **kwargs)
               - closed_form_profile(family, lo - h, **kwargs)) / (2 * h)
        profile = integrate_profile(ode, (lo, f0, fp0), (lo, hi),
                                    n_samples=samples, method=method)
    except (SigmaFluidError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)

    lines = ["zeta,f_numeric,f_closed,abs_delta"]
    worst = 0.0
    for z, fnum in zip(profile.zetas, profile.values):
        fcl = closed_form_profile(family, z, **kwargs)
        delta = abs(fnum - fcl)
        worst = max(worst, delta)
        lines.append(",".join(_fmt(v) for v in (z, fnum, fcl, delta)))
    _emit("\n".join(lines) + "\n", out_path)
    if out_path:
        click.echo(f"{family}: sup |numeric - closed| = {_fmt(worst)}")
    sys.exit(EXIT_PASS)


@main.command()
@click.argument("case_name")
@click.option("--grid", "grid_items", multiple=True, metavar="AX=lo:hi:n")
@click.option("--fd", is_flag=True)
@click.option("--out", "out_path", type=click.Path(), default=None)
def scan(case_name, grid_items, fd, out_path):
    """Residual table over a grid slice, as CSV (one row per point)."""
    try:
        case = _resolve_case(case_name)
        rows = scan_rows(case, _parse_grid(grid_items), fd=fd)
    except (UnknownCaseError, SigmaFluidError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    _emit(_report_csv(case, rows), out_path)
    sys.exit(EXIT_PASS)


@main.command()
@click.argument("case_name")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json")
@click.option("--grid", "grid_items", multiple=True, metavar="AX=lo:hi:n")
@click.option("--tol", "tol_items", multiple=True, metavar="EQ=value")
@click.option("--fd", is_flag=True)
@click.option("--out", "out_path", type=click.Path(), default=None)
def report(case_name, fmt, grid_items, tol_items, fd, out_path):
    """Emit the machine-readable verification report (JSON or CSV)."""
    try:
        case = _resolve_case(case_name)
        overrides = _parse_grid(grid_items)
        if fmt == "json":
            rep = verify_case(case, overrides, _parse_tols(tol_items), fd=fd)
            text = _report_json(rep)
            ok = rep["pass"]
        else:
            text = _report_csv(case, scan_rows(case, overrides, fd=fd))
            ok = True
    except (UnknownCaseError, SigmaFluidError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    _emit(text, out_path)
    sys.exit(EXIT_PASS if ok else EXIT_RESIDUAL)


if __name__ == "__main__":
    main()
