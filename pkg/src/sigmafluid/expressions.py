"""Small arithmetic-expression layer for coordinate-defined fields.

Expressions are strings over the chart coordinates using numbers, + - * / ^
and the function set cosh/sinh/tanh/arctanh/ln/exp/sqrt plus ordinary trig
(and their inverses).  They are parsed with sympy under a strict whitelist,
so analytic derivatives come for free; everything is compiled to plain
numpy callables once, at construction time.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr as _sympy_parse,
    standard_transformations,
)

from .errors import ExpressionError

_ALLOWED_FUNCTIONS = (
    sp.sin, sp.cos, sp.tan,
    sp.asin, sp.acos, sp.atan,
    sp.sinh, sp.cosh, sp.tanh,
    sp.asinh, sp.acosh, sp.atanh,
    sp.exp, sp.log, sp.sqrt, sp.Abs,
)

# Spelling used by the JSON grammar -> sympy names.
_NAME_ALIASES = {
    "ln": sp.log,
    "arcsin": sp.asin,
    "arccos": sp.acos,
    "arctan": sp.atan,
    "arcsinh": sp.asinh,
    "arccosh": sp.acosh,
    "arctanh": sp.atanh,
    "abs": sp.Abs,
}

_TRANSFORMATIONS = standard_transformations + (convert_xor,)

# sqrt is a plain function (it builds a Pow); only class-backed functions can
# appear as Function atoms after parsing.
_ALLOWED_CLASSES = tuple(f for f in _ALLOWED_FUNCTIONS if isinstance(f, type))


def coord_symbols(names: Sequence[str]) -> tuple[sp.Symbol, ...]:
    return tuple(sp.Symbol(n, real=True) for n in names)


def parse_expression(text: str, coords: Sequence[str]) -> sp.Expr:
    """Parse ``text`` into a sympy expression over the given coordinates.

    Raises ExpressionError for syntax errors, unknown symbols, or functions
    outside the whitelist.
    """
    symbols = coord_symbols(coords)
    local = {s.name: s for s in symbols}
    local.update({f.__name__: f for f in _ALLOWED_FUNCTIONS})
    local.update(_NAME_ALIASES)
    local["pi"] = sp.pi
    try:
        expr = _sympy_parse(
            text, local_dict=local, transformations=_TRANSFORMATIONS, evaluate=True
        )
    except Exception as exc:  # sympy raises a zoo of error types
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from exc

    expr = sp.sympify(expr)
    extra = expr.free_symbols - set(symbols)
    if extra:
        names = ", ".join(sorted(s.name for s in extra))
        raise ExpressionError(f"unknown symbols in {text!r}: {names}")
    for f in expr.atoms(sp.Function):
        if not isinstance(f, _ALLOWED_CLASSES):
            raise ExpressionError(f"function {f.func} not in the supported grammar")
    return expr


def _as_expr(e, coords: Sequence[str]) -> sp.Expr:
    if isinstance(e, str):
        return parse_expression(e, coords)
    return sp.sympify(e)


def compile_scalar(e, coords: Sequence[str]):
    """Compile a scalar expression to (value, gradient) callables over points."""
    symbols = coord_symbols(coords)
    expr = _as_expr(e, coords)
    f = sp.lambdify(symbols, expr, modules="numpy")
    grads = [sp.diff(expr, s) for s in symbols]
    gf = sp.lambdify(symbols, grads, modules="numpy")

    def value(x):
        return float(f(*x))

    def gradient(x):
        return np.asarray(gf(*x), dtype=float)

    return value, gradient


def compile_vector(entries, coords: Sequence[str]):
    """Compile a vector of expressions to (value, jacobian) callables.

    jacobian(x)[a, b] = d V^a / d x^b.
    """
    symbols = coord_symbols(coords)
    exprs = [_as_expr(e, coords) for e in entries]
    f = sp.lambdify(symbols, exprs, modules="numpy")
    jac = [[sp.diff(e, s) for s in symbols] for e in exprs]
    jf = sp.lambdify(symbols, jac, modules="numpy")

    def value(x):
        return np.asarray(f(*x), dtype=float)

    def jacobian(x):
        return np.asarray(jf(*x), dtype=float)

    return value, jacobian


def compile_matrix(entries, coords: Sequence[str]):
    """Compile a matrix of expressions to (value, derivative) callables.

    derivative(x)[c, a, b] = d M_ab / d x^c.
    """
    symbols = coord_symbols(coords)
    mat = sp.Matrix([[_as_expr(e, coords) for e in row] for row in entries])
    f = sp.lambdify(symbols, mat, modules="numpy")
    dmats = [mat.diff(s) for s in symbols]
    df = sp.lambdify(symbols, dmats, modules="numpy")

    def value(x):
        return np.asarray(f(*x), dtype=float)

    def derivative(x):
        return np.asarray(df(*x), dtype=float)

    return value, derivative


def expression_strings(entries) -> list:
    """Render (possibly nested) sympy expressions back to grammar strings."""
    if isinstance(entries, (list, tuple)):
        return [expression_strings(e) for e in entries]
    return str(entries)


ScalarFunc = Callable[[np.ndarray], float]
