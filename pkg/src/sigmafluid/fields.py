"""Point-wise fields over a chart and finite-difference fallbacks.

All fields are immutable callables point -> value; derivatives are either
analytic closures (expression-backed fields) or central finite differences
with step h_c = cbrt(eps) * max(1, |x_c|).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .expressions import compile_matrix, compile_scalar, compile_vector

FD_STEP_FACTOR = float(np.cbrt(np.finfo(float).eps))


def fd_step(x: np.ndarray) -> np.ndarray:
    return FD_STEP_FACTOR * np.maximum(1.0, np.abs(x))


def fd_partial(func: Callable, x: np.ndarray, c: int):
    """Central difference of ``func`` (scalar- or array-valued) along x_c."""
    h = fd_step(x)[c]
    xp = np.array(x, dtype=float)
    xm = np.array(x, dtype=float)
    xp[c] += h
    xm[c] -= h
    fp = np.asarray(func(xp), dtype=float)
    fm = np.asarray(func(xm), dtype=float)
    return (fp - fm) / (2.0 * h)


def fd_gradient(func: Callable, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return np.array([fd_partial(func, x, c) for c in range(x.size)])


def fd_jacobian(func: Callable, x: np.ndarray) -> np.ndarray:
    """J[a, b] = d f^a / d x^b for vector-valued ``func``."""
    x = np.asarray(x, dtype=float)
    cols = [fd_partial(func, x, c) for c in range(x.size)]
    return np.stack(cols, axis=-1)


def fd_tensor_derivative(func: Callable, x: np.ndarray) -> np.ndarray:
    """d[c, ...] = d T_... / d x^c for array-valued ``func``."""
    x = np.asarray(x, dtype=float)
    return np.stack([fd_partial(func, x, c) for c in range(x.size)], axis=0)


@dataclass(frozen=True)
class ScalarField:
    func: Callable
    grad_func: Optional[Callable] = None

    def __call__(self, x) -> float:
        return float(self.func(np.asarray(x, dtype=float)))

    def gradient(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.grad_func is not None:
            return np.asarray(self.grad_func(x), dtype=float)
        return fd_gradient(self.func, x)

    @classmethod
    def from_expression(cls, text, coords: Sequence[str]) -> "ScalarField":
        value, gradient = compile_scalar(text, coords)
        return cls(lambda x: value(x), gradient)

    @classmethod
    def constant(cls, c: float) -> "ScalarField":
        c = float(c)
        return cls(lambda x: c, lambda x: np.zeros(np.asarray(x).size))


@dataclass(frozen=True)
class VectorField:
    func: Callable
    jac_func: Optional[Callable] = None

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.func(np.asarray(x, dtype=float)), dtype=float)

    def jacobian(self, x) -> np.ndarray:
        """jacobian(x)[a, b] = d V^a / d x^b."""
        x = np.asarray(x, dtype=float)
        if self.jac_func is not None:
            return np.asarray(self.jac_func(x), dtype=float)
        return fd_jacobian(self.func, x)

    @classmethod
    def from_expressions(cls, entries, coords: Sequence[str]) -> "VectorField":
        value, jacobian = compile_vector(entries, coords)
        return cls(lambda x: value(x), jacobian)

    @classmethod
    def constant(cls, v) -> "VectorField":
        v = np.asarray(v, dtype=float)
        return cls(lambda x: v, lambda x: np.zeros((v.size, np.asarray(x).size)))


@dataclass(frozen=True)
class TensorField:
    """A (0,2)-tensor field; ``derivative(x)[c, a, b] = d T_ab / d x^c``."""

    func: Callable
    deriv_func: Optional[Callable] = None

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.func(np.asarray(x, dtype=float)), dtype=float)

    def derivative(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.deriv_func is not None:
            return np.asarray(self.deriv_func(x), dtype=float)
        return fd_tensor_derivative(self.func, x)

    @classmethod
    def from_expressions(cls, entries, coords: Sequence[str]) -> "TensorField":
        value, derivative = compile_matrix(entries, coords)
        return cls(lambda x: value(x), derivative)
