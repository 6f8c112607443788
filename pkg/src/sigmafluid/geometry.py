"""Chart-based semi-Riemannian calculus.

Metrics, Levi-Civita connection, divergences, projected gradients and mean
curvatures of distributions.  Everything is a pure function of (immutable
object graph, point); no tensor-index abstraction beyond the ranks actually
used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import CausalDegeneracyError, DegenerateMetricError
from .expressions import compile_matrix
from .fields import ScalarField, TensorField, VectorField, fd_tensor_derivative

_SYMMETRY_TOL = 1e-12
_DEGENERATE_COND = 1e12
_FRAME_TOL = 1e-10


@dataclass(frozen=True)
class MetricField:
    """Metric components over a chart.

    ``func(x)`` returns the symmetric matrix g_ab; ``deriv_func`` (when
    present) returns the analytic stack dg[c, a, b] = d g_ab / d x^c,
    otherwise central differences are used.
    """

    func: Callable
    signature: tuple[int, int] = (1, 3)
    deriv_func: Optional[Callable] = None
    name: str = ""

    def matrix(self, x) -> np.ndarray:
        g = np.asarray(self.func(np.asarray(x, dtype=float)), dtype=float)
        asym = np.max(np.abs(g - g.T))
        if asym > _SYMMETRY_TOL * max(1.0, np.max(np.abs(g))):
            raise DegenerateMetricError(f"metric not symmetric at {x}: {asym}")
        return 0.5 * (g + g.T)

    def inverse(self, x) -> np.ndarray:
        g = self.matrix(x)
        if np.linalg.cond(g) > _DEGENERATE_COND:
            raise DegenerateMetricError(f"metric singular at {x}")
        return np.linalg.inv(g)

    def derivative(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.deriv_func is not None:
            return np.asarray(self.deriv_func(x), dtype=float)
        return fd_tensor_derivative(self.func, x)

    @property
    def analytic(self) -> bool:
        return self.deriv_func is not None

    def signature_counts(self, x) -> tuple[int, int]:
        ev = np.linalg.eigvalsh(self.matrix(x))
        return int(np.sum(ev < 0)), int(np.sum(ev > 0))

    def check_signature(self, x) -> bool:
        return self.signature_counts(x) == self.signature

    def norm(self, x, v) -> float:
        """Signed squared length g(v, v)."""
        v = np.asarray(v, dtype=float)
        return float(v @ self.matrix(x) @ v)

    def inner(self, x, v, w) -> float:
        return float(np.asarray(v) @ self.matrix(x) @ np.asarray(w))

    def without_analytic_derivatives(self) -> "MetricField":
        return MetricField(self.func, self.signature, None, self.name)

    @classmethod
    def from_expressions(cls, entries, coords, signature=(1, 3), name=""):
        value, derivative = compile_matrix(entries, coords)
        return cls(lambda x: value(x), tuple(signature), derivative, name)

    @classmethod
    def from_constant(cls, matrix, signature=None, name=""):
        g = np.asarray(matrix, dtype=float)
        m = g.shape[0]
        ev = np.linalg.eigvalsh(g)
        sig = signature or (int(np.sum(ev < 0)), int(np.sum(ev > 0)))
        return cls(
            lambda x: g,
            tuple(sig),
            lambda x: np.zeros((np.asarray(x).size, m, m)),
            name,
        )


def minkowski(m: int = 4, name: str = "minkowski") -> MetricField:
    """Standard Minkowski chart with the time coordinate first."""
    g = np.eye(m)
    g[0, 0] = -1.0
    return MetricField.from_constant(g, (1, m - 1), name)


def euclidean(n: int = 3, name: str = "euclidean") -> MetricField:
    return MetricField.from_constant(np.eye(n), (0, n), name)


def christoffel(metric: MetricField, x) -> np.ndarray:
    """Levi-Civita symbols Gamma[a, b, c] = Gamma^a_bc, symmetric in (b, c)."""
    ginv = metric.inverse(x)
    dg = metric.derivative(x)  # dg[c, a, b]
    # Gamma^a_bc = 1/2 g^{ad} (d_b g_dc + d_c g_db - d_d g_bc)
    term = np.einsum("bdc->dbc", dg) + np.einsum("cdb->dbc", dg) - dg
    return 0.5 * np.einsum("ad,dbc->abc", ginv, term)


def covariant_derivative(metric: MetricField, X: VectorField, Y: VectorField, x):
    """(nabla_X Y)(x) in chart components."""
    x = np.asarray(x, dtype=float)
    Xx = X(x)
    gamma = christoffel(metric, x)
    directional = Y.jacobian(x) @ Xx
    return directional + np.einsum("abc,b,c->a", gamma, Xx, Y(x))


def divergence(metric: MetricField, X: VectorField, x) -> float:
    x = np.asarray(x, dtype=float)
    gamma = christoffel(metric, x)
    return float(np.trace(X.jacobian(x)) + np.einsum("aab,b->", gamma, X(x)))


def gradient(metric: MetricField, fn: ScalarField, x) -> np.ndarray:
    return metric.inverse(x) @ fn.gradient(x)


def gram_schmidt(g: np.ndarray, seeds: Sequence[np.ndarray], against=()):
    """g-orthonormalize ``seeds`` in order, skipping (near-)degenerate
    directions; ``against`` holds already-orthonormal (vector, sign) pairs.

    Returns a list of (unit vector, causal sign) pairs.
    """
    accepted = list(against)
    out = []
    scale = max(1.0, np.max(np.abs(g)))
    for v in seeds:
        w = np.array(v, dtype=float)
        for e, eps in accepted:
            w = w - eps * float(w @ g @ e) * e
        n2 = float(w @ g @ w)
        if abs(n2) <= _FRAME_TOL * scale * max(1.0, float(w @ w)):
            continue
        eps = 1.0 if n2 > 0 else -1.0
        e = w / np.sqrt(abs(n2))
        accepted.append((e, eps))
        out.append((e, eps))
    return out


@dataclass(frozen=True)
class FrameField:
    """Point-wise g-orthonormal frame with causal signs."""

    vectors: tuple
    signs: tuple

    def __iter__(self):
        return iter(zip(self.vectors, self.signs))


@dataclass(frozen=True)
class DistributionSplit:
    """Orthogonal splitting TM = V (+) H generated by vertical vector fields.

    In every fluid application the vertical rank is 1 with a timelike
    generator; the code keeps the general frame machinery for the mean
    curvature formula.
    """

    metric: MetricField
    vertical: tuple
    timelike_vertical: bool = True

    @property
    def rank_vertical(self) -> int:
        return len(self.vertical)

    def vertical_frame(self, x) -> FrameField:
        g = self.metric.matrix(x)
        pairs = gram_schmidt(g, [V(x) for V in self.vertical])
        if len(pairs) != len(self.vertical):
            raise CausalDegeneracyError(f"degenerate vertical distribution at {x}")
        if self.timelike_vertical and any(eps > 0 for _, eps in pairs):
            raise CausalDegeneracyError(f"vertical direction not timelike at {x}")
        return FrameField(tuple(v for v, _ in pairs), tuple(s for _, s in pairs))

    def horizontal_frame(self, x) -> FrameField:
        g = self.metric.matrix(x)
        m = g.shape[0]
        vert = self.vertical_frame(x)
        pairs = gram_schmidt(g, list(np.eye(m)), against=list(zip(vert.vectors, vert.signs)))
        if len(pairs) != m - len(self.vertical):
            raise CausalDegeneracyError(f"degenerate horizontal distribution at {x}")
        return FrameField(tuple(v for v, _ in pairs), tuple(s for _, s in pairs))

    def projector_vertical(self, x) -> np.ndarray:
        g = self.metric.matrix(x)
        frame = self.vertical_frame(x)
        P = np.zeros_like(g)
        for e, eps in frame:
            P += eps * np.outer(e, g @ e)
        return P

    def projector_horizontal(self, x) -> np.ndarray:
        return np.eye(self.metric.matrix(x).shape[0]) - self.projector_vertical(x)

    def project(self, x, v, part: str) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if part == "full":
            return v
        if part == "V":
            return self.projector_vertical(x) @ v
        if part in ("H", "perp"):
            return self.projector_horizontal(x) @ v
        raise ValueError(f"unknown part {part!r}")

    def vertical_fields(self):
        return tuple(
            VectorField(lambda x, i=i: self.vertical_frame(x).vectors[i])
            for i in range(self.rank_vertical)
        )

    def horizontal_fields(self):
        return _HorizontalFieldTuple(self)


class _HorizontalFieldTuple:
    """Lazy tuple of horizontal frame vector fields (rank known per point)."""

    def __init__(self, split: DistributionSplit):
        self._split = split

    def at(self, x):
        frame = self._split.horizontal_frame(x)
        return [
            VectorField(lambda y, i=i: self._split.horizontal_frame(y).vectors[i])
            for i in range(len(frame.vectors))
        ]


def split_from_unit_timelike(metric: MetricField, U: VectorField) -> DistributionSplit:
    return DistributionSplit(metric, (U,), timelike_vertical=True)


def projected_gradient(metric: MetricField, split: DistributionSplit,
                       fn: ScalarField, x, part: str = "full") -> np.ndarray:
    return split.project(x, gradient(metric, fn, x), part)


def mean_curvature(metric: MetricField, split: DistributionSplit, x,
                   which: str = "V") -> np.ndarray:
    """Mean curvature vector of V or H by the frame formula
    (1/q) sum_i eps_i (nabla_{e_i} e_i)^{complement}."""
    x = np.asarray(x, dtype=float)
    if which == "V":
        fields = split.vertical_fields()
        frame = split.vertical_frame(x)
        proj = split.projector_horizontal(x)
    elif which == "H":
        fields = split.horizontal_fields().at(x)
        frame = split.horizontal_frame(x)
        proj = split.projector_vertical(x)
    else:
        raise ValueError(f"unknown distribution {which!r}")
    acc = np.zeros(x.size)
    for E, eps in zip(fields, frame.signs):
        acc += eps * (proj @ covariant_derivative(metric, E, E, x))
    return acc / len(frame.signs)


def lie_derivative(U: VectorField, T: TensorField, x) -> np.ndarray:
    """(L_U T)_ab for a (0,2)-tensor field, in chart components."""
    x = np.asarray(x, dtype=float)
    dT = T.derivative(x)       # dT[c, a, b]
    J = U.jacobian(x)          # J[a, b] = d U^a / d x^b
    Tx = T(x)
    return (
        np.einsum("cab,c->ab", dT, U(x))
        + np.einsum("ca,cb->ab", J, Tx)
        + np.einsum("cb,ac->ab", J, Tx)
    )


def tensor_divergence(metric: MetricField, T: TensorField, x) -> np.ndarray:
    """(div T)_b = g^{ac} (d_a T_cb - Gamma^d_ac T_db - Gamma^d_ab T_cd)."""
    x = np.asarray(x, dtype=float)
    ginv = metric.inverse(x)
    gamma = christoffel(metric, x)
    dT = T.derivative(x)
    Tx = T(x)
    nabla = (
        dT
        - np.einsum("dac,db->acb", gamma, Tx)
        - np.einsum("dab,cd->acb", gamma, Tx)
    )
    return np.einsum("ac,acb->b", ginv, nabla)


def one_form_exterior_derivative(omega: VectorField, x) -> np.ndarray:
    """(d omega)_ab = d_a omega_b - d_b omega_a for covariant components."""
    J = omega.jacobian(x)  # J[b, a] = d omega_b / d x^a
    return J.T - J
