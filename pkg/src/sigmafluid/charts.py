"""Chart domains: coordinate labels plus a validity region."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ChartBoundaryError
from .expressions import compile_scalar

#: Points closer than this to a validity boundary are rejected, not
#: extrapolated.
BOUNDARY_MARGIN = 1e-6


@dataclass(frozen=True)
class ChartDomain:
    """A coordinate chart: dimension, labels, and a total validity predicate.

    ``time_index`` marks the designated time coordinate (used to orient
    timelike vectors future-pointing).  ``interior_margins`` holds compiled
    scalar functions that must stay positive (with margin) inside the chart;
    they double as a distance-to-boundary estimate for the margin test.
    """

    coords: tuple[str, ...]
    validity_exprs: tuple[str, ...] = ()
    time_index: Optional[int] = 0
    _margins: tuple = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        margins = tuple(
            compile_scalar(e, self.coords)[0] for e in self.validity_exprs
        )
        object.__setattr__(self, "_margins", margins)

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def contains(self, x, margin: float = BOUNDARY_MARGIN) -> bool:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,) or not np.all(np.isfinite(x)):
            return False
        try:
            return all(m(x) > margin for m in self._margins)
        except (ValueError, FloatingPointError, ZeroDivisionError):
            return False

    def require(self, x, margin: float = BOUNDARY_MARGIN) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if not self.contains(x, margin=margin):
            raise ChartBoundaryError(
                f"point {x.tolist()} outside chart ({', '.join(self.coords)}) "
                f"or within {margin} of its boundary"
            )
        return x

    def index(self, name: str) -> int:
        return self.coords.index(name)


def chart(coords: Sequence[str], validity: Sequence[str] = (), time_index=0):
    return ChartDomain(tuple(coords), tuple(validity), time_index)
