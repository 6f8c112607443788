"""Numerical correspondence between high-power sigma-model fields and
relativistic barotropic perfect fluids.

Submodules:

- ``charts``, ``fields``, ``geometry``: chart-based semi-Riemannian calculus
- ``maps``: Cauchy-Green eigenstructure of submersions with timelike fibers
- ``stress``: sigma-model stress-energy tensors and fluid extraction
- ``fluids``: Euler/energy residuals, shear, vorticity, thermodynamics
- ``reductions``: symmetry-reduced profile ODEs and closed forms
- ``catalog``: registry of exact-solution cases
- ``gravity``: curvature and Einstein-coupling checks
- ``verification``: grid verification reports
- ``cli``: the ``sigmafluid`` command-line tool
"""

__version__ = "0.1.0"

from .catalog import CASE_NAMES, SolutionCase, case_from_dict, load_case  # noqa: E402
from .fluids import EquationOfState, FluidState  # noqa: E402
from .maps import SmoothMap, cauchy_green_decompose  # noqa: E402
from .stress import LagrangianSpec, fluid_tensor, stress_tensor  # noqa: E402
from .verification import verify_case  # noqa: E402

__all__ = [
    "CASE_NAMES",
    "EquationOfState",
    "FluidState",
    "LagrangianSpec",
    "SmoothMap",
    "SolutionCase",
    "__version__",
    "case_from_dict",
    "cauchy_green_decompose",
    "fluid_tensor",
    "load_case",
    "stress_tensor",
    "verify_case",
]
