"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Numerics - Limiters, WENO3, reconstruction, fluxes, time stepping and diagnostics.
"""

from domo_fv.numerics.diagnostics import (
    ErrorReport,
    cell_averages,
    convergence_orders,
    l1_error,
    linf_error,
    total_variation,
)
from domo_fv.numerics.grid import BoundaryCondition, BoundaryKind, CellField, Grid1D, fill_ghosts
from domo_fv.numerics.limiters import LimiterKind, SlopePair, SmoothnessContext
from domo_fv.numerics.physics import AdvectionModel, EulerModel, FluxKind, numerical_flux
from domo_fv.numerics.reconstruction import LimiterScheme, interface_values, reconstruct_field
from domo_fv.numerics.reference import ReferenceSolution, make_reference, restrict_reference
from domo_fv.numerics.solver import PositivityCheck, RunResult, TimestepMode, evolve, run, ssp_rk3_step
from domo_fv.numerics.weno3 import EpsilonPolicy, WenoParams, WenoVariant, weno_weights

__all__ = [
    "AdvectionModel",
    "BoundaryCondition",
    "BoundaryKind",
    "CellField",
    "EpsilonPolicy",
    "ErrorReport",
    "EulerModel",
    "FluxKind",
    "Grid1D",
    "LimiterKind",
    "LimiterScheme",
    "PositivityCheck",
    "ReferenceSolution",
    "RunResult",
    "SlopePair",
    "SmoothnessContext",
    "TimestepMode",
    "WenoParams",
    "WenoVariant",
    "cell_averages",
    "convergence_orders",
    "evolve",
    "fill_ghosts",
    "interface_values",
    "l1_error",
    "linf_error",
    "make_reference",
    "numerical_flux",
    "reconstruct_field",
    "restrict_reference",
    "run",
    "ssp_rk3_step",
    "total_variation",
    "weno_weights",
]
