"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
DomoFV - Third-order finite-volume reconstruction for 1D conservation laws
"""

from domo_fv.errors import ConfigError, DomoFVError, PositivityError
from domo_fv.experiments.config import RunConfig
from domo_fv.experiments.presets import Presets, preset
from domo_fv.experiments.sweep import sweep
from domo_fv.numerics.solver import RunResult, run

__version__ = "1.0.0"
__author__ = "Vaughn Vernon"
__license__ = "RPL-1.5"

__all__ = [
    "ConfigError",
    "DomoFVError",
    "PositivityError",
    "Presets",
    "RunConfig",
    "RunResult",
    "preset",
    "run",
    "sweep",
]
