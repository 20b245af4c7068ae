"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Experiments - Initial conditions, run configuration, the preset catalog and sweeps.
"""

from domo_fv.experiments.config import RunConfig, SchemeSpec, load_config, parse_scheme_id
from domo_fv.experiments.initial_conditions import InitialCondition, initial_condition
from domo_fv.experiments.presets import Presets, catalog_checksum, preset, preset_names
from domo_fv.experiments.sweep import SweepResult, SweepRow, sweep, sweep_async

__all__ = [
    "InitialCondition",
    "Presets",
    "RunConfig",
    "SchemeSpec",
    "SweepResult",
    "SweepRow",
    "catalog_checksum",
    "initial_condition",
    "load_config",
    "parse_scheme_id",
    "preset",
    "preset_names",
    "sweep",
    "sweep_async",
]
