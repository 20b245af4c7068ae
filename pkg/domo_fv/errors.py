"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Errors - Exception hierarchy shared by the numerics, experiments and CLI layers.
"""

from typing import Any, Dict, Optional


class DomoFVError(Exception):
    """Root of all toolkit errors."""


class ConfigError(DomoFVError, ValueError):
    """Invalid run configuration, preset name, scheme id or config file."""


class DegenerateContextError(DomoFVError, ValueError):
    """Smoothness indicator requested with an empty asymptotic region (alpha = 0)."""


class DegenerateTimestepError(DomoFVError):
    """Maximal wave speed is zero, so no CFL time step exists."""


class GhostLayerError(DomoFVError, ValueError):
    """Field does not carry enough ghost layers for the requested stencil."""


class GridMismatchError(DomoFVError, ValueError):
    """Two fields or a field and a grid do not describe the same cells."""


class ProvenanceError(DomoFVError):
    """Reference solution file is malformed or its metadata does not match."""


class UndefinedLimiterError(DomoFVError, ValueError):
    """Limiter evaluated at a point where it has no value."""


class PositivityError(DomoFVError):
    """
    Density or pressure became non-positive during a run.

    The run is aborted; the instance carries enough context to locate the failure.
    """

    def __init__(
        self,
        variable: str,
        cell: int,
        value: float,
        step: Optional[int] = None,
        time: Optional[float] = None
    ) -> None:
        """
        Initialize the positivity error.

        Args:
            variable: Offending primitive variable, "rho" or "p"
            cell: Interior cell index (0-based)
            value: The non-positive value found
            step: Time step index at which the violation was seen
            time: Simulation time of the offending stage
        """
        self.variable = variable
        self.cell = cell
        self.value = value
        self.step = step
        self.time = time
        super().__init__(self._describe())

    def at(self, step: int, time: float) -> "PositivityError":
        """
        Return a copy tagged with the time step and time.

        Args:
            step: Time step index
            time: Simulation time

        Returns:
            A new PositivityError with step and time filled in
        """
        return PositivityError(self.variable, self.cell, self.value, step, time)

    def to_dict(self) -> Dict[str, Any]:
        """
        Get the structured diagnostic.

        Returns:
            JSON-serializable dictionary
        """
        return {
            "error": "positivity",
            "variable": self.variable,
            "cell": self.cell,
            "value": self.value,
            "step": self.step,
            "time": self.time,
        }

    def _describe(self) -> str:
        where = f"cell {self.cell}"
        if self.step is not None:
            where += f", step {self.step}"
        if self.time is not None:
            where += f", t={self.time:.6g}"
        return f"non-positive {self.variable}={self.value!r} at {where}"
