"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Physics - Flux functions, wave speeds and conversions for advection and 1D Euler.

Euler states are arrays whose first axis holds the three components, either
conservative (rho, rho u, E) or primitive (rho, u, p); any trailing shape is allowed.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from domo_fv.errors import PositivityError

PRIMITIVE_NAMES = ("rho", "v", "p")


class FluxKind(Enum):
    """Approximate Riemann solver used for the Euler equations."""

    RUSANOV = "rusanov"
    HLL = "hll"


@dataclass(frozen=True)
class AdvectionModel:
    """Linear advection u_t + a u_x = 0."""

    speed: float = 1.0
    components: int = 1

    def __post_init__(self) -> None:
        if not np.isfinite(self.speed):
            raise ValueError(f"advection speed must be finite, got {self.speed}")


@dataclass(frozen=True)
class EulerModel:
    """Ideal-gas Euler equations with ratio of specific heats gamma."""

    gamma: float = 1.4
    components: int = 3

    def __post_init__(self) -> None:
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must be > 1, got {self.gamma}")


PhysicsModel = Union[AdvectionModel, EulerModel]


# ============================================================================
# Conversions
# ============================================================================

def primitive_to_conservative(w: np.ndarray, gamma: float = 1.4) -> np.ndarray:
    """
    Convert (rho, u, p) to (rho, rho u, E) with E = p / (gamma - 1) + rho u^2 / 2.

    Args:
        w: Primitive state(s)
        gamma: Ratio of specific heats

    Returns:
        Conservative state(s)
    """
    w = np.asarray(w, dtype=float)
    rho, u, p = w[0], w[1], w[2]
    return np.stack([rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u])


def conservative_to_primitive(q: np.ndarray, gamma: float = 1.4) -> np.ndarray:
    """
    Convert (rho, rho u, E) to (rho, u, p).

    A negative pressure is returned as computed; callers decide whether to abort.

    Args:
        q: Conservative state(s)
        gamma: Ratio of specific heats

    Returns:
        Primitive state(s)

    Raises:
        PositivityError: If any density is not positive
    """
    q = np.asarray(q, dtype=float)
    rho = q[0]
    bad = np.flatnonzero(~(np.atleast_1d(rho) > 0.0))
    if bad.size:
        index = int(bad[0])
        raise PositivityError("rho", index, float(np.atleast_1d(rho)[index]))
    u = q[1] / rho
    p = (gamma - 1.0) * (q[2] - 0.5 * rho * u * u)
    return np.stack([rho, u, p])


POSITIVE_VARIABLES = ((0, "rho"), (2, "p"))


def find_positivity_violation(
    w: np.ndarray,
    variables: Tuple[Tuple[int, str], ...] = POSITIVE_VARIABLES
) -> Optional[PositivityError]:
    """
    Locate the first non-positive density or pressure in primitive states.

    Args:
        w: Primitive states of shape (3, m)
        variables: (row, name) pairs, checked in this order

    Returns:
        PositivityError describing the violation, or None
    """
    for index, name in variables:
        component = np.atleast_1d(w[index])
        bad = np.flatnonzero(~(component > 0.0))
        if bad.size:
            cell = int(bad[0])
            return PositivityError(name, cell, float(component[cell]))
    return None


# ============================================================================
# Fluxes and wave speeds
# ============================================================================

def euler_flux_primitive(w: np.ndarray, gamma: float = 1.4) -> np.ndarray:
    """Flux (rho u, rho u^2 + p, u (E + p)) from primitive states; no division."""
    w = np.asarray(w, dtype=float)
    rho, u, p = w[0], w[1], w[2]
    energy = p / (gamma - 1.0) + 0.5 * rho * u * u
    return np.stack([rho * u, rho * u * u + p, u * (energy + p)])


def euler_flux(q: np.ndarray, gamma: float = 1.4) -> np.ndarray:
    """
    Exact Euler flux of conservative states.

    Args:
        q: Conservative state(s)
        gamma: Ratio of specific heats

    Returns:
        Flux triple(s)

    Raises:
        PositivityError: If any density is not positive
    """
    return euler_flux_primitive(conservative_to_primitive(q, gamma), gamma)


def signal_speeds(w: np.ndarray, gamma: float = 1.4) -> Tuple[np.ndarray, np.ndarray]:
    """
    Slowest and fastest characteristic speeds u - c and u + c.

    Args:
        w: Primitive state(s) with positive density and pressure

    Returns:
        (u - c, u + c)

    Raises:
        PositivityError: If density or pressure is not positive
    """
    violation = find_positivity_violation(np.asarray(w, dtype=float).reshape(3, -1))
    if violation is not None:
        raise violation
    c = np.sqrt(gamma * w[2] / w[0])
    return w[1] - c, w[1] + c


def max_wave_speed(state: np.ndarray, model: PhysicsModel) -> float:
    """
    Largest characteristic speed over the given state(s).

    Args:
        state: Advected values (ignored) or conservative Euler state(s)
        model: Physics model

    Returns:
        |a| for advection, max(|u| + sqrt(gamma p / rho)) for Euler

    Raises:
        PositivityError: If an Euler state is not physical
    """
    if isinstance(model, AdvectionModel):
        return abs(model.speed)
    w = conservative_to_primitive(state, model.gamma)
    slow, fast = signal_speeds(w, model.gamma)
    return float(np.max(np.maximum(np.abs(slow), np.abs(fast))))


def numerical_flux(
    u_left: np.ndarray,
    u_right: np.ndarray,
    model: PhysicsModel,
    kind: FluxKind = FluxKind.RUSANOV,
    bounds: Optional[Tuple[np.ndarray, np.ndarray]] = None,
    primitive: bool = False
) -> np.ndarray:
    """
    Numerical flux at faces from the left state u^(-) and right state u^(+).

    Advection uses the exact upwind flux. For Euler the signal-speed bounds
    (s_left, s_right) default to min/max of u -+ c over both face states; callers
    may pass bounds computed elsewhere, which also allows face states that are not
    physical (negative reconstructed density or pressure).

    Args:
        u_left: Left face state(s)
        u_right: Right face state(s)
        model: Physics model
        kind: Rusanov or HLL for Euler
        bounds: Optional (s_left, s_right) per face
        primitive: Whether Euler face states are given as (rho, u, p)

    Returns:
        Flux value(s); consistent, i.e. F(u, u) = f(u)

    Raises:
        PositivityError: If bounds must be computed from non-physical face states
    """
    if isinstance(model, AdvectionModel):
        a = model.speed
        return a * (u_left if a >= 0.0 else u_right)

    gamma = model.gamma
    if primitive:
        w_left = np.asarray(u_left, dtype=float)
        w_right = np.asarray(u_right, dtype=float)
        q_left = primitive_to_conservative(w_left, gamma)
        q_right = primitive_to_conservative(w_right, gamma)
    else:
        q_left = np.asarray(u_left, dtype=float)
        q_right = np.asarray(u_right, dtype=float)
        w_left = conservative_to_primitive(q_left, gamma)
        w_right = conservative_to_primitive(q_right, gamma)

    f_left = euler_flux_primitive(w_left, gamma)
    f_right = euler_flux_primitive(w_right, gamma)

    if bounds is None:
        slow_l, fast_l = signal_speeds(w_left, gamma)
        slow_r, fast_r = signal_speeds(w_right, gamma)
        bounds = (np.minimum(slow_l, slow_r), np.maximum(fast_l, fast_r))
    s_left, s_right = bounds

    if kind == FluxKind.RUSANOV:
        s_max = np.maximum(np.abs(s_left), np.abs(s_right))
        return 0.5 * (f_left + f_right) - 0.5 * s_max * (q_right - q_left)

    with np.errstate(divide="ignore", invalid="ignore"):
        middle = (s_right * f_left - s_left * f_right + s_left * s_right * (q_right - q_left)) \
            / (s_right - s_left)
    return np.where(s_left >= 0.0, f_left, np.where(s_right <= 0.0, f_right, middle))
