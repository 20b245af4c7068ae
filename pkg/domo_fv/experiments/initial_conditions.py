"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Initial Conditions - Named initial data with derivatives and discontinuity sets.

Scalar profiles feed linear advection; Euler profiles return primitive variables
(rho, v, p) with shape (3, m). For Euler data, derivative and second_derivative
describe the density, which is the variable the smoothness constants refer to.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from domo_fv.errors import ConfigError
from domo_fv.numerics.diagnostics import cell_averages
from domo_fv.numerics.grid import CellField, Grid1D
from domo_fv.numerics.limiters import alpha_from_ic, sample_second_derivative
from domo_fv.numerics.physics import primitive_to_conservative
from domo_fv.numerics.weno3 import epsilon_yc_coefficient

Profile = Callable[[np.ndarray], np.ndarray]

SHU_OSHER_LEFT = (3.857143, 2.629369, 10.33333)
SOD_LEFT = (1.0, 0.0, 1.0)
SOD_RIGHT = (0.125, 0.0, 0.1)


def _zero(x: np.ndarray) -> np.ndarray:
    return np.zeros_like(np.asarray(x, dtype=float))


@dataclass(frozen=True, eq=False)
class InitialCondition:
    """
    Initial data on a domain.

    Attributes:
        name: Catalog name
        x_left: Domain start
        x_right: Domain end
        value: u0(x), shape (m,) for scalars or primitive (3, m) for Euler
        derivative: u0'(x) of the scalar profile (density for Euler)
        second_derivative: u0''(x) of the scalar profile (density for Euler)
        breakpoints: Positions where u0 or a derivative jumps; cell averaging splits there
        excluded: Discontinuity set used by alpha and epsilon, as closed intervals
        components: 1 for scalar data, 3 for Euler
        offset: Constant added to a scalar profile
    """

    name: str
    x_left: float
    x_right: float
    value: Profile
    derivative: Profile = _zero
    second_derivative: Profile = _zero
    breakpoints: Tuple[float, ...] = ()
    excluded: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)
    components: int = 1
    offset: float = 0.0

    @property
    def length(self) -> float:
        return self.x_right - self.x_left

    def profile(self, x: np.ndarray) -> np.ndarray:
        """The scalar profile (density for Euler)."""
        values = np.asarray(self.value(np.asarray(x, dtype=float)), dtype=float)
        return values if self.components == 1 else values[0]

    def conservative(self, gamma: float = 1.4) -> Profile:
        """Pointwise conservative state, the quantity that is cell-averaged."""
        if self.components == 1:
            return self.value
        return lambda x: primitive_to_conservative(self.value(x), gamma)

    def cell_averages(self, grid: Grid1D, gamma: float = 1.4) -> CellField:
        """
        Exact cell averages of the initial data.

        Args:
            grid: Target grid
            gamma: Ratio of specific heats (Euler only)

        Returns:
            CellField of conservative averages with zero ghosts
        """
        return cell_averages(self.conservative(gamma), grid, self.breakpoints)

    def _wrap(self, x: np.ndarray) -> np.ndarray:
        return self.x_left + np.mod(np.asarray(x, dtype=float) - self.x_left, self.length)

    def advected(self, time: float, speed: float = 1.0) -> Tuple[Profile, Tuple[float, ...]]:
        """
        Exact solution of u_t + a u_x = 0 with periodic boundaries.

        Args:
            time: Elapsed time
            speed: Advection speed a

        Returns:
            (u(., time), its breakpoints)
        """
        if self.components != 1:
            raise ConfigError(f"'{self.name}' is not a scalar initial condition")
        shift = speed * time

        def solution(x: np.ndarray) -> np.ndarray:
            return self.value(self._wrap(np.asarray(x, dtype=float) - shift))

        points = tuple(float(p) for p in self._wrap(np.asarray(self.breakpoints + (self.x_left,)) + shift))
        return solution, points

    def exact_averages(self, grid: Grid1D, time: float, speed: float = 1.0) -> CellField:
        """Cell averages of the exactly advected profile."""
        solution, points = self.advected(time, speed)
        return cell_averages(solution, grid, points)

    def alpha(self, samples: int = 10_000) -> float:
        """max |u0''| outside the discontinuity set."""
        return alpha_from_ic(
            sample_second_derivative(
                self.second_derivative, self.x_left, self.x_right, self.excluded, samples
            ),
            self.excluded
        )

    def epsilon_coefficient(self, subintervals: int = 10_000) -> float:
        """The C of the Yamaleev-Carpenter epsilon C * dx^2."""
        return epsilon_yc_coefficient(
            self.profile, self.derivative, self.x_left, self.x_right, self.excluded, subintervals
        )


# ============================================================================
# Catalog
# ============================================================================

def sine(offset: float = 0.0) -> InitialCondition:
    """sin(pi x) on [-1, 1]."""
    return InitialCondition(
        name="sine",
        x_left=-1.0,
        x_right=1.0,
        value=lambda x: np.sin(np.pi * x) + offset,
        derivative=lambda x: np.pi * np.cos(np.pi * x),
        second_derivative=lambda x: -np.pi ** 2 * np.sin(np.pi * x),
        offset=offset,
    )


def smooth_bump(offset: float = 0.0) -> InitialCondition:
    """(0.5 + 0.5 cos(5 pi (x - 0.5)))^4 on [0.3, 0.7], zero elsewhere in [0, 1]."""
    k = 5.0 * np.pi

    def parts(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=float)
        inside = (x >= 0.3) & (x <= 0.7)
        theta = k * (x - 0.5)
        g = 0.5 + 0.5 * np.cos(theta)
        dg = -0.5 * k * np.sin(theta)
        d2g = -0.5 * k ** 2 * np.cos(theta)
        return inside, g, dg, d2g

    def value(x: np.ndarray) -> np.ndarray:
        inside, g, _, _ = parts(x)
        return np.where(inside, g ** 4, 0.0) + offset

    def derivative(x: np.ndarray) -> np.ndarray:
        inside, g, dg, _ = parts(x)
        return np.where(inside, 4.0 * g ** 3 * dg, 0.0)

    def second_derivative(x: np.ndarray) -> np.ndarray:
        inside, g, dg, d2g = parts(x)
        return np.where(inside, 12.0 * g ** 2 * dg ** 2 + 4.0 * g ** 3 * d2g, 0.0)

    return InitialCondition(
        name="smooth-bump",
        x_left=0.0,
        x_right=1.0,
        value=value,
        derivative=derivative,
        second_derivative=second_derivative,
        breakpoints=(0.3, 0.7),
        offset=offset,
    )


def square_wave(offset: float = 0.0) -> InitialCondition:
    """1 on (-0.5, 0.5), 0 elsewhere in [-1, 1]."""
    return InitialCondition(
        name="square-wave",
        x_left=-1.0,
        x_right=1.0,
        value=lambda x: np.where(np.abs(np.asarray(x, dtype=float)) < 0.5, 1.0, 0.0) + offset,
        breakpoints=(-0.5, 0.5),
        excluded=((-0.5, -0.5), (0.5, 0.5)),
        offset=offset,
    )


def mixed_features(offset: float = 0.0) -> InitialCondition:
    """
    A hat with kinks at 0.1, 0.2 and 0.3 plus a wave packet exp(-y^4) sin(30 pi x),
    y = (x - 0.7) / 0.15, on [0, 1].
    """
    k = 30.0 * np.pi
    width = 0.15

    def hat(x: np.ndarray) -> np.ndarray:
        z = np.asarray(x, dtype=float) / 0.1 - 2.0
        return np.maximum(np.minimum(z, -z) + 1.0, 0.0)

    def hat_slope(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where((x > 0.1) & (x < 0.2), 10.0, 0.0) + np.where((x > 0.2) & (x < 0.3), -10.0, 0.0)

    def envelope(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        y = (np.asarray(x, dtype=float) - 0.7) / width
        e = np.exp(-y ** 4)
        de = -4.0 * y ** 3 / width * e
        d2e = e * ((4.0 * y ** 3 / width) ** 2 - 12.0 * y ** 2 / width ** 2)
        return e, de, d2e

    def value(x: np.ndarray) -> np.ndarray:
        e, _, _ = envelope(x)
        return hat(x) + e * np.sin(k * np.asarray(x, dtype=float)) + offset

    def derivative(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        e, de, _ = envelope(x)
        return hat_slope(x) + de * np.sin(k * x) + e * k * np.cos(k * x)

    def second_derivative(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        e, de, d2e = envelope(x)
        return d2e * np.sin(k * x) + 2.0 * de * k * np.cos(k * x) - e * k ** 2 * np.sin(k * x)

    return InitialCondition(
        name="mixed-features",
        x_left=0.0,
        x_right=1.0,
        value=value,
        derivative=derivative,
        second_derivative=second_derivative,
        breakpoints=(0.1, 0.2, 0.3),
        excluded=((0.1, 0.1), (0.2, 0.2), (0.3, 0.3)),
        offset=offset,
    )


def sod(offset: float = 0.0) -> InitialCondition:
    """Sod shock tube on [-2, 2], diaphragm at x = 0."""
    if offset != 0.0:
        raise ConfigError("offset applies to scalar initial conditions only")

    def value(x: np.ndarray) -> np.ndarray:
        left = np.asarray(x, dtype=float) < 0.0
        return np.array([np.where(left, a, b) for a, b in zip(SOD_LEFT, SOD_RIGHT)])

    return InitialCondition(
        name="sod",
        x_left=-2.0,
        x_right=2.0,
        value=value,
        breakpoints=(0.0,),
        excluded=((0.0, 0.0),),
        components=3,
    )


def shu_osher(offset: float = 0.0) -> InitialCondition:
    """Mach 3 shock at x = -4 running into a density wave 1 + 0.2 sin(5x), on [-4.5, 4.5]."""
    if offset != 0.0:
        raise ConfigError("offset applies to scalar initial conditions only")

    def value(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        left = x < -4.0
        return np.array([
            np.where(left, SHU_OSHER_LEFT[0], 1.0 + 0.2 * np.sin(5.0 * x)),
            np.where(left, SHU_OSHER_LEFT[1], 0.0),
            np.where(left, SHU_OSHER_LEFT[2], 1.0),
        ])

    def derivative(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x < -4.0, 0.0, np.cos(5.0 * x))

    def second_derivative(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x < -4.0, 0.0, -5.0 * np.sin(5.0 * x))

    return InitialCondition(
        name="shu-osher",
        x_left=-4.5,
        x_right=4.5,
        value=value,
        derivative=derivative,
        second_derivative=second_derivative,
        breakpoints=(-4.0,),
        excluded=((-4.0, -4.0),),
        components=3,
    )


CATALOG: Dict[str, Callable[[float], InitialCondition]] = {
    "sine": sine,
    "smooth-bump": smooth_bump,
    "square-wave": square_wave,
    "mixed-features": mixed_features,
    "sod": sod,
    "shu-osher": shu_osher,
}

EULER_INITIAL_CONDITIONS = ("sod", "shu-osher")


def initial_condition(name: str, offset: float = 0.0) -> InitialCondition:
    """
    Look up an initial condition by name.

    Args:
        name: Catalog name
        offset: Constant added to scalar data

    Raises:
        ConfigError: For unknown names
    """
    try:
        factory = CATALOG[name]
    except KeyError:
        raise ConfigError(
            f"unknown initial condition '{name}'; known: {', '.join(sorted(CATALOG))}"
        ) from None
    return factory(offset)


def initial_condition_names() -> Sequence[str]:
    return tuple(CATALOG)


def cells_near_extrema(ic: InitialCondition, grid: Grid1D, extrema: Optional[Sequence[float]] = None) -> np.ndarray:
    """
    Indices of interior cells whose centre lies within dx of an extremum.

    Args:
        ic: Initial condition (extrema default to the zeros of u0' on a fine sample)
        grid: The grid
        extrema: Explicit extremum positions

    Returns:
        Sorted cell indices
    """
    if extrema is None:
        x = np.linspace(ic.x_left, ic.x_right, 100_001)
        slope = ic.derivative(x)
        crossing = np.nonzero(np.sign(slope[:-1]) * np.sign(slope[1:]) < 0)[0]
        extrema = 0.5 * (x[crossing] + x[crossing + 1])
    centers = grid.centers()
    near = np.zeros(grid.n_cells, dtype=bool)
    for position in extrema:
        near |= np.abs(centers - position) <= grid.dx
    return np.nonzero(near)[0]
