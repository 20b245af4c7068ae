"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Grid - Uniform 1D grid, ghosted cell fields and boundary conditions.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from domo_fv.errors import GhostLayerError, GridMismatchError


@dataclass(frozen=True)
class Grid1D:
    """
    Uniform grid of n_cells on [x_left, x_right] with ghost_layers ghosts per side.

    Cell centers are x_i = x_left + (i + 1/2) dx for interior i = 0 .. n_cells - 1.
    """

    n_cells: int
    x_left: float
    x_right: float
    ghost_layers: int = 2

    def __post_init__(self) -> None:
        if int(self.n_cells) != self.n_cells or self.n_cells <= 0:
            raise ValueError(f"n_cells must be a positive integer, got {self.n_cells}")
        if not self.x_right > self.x_left:
            raise ValueError(f"empty domain [{self.x_left}, {self.x_right}]")
        if self.ghost_layers < 1:
            raise GhostLayerError(f"ghost_layers must be >= 1, got {self.ghost_layers}")

    @property
    def dx(self) -> float:
        return (self.x_right - self.x_left) / self.n_cells

    @property
    def n_total(self) -> int:
        return self.n_cells + 2 * self.ghost_layers

    @property
    def interior(self) -> slice:
        return slice(self.ghost_layers, self.ghost_layers + self.n_cells)

    def centers(self) -> np.ndarray:
        """Interior cell centers."""
        return self.x_left + (np.arange(self.n_cells) + 0.5) * self.dx

    def edges(self) -> np.ndarray:
        """Interior cell edges, n_cells + 1 values."""
        return self.x_left + np.arange(self.n_cells + 1) * self.dx

    def with_cells(self, n_cells: int) -> "Grid1D":
        """Same domain and ghosts, different resolution."""
        return Grid1D(n_cells, self.x_left, self.x_right, self.ghost_layers)

    def same_cells(self, other: "Grid1D") -> bool:
        """Whether both grids describe identical interior cells."""
        return (self.n_cells == other.n_cells
                and np.isclose(self.x_left, other.x_left, rtol=0.0, atol=1e-12)
                and np.isclose(self.x_right, other.x_right, rtol=0.0, atol=1e-12))


class CellField:
    """
    Cell averages on a grid, including ghost cells.

    values has shape (components, n_total); components is 1 for a scalar law and 3
    for Euler (conservative variables).
    """

    def __init__(self, grid: Grid1D, values: np.ndarray) -> None:
        """
        Initialize the field.

        Args:
            grid: The grid
            values: Array of shape (components, n_total) or (n_total,)

        Raises:
            GridMismatchError: If the array length does not match the grid
        """
        values = np.atleast_2d(np.asarray(values, dtype=float))
        if values.shape[1] != grid.n_total:
            raise GridMismatchError(
                f"values hold {values.shape[1]} cells, grid needs {grid.n_total}"
            )
        self._grid = grid
        self._values = values

    @classmethod
    def from_interior(cls, grid: Grid1D, interior: np.ndarray) -> "CellField":
        """
        Build a field from interior values; ghosts start at zero.

        Args:
            grid: The grid
            interior: Array of shape (components, n_cells) or (n_cells,)

        Returns:
            New CellField
        """
        interior = np.atleast_2d(np.asarray(interior, dtype=float))
        if interior.shape[1] != grid.n_cells:
            raise GridMismatchError(
                f"interior holds {interior.shape[1]} cells, grid has {grid.n_cells}"
            )
        values = np.zeros((interior.shape[0], grid.n_total))
        values[:, grid.interior] = interior
        return cls(grid, values)

    @property
    def grid(self) -> Grid1D:
        return self._grid

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def components(self) -> int:
        return self._values.shape[0]

    def interior(self) -> np.ndarray:
        """Interior values of shape (components, n_cells)."""
        return self._values[:, self._grid.interior]

    def component(self, index: int = 0) -> np.ndarray:
        """Interior values of one component."""
        return self._values[index, self._grid.interior]

    def copy(self) -> "CellField":
        return CellField(self._grid, self._values.copy())

    def with_values(self, values: np.ndarray) -> "CellField":
        """New field on the same grid."""
        return CellField(self._grid, values)

    def __repr__(self) -> str:
        return f"CellField(n={self._grid.n_cells}, components={self.components})"


class BoundaryKind(Enum):
    PERIODIC = "periodic"
    TRANSMISSIVE = "transmissive"
    FIXED_STATE = "fixed"


@dataclass(frozen=True)
class BoundaryCondition:
    """Ghost-cell rule applied at both ends of the domain."""

    kind: BoundaryKind
    left_state: Optional[Sequence[float]] = None
    right_state: Optional[Sequence[float]] = None

    def __post_init__(self) -> None:
        if self.kind == BoundaryKind.FIXED_STATE:
            if self.left_state is None or self.right_state is None:
                raise ValueError("fixed boundary requires left and right states")
            if not (np.all(np.isfinite(self.left_state)) and np.all(np.isfinite(self.right_state))):
                raise ValueError("fixed boundary states must be finite")

    @classmethod
    def periodic(cls) -> "BoundaryCondition":
        return cls(BoundaryKind.PERIODIC)

    @classmethod
    def transmissive(cls) -> "BoundaryCondition":
        return cls(BoundaryKind.TRANSMISSIVE)

    @classmethod
    def fixed(cls, left: Sequence[float], right: Sequence[float]) -> "BoundaryCondition":
        return cls(BoundaryKind.FIXED_STATE, tuple(np.atleast_1d(left)), tuple(np.atleast_1d(right)))

    @classmethod
    def named(cls, name: str) -> "BoundaryCondition":
        """Periodic or transmissive boundary by name."""
        return cls(BoundaryKind(name))


def fill_ghosts(field: CellField, bc: BoundaryCondition) -> CellField:
    """
    Refresh ghost cells.

    Periodic wraps around, transmissive copies the nearest interior cell and fixed
    writes the prescribed states.

    Args:
        field: Field to refresh
        bc: Boundary condition

    Returns:
        New field with ghost values set
    """
    grid = field.grid
    g = grid.ghost_layers
    n = grid.n_cells
    values = field.values.copy()

    if bc.kind == BoundaryKind.PERIODIC:
        if n < g:
            raise GhostLayerError(f"periodic fill needs n_cells >= {g}, got {n}")
        values[:, :g] = values[:, n:n + g]
        values[:, n + g:] = values[:, g:2 * g]
    elif bc.kind == BoundaryKind.TRANSMISSIVE:
        values[:, :g] = values[:, g:g + 1]
        values[:, n + g:] = values[:, n + g - 1:n + g]
    else:
        values[:, :g] = np.asarray(bc.left_state, dtype=float).reshape(-1, 1)
        values[:, n + g:] = np.asarray(bc.right_state, dtype=float).reshape(-1, 1)

    return field.with_values(values)
