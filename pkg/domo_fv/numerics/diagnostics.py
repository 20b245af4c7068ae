"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Diagnostics - Exact cell averages, error norms, total variation and convergence orders.
"""

import math
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from domo_fv.errors import GridMismatchError
from domo_fv.numerics.grid import CellField, Grid1D
from domo_fv.numerics.quadrature import segment_integrals


@dataclass(frozen=True)
class ErrorReport:
    """
    Measured errors of one run.

    order_l1 and order_linf are relative to the previous (coarser) report and NaN
    for the first report or where an error vanishes.
    """

    n_cells: int
    dx: float
    l1: float
    linf: float
    tv: float
    order_l1: float = math.nan
    order_linf: float = math.nan
    scheme: str = ""

    def __post_init__(self) -> None:
        for name in ("l1", "linf", "tv"):
            value = getattr(self, name)
            if value < 0.0:
                raise ValueError(f"{name} must be >= 0, got {value}")


def cell_averages(
    f: Callable[[np.ndarray], np.ndarray],
    grid: Grid1D,
    breakpoints: Sequence[float] = ()
) -> CellField:
    """
    Exact cell averages by five-point Gauss-Legendre quadrature.

    Cells containing a breakpoint are split there, so piecewise polynomial data of
    degree <= 9 (for example a jump) is averaged exactly.

    Args:
        f: Vectorized function returning shape (m,) or (k, m)
        grid: The grid
        breakpoints: Positions where f is not smooth

    Returns:
        CellField with averaged interior cells and zero ghosts
    """
    edges = grid.edges()
    inside = [float(x) for x in breakpoints if edges[0] < x < edges[-1]]
    points = np.unique(np.concatenate([edges, np.asarray(inside, dtype=float)]))
    starts = points[:-1]
    ends = points[1:]
    owner = np.clip(
        np.floor((0.5 * (starts + ends) - grid.x_left) / grid.dx).astype(int), 0, grid.n_cells - 1
    )

    integrals = np.atleast_2d(segment_integrals(f, starts, ends))
    totals = np.zeros((integrals.shape[0], grid.n_cells))
    for c in range(integrals.shape[0]):
        np.add.at(totals[c], owner, integrals[c])
    return CellField.from_interior(grid, totals / grid.dx)


def _range_mask(grid: Grid1D, x_range: Optional[Tuple[float, float]]) -> np.ndarray:
    centers = grid.centers()
    if x_range is None:
        return np.ones(grid.n_cells, dtype=bool)
    lo, hi = min(x_range), max(x_range)
    return (centers >= lo) & (centers <= hi)


def _differences(approx: CellField, exact: CellField, component: int) -> np.ndarray:
    if not approx.grid.same_cells(exact.grid):
        raise GridMismatchError(
            f"cannot compare n={approx.grid.n_cells} on [{approx.grid.x_left}, {approx.grid.x_right}]"
            f" with n={exact.grid.n_cells} on [{exact.grid.x_left}, {exact.grid.x_right}]"
        )
    return approx.component(component) - exact.component(component)


def l1_error(
    approx: CellField,
    exact: CellField,
    x_range: Optional[Tuple[float, float]] = None,
    component: int = 0
) -> float:
    """
    Discrete L1 error dx * sum |u_i - U_i| over cells whose center lies in x_range.

    Raises:
        GridMismatchError: If the fields live on different grids
    """
    diff = _differences(approx, exact, component)
    return float(approx.grid.dx * np.sum(np.abs(diff[_range_mask(approx.grid, x_range)])))


def linf_error(
    approx: CellField,
    exact: CellField,
    x_range: Optional[Tuple[float, float]] = None,
    component: int = 0
) -> float:
    """
    Discrete maximum error over cells whose center lies in x_range.

    Raises:
        GridMismatchError: If the fields live on different grids
    """
    diff = np.abs(_differences(approx, exact, component)[_range_mask(approx.grid, x_range)])
    return float(np.max(diff)) if diff.size else 0.0


def total_variation(field: CellField, periodic: bool = False, component: int = 0) -> float:
    """
    Sum of |u_{i+1} - u_i| over interior cells, with the wrap term when periodic.

    Args:
        field: Field to measure
        periodic: Include |u_0 - u_{n-1}|
        component: Component index (density for Euler)

    Returns:
        Total variation
    """
    u = field.component(component)
    if u.size < 2:
        raise ValueError("total variation needs at least 2 cells")
    tv = float(np.sum(np.abs(np.diff(u))))
    if periodic:
        tv += float(abs(u[0] - u[-1]))
    return tv


def _order(coarse: float, fine: float, n_coarse: int, n_fine: int) -> float:
    if coarse <= 0.0 or fine <= 0.0:
        return math.nan
    return math.log(coarse / fine) / math.log(n_fine / n_coarse)


def convergence_orders(reports: Sequence[ErrorReport]) -> List[ErrorReport]:
    """
    Annotate reports with observed orders log(e_k / e_{k+1}) / log(n_{k+1} / n_k).

    Args:
        reports: Reports with strictly increasing n_cells

    Returns:
        New reports; the first has NaN orders, vanishing errors give NaN

    Raises:
        ValueError: If n_cells is not strictly increasing
    """
    annotated: List[ErrorReport] = []
    previous: Optional[ErrorReport] = None
    for report in reports:
        if previous is None:
            annotated.append(replace(report, order_l1=math.nan, order_linf=math.nan))
        else:
            if report.n_cells <= previous.n_cells:
                raise ValueError("convergence orders need strictly increasing n")
            annotated.append(replace(
                report,
                order_l1=_order(previous.l1, report.l1, previous.n_cells, report.n_cells),
                order_linf=_order(previous.linf, report.linf, previous.n_cells, report.n_cells)
            ))
        previous = report
    return annotated
