"""
Diagnostics tests - Quadrature, exact cell averages, error norms, total variation and orders.
"""

import math

import numpy as np
import pytest

from domo_fv.errors import GridMismatchError
from domo_fv.numerics.diagnostics import (
    ErrorReport,
    cell_averages,
    convergence_orders,
    l1_error,
    linf_error,
    total_variation,
)
from domo_fv.numerics.grid import CellField, Grid1D
from domo_fv.numerics.quadrature import composite_integral, segment_integrals, split_domain


def field_of(values, x_left: float = 0.0, x_right: float = 1.0) -> CellField:
    values = np.asarray(values, dtype=float)
    return CellField.from_interior(Grid1D(values.size, x_left, x_right), values)


# ============================================================================
# Quadrature
# ============================================================================

def test_gauss_rule_is_exact_for_degree_nine():
    assert segment_integrals(lambda x: x ** 9, [0.0], [1.0])[0] == pytest.approx(0.1, rel=1e-14)
    assert segment_integrals(lambda x: 3.0, [0.0, 1.0], [1.0, 3.0]) == pytest.approx([3.0, 6.0])


def test_vector_integrands_keep_their_components():
    integrals = segment_integrals(lambda x: np.stack([np.ones_like(x), x]), [0.0], [2.0])
    assert integrals.shape == (2, 1)
    assert integrals[:, 0] == pytest.approx([2.0, 2.0])


def test_split_domain():
    assert split_domain(-1.0, 1.0, [(0.5, 0.5), (-0.5, -0.5)]) == [(-1.0, -0.5), (-0.5, 0.5), (0.5, 1.0)]
    assert split_domain(0.0, 1.0, [(0.2, 0.4)]) == [(0.0, 0.2), (0.4, 1.0)]
    assert split_domain(0.0, 1.0, [(-1.0, 2.0)]) == []


def test_composite_integral_over_a_jump():
    def step(x):
        return np.where(x < 0.5, 1.0, -1.0)

    value = composite_integral(lambda x: np.abs(step(x)), -1.0, 1.0, [(0.5, 0.5)], subintervals=7)

    assert value == pytest.approx(2.0, rel=1e-14)
    assert composite_integral(lambda x: x, 0.0, 1.0, [(-1.0, 2.0)]) == 0.0


# ============================================================================
# Exact cell averages
# ============================================================================

def test_cell_averages_of_simple_functions():
    assert cell_averages(lambda x: 2.0, Grid1D(4, 0.0, 1.0)).interior() == pytest.approx(np.full((1, 4), 2.0))
    assert cell_averages(lambda x: x, Grid1D(1, 0.0, 1.0)).component() == pytest.approx([0.5])


def test_cell_averages_of_sine():
    grid = Grid1D(16, -1.0, 1.0)
    edges = grid.edges()
    expected = (np.cos(np.pi * edges[:-1]) - np.cos(np.pi * edges[1:])) / (np.pi * grid.dx)

    averages = cell_averages(lambda x: np.sin(np.pi * x), grid)

    assert np.allclose(averages.component(), expected, rtol=0.0, atol=1e-12)


def test_cell_averages_split_at_breakpoints():
    grid = Grid1D(2, 0.0, 1.0)

    averages = cell_averages(lambda x: np.where(x > 0.3, 1.0, 0.0), grid, breakpoints=(0.3, 5.0))

    assert averages.component() == pytest.approx([0.4, 1.0], rel=1e-14)


# ============================================================================
# Norms and total variation
# ============================================================================

def test_error_norms():
    approx = field_of([1.0, 0.0, 1.0, 0.0])
    exact = field_of([0.0, 1.0, 0.0, 1.0])

    assert l1_error(approx, exact) == pytest.approx(1.0)
    assert linf_error(approx, exact) == pytest.approx(1.0)
    assert l1_error(approx, exact, x_range=(0.0, 0.5)) == pytest.approx(0.5)
    assert linf_error(approx, exact, x_range=(0.9, 0.95)) == 0.0


def test_error_norms_need_matching_grids():
    with pytest.raises(GridMismatchError):
        l1_error(field_of([1.0, 2.0]), field_of([1.0, 2.0, 3.0]))
    with pytest.raises(GridMismatchError):
        linf_error(field_of([1.0, 2.0]), field_of([1.0, 2.0], x_right=2.0))


def test_total_variation():
    assert total_variation(field_of([3.0, 3.0, 3.0])) == 0.0
    assert total_variation(field_of([0.0, 1.0, 1.0, 0.0]), periodic=True) == 2.0
    assert total_variation(field_of([0.0, 0.5, 1.0])) == 1.0
    assert total_variation(field_of([0.0, 0.5, 1.0]), periodic=True) == 2.0


def test_total_variation_of_one_component():
    grid = Grid1D(3, 0.0, 1.0)
    field = CellField.from_interior(grid, [[1.0, 1.0, 1.0], [0.0, 2.0, 0.0]])

    assert total_variation(field, component=0) == 0.0
    assert total_variation(field, component=1) == 4.0


# ============================================================================
# Convergence orders
# ============================================================================

def report(n: int, error: float) -> ErrorReport:
    return ErrorReport(n_cells=n, dx=1.0 / n, l1=error, linf=error, tv=1.0)


def test_orders():
    reports = convergence_orders([report(10, 0.1), report(20, 0.0125), report(40, 0.0125), report(80, 0.0074375)])

    assert math.isnan(reports[0].order_l1) and math.isnan(reports[0].order_linf)
    assert reports[1].order_l1 == pytest.approx(3.0)
    assert reports[2].order_linf == 0.0
    assert reports[3].order_l1 == pytest.approx(0.75, abs=0.01)


def test_vanishing_error_has_no_order():
    reports = convergence_orders([report(10, 0.1), report(20, 0.0)])
    assert math.isnan(reports[1].order_l1)


def test_orders_need_increasing_resolution():
    with pytest.raises(ValueError):
        convergence_orders([report(20, 0.1), report(20, 0.05)])


def test_error_report_rejects_negative_errors():
    with pytest.raises(ValueError):
        ErrorReport(n_cells=10, dx=0.1, l1=-1.0, linf=0.0, tv=0.0)
