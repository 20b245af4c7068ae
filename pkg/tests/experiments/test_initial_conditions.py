"""
Initial condition tests - Catalog, cell averages, exact advection and smoothness constants.
"""

import numpy as np
import pytest

from domo_fv.errors import ConfigError
from domo_fv.experiments.initial_conditions import (
    SOD_LEFT,
    SOD_RIGHT,
    cells_near_extrema,
    initial_condition,
    initial_condition_names,
    mixed_features,
    shu_osher,
    sine,
    smooth_bump,
    sod,
    square_wave,
)
from domo_fv.numerics.grid import Grid1D
from domo_fv.numerics.physics import primitive_to_conservative


def test_catalog():
    assert set(initial_condition_names()) == {
        "sine", "smooth-bump", "square-wave", "mixed-features", "sod", "shu-osher"
    }
    assert initial_condition("square-wave", 100.0).offset == 100.0
    with pytest.raises(ConfigError):
        initial_condition("gaussian")


@pytest.mark.parametrize("factory", [sod, shu_osher])
def test_euler_data_takes_no_offset(factory):
    with pytest.raises(ConfigError):
        factory(1.0)


# ============================================================================
# Smoothness constants
# ============================================================================

def test_alpha_of_sine():
    assert sine().alpha() == pytest.approx(np.pi ** 2, rel=1e-6)
    assert sine(5.0).alpha() == pytest.approx(np.pi ** 2, rel=1e-6)


def test_alpha_of_smooth_bump():
    assert smooth_bump().alpha() == pytest.approx(2.0 * 25.0 * np.pi ** 2, rel=1e-5)


def test_alpha_of_mixed_features():
    assert mixed_features().alpha() == pytest.approx(8887.87, abs=0.05)


def test_smoothness_constants_of_shu_osher():
    ic = shu_osher()

    assert ic.alpha() == pytest.approx(5.0, abs=1e-4)
    # density integrals over [-4.5, 4.5]; the run itself uses the fixed epsilon 21.932
    assert ic.epsilon_coefficient() == pytest.approx(16.2081, abs=1e-3)


def test_alpha_of_piecewise_constant_data_is_zero():
    assert square_wave().alpha() == 0.0


def test_epsilon_coefficient_of_sine():
    assert sine().epsilon_coefficient() == pytest.approx(np.pi ** 2, rel=1e-8)


# ============================================================================
# Cell averages and exact solutions
# ============================================================================

def test_sod_averages_are_conservative_states():
    field = sod().cell_averages(Grid1D(4, -2.0, 2.0))

    left = primitive_to_conservative(np.array(SOD_LEFT))
    right = primitive_to_conservative(np.array(SOD_RIGHT))
    assert np.allclose(field.interior()[:, :2], left[:, None])
    assert np.allclose(field.interior()[:, 2:], right[:, None])


def test_square_wave_averages():
    field = square_wave().cell_averages(Grid1D(8, -1.0, 1.0))
    assert list(field.component()) == pytest.approx([0, 0, 1, 1, 1, 1, 0, 0], abs=1e-14)


def test_one_period_returns_the_initial_averages():
    for ic in (sine(1.0), square_wave(), mixed_features()):
        grid = Grid1D(32, ic.x_left, ic.x_right)
        initial = ic.cell_averages(grid)
        advected = ic.exact_averages(grid, ic.length, 1.0)
        assert np.allclose(advected.component(), initial.component(), rtol=0.0, atol=1e-12), ic.name


def test_square_wave_moves_with_the_flow():
    field = square_wave().exact_averages(Grid1D(8, -1.0, 1.0), 0.25, 1.0)
    assert list(field.component()) == pytest.approx([0, 0, 0, 1, 1, 1, 1, 0], abs=1e-14)


def test_negative_speed_moves_left():
    field = square_wave().exact_averages(Grid1D(8, -1.0, 1.0), 0.25, -1.0)
    assert list(field.component()) == pytest.approx([0, 1, 1, 1, 1, 0, 0, 0], abs=1e-14)


def test_euler_data_cannot_be_advected():
    with pytest.raises(ConfigError):
        sod().advected(1.0)


def test_cells_near_extrema():
    assert list(cells_near_extrema(sine(), Grid1D(8, -1.0, 1.0))) == [1, 2, 5, 6]
    assert list(cells_near_extrema(sine(), Grid1D(4, 0.0, 1.0), extrema=[0.5])) == [1, 2]
