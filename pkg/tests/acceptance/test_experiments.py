"""
Acceptance tests - Full-length experiment runs.

Deselected by default; run with: pytest -m acceptance
"""

import io

import numpy as np
import pytest

from domo_fv.actors.logger import ConsoleLogger, LogLevel
from domo_fv.experiments.presets import preset
from domo_fv.experiments.sweep import sweep
from domo_fv.numerics.diagnostics import total_variation
from domo_fv.numerics.physics import conservative_to_primitive
from domo_fv.numerics.solver import run

pytestmark = pytest.mark.acceptance

QUIET = ConsoleLogger("acceptance", LogLevel.ERROR, stream=io.StringIO())


def orders(result, scheme):
    return [report.order_l1 for report in result.reports(scheme)[1:]]


# ============================================================================
# Smooth bump
# ============================================================================

def test_smooth_bump_third_order():
    result = sweep(preset("smooth-bump"), sizes=(200, 300, 500, 700, 1000), logger=QUIET, workers=4)

    for scheme in ("h3", "h3l-c", "weno-yc"):
        observed = orders(result, scheme)
        assert all(2.6 <= order <= 3.4 for order in observed), f"{scheme}: {observed}"

    js = result.reports("weno-js")
    limited = result.reports("h3l-c")
    assert all(order < 2.5 for order in orders(result, "weno-js")), orders(result, "weno-js")
    assert all(a.l1 > b.l1 for a, b in zip(js, limited)), "WENO-JS must carry the larger error"


# ============================================================================
# Square wave
# ============================================================================

def test_square_wave_order_and_total_variation():
    config = preset("square-wave").with_overrides(schemes=("h3l", "weno-js", "weno-yc"))

    result = sweep(config, sizes=(160, 320, 640, 1280), logger=QUIET, workers=3, keep_results=True)

    for scheme in config.schemes:
        observed = orders(result, scheme)
        assert all(abs(order - 0.75) <= 0.15 for order in observed), f"{scheme}: {observed}"
    for row in result.rows_for("h3l"):
        worst = max(tv for _, tv in row.result.tv_history)
        assert worst <= 2.0 + 1e-8, f"H3L total variation grew to {worst} at n={row.n_cells}"
    for row in result.rows_for("weno-yc"):
        assert row.report.tv > 2.0, f"WENO-YC stayed below 2 at n={row.n_cells}"
    for row in result.rows_for("weno-js"):
        assert row.report.tv <= 2.0 + 1e-8, f"WENO-JS exceeded 2 at n={row.n_cells}"


def test_limited_square_wave_at_320_cells():
    config = preset("square-wave").with_overrides(n_cells=320, scheme="h3l-c")

    result = run(config, QUIET)

    assert result.tv_history[-1][1] <= 2.0 + 1e-8


def test_shifted_square_wave():
    plain = preset("square-wave").with_overrides(n_cells=160)
    shifted = preset("square-wave-shifted").with_overrides(n_cells=160)

    for scheme in ("h3l", "weno-js"):
        base = run(plain.with_overrides(scheme=scheme), QUIET).field.component()
        lifted = run(shifted.with_overrides(scheme=scheme), QUIET).field.component()
        np.testing.assert_allclose(lifted, base + 100.0, rtol=0.0, atol=1e-10, err_msg=scheme)

    base_tv = run(plain.with_overrides(scheme="weno-yc:C=1"), QUIET).tv_history[-1][1]
    lifted_tv = run(shifted.with_overrides(scheme="weno-yc"), QUIET).tv_history[-1][1]
    assert lifted_tv > base_tv, f"shifted TV {lifted_tv} vs {base_tv}"


# ============================================================================
# Parameter scans on the sine wave
# ============================================================================

def test_radius_scan_is_monotone():
    result = sweep(preset("prelim-sine-ct-r-scan"), sizes=(80,), logger=QUIET, workers=3)

    errors = [result.reports(scheme)[0].l1 for scheme in ("ct-c:r=0.1", "ct-c:r=1", "ct-c:r=10")]
    assert errors[0] >= errors[1] >= errors[2], errors


def test_weno_yc_coefficient_scan_is_monotone():
    schemes = ("weno-yc:C=0.001", "weno-yc:C=0.1", "weno-yc:C=1", "weno-yc:C=1000")

    result = sweep(preset("prelim-weno-yc-eps-scan"), schemes=schemes, sizes=(80,), logger=QUIET)

    errors = [result.reports(scheme)[0].l1 for scheme in schemes]
    assert errors[0] >= errors[1] >= errors[2] >= errors[3], errors


def test_mixed_features_small_epsilon_loses_accuracy():
    sizes = (80, 160, 320, 640)
    tuned = sweep(preset("mixed-features").with_overrides(schemes=("weno-yc",)), sizes=sizes, logger=QUIET)
    small = sweep(preset("mixed-features-eps-dx2"), sizes=sizes, logger=QUIET)

    tuned_reports = tuned.reports("weno-yc")
    small_reports = small.reports("weno-yc")
    assert all(s.l1 > t.l1 for s, t in zip(small_reports, tuned_reports)), \
        [(s.l1, t.l1) for s, t in zip(small_reports, tuned_reports)]
    assert orders(small, "weno-yc") != pytest.approx(orders(tuned, "weno-yc"), abs=0.05)


# ============================================================================
# Euler
# ============================================================================

def test_sod_shock_tube():
    config = preset("sod")

    limited = run(config.with_overrides(scheme="h3l"), QUIET).field
    unlimited = run(config.with_overrides(scheme="h3", positivity="cells"), QUIET).field

    primitive = conservative_to_primitive(limited.interior(), config.gamma)
    assert np.all(primitive[0] > 0.0) and np.all(primitive[2] > 0.0)
    assert primitive[0].min() >= 0.125 - 0.02, primitive[0].min()
    assert primitive[0].max() <= 1.0 + 0.02, primitive[0].max()
    assert total_variation(unlimited) > total_variation(limited)


def test_sod_weno_yc_aborts_with_negative_pressure():
    result = sweep(preset("sod").with_overrides(schemes=("h3l", "weno-yc")), logger=QUIET)

    (failed,) = result.failures()
    assert failed.scheme == "weno-yc"
    assert (failed.failure["error"], failed.failure["variable"]) == ("positivity", "p")
    assert [report.scheme for report in result.table()] == ["h3l"]


def test_shu_osher_against_reference(tmp_path):
    config = preset("shu-osher").with_overrides(schemes=("h3", "weno-js", "weno-yc", "h3l-c"))

    result = sweep(config, logger=QUIET, workers=4, cache_dir=tmp_path)

    assert not result.failures(), [row.failure for row in result.failures()]
    for limited, weno in zip(result.reports("h3l-c"), result.reports("weno-js")):
        assert limited.l1 < weno.l1, f"n={limited.n_cells}: {limited.l1} vs {weno.l1}"
