"""
Limiter tests - Univariate and two-parameter limiters, indicators and alpha.
"""

import decimal
from decimal import Decimal

import numpy as np
import pytest

from domo_fv.errors import DegenerateContextError
from domo_fv.experiments.config import build_scheme, parse_scheme_id
from domo_fv.experiments.initial_conditions import cells_near_extrema, sine
from domo_fv.numerics.grid import Grid1D
from domo_fv.numerics.limiters import (
    SlopePair,
    SmoothnessContext,
    alpha_from_ic,
    eta,
    eta_ct,
    h3,
    h3l,
    h3l_combined,
    h_ct,
    h_ct_tvd,
    h_from_phi,
    numeric_second_derivative,
    phi3,
    phi_as,
    phi_ct,
    phi_ct_combined,
    phi_ct_tvd,
)
from domo_fv.numerics.weno3 import EpsilonPolicy, h_weno_large_asym

SCALES = (-3.0, -1.0, 0.5, 7.0)

CATALOG_IDS = (
    "h3", "ct", "ct-tvd", "ct-c:r=1", "as:q=1.4", "h3l", "h3l-c",
    "minmod", "vanleer", "superbee", "weno-js", "weno-yc", "weno-pow:K=1,q=2",
)


def catalog_scheme(scheme_id: str, dx: float = 0.1, alpha: float = 10.0):
    return build_scheme(parse_scheme_id(scheme_id), dx, alpha=alpha, eps_policy=EpsilonPolicy.yc(1.0))


def random_pairs(count: int = 2000, seed: int = 7):
    rng = np.random.default_rng(seed)
    return rng.uniform(-2.0, 2.0, count), rng.uniform(-2.0, 2.0, count)


# ============================================================================
# Univariate limiters
# ============================================================================

@pytest.mark.parametrize("theta,expected", [(1.0, 1.0), (-2.0, 0.0), (4.0, 2.0)])
def test_phi3_values(theta, expected):
    assert phi3(theta) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("theta,expected", [(1.0, 1.0), (-1.0, 1.0 / 3.0), (10.0, 1.6), (-0.5, 0.25)])
def test_phi_ct_values(theta, expected):
    """Test the nested min/max of phi_CT at hand-evaluated points."""
    assert phi_ct(theta) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("theta,expected", [(-1.0, 0.0), (1.0, 1.0), (10.0, 1.6)])
def test_phi_ct_tvd_values(theta, expected):
    assert phi_ct_tvd(theta) == pytest.approx(expected, abs=1e-15)


def test_phi_ct_tvd_stays_in_tvd_envelope():
    """Test 0 <= phi_CT,TVD <= max(0, min(2, 2 theta)) on a dense grid."""
    theta = np.linspace(-10.0, 10.0, 20001)
    values = phi_ct_tvd(theta)
    bound = np.maximum(0.0, np.minimum(2.0, 2.0 * theta))

    assert np.all(values >= 0.0), "phi_CT,TVD went negative"
    assert np.all(values <= bound + 1e-15), "phi_CT,TVD left the TVD region"


def test_phi_as_at_removable_singularity():
    """Test that theta = 1 (p = 1) uses the continuous limit."""
    assert phi_as(1.0, 1.4) == pytest.approx(1.0, abs=1e-12)
    assert phi_as(-1.0, 1.4) == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_phi_as_at_zero_is_zero():
    assert phi_as(0.0, 1.4) == 0.0
    assert phi_as(0.0, 3.0) == 0.0


def test_phi_as_reduces_to_phi3_for_small_q():
    assert phi_as(3.0, 1.0e-6) == pytest.approx(5.0 / 3.0, abs=1e-3)


def phi_as_decimal(theta: float, q: float) -> float:
    """phi_AS from its closed form in 120-digit decimal arithmetic."""
    with decimal.localcontext() as ctx:
        ctx.prec = 120
        t = Decimal(theta)
        a = abs(t) ** Decimal(q)
        p = 2 * a / (1 + a * a)
        numerator = (p * p - 2 * p * t + 1) * p.ln() - (1 - t) * (p * p - 1)
        denominator = (p * p - 1) * (p - 1) ** 2
        return float(2 * p * numerator / denominator)


@pytest.mark.parametrize("q", [1.4, 3.0])
def test_phi_as_near_one_matches_high_precision(q):
    offsets = np.concatenate([-np.logspace(-9, -2, 36), np.logspace(-9, -2, 36)])
    theta = np.concatenate([1.0 + offsets, -1.0 + offsets, [0.3, 0.8, 1.25, 2.0, 5.0, -3.0]])

    values = phi_as(theta, q)

    expected = np.array([phi_as_decimal(t, q) for t in theta])
    np.testing.assert_allclose(values, expected, rtol=0.0, atol=1e-12)


def test_phi_as_is_smooth_near_one():
    theta = np.linspace(0.99, 1.01, 20001)

    values = phi_as(theta, 1.4)

    assert np.max(np.abs(np.diff(values))) < 1e-6
    assert np.allclose(values, phi3(theta), atol=1e-4)


def test_phi_as_rejects_non_positive_q():
    with pytest.raises(ValueError):
        phi_as(0.5, 0.0)


# ============================================================================
# Two-parameter limiters
# ============================================================================

@pytest.mark.parametrize("pair,expected", [((1.0, 1.0), 1.0), ((-1.0, 1.0), 1.0 / 3.0), ((0.0, 0.0), 0.0)])
def test_h3_values(pair, expected):
    assert h3(SlopePair(*pair)) == pytest.approx(expected, abs=1e-15)


def test_h_from_phi_values():
    assert h_from_phi(phi3, SlopePair(1.0, 2.0)) == pytest.approx(5.0 / 3.0, abs=1e-15)
    assert h_from_phi(phi_ct, SlopePair(1.0, 1.0)) == pytest.approx(1.0, abs=1e-15)
    assert h_from_phi(phi_ct, SlopePair(1.0, 0.0)) == 0.0


@pytest.mark.parametrize("pair,expected", [((1.0, 1.0), 1.0), ((-0.5, 1.0), 0.5), ((-1.0, 0.5), 0.0), ((1.0, 0.0), 0.0)])
def test_h3l_values(pair, expected):
    assert h3l(SlopePair(*pair)) == pytest.approx(expected, abs=1e-15)


def test_h_from_phi_matches_homogeneous_extension():
    """Test phi(dm/dp) * dp == H(theta, 1) * dp for every dp != 0."""
    dm, dp = random_pairs()
    dp = np.where(np.abs(dp) < 1e-3, 1.0, dp)
    theta = dm / dp

    for phi in (phi3, phi_ct, phi_ct_tvd):
        direct = h_from_phi(phi, SlopePair(dm, dp))
        extension = h_from_phi(phi, SlopePair(theta, np.ones_like(theta))) * dp
        assert np.allclose(direct, phi(theta) * dp, rtol=1e-12, atol=1e-15)
        assert np.allclose(direct, extension, rtol=1e-12, atol=1e-15)


@pytest.mark.parametrize("scheme_id", CATALOG_IDS)
def test_every_scheme_is_consistent(scheme_id):
    """Test H(delta, delta) == delta."""
    scheme = catalog_scheme(scheme_id)
    delta = np.array([-3.0, -0.2, 1e-4, 0.7, 5.0])

    value = scheme.limited_slope(SlopePair(delta, delta))

    assert np.allclose(value, delta, rtol=1e-12, atol=1e-15), f"{scheme_id}: {value}"


@pytest.mark.parametrize("k", SCALES)
def test_limiters_are_homogeneous(k):
    """Test H(k dm, k dp) == k H(dm, dp)."""
    dm, dp = random_pairs(500)
    s = SlopePair(dm, dp)
    for limiter in (h3, h_ct, h_ct_tvd, h3l):
        assert np.allclose(limiter(s.scaled(k)), k * limiter(s), rtol=1e-12, atol=1e-14), limiter.__name__

    nonzero = SlopePair(dm + 3.0, dp - 3.0)
    assert np.allclose(
        h_weno_large_asym(nonzero.scaled(k)), k * h_weno_large_asym(nonzero), rtol=1e-12, atol=1e-14
    )


def test_h3l_treats_mirrored_pairs_alike():
    """Test H3L == H3 at (d1, d2) exactly when H3L == H3 at (-d2, -d1)."""
    d1, d2 = random_pairs(20000, seed=11)
    original = SlopePair(d1, d2)
    mirrored = SlopePair(-d2, -d1)

    matches = np.isclose(h3l(original), h3(original), rtol=0.0, atol=1e-12)
    mirror_matches = np.isclose(h3l(mirrored), h3(mirrored), rtol=0.0, atol=1e-12)

    assert np.array_equal(matches, mirror_matches), \
        f"{np.count_nonzero(matches != mirror_matches)} mirrored pairs disagree"
    assert matches.any() and not matches.all()


def test_h_ct_breaks_mirror_symmetry():
    """Test the counterexample pair (-0.5, 1) / (-1, 0.5)."""
    original = SlopePair(-0.5, 1.0)
    mirrored = SlopePair(-1.0, 0.5)

    assert h_ct(original) == pytest.approx(0.25)
    assert h3(original) == pytest.approx(0.5)
    assert h_ct(mirrored) == pytest.approx(h3(mirrored)), "mirrored pair should match H3"
    assert h3l(original) == pytest.approx(h3(original))
    assert h3l(mirrored) == pytest.approx(h3(mirrored))


# ============================================================================
# Smoothness indicators and combined limiters
# ============================================================================

def test_eta_values():
    ctx = SmoothnessContext(alpha=1.0, dx=0.1)
    delta = np.sqrt(5.0) / 2.0 * 1e-2

    assert eta(SlopePair(0.0, 0.0), ctx) == 0.0
    assert eta(SlopePair(delta, delta), ctx) == pytest.approx(1.0, rel=1e-12)


def test_eta_is_homogeneous_of_degree_zero():
    s = SlopePair(0.3, -0.7)
    ctx = SmoothnessContext(alpha=4.0, dx=0.05)
    for k in SCALES:
        scaled_ctx = SmoothnessContext(alpha=abs(k) * ctx.alpha, dx=ctx.dx)
        assert eta(s.scaled(k), scaled_ctx) == pytest.approx(eta(s, ctx), rel=1e-12)


def test_eta_without_alpha_is_degenerate():
    with pytest.raises(DegenerateContextError):
        eta(SlopePair(1.0, 1.0), SmoothnessContext(alpha=0.0, dx=0.1))


def test_eta_ct_values_and_quadratic_scaling():
    ctx = SmoothnessContext(alpha=0.0, dx=0.1, radius_r=1.0)
    s = SlopePair(0.1, 0.1)

    assert eta_ct(SlopePair(0.0, 0.0), ctx) == 0.0
    assert eta_ct(s, ctx) == pytest.approx(2.0, rel=1e-12)
    for k in SCALES:
        assert eta_ct(s.scaled(k), ctx) == pytest.approx(k * k * eta_ct(s, ctx), rel=1e-12)


def test_eta_ct_requires_radius():
    with pytest.raises(ValueError):
        eta_ct(SlopePair(1.0, 1.0), SmoothnessContext(alpha=1.0, dx=0.1))


def test_phi_ct_combined_switches_on_eta_ct():
    ctx = SmoothnessContext(alpha=0.0, dx=0.1, radius_r=1.0)
    small = SlopePair(-0.5e-6, 1e-6)
    large = SlopePair(-0.5, 1.0)

    assert phi_ct_combined(small, ctx) == pytest.approx(0.5e-6, rel=1e-12), "expected phi3 branch"
    assert phi_ct_combined(large, ctx) == pytest.approx(0.25, rel=1e-12), "expected phi_CT branch"
    assert phi_ct_combined(SlopePair(1e-6, 1e-6), ctx) == pytest.approx(1e-6, rel=1e-12)
    assert phi_ct_combined(SlopePair(1.0, 1.0), ctx) == pytest.approx(1.0, rel=1e-12)


def test_phi_ct_combined_is_not_homogeneous():
    ctx = SmoothnessContext(alpha=0.0, dx=0.1, radius_r=1.0)
    s = SlopePair(0.0, 0.01)

    assert phi_ct_combined(s, ctx) == pytest.approx(0.02 / 3.0)
    assert phi_ct_combined(s.scaled(100.0), ctx) == 0.0


def test_h3l_combined_without_alpha_is_h3l():
    ctx = SmoothnessContext(alpha=0.0, dx=0.1)
    assert h3l_combined(SlopePair(-0.5, 1.0), ctx) == pytest.approx(0.5)
    assert h3l_combined(SlopePair(0.0, 1e-12), ctx) == 0.0


def test_h3l_combined_uses_h3_in_asymptotic_region():
    ctx = SmoothnessContext(alpha=493.48, dx=1.0 / 3000.0)
    s = SlopePair(0.0, 1e-9)

    assert h3l(s) == 0.0
    assert h3l_combined(s, ctx) == pytest.approx(h3(s), rel=1e-12)
    assert h3l_combined(SlopePair(1e-9, 2e-9), ctx) == pytest.approx(h3(SlopePair(1e-9, 2e-9)), rel=1e-12)
    assert h3l_combined(SlopePair(2.0, 2.0), ctx) == pytest.approx(2.0)


def test_h3l_combined_is_homogeneous_only_with_scaled_alpha():
    s = SlopePair(0.0, 0.01)
    ctx = SmoothnessContext(alpha=10.0, dx=0.1)

    unscaled = h3l_combined(s.scaled(100.0), ctx)
    scaled = h3l_combined(s.scaled(100.0), SmoothnessContext(alpha=1000.0, dx=0.1))

    assert h3l_combined(s, ctx) == pytest.approx(0.02 / 3.0)
    assert scaled == pytest.approx(100.0 * h3l_combined(s, ctx), rel=1e-12)
    assert unscaled == 0.0, "with fixed alpha the large pair must be limited"


def test_smooth_switch_blends_linearly():
    ctx = SmoothnessContext(alpha=0.0, dx=0.1, radius_r=1.0, transition=0.1)
    # eta_CT = 1.05: halfway through the blend
    d = np.sqrt(1.05) * 0.1
    s = SlopePair(0.0, d)

    assert phi_ct_combined(s, ctx) == pytest.approx(0.5 * (2.0 / 3.0) * d, rel=1e-9)


# ============================================================================
# Slope magnitude near smooth extrema
# ============================================================================

@pytest.mark.parametrize("n_cells", [100, 200, 400])
def test_slopes_near_extrema_are_bounded(n_cells):
    """Test |(dm, dp)| <= sqrt(5/2) pi^2 dx^2 (1 + 5 dx) near the extrema of sin(pi x)."""
    ic = sine()
    grid = Grid1D(n_cells, -1.0, 1.0)
    u = ic.cell_averages(grid).component(0)
    dm = u - np.roll(u, 1)
    dp = np.roll(u, -1) - u
    dx = grid.dx
    bound = np.sqrt(2.5) * np.pi ** 2 * dx ** 2 * (1.0 + 5.0 * dx)

    cells = cells_near_extrema(ic, grid, extrema=(-0.5, 0.5))

    assert cells.size > 0
    norms = np.hypot(dm[cells], dp[cells])
    assert np.all(norms <= bound), f"max {norms.max()} above bound {bound}"
    assert np.array_equal(cells, cells_near_extrema(ic, grid))


# ============================================================================
# alpha
# ============================================================================

def test_alpha_from_ic_ignores_excluded_samples():
    samples = [(0.0, 1.0), (0.5, -3.0), (1.0, 2.0)]

    assert alpha_from_ic(samples) == 3.0
    assert alpha_from_ic(samples, [(0.4, 0.6)]) == 2.0
    assert alpha_from_ic(samples, [(-1.0, 2.0)]) == 0.0
    assert alpha_from_ic([]) == 0.0


def test_numeric_second_derivative_fallback():
    samples = numeric_second_derivative(lambda x: np.sin(np.pi * x), -1.0, 1.0, samples=2000)
    assert alpha_from_ic(samples) == pytest.approx(np.pi ** 2, rel=1e-5)
