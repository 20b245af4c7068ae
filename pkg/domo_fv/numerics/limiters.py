"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Limiters - Univariate phi(theta) and two-parameter H(delta_minus, delta_plus) limiters.

Every function accepts Python floats or numpy arrays and evaluates element-wise,
so the same code path serves a single stencil and a whole grid.

The slope ratio is theta = delta_minus / delta_plus and the two-parameter form of a
univariate limiter is H(delta_minus, delta_plus) = phi(theta) * delta_plus.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from domo_fv.errors import DegenerateContextError

Real = Union[float, np.ndarray]
PhiFunction = Callable[[Real], Real]

CT_PLATEAU = 1.6
H3L_PLATEAU = 1.5
AS_SERIES_RADIUS = 0.1
# g(p) / (p - 1)^3 = sum_{k>=3} 2 (-1)^k (p - 1)^(k-3) / (k (k - 1))
AS_SERIES = np.array([2.0 * (-1) ** k / (k * (k - 1)) for k in range(3, 24)])
ETA_NORMALIZATION = np.sqrt(2.5)


@dataclass(frozen=True, eq=False)
class SlopePair:
    """
    Normalized slopes around cell i.

    delta_minus = u_i - u_{i-1} and delta_plus = u_{i+1} - u_i. Either field may be
    an array; both must then have the same shape.
    """

    delta_minus: Real
    delta_plus: Real

    def __post_init__(self) -> None:
        if not (np.all(np.isfinite(self.delta_minus)) and np.all(np.isfinite(self.delta_plus))):
            raise ValueError("SlopePair requires finite slopes")

    def swapped(self) -> "SlopePair":
        """
        Get the pair with its arguments exchanged, as used for the left face.

        Returns:
            SlopePair(delta_plus, delta_minus)
        """
        return SlopePair(self.delta_plus, self.delta_minus)

    def scaled(self, k: float) -> "SlopePair":
        """Get the pair multiplied by k."""
        return SlopePair(k * self.delta_minus, k * self.delta_plus)


@dataclass(frozen=True)
class SmoothnessContext:
    """
    Data needed by the smoothness indicators eta and eta_CT.

    Attributes:
        alpha: max |u0''| away from discontinuities (solution units per length squared)
        dx: Grid spacing
        radius_r: Radius r of the eta_CT asymptotic region (None when unused)
        transition: Width of the linear blend above eta = 1 (0 gives a sharp switch)
    """

    alpha: float
    dx: float
    radius_r: Optional[float] = None
    transition: float = 0.0

    def __post_init__(self) -> None:
        if not np.isfinite(self.alpha) or self.alpha < 0.0:
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not np.isfinite(self.dx) or self.dx <= 0.0:
            raise ValueError(f"dx must be > 0, got {self.dx}")
        if self.radius_r is not None and not self.radius_r > 0.0:
            raise ValueError(f"radius_r must be > 0, got {self.radius_r}")
        if self.transition < 0.0:
            raise ValueError(f"transition must be >= 0, got {self.transition}")


class LimiterKind(Enum):
    """Catalog of limiter families in the two-parameter framework."""

    PHI3_FULL = "PHI3_FULL"
    CT = "CT"
    CT_TVD = "CT_TVD"
    CT_COMBINED = "CT_COMBINED"  # carries r in SmoothnessContext.radius_r
    AS = "AS"                    # carries q on the scheme
    H3L = "H3L"
    H3L_COMBINED = "H3L_COMBINED"
    USER_PHI = "USER_PHI"


# ============================================================================
# Univariate limiters phi(theta)
# ============================================================================

def phi3(theta: Real) -> Real:
    """
    Non-limited third-order reconstruction (2 + theta) / 3.

    Args:
        theta: Slope ratio

    Returns:
        phi_3(theta)
    """
    return (2.0 + theta) / 3.0


def phi_ct(theta: Real) -> Real:
    """
    Cheap approximation of phi_AS, keeping phi_3 near smooth extrema.

    Args:
        theta: Slope ratio

    Returns:
        max(0, min(phi3, max(-theta/2, min(2 theta, phi3, 1.6))))
    """
    p3 = phi3(theta)
    inner = np.minimum(np.minimum(2.0 * theta, p3), CT_PLATEAU)
    return np.maximum(0.0, np.minimum(p3, np.maximum(-0.5 * theta, inner)))


def phi_ct_tvd(theta: Real) -> Real:
    """
    Strictly TVD variant of phi_CT: zero for negative theta.

    Args:
        theta: Slope ratio

    Returns:
        max(0, min(2 theta, phi3, 1.6))
    """
    return np.maximum(0.0, np.minimum(np.minimum(2.0 * theta, phi3(theta)), CT_PLATEAU))


def phi_as(theta: Real, q: float = 1.4) -> Real:
    """
    Limiter derived from a local double-logarithmic reconstruction.

    With p = 2 a / (1 + a^2), a = |theta|^q, the limiter is

        phi_AS = 2 p / (1 + p) * (ln p / (p - 1) + (1 - theta) g(p) / (p - 1)^3)
        g(p) = 2 p ln p - p^2 + 1

    The removable singularity at p = 1 (theta = +-1) is handled by computing
    p - 1 = -(1 - a)^2 / (1 + a^2) directly and summing the series of
    g / (p - 1)^3 when |p - 1| is small.

    Args:
        theta: Slope ratio
        q: Shape parameter, q > 0 (q -> 0 recovers phi_3)

    Returns:
        phi_AS(theta)

    Raises:
        ValueError: If q is not positive
    """
    if not q > 0.0:
        raise ValueError(f"phi_as requires q > 0, got {q}")

    theta_arr = np.asarray(theta, dtype=float)
    with np.errstate(divide="ignore"):
        log_abs = np.abs(np.log(np.abs(theta_arr)))

    # p(a) = p(1/a), so a <= 1
    a = np.exp(-q * log_abs)
    one_minus_a = -np.expm1(-q * log_abs)
    e = -one_minus_a ** 2 / (1.0 + a * a)
    positive = e > -1.0

    safe_e = np.where(positive, e, -0.5)
    safe_p = 1.0 + safe_e
    zero = safe_e == 0.0
    small = np.abs(safe_e) < AS_SERIES_RADIUS

    log_ratio = np.where(zero, 1.0, np.log1p(safe_e) / np.where(zero, 1.0, safe_e))
    series = np.polynomial.polynomial.polyval(safe_e, AS_SERIES)
    direct = (2.0 * safe_p * np.log1p(safe_e) - safe_e * (2.0 + safe_e)) / np.where(small, 1.0, safe_e ** 3)
    cubic = np.where(small, series, direct)

    result = 2.0 * safe_p * (log_ratio + (1.0 - theta_arr) * cubic) / (1.0 + safe_p)
    result = np.where(positive, result, 0.0)
    return result if np.ndim(theta) else float(result)


def phi_minmod(theta: Real) -> Real:
    """Minmod limiter max(0, min(1, theta))."""
    return np.maximum(0.0, np.minimum(1.0, theta))


def phi_van_leer(theta: Real) -> Real:
    """Van Leer limiter (theta + |theta|) / (1 + |theta|)."""
    return (theta + np.abs(theta)) / (1.0 + np.abs(theta))


def phi_superbee(theta: Real) -> Real:
    """Superbee limiter max(0, min(2 theta, 1), min(theta, 2))."""
    return np.maximum(
        0.0,
        np.maximum(np.minimum(2.0 * theta, 1.0), np.minimum(theta, 2.0))
    )


# ============================================================================
# Two-parameter limiters H(delta_minus, delta_plus)
# ============================================================================

def h3(s: SlopePair) -> Real:
    """
    Two-parameter form of phi_3; no division by the slope.

    Args:
        s: Slope pair

    Returns:
        (2 delta_plus + delta_minus) / 3
    """
    return (2.0 * s.delta_plus + s.delta_minus) / 3.0


def h_from_phi(phi: PhiFunction, s: SlopePair) -> Real:
    """
    Convert a univariate limiter to its two-parameter form phi(theta) * delta_plus.

    Where delta_plus = 0 the value is 0 (every catalogued phi is bounded as
    theta -> +-infinity).

    Args:
        phi: Univariate limiter function
        s: Slope pair

    Returns:
        H(delta_minus, delta_plus)
    """
    dm = np.asarray(s.delta_minus, dtype=float)
    dp = np.asarray(s.delta_plus, dtype=float)
    nonzero = dp != 0.0
    theta = dm / np.where(nonzero, dp, 1.0)
    result = np.where(nonzero, np.asarray(phi(theta), dtype=float) * dp, 0.0)
    return result if result.ndim else float(result)


def h_ct(s: SlopePair) -> Real:
    """Two-parameter phi_CT."""
    return h_from_phi(phi_ct, s)


def h_ct_tvd(s: SlopePair) -> Real:
    """Two-parameter phi_CT,TVD."""
    return h_from_phi(phi_ct_tvd, s)


def h_as(s: SlopePair, q: float = 1.4) -> Real:
    """Two-parameter phi_AS with shape parameter q."""
    return h_from_phi(lambda theta: phi_as(theta, q), s)


def h3l(s: SlopePair) -> Real:
    """
    Limited third-order function treating mirrored slope pairs alike.

    Uses sgn(0) = 0, so the value vanishes on the delta_plus = 0 axis.

    Args:
        s: Slope pair

    Returns:
        sgn(dp) max(0, min(sgn(dp) H3, max(-sgn(dp) dm, min(2 sgn(dp) dm, sgn(dp) H3, 1.5 |dp|))))
    """
    dm = s.delta_minus
    dp = s.delta_plus
    sign = np.sign(dp)
    signed_h3 = sign * h3(s)
    inner = np.minimum(np.minimum(2.0 * sign * dm, signed_h3), H3L_PLATEAU * np.abs(dp))
    return sign * np.maximum(0.0, np.minimum(signed_h3, np.maximum(-sign * dm, inner)))


# ============================================================================
# Smoothness indicators and combined limiters
# ============================================================================

def eta(s: SlopePair, ctx: SmoothnessContext) -> Real:
    """
    Parameter-free smoothness indicator.

    eta < 1 marks slopes small enough to come from a smooth extremum; the value is
    homogeneous of degree 0 when alpha is scaled with the data.

    Args:
        s: Slope pair
        ctx: Smoothness context with alpha > 0

    Returns:
        sqrt(dm^2 + dp^2) / (sqrt(5/2) alpha dx^2)

    Raises:
        DegenerateContextError: If ctx.alpha == 0
    """
    if ctx.alpha == 0.0:
        raise DegenerateContextError("eta is undefined for alpha = 0 (empty asymptotic region)")
    return np.hypot(s.delta_minus, s.delta_plus) / (ETA_NORMALIZATION * ctx.alpha * ctx.dx ** 2)


def eta_ct(s: SlopePair, ctx: SmoothnessContext) -> Real:
    """
    Indicator of the circular asymptotic region of radius r * dx.

    Args:
        s: Slope pair
        ctx: Smoothness context carrying radius_r

    Returns:
        (dm^2 + dp^2) / (r dx)^2

    Raises:
        ValueError: If ctx.radius_r is not set
    """
    if ctx.radius_r is None:
        raise ValueError("eta_ct requires SmoothnessContext.radius_r")
    return (s.delta_minus ** 2 + s.delta_plus ** 2) / (ctx.radius_r * ctx.dx) ** 2


def _switch(indicator: Real, smooth: Real, limited: Real, transition: float) -> Real:
    if transition == 0.0:
        return np.where(indicator < 1.0, smooth, limited)
    weight = np.clip((indicator - 1.0) / transition, 0.0, 1.0)
    return (1.0 - weight) * smooth + weight * limited


def phi_ct_combined(s: SlopePair, ctx: SmoothnessContext) -> Real:
    """
    Combined limiter phi_CT^(c) in two-parameter form.

    Uses phi_3 inside the asymptotic region eta_CT < 1 and phi_CT outside.

    Args:
        s: Slope pair
        ctx: Smoothness context carrying radius_r

    Returns:
        phi^(c)(theta) * delta_plus
    """
    value = _switch(eta_ct(s, ctx), h_from_phi(phi3, s), h_ct(s), ctx.transition)
    return value if np.ndim(value) else float(value)


def h3l_combined(s: SlopePair, ctx: SmoothnessContext) -> Real:
    """
    Combined limiter H3L^(c): H3 where eta < 1, H3L elsewhere.

    With alpha = 0 the asymptotic region is empty and the result is H3L.

    Args:
        s: Slope pair
        ctx: Smoothness context

    Returns:
        H3L^(c)(delta_minus, delta_plus)
    """
    if ctx.alpha == 0.0:
        return h3l(s)
    value = _switch(eta(s, ctx), h3(s), h3l(s), ctx.transition)
    return value if np.ndim(value) else float(value)


# ============================================================================
# alpha = max |u0''| outside the discontinuity set
# ============================================================================

def _outside(x: np.ndarray, excluded_regions: Sequence[Tuple[float, float]]) -> np.ndarray:
    keep = np.ones(x.shape, dtype=bool)
    for a, b in excluded_regions:
        keep &= ~((x >= min(a, b)) & (x <= max(a, b)))
    return keep


def alpha_from_ic(
    second_derivative_samples: Union[Sequence[Tuple[float, float]], np.ndarray],
    excluded_regions: Sequence[Tuple[float, float]] = ()
) -> float:
    """
    Maximum of |u0''| over samples lying outside the excluded regions.

    Args:
        second_derivative_samples: Pairs (x, u0''(x))
        excluded_regions: Closed intervals [a, b] forming the discontinuity set
            (a == b excludes a single point)

    Returns:
        alpha, or 0.0 when no sample survives the exclusion
    """
    samples = np.asarray(second_derivative_samples, dtype=float).reshape(-1, 2)
    if samples.size == 0:
        return 0.0
    keep = _outside(samples[:, 0], excluded_regions)
    if not np.any(keep):
        return 0.0
    return float(np.max(np.abs(samples[keep, 1])))


def sample_second_derivative(
    second_derivative: Callable[[np.ndarray], np.ndarray],
    x_left: float,
    x_right: float,
    excluded_regions: Sequence[Tuple[float, float]] = (),
    samples: int = 10_000,
    refine: bool = True
) -> np.ndarray:
    """
    Sample an analytic u0'' on a uniform grid for alpha_from_ic.

    With refine the neighbourhood of the largest coarse sample is resampled densely,
    so the maximum is located well below the coarse spacing.

    Args:
        second_derivative: Vectorized u0''
        x_left: Domain start
        x_right: Domain end
        excluded_regions: Discontinuity set
        samples: Number of uniform intervals
        refine: Whether to add the local dense pass

    Returns:
        Array of shape (m, 2) holding (x, u0''(x)) rows
    """
    x = np.linspace(x_left, x_right, samples + 1)
    x = x[_outside(x, excluded_regions)]
    values = np.asarray(second_derivative(x), dtype=float) * np.ones_like(x)
    if refine and x.size:
        h = (x_right - x_left) / samples
        centre = x[int(np.argmax(np.abs(values)))]
        local = np.linspace(max(x_left, centre - h), min(x_right, centre + h), 2001)
        local = local[_outside(local, excluded_regions)]
        x = np.concatenate([x, local])
        values = np.concatenate(
            [values, np.asarray(second_derivative(local), dtype=float) * np.ones_like(local)]
        )
    return np.column_stack([x, values])


def numeric_second_derivative(
    u0: Callable[[np.ndarray], np.ndarray],
    x_left: float,
    x_right: float,
    excluded_regions: Sequence[Tuple[float, float]] = (),
    samples: int = 10_000
) -> np.ndarray:
    """
    Fallback u0'' samples from centered second differences.

    Points whose three-point stencil touches an excluded region are dropped.

    Args:
        u0: Vectorized initial condition
        x_left: Domain start
        x_right: Domain end
        excluded_regions: Discontinuity set
        samples: Number of uniform intervals

    Returns:
        Array of shape (m, 2) holding (x, u0''(x)) rows
    """
    h = (x_right - x_left) / samples
    x = np.linspace(x_left + h, x_right - h, samples - 1)
    keep = np.ones(x.shape, dtype=bool)
    for a, b in excluded_regions:
        lo, hi = min(a, b), max(a, b)
        keep &= ~((x + h >= lo) & (x - h <= hi))
    x = x[keep]
    second = (np.asarray(u0(x + h)) - 2.0 * np.asarray(u0(x)) + np.asarray(u0(x - h))) / h ** 2
    return np.column_stack([x, second])
