"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
WENO3 - Three-point WENO reconstruction in the two-parameter slope domain.

The two sub-stencil slopes are delta_minus and delta_plus, the smoothness
indicators are their squares and the reconstruction is
H = w_minus * delta_minus + w_plus * delta_plus.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from domo_fv.errors import ConfigError, UndefinedLimiterError
from domo_fv.numerics.limiters import Real, SlopePair
from domo_fv.numerics.quadrature import composite_integral

Weights = Tuple[Real, Real]

DEFAULT_JS_EPSILON = 1.0e-6


class WenoVariant(Enum):
    """Weight families."""

    JS = "JS"    # Jiang-Shu
    YC = "YC"    # Yamaleev-Carpenter
    AMM = "AMM"  # power-law epsilon, same weight formula as YC


@dataclass(frozen=True)
class WenoParams:
    """Weight parameters; epsilon > 0 is enforced here so weights need no guards."""

    variant: WenoVariant
    epsilon: float = DEFAULT_JS_EPSILON
    power_p: int = 2
    gamma_minus: float = 1.0 / 3.0
    gamma_plus: float = 2.0 / 3.0

    def __post_init__(self) -> None:
        if not (np.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise ValueError(f"WENO epsilon must be > 0, got {self.epsilon}")
        if int(self.power_p) != self.power_p or self.power_p < 1:
            raise ValueError(f"WENO power p must be an integer >= 1, got {self.power_p}")
        if abs(self.gamma_minus + self.gamma_plus - 1.0) > 1.0e-14:
            raise ValueError("ideal weights must sum to 1")


class EpsilonKind(Enum):
    """How epsilon is derived from the grid spacing."""

    FIXED = "fixed"
    YC_FROM_IC = "yc"
    POWER_LAW = "pow"


@dataclass(frozen=True)
class EpsilonPolicy:
    """
    Rule producing epsilon for a grid spacing.

    FIXED gives value, YC_FROM_IC gives coefficient * dx^2, POWER_LAW gives K * dx^q.
    """

    kind: EpsilonKind
    value: float = DEFAULT_JS_EPSILON
    coefficient: float = 1.0
    k: float = 1.0
    q: float = 2.0

    def __post_init__(self) -> None:
        if self.kind == EpsilonKind.FIXED and not self.value > 0.0:
            raise ValueError(f"fixed epsilon must be > 0, got {self.value}")
        if self.kind == EpsilonKind.YC_FROM_IC and not self.coefficient > 0.0:
            raise ValueError(f"epsilon coefficient must be > 0, got {self.coefficient}")
        if self.kind == EpsilonKind.POWER_LAW and not self.k > 0.0:
            raise ValueError(f"epsilon K must be > 0, got {self.k}")

    @classmethod
    def fixed(cls, value: float = DEFAULT_JS_EPSILON) -> "EpsilonPolicy":
        return cls(EpsilonKind.FIXED, value=value)

    @classmethod
    def yc(cls, coefficient: float) -> "EpsilonPolicy":
        return cls(EpsilonKind.YC_FROM_IC, coefficient=coefficient)

    @classmethod
    def power_law(cls, k: float = 1.0, q: float = 2.0) -> "EpsilonPolicy":
        return cls(EpsilonKind.POWER_LAW, k=k, q=q)

    def resolve(self, dx: float) -> float:
        """
        Get epsilon for a grid spacing.

        Args:
            dx: Grid spacing

        Returns:
            epsilon > 0
        """
        if self.kind == EpsilonKind.FIXED:
            return self.value
        if self.kind == EpsilonKind.YC_FROM_IC:
            return self.coefficient * dx ** 2
        return self.k * dx ** self.q

    def describe(self) -> str:
        """Canonical text form, parseable by parse()."""
        if self.kind == EpsilonKind.FIXED:
            return f"fixed:{self.value!r}"
        if self.kind == EpsilonKind.YC_FROM_IC:
            return f"yc:C={self.coefficient!r}"
        return f"pow:K={self.k!r},q={self.q!r}"

    @classmethod
    def parse(cls, text: str) -> "EpsilonPolicy":
        """
        Parse "fixed:1e-6", "yc:C=20.67" or "pow:K=1,q=2".

        Raises:
            ConfigError: On malformed text
        """
        head, _, tail = text.strip().partition(":")
        try:
            if head == "fixed":
                return cls.fixed(float(tail) if tail else DEFAULT_JS_EPSILON)
            params: Dict[str, float] = {}
            for item in filter(None, tail.split(",")):
                key, _, value = item.partition("=")
                params[key.strip()] = float(value)
            if head == "yc":
                return cls.yc(params.get("C", 1.0))
            if head == "pow":
                return cls.power_law(params.get("K", 1.0), params.get("q", 2.0))
        except ValueError as error:
            raise ConfigError(f"invalid epsilon policy '{text}': {error}") from error
        raise ConfigError(f"unknown epsilon policy '{text}'")


def beta(delta: Real) -> Real:
    """Smoothness indicator of a two-point sub-stencil: delta squared."""
    return delta * delta


def _normalize(ratio: Real) -> Weights:
    # ratio = alpha_plus / alpha_minus
    with np.errstate(over="ignore", invalid="ignore"):
        w_minus = 1.0 / (1.0 + ratio)
        w_plus = np.where(np.isinf(ratio), 1.0, ratio / (1.0 + ratio))
    if np.ndim(w_plus) == 0:
        return float(w_minus), float(w_plus)
    return w_minus, w_plus


def weights_js(s: SlopePair, params: WenoParams) -> Weights:
    """
    Jiang-Shu weights alpha_k = gamma_k / (epsilon + beta_k)^p, normalized.

    Equal slopes give the ideal weights (1/3, 2/3).

    Args:
        s: Slope pair
        params: Weight parameters

    Returns:
        (w_minus, w_plus)
    """
    eps = params.epsilon
    with np.errstate(over="ignore"):
        ratio = (params.gamma_plus / params.gamma_minus) * (
            (eps + beta(s.delta_minus)) / (eps + beta(s.delta_plus))
        ) ** params.power_p
    return _normalize(ratio)


def weights_yc(s: SlopePair, epsilon: float) -> Weights:
    """
    Yamaleev-Carpenter weights alpha_k = gamma_k (1 + tau / (epsilon + beta_k)).

    tau = (delta_plus - delta_minus)^2 is the undivided difference on the whole stencil.

    Args:
        s: Slope pair
        epsilon: Regularization, > 0

    Returns:
        (w_minus, w_plus)
    """
    if not epsilon > 0.0:
        raise ValueError(f"WENO-YC epsilon must be > 0, got {epsilon}")
    tau = (s.delta_plus - s.delta_minus) ** 2
    ratio = 2.0 * (1.0 + tau / (epsilon + beta(s.delta_plus))) / (
        1.0 + tau / (epsilon + beta(s.delta_minus))
    )
    return _normalize(ratio)


def weights_amm(s: SlopePair, epsilon: float) -> Weights:
    """Power-law epsilon weights; for the three-point stencil the YC formula."""
    return weights_yc(s, epsilon)


def weno_weights(s: SlopePair, params: WenoParams) -> Weights:
    """
    Weights for any variant.

    Args:
        s: Slope pair
        params: Weight parameters

    Returns:
        (w_minus, w_plus)
    """
    if params.variant == WenoVariant.JS:
        return weights_js(s, params)
    if params.variant == WenoVariant.YC:
        return weights_yc(s, params.epsilon)
    return weights_amm(s, params.epsilon)


def h_weno(s: SlopePair, w: Weights) -> Real:
    """
    WENO3 limited slope.

    Args:
        s: Slope pair
        w: (w_minus, w_plus) summing to 1

    Returns:
        w_minus * delta_minus + w_plus * delta_plus
    """
    return w[0] * s.delta_minus + w[1] * s.delta_plus


def h_weno_small_asym(s: SlopePair) -> Real:
    """Limit of H_WENO for slopes much smaller than epsilon (equals H3)."""
    return s.delta_minus / 3.0 + 2.0 * s.delta_plus / 3.0


def h_weno_large_asym(s: SlopePair, p: int = 2) -> Real:
    """
    Limit of Jiang-Shu H_WENO for slopes much larger than epsilon.

    Evaluated as (dm dp^2p / 3 + 2 dp dm^2p / 3) / (dp^2p / 3 + 2 dm^2p / 3), the
    same function with numerator and denominator multiplied by (dm dp)^2p, so a
    single vanishing slope is allowed.

    Args:
        s: Slope pair, not both zero
        p: Weight exponent

    Returns:
        H_>>(delta_minus, delta_plus), homogeneous of degree 1

    Raises:
        UndefinedLimiterError: Where both slopes vanish
    """
    dm = np.asarray(s.delta_minus, dtype=float)
    dp = np.asarray(s.delta_plus, dtype=float)
    if np.any((dm == 0.0) & (dp == 0.0)):
        raise UndefinedLimiterError("H_>> is undefined at delta_minus = delta_plus = 0")
    dm_2p = dm ** (2 * p)
    dp_2p = dp ** (2 * p)
    value = (dm * dp_2p / 3.0 + 2.0 * dp * dm_2p / 3.0) / (dp_2p / 3.0 + 2.0 * dm_2p / 3.0)
    return value if value.ndim else float(value)


def epsilon_yc(
    u0: Callable[[np.ndarray], np.ndarray],
    du0: Callable[[np.ndarray], np.ndarray],
    x_left: float,
    x_right: float,
    excluded: Sequence[Tuple[float, float]],
    dx: float,
    subintervals: int = 10_000
) -> float:
    """
    Yamaleev-Carpenter epsilon max(||u0^2||_1, ||(u0')^2||_1) * dx^2.

    The norms integrate over the domain minus the discontinuity set with composite
    five-point Gauss-Legendre quadrature.

    Args:
        u0: Vectorized initial condition (scalar profile)
        du0: Its derivative
        x_left: Domain start
        x_right: Domain end
        excluded: Discontinuity set as closed intervals (a == b for points)
        dx: Grid spacing
        subintervals: Number of quadrature subintervals

    Returns:
        epsilon
    """
    if not dx > 0.0:
        raise ValueError(f"dx must be > 0, got {dx}")
    return epsilon_yc_coefficient(u0, du0, x_left, x_right, excluded, subintervals) * dx ** 2


def epsilon_yc_coefficient(
    u0: Callable[[np.ndarray], np.ndarray],
    du0: Callable[[np.ndarray], np.ndarray],
    x_left: float,
    x_right: float,
    excluded: Sequence[Tuple[float, float]],
    subintervals: int = 10_000
) -> float:
    """The factor C of epsilon = C * dx^2 (see epsilon_yc)."""
    value_norm = composite_integral(
        lambda x: np.asarray(u0(x), dtype=float) ** 2, x_left, x_right, excluded, subintervals
    )
    slope_norm = composite_integral(
        lambda x: np.asarray(du0(x), dtype=float) ** 2, x_left, x_right, excluded, subintervals
    )
    return max(value_norm, slope_norm)
