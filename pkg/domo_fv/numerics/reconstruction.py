"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Reconstruction - Interface values from cell averages in the two-parameter framework.

For cell i with slopes delta_minus = u_i - u_{i-1} and delta_plus = u_{i+1} - u_i:

    right face value  u_i + H(delta_minus, delta_plus) / 2
    left face value   u_i - H(delta_plus, delta_minus) / 2

Limiters and WENO weights share this single code path through LimiterScheme.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence, Union

import numpy as np

from domo_fv.errors import GhostLayerError
from domo_fv.numerics.limiters import (
    LimiterKind,
    PhiFunction,
    Real,
    SlopePair,
    SmoothnessContext,
    h3,
    h3l,
    h3l_combined,
    h_as,
    h_ct,
    h_ct_tvd,
    h_from_phi,
    phi_ct_combined,
)
from domo_fv.numerics.weno3 import WenoParams, h_weno, weno_weights

if TYPE_CHECKING:
    from domo_fv.numerics.grid import CellField


@dataclass(frozen=True, eq=False)
class LimiterScheme:
    """
    A configured reconstruction rule mapping a SlopePair to the limited slope H.

    Exactly one backing family is set: a limiter kind or WENO parameters.

    Attributes:
        name: Stable identifier used in tables and logs
        kind: Limiter family (None for WENO)
        weno: WENO parameters (None for limiters)
        smoothness: Context for the combined limiters
        q: Shape parameter of the AS limiter
        phi: Univariate limiter for USER_PHI
    """

    name: str
    kind: Optional[LimiterKind] = None
    weno: Optional[WenoParams] = None
    smoothness: Optional[SmoothnessContext] = None
    q: float = 1.4
    phi: Optional[PhiFunction] = None

    def __post_init__(self) -> None:
        if (self.kind is None) == (self.weno is None):
            raise ValueError(f"scheme '{self.name}' needs exactly one of kind or weno")
        if self.kind in (LimiterKind.CT_COMBINED, LimiterKind.H3L_COMBINED) and self.smoothness is None:
            raise ValueError(f"combined scheme '{self.name}' requires a smoothness context")
        if self.kind == LimiterKind.CT_COMBINED and self.smoothness is not None \
                and self.smoothness.radius_r is None:
            raise ValueError(f"scheme '{self.name}' requires radius r")
        if self.kind == LimiterKind.AS and not self.q > 0.0:
            raise ValueError(f"scheme '{self.name}' requires q > 0")
        if self.kind == LimiterKind.USER_PHI and self.phi is None:
            raise ValueError(f"scheme '{self.name}' requires a phi function")

    def limited_slope(self, s: SlopePair) -> Real:
        """
        Evaluate H for the slope pair.

        Args:
            s: Slope pair (scalars or arrays)

        Returns:
            H(delta_minus, delta_plus)
        """
        if self.weno is not None:
            return h_weno(s, weno_weights(s, self.weno))

        kind = self.kind
        if kind == LimiterKind.PHI3_FULL:
            return h3(s)
        if kind == LimiterKind.CT:
            return h_ct(s)
        if kind == LimiterKind.CT_TVD:
            return h_ct_tvd(s)
        if kind == LimiterKind.CT_COMBINED:
            return phi_ct_combined(s, self.smoothness)
        if kind == LimiterKind.AS:
            return h_as(s, self.q)
        if kind == LimiterKind.H3L:
            return h3l(s)
        if kind == LimiterKind.H3L_COMBINED:
            return h3l_combined(s, self.smoothness)
        return h_from_phi(self.phi, s)

    def __repr__(self) -> str:
        return f"LimiterScheme({self.name})"


@dataclass(frozen=True, eq=False)
class InterfacePair:
    """Face values of a cell: left is u^(+) at i-1/2, right is u^(-) at i+1/2."""

    left_face_value: Real
    right_face_value: Real

    def __post_init__(self) -> None:
        if not (np.all(np.isfinite(self.left_face_value))
                and np.all(np.isfinite(self.right_face_value))):
            raise ValueError("interface values must be finite")


def interface_values(u_m: Real, u_i: Real, u_p: Real, scheme: LimiterScheme) -> InterfacePair:
    """
    Reconstruct both face values of cell i from three cell averages.

    Args:
        u_m: Average of cell i-1
        u_i: Average of cell i
        u_p: Average of cell i+1
        scheme: Reconstruction rule

    Returns:
        InterfacePair for cell i
    """
    s = SlopePair(u_i - u_m, u_p - u_i)
    right = u_i + 0.5 * scheme.limited_slope(s)
    left = u_i - 0.5 * scheme.limited_slope(s.swapped())
    return InterfacePair(left, right)


SchemeSet = Union[LimiterScheme, Sequence[LimiterScheme]]


def reconstruct_values(
    values: np.ndarray,
    scheme: SchemeSet,
    ghost_layers: int,
    halo: int = 0
) -> InterfacePair:
    """
    Reconstruct face values for every interior cell of a ghosted array.

    Args:
        values: Cell averages of shape (components, n + 2 * ghost_layers)
        scheme: One scheme for all components or one per component
        ghost_layers: Number of ghost cells on each side
        halo: Extra ghost cells per side to reconstruct as well

    Returns:
        InterfacePair of arrays shaped (components, n + 2 * halo)

    Raises:
        GhostLayerError: If ghost_layers < halo + 1
    """
    if ghost_layers < halo + 1:
        raise GhostLayerError(
            f"reconstruction needs {halo + 1} ghost layer(s), field has {ghost_layers}"
        )
    values = np.atleast_2d(values)
    components = values.shape[0]
    schemes = [scheme] * components if isinstance(scheme, LimiterScheme) else list(scheme)
    if len(schemes) != components:
        raise ValueError(f"expected {components} schemes, got {len(schemes)}")

    lo = ghost_layers - halo
    hi = values.shape[1] - ghost_layers + halo
    u_m = values[:, lo - 1:hi - 1]
    u_i = values[:, lo:hi]
    u_p = values[:, lo + 1:hi + 1]

    left = np.empty_like(u_i)
    right = np.empty_like(u_i)
    for c, component_scheme in enumerate(schemes):
        pair = interface_values(u_m[c], u_i[c], u_p[c], component_scheme)
        left[c] = pair.left_face_value
        right[c] = pair.right_face_value
    return InterfacePair(left, right)


def reconstruct_field(field: "CellField", scheme: SchemeSet, halo: int = 0) -> InterfacePair:
    """
    Reconstruct face values of every interior cell of a field.

    Args:
        field: Cell field with ghosts filled
        scheme: Reconstruction rule (or one per component)
        halo: Extra ghost cells per side to reconstruct

    Returns:
        InterfacePair of arrays shaped (components, n_cells + 2 * halo)
    """
    return reconstruct_values(field.values, scheme, field.grid.ghost_layers, halo)
