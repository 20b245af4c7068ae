"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Presets - The frozen catalog of experiment configurations.

Every numeric value here is a fixed experiment parameter. The catalog is
rendered canonically and hashed by catalog_checksum(); tests pin the rendering,
so any edit to a preset is deliberate.
"""

import hashlib
from typing import Dict, Tuple

from domo_fv.errors import ConfigError
from domo_fv.experiments.config import RunConfig

PRELIM_SIZES = (20, 40, 80, 160, 320, 640)
SMOOTH_BUMP_SIZES = (20, 40, 50, 100, 120, 170, 200, 300, 500, 700, 1000, 1500, 3000)
SQUARE_WAVE_SIZES = (20, 40, 80, 160, 320, 640, 1280)
MIXED_FEATURES_SIZES = tuple(20 * 2 ** i for i in range(8))


class Presets:
    """Pre-defined experiment configurations."""

    # Sine wave, combined CT limiter for three radii r
    PRELIM_SINE_CT_R_SCAN = RunConfig(
        name="prelim-sine-ct-r-scan",
        ic="sine",
        x_left=-1.0,
        x_right=1.0,
        n_cells=80,
        n_list=PRELIM_SIZES,
        cfl=0.9,
        t_end=1.0,
        scheme="ct-c:r=1",
        schemes=("ct-c:r=0.1", "ct-c:r=1", "ct-c:r=10"),
    )

    # Sine wave, WENO-JS for four fixed epsilons
    PRELIM_SINE_WENO_EPS_SCAN = RunConfig(
        name="prelim-sine-weno-eps-scan",
        ic="sine",
        x_left=-1.0,
        x_right=1.0,
        n_cells=80,
        n_list=PRELIM_SIZES,
        cfl=0.9,
        t_end=1.0,
        scheme="weno-js",
        schemes=("weno-js:eps=0.01", "weno-js:eps=0.0001", "weno-js:eps=1e-06", "weno-js:eps=1e-08"),
    )

    # Sine wave, WENO-YC with epsilon = C dx^2
    PRELIM_WENO_YC_EPS_SCAN = RunConfig(
        name="prelim-weno-yc-eps-scan",
        ic="sine",
        x_left=-1.0,
        x_right=1.0,
        n_cells=80,
        n_list=PRELIM_SIZES,
        cfl=0.9,
        t_end=1.0,
        scheme="weno-yc:C=1",
        schemes=(
            "weno-yc:C=1000", "weno-yc:C=1", "weno-yc:C=0.1", "weno-yc:C=0.01", "weno-yc:C=0.001"
        ),
    )

    SMOOTH_BUMP = RunConfig(
        name="smooth-bump",
        ic="smooth-bump",
        x_left=0.0,
        x_right=1.0,
        n_cells=170,
        n_list=SMOOTH_BUMP_SIZES,
        cfl=0.8,
        t_end=10.0,
        scheme="h3l-c",
        schemes=("h3", "h3l-c", "weno-js", "weno-yc"),
        alpha=493.48,
        eps_policy="yc:C=20.67",
    )

    SQUARE_WAVE = RunConfig(
        name="square-wave",
        ic="square-wave",
        x_left=-1.0,
        x_right=1.0,
        n_cells=320,
        n_list=SQUARE_WAVE_SIZES,
        cfl=0.8,
        t_end=10.0,
        scheme="h3l-c",
        schemes=("h3l-c", "weno-js", "weno-yc"),
        alpha=0.0,
        eps_policy="yc:C=1",
    )

    # Same wave lifted by 100: epsilon_YC is not translation invariant
    SQUARE_WAVE_SHIFTED = RunConfig(
        name="square-wave-shifted",
        ic="square-wave",
        ic_offset=100.0,
        x_left=-1.0,
        x_right=1.0,
        n_cells=320,
        n_list=SQUARE_WAVE_SIZES,
        cfl=0.8,
        t_end=10.0,
        scheme="h3l-c",
        schemes=("h3l-c", "weno-js", "weno-yc"),
        alpha=0.0,
        eps_policy="yc:C=20201",
    )

    MIXED_FEATURES = RunConfig(
        name="mixed-features",
        ic="mixed-features",
        x_left=0.0,
        x_right=1.0,
        n_cells=640,
        n_list=MIXED_FEATURES_SIZES,
        cfl=0.8,
        t_end=10.0,
        scheme="h3l-c",
        schemes=("h3", "h3l-c", "weno-js", "weno-yc"),
        alpha=8887.87,
        eps_policy="yc:C=1042.83",
        error_range=(0.4, 1.0),
    )

    # WENO-YC with epsilon = dx^2, the K = 1 power law
    MIXED_FEATURES_EPS_DX2 = RunConfig(
        name="mixed-features-eps-dx2",
        ic="mixed-features",
        x_left=0.0,
        x_right=1.0,
        n_cells=640,
        n_list=MIXED_FEATURES_SIZES,
        cfl=0.8,
        t_end=10.0,
        scheme="weno-yc",
        schemes=("weno-yc",),
        alpha=8887.87,
        eps_policy="yc:C=1",
        error_range=(0.4, 1.0),
    )

    SOD = RunConfig(
        name="sod",
        model="euler",
        gamma=1.4,
        ic="sod",
        x_left=-2.0,
        x_right=2.0,
        n_cells=100,
        cfl=0.95,
        t_end=0.8,
        boundary="transmissive",
        scheme="h3l-c",
        schemes=("h3", "weno-js", "h3l-c", "weno-yc"),
        alpha=0.0,
        eps_policy="fixed:2.25",
        error_mode="none",
        positivity="faces",
    )

    SHU_OSHER = RunConfig(
        name="shu-osher",
        model="euler",
        gamma=1.4,
        ic="shu-osher",
        x_left=-4.5,
        x_right=4.5,
        n_cells=640,
        n_list=(640, 1280),
        cfl=0.95,
        t_end=1.8,
        boundary="transmissive",
        scheme="h3l-c",
        schemes=("h3", "weno-js", "weno-yc", "h3l-c"),
        alpha=5.0,
        eps_policy="fixed:21.932",
        error_mode="reference",
        reference_cells=10_000,
    )


CATALOG: Dict[str, RunConfig] = {
    config.name: config
    for config in (
        Presets.PRELIM_SINE_CT_R_SCAN,
        Presets.PRELIM_SINE_WENO_EPS_SCAN,
        Presets.PRELIM_WENO_YC_EPS_SCAN,
        Presets.SMOOTH_BUMP,
        Presets.SQUARE_WAVE,
        Presets.SQUARE_WAVE_SHIFTED,
        Presets.MIXED_FEATURES,
        Presets.MIXED_FEATURES_EPS_DX2,
        Presets.SOD,
        Presets.SHU_OSHER,
    )
}


def preset(name: str) -> RunConfig:
    """
    Look up a preset.

    Args:
        name: Preset name

    Returns:
        The frozen RunConfig

    Raises:
        ConfigError: For unknown names
    """
    try:
        return CATALOG[name]
    except KeyError:
        raise ConfigError(f"unknown preset '{name}'; known: {', '.join(CATALOG)}") from None


def preset_names() -> Tuple[str, ...]:
    return tuple(CATALOG)


def catalog_text() -> str:
    """Canonical rendering of the whole catalog, presets in name order."""
    return "".join(f"[{name}]\n{CATALOG[name].canonical()}" for name in sorted(CATALOG))


def catalog_checksum() -> str:
    """SHA-256 of catalog_text()."""
    return hashlib.sha256(catalog_text().encode("utf-8")).hexdigest()
