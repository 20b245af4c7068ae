"""
Preset tests - The frozen experiment catalog.
"""

from pathlib import Path

import pytest

from domo_fv.errors import ConfigError
from domo_fv.experiments.presets import CATALOG, catalog_checksum, catalog_text, preset, preset_names

GOLDEN = Path(__file__).with_name("preset_catalog.txt")
CATALOG_SHA256 = "e24b10169e6f991230eac03b80ff5f16377e63cf38326fe9d897fbcf606b41de"


def test_catalog_matches_golden_rendering():
    assert catalog_text() == GOLDEN.read_text(encoding="utf-8"), "a preset changed; update the golden file on purpose"
    assert catalog_checksum() == CATALOG_SHA256


def test_catalog_names():
    assert preset_names() == (
        "prelim-sine-ct-r-scan",
        "prelim-sine-weno-eps-scan",
        "prelim-weno-yc-eps-scan",
        "smooth-bump",
        "square-wave",
        "square-wave-shifted",
        "mixed-features",
        "mixed-features-eps-dx2",
        "sod",
        "shu-osher",
    )
    assert all(preset(name).name == name for name in CATALOG)


def test_unknown_preset():
    with pytest.raises(ConfigError):
        preset("kelvin-helmholtz")


def test_smoothness_constants():
    assert preset("smooth-bump").alpha == 493.48
    assert preset("smooth-bump").eps_policy == "yc:C=20.67"
    assert preset("mixed-features").alpha == 8887.87
    assert preset("mixed-features").eps_policy == "yc:C=1042.83"
    assert preset("square-wave").eps_policy == "yc:C=1"
    assert preset("square-wave-shifted").eps_policy == "yc:C=20201"
    assert preset("shu-osher").alpha == 5.0
    assert preset("shu-osher").eps_policy == "fixed:21.932"
    assert preset("sod").eps_policy == "fixed:2.25"


def test_euler_presets():
    sod = preset("sod")
    shu_osher = preset("shu-osher")

    assert (sod.model, sod.n_cells, sod.cfl, sod.t_end, sod.boundary) == ("euler", 100, 0.95, 0.8, "transmissive")
    assert sod.domain() == (-2.0, 2.0)
    assert shu_osher.domain() == (-4.5, 4.5)
    assert shu_osher.t_end == 1.8
    assert shu_osher.error_mode == "reference"
    assert shu_osher.reference_cells == 10_000


def test_every_preset_builds_its_schemes():
    for config in CATALOG.values():
        grid = config.grid(config.sizes()[0])
        for scheme in config.scheme_list():
            assert config.with_overrides(scheme=scheme).build_schemes(grid.dx), f"{config.name}: {scheme}"


def test_mixed_features_measures_errors_away_from_the_jumps():
    assert preset("mixed-features").error_range == (0.4, 1.0)
    assert preset("mixed-features").sizes()[-1] == 2560
