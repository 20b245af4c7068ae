"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Reference - Fine-grid reference solutions: generation, persistence and restriction.

File format (text, one record per line):

    scheme: weno-js
    n: 10000
    t_end: 1.8
    gamma: 1.4
    x_left: -4.5
    x_right: 4.5
    components: 3
    config_hash: <sha256>

    <x_center> <value>[, <value>, <value>]

Numbers are written with 17 significant digits, which round-trips every double.
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import TYPE_CHECKING, Dict, Optional, Union

import numpy as np

from domo_fv.actors.logger import DefaultLogger, Logger
from domo_fv.errors import GridMismatchError, ProvenanceError
from domo_fv.numerics.grid import CellField, Grid1D

if TYPE_CHECKING:
    from domo_fv.experiments.config import RunConfig

REFERENCE_SCHEME = "weno-js"
REFERENCE_CELLS = 10_000


def format_real(value: float) -> str:
    """Decimal text with 17 significant digits."""
    return "%.17g" % value


@dataclass(frozen=True, eq=False)
class ReferenceSolution:
    """
    Interior cell averages on a fine grid plus provenance metadata.

    Attributes:
        grid: Fine grid
        values: Array of shape (components, n_cells)
        metadata: scheme, n, t_end, gamma and config_hash as strings
    """

    grid: Grid1D
    values: np.ndarray
    metadata: Dict[str, str] = field(default_factory=dict)

    def as_field(self) -> CellField:
        """The reference as a CellField on its own grid."""
        return CellField.from_interior(self.grid, self.values)

    def save(self, path: Union[str, Path]) -> Path:
        """
        Write the reference file.

        Args:
            path: Target file

        Returns:
            The path written
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        header = dict(self.metadata)
        header.update({
            "x_left": format_real(self.grid.x_left),
            "x_right": format_real(self.grid.x_right),
            "n": str(self.grid.n_cells),
            "components": str(self.values.shape[0]),
        })
        lines = [f"{key}: {value}" for key, value in header.items()]
        lines.append("")
        for x, column in zip(self.grid.centers(), self.values.T):
            lines.append(f"{format_real(x)} " + ", ".join(format_real(v) for v in column))
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    @classmethod
    def load(
        cls,
        path: Union[str, Path],
        expected: Optional[Dict[str, str]] = None
    ) -> "ReferenceSolution":
        """
        Read a reference file, checking provenance.

        Args:
            path: File to read
            expected: Metadata that must match exactly (missing keys are not checked)

        Returns:
            ReferenceSolution

        Raises:
            ProvenanceError: If the file is malformed or metadata disagrees
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as error:
            raise ProvenanceError(f"{path}: cannot read reference ({error})") from error
        head, separator, body = text.partition("\n\n")
        if not separator:
            raise ProvenanceError(f"{path}: missing blank line after header")

        metadata: Dict[str, str] = {}
        for line in head.splitlines():
            key, colon, value = line.partition(":")
            if not colon:
                raise ProvenanceError(f"{path}: bad header line '{line}'")
            metadata[key.strip()] = value.strip()

        for key, value in (expected or {}).items():
            if metadata.get(key) != value:
                raise ProvenanceError(
                    f"{path}: {key} is '{metadata.get(key)}', expected '{value}'"
                )

        try:
            grid = Grid1D(int(metadata["n"]), float(metadata["x_left"]), float(metadata["x_right"]))
            components = int(metadata["components"])
            rows = [line.split(" ", 1)[1].split(",") for line in body.splitlines() if line.strip()]
            values = np.array([[float(v) for v in row] for row in rows], dtype=float).T
        except (KeyError, ValueError, IndexError) as error:
            raise ProvenanceError(f"{path}: unreadable reference data ({error})") from error

        if values.shape != (components, grid.n_cells):
            raise ProvenanceError(
                f"{path}: expected {components}x{grid.n_cells} values, found {values.shape}"
            )
        for key in ("x_left", "x_right", "components"):
            metadata.pop(key, None)
        return cls(grid, values, metadata)


def provenance(config: "RunConfig") -> Dict[str, str]:
    """Metadata identifying the reference run for a configuration."""
    reference = reference_config(config)
    return {
        "scheme": reference.scheme,
        "n": str(reference.n_cells),
        "t_end": format_real(reference.t_end),
        "gamma": format_real(reference.gamma),
        "config_hash": reference.config_hash(),
    }


def reference_config(config: "RunConfig") -> "RunConfig":
    """The configuration used to produce the reference of a run configuration."""
    return replace(
        config,
        scheme=REFERENCE_SCHEME,
        schemes=(),
        n_cells=config.reference_cells or REFERENCE_CELLS,
        n_list=(),
        alpha=0.0,
        alpha_components=None,
        eps_policy=None,
        eps_override=None,
        smooth_switch=False,
        error_range=None,
        record_tv=False,
        output_times=(),
    )


def make_reference(config: "RunConfig", logger: Optional[Logger] = None) -> ReferenceSolution:
    """
    Compute a reference solution with WENO-JS on the fine grid.

    Args:
        config: Run configuration of the experiment
        logger: Logger (defaults to DefaultLogger)

    Returns:
        ReferenceSolution with provenance
    """
    from domo_fv.numerics.solver import run

    logger = logger or DefaultLogger
    reference = reference_config(config)
    logger.info("computing reference", preset=config.name, n=reference.n_cells)
    result = run(reference, logger)
    return ReferenceSolution(result.field.grid, result.field.interior().copy(), provenance(config))


def reference_path(config: "RunConfig", cache_dir: Union[str, Path]) -> Path:
    """Cache file location for the reference of a configuration."""
    meta = provenance(config)
    return Path(cache_dir) / f"{config.name}-{meta['scheme']}-{meta['n']}-{meta['config_hash'][:12]}.ref"


def load_or_make_reference(
    config: "RunConfig",
    cache_dir: Union[str, Path],
    logger: Optional[Logger] = None
) -> ReferenceSolution:
    """
    Load the cached reference or compute and cache it.

    Args:
        config: Run configuration
        cache_dir: Cache directory
        logger: Logger (defaults to DefaultLogger)

    Returns:
        ReferenceSolution
    """
    logger = logger or DefaultLogger
    path = reference_path(config, cache_dir)
    if path.exists():
        logger.debug("reference cache hit", path=str(path))
        return ReferenceSolution.load(path, provenance(config))
    logger.debug("reference cache miss", path=str(path))
    reference = make_reference(config, logger)
    reference.save(path)
    return reference


def restrict_reference(
    ref: ReferenceSolution,
    grid: Grid1D,
    require_divisible: bool = False
) -> CellField:
    """
    Average a fine reference onto a coarse grid.

    When the fine cell count is a multiple of the coarse one, blocks of fine cells
    are averaged. Otherwise each coarse average is the overlap-weighted mean of the
    fine cells, i.e. the exact average of the fine piecewise-constant field.

    Args:
        ref: Fine reference
        grid: Coarse grid on the same domain
        require_divisible: Reject non-divisible cell counts

    Returns:
        CellField on the coarse grid (zero ghosts)

    Raises:
        GridMismatchError: On different domains, a finer target grid, or a
            non-divisible count when require_divisible is set
    """
    fine = ref.grid
    if not (np.isclose(fine.x_left, grid.x_left, rtol=0.0, atol=1e-12)
            and np.isclose(fine.x_right, grid.x_right, rtol=0.0, atol=1e-12)):
        raise GridMismatchError("reference and target grid cover different domains")
    if grid.n_cells > fine.n_cells:
        raise GridMismatchError("target grid is finer than the reference")

    ratio, remainder = divmod(fine.n_cells, grid.n_cells)
    if remainder == 0:
        coarse = ref.values.reshape(ref.values.shape[0], grid.n_cells, ratio).mean(axis=2)
        return CellField.from_interior(grid, coarse)
    if require_divisible:
        raise GridMismatchError(
            f"fine n={fine.n_cells} is not a multiple of coarse n={grid.n_cells}"
        )

    fine_edges = fine.edges()
    coarse_edges = grid.edges()
    coarse = np.empty((ref.values.shape[0], grid.n_cells))
    for c, component in enumerate(ref.values):
        cumulative = np.concatenate([[0.0], np.cumsum(component * fine.dx)])
        coarse[c] = np.diff(np.interp(coarse_edges, fine_edges, cumulative)) / grid.dx
    return CellField.from_interior(grid, coarse)
