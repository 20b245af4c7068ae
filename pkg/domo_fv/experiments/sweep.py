"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Sweep - Runs every (scheme, n) pair of an experiment and tabulates the errors.

Each scheme gets a RunWorker actor whose mailbox holds that scheme's resolutions
in order. Solver runs execute on the stage's thread pool. A SweepSupervisor keeps
the sweep going when a run fails:

    PositivityError  RESUME    the row is recorded as failed, the worker continues
    ConfigError      STOP      the row is recorded as failed, later rows of the
                               scheme are recorded as skipped
    anything else    ESCALATE  the error propagates to the caller

Rows are assembled by (scheme order, n) whatever order the runs finish in.
"""

import asyncio
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from domo_fv.actors.actor import Actor
from domo_fv.actors.logger import DefaultLogger, Logger
from domo_fv.actors.stage import Stage
from domo_fv.actors.supervisor import SupervisionDirective, Supervisor
from domo_fv.errors import ConfigError, PositivityError
from domo_fv.experiments.config import RunConfig
from domo_fv.numerics.diagnostics import (
    ErrorReport,
    convergence_orders,
    l1_error,
    linf_error,
    total_variation,
)
from domo_fv.numerics.grid import BoundaryKind
from domo_fv.numerics.reference import (
    ReferenceSolution,
    load_or_make_reference,
    make_reference,
    restrict_reference,
)
from domo_fv.numerics.solver import RunResult, run

STATUS_OK = "ok"
STATUS_FAILED = "failed"
STATUS_SKIPPED = "skipped"


@dataclass
class SweepRow:
    """Outcome of one (scheme, n) run."""

    scheme: str
    n_cells: int
    dx: float
    status: str = STATUS_OK
    report: Optional[ErrorReport] = None
    failure: Optional[Dict[str, Any]] = None
    result: Optional[RunResult] = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


@dataclass
class SweepResult:
    """All rows of a sweep, in (scheme order, n) order."""

    preset: str
    schemes: Tuple[str, ...]
    sizes: Tuple[int, ...]
    rows: List[SweepRow] = field(default_factory=list)

    def rows_for(self, scheme: str) -> List[SweepRow]:
        return [row for row in self.rows if row.scheme == scheme]

    def reports(self, scheme: str) -> List[ErrorReport]:
        """Successful reports of a scheme with convergence orders filled in."""
        return convergence_orders(
            [row.report for row in self.rows_for(scheme) if row.ok and row.report is not None]
        )

    def table(self) -> List[ErrorReport]:
        """Reports of every scheme, orders computed per scheme."""
        return [report for scheme in self.schemes for report in self.reports(scheme)]

    def failures(self) -> List[SweepRow]:
        return [row for row in self.rows if not row.ok]


def measure(
    config: RunConfig,
    result: RunResult,
    reference: Optional[ReferenceSolution] = None
) -> ErrorReport:
    """
    Error norms and total variation of a finished run.

    Advection runs are compared with the exactly advected cell averages, Euler runs
    with the restricted reference (density); without a reference the norms are NaN.

    Args:
        config: Configuration of the run
        result: Its result
        reference: Fine reference solution for error_mode "reference"

    Returns:
        ErrorReport
    """
    approx = result.field
    grid = approx.grid
    if config.error_mode == "exact":
        truth = config.exact_field(grid)
    elif config.error_mode == "reference" and reference is not None:
        truth = restrict_reference(reference, grid)
    else:
        truth = None

    if truth is None:
        l1 = linf = math.nan
    else:
        l1 = l1_error(approx, truth, config.error_range)
        linf = linf_error(approx, truth, config.error_range)
    tv = total_variation(approx, periodic=config.boundary == BoundaryKind.PERIODIC.value)
    return ErrorReport(grid.n_cells, grid.dx, l1, linf, tv, scheme=config.scheme)


class RunWorker(Actor):
    """Runs the cases of one scheme, one after another."""

    def __init__(self, reference: Optional[ReferenceSolution] = None, keep_results: bool = False) -> None:
        super().__init__()
        self._reference = reference
        self._keep_results = keep_results

    async def run_case(self, config: RunConfig, scheme: str, n_cells: int) -> SweepRow:
        """
        Run one case and measure it.

        Raises:
            ConfigError: If the case cannot be configured
            PositivityError: If the run aborts
        """
        case = config.with_overrides(scheme=scheme, n_cells=n_cells)
        result = await self.stage().run_blocking(run, case, self.logger())
        report = await self.stage().run_blocking(measure, case, result, self._reference)
        return SweepRow(
            scheme=scheme,
            n_cells=n_cells,
            dx=result.field.grid.dx,
            report=report,
            result=result if self._keep_results else None,
        )


class SweepSupervisor(Supervisor):
    """Failure policy of a sweep."""

    def decide_directive(self, error: Exception, actor: Actor) -> SupervisionDirective:
        if isinstance(error, PositivityError):
            return SupervisionDirective.RESUME
        if isinstance(error, ConfigError):
            return SupervisionDirective.STOP
        return SupervisionDirective.ESCALATE


def _failure(error: Exception) -> Dict[str, Any]:
    if isinstance(error, PositivityError):
        return error.to_dict()
    return {"error": "config", "message": str(error)}


async def sweep_async(
    config: RunConfig,
    schemes: Optional[Sequence[str]] = None,
    sizes: Optional[Sequence[int]] = None,
    logger: Optional[Logger] = None,
    workers: int = 1,
    cache_dir: Optional[Union[str, Path]] = None,
    keep_results: bool = False,
    reference: Optional[ReferenceSolution] = None
) -> SweepResult:
    """
    Run every (scheme, n) pair.

    Args:
        config: Experiment configuration
        schemes: Scheme identifiers (default: the config's scheme list)
        sizes: Cell counts (default: the config's n list)
        logger: Logger (defaults to DefaultLogger)
        workers: Threads for solver runs
        cache_dir: Reference cache directory (reference errors only)
        keep_results: Keep each RunResult (final field, snapshots, TV history) on its row
        reference: Reference solution to use instead of computing one

    Returns:
        SweepResult

    Raises:
        Exception: The first failure the supervisor escalated (anything other than a
            positivity abort or a configuration error), once every case has finished
    """
    logger = logger or DefaultLogger
    schemes = tuple(schemes or config.scheme_list())
    sizes = tuple(sorted(set(sizes or config.sizes())))
    logger.info("sweep started", preset=config.name, schemes=len(schemes), sizes=len(sizes))

    stage = Stage(logger, workers=workers, supervisor=SweepSupervisor())
    try:
        if reference is None and config.error_mode == "reference":
            if cache_dir is not None:
                reference = await stage.run_blocking(load_or_make_reference, config, cache_dir, logger)
            else:
                reference = await stage.run_blocking(make_reference, config, logger)

        pending = {}
        for index, scheme in enumerate(schemes):
            worker = stage.actor_for(RunWorker, reference, keep_results, name=f"worker-{scheme}")
            for n_cells in sizes:
                pending[(index, n_cells)] = worker.run_case(config, scheme, n_cells)

        result = SweepResult(config.name, schemes, sizes)
        for (index, n_cells), promise in sorted(pending.items(), key=lambda item: item[0]):
            scheme = schemes[index]
            dx = (config.domain()[1] - config.domain()[0]) / n_cells
            try:
                row = await promise
            except (PositivityError, ConfigError) as error:
                failure = _failure(error)
                logger.error("run failed", scheme=scheme, n=n_cells, kind=failure["error"],
                             reason=str(error))
                row = SweepRow(scheme, n_cells, dx, STATUS_FAILED, failure=failure)
            except Exception as error:
                row = SweepRow(scheme, n_cells, dx, STATUS_FAILED,
                               failure={"error": "internal", "message": str(error)})
            if row is None:
                logger.warn("run skipped", scheme=scheme, n=n_cells)
                row = SweepRow(scheme, n_cells, dx, STATUS_SKIPPED)
            result.rows.append(row)
    finally:
        await stage.close()

    escalated = stage.escalations()
    if escalated:
        logger.error("sweep aborted", escalated[0], preset=config.name, escalations=len(escalated))
        raise escalated[0]
    logger.info("sweep finished", preset=config.name, runs=len(result.rows), failed=len(result.failures()))
    return result


def sweep(
    config: RunConfig,
    schemes: Optional[Sequence[str]] = None,
    sizes: Optional[Sequence[int]] = None,
    logger: Optional[Logger] = None,
    workers: int = 1,
    cache_dir: Optional[Union[str, Path]] = None,
    keep_results: bool = False,
    reference: Optional[ReferenceSolution] = None
) -> SweepResult:
    """Synchronous form of sweep_async."""
    return asyncio.run(
        sweep_async(config, schemes, sizes, logger, workers, cache_dir, keep_results, reference)
    )
