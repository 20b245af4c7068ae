"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Solver - Semi-discrete right-hand side, SSP-RK3 time stepping and the run loop.

The semi-discrete update of cell i is

    du_i/dt = -(F_{i+1/2} - F_{i-1/2}) / dx

with F the numerical flux between the reconstructed face states.
"""

import time as wall_clock
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from domo_fv.actors.logger import DefaultLogger, Logger
from domo_fv.errors import DegenerateTimestepError, GhostLayerError, PositivityError
from domo_fv.numerics.diagnostics import total_variation
from domo_fv.numerics.grid import BoundaryCondition, BoundaryKind, CellField, fill_ghosts
from domo_fv.numerics.physics import (
    AdvectionModel,
    FluxKind,
    PhysicsModel,
    conservative_to_primitive,
    find_positivity_violation,
    max_wave_speed,
    numerical_flux,
    signal_speeds,
)
from domo_fv.numerics.reconstruction import InterfacePair, SchemeSet, reconstruct_field, reconstruct_values

if TYPE_CHECKING:
    from domo_fv.experiments.config import RunConfig

State = TypeVar("State")

PROGRESS_INTERVAL = 1000
FACE_VARIABLES = ((2, "p"), (0, "rho"))


class TimestepMode(Enum):
    """Whether dt follows the current wave speed or stays at its initial value."""

    INSTANTANEOUS = "instantaneous"
    FROZEN = "frozen"


class PositivityCheck(Enum):
    """Which primitive states must stay positive: cell averages only, or faces too."""

    CELLS = "cells"
    FACES = "faces"


@dataclass
class RunResult:
    """Outcome of a completed run."""

    field: CellField
    time: float
    steps: int
    tv_history: List[Tuple[float, float]] = dataclass_field(default_factory=list)
    snapshots: Dict[float, CellField] = dataclass_field(default_factory=dict)
    wall_time: float = 0.0


def check_positivity(field: CellField, model: PhysicsModel) -> None:
    """
    Verify positive density and pressure in every interior cell.

    Args:
        field: Conservative Euler field (advection fields always pass)
        model: Physics model

    Raises:
        PositivityError: Naming the interior cell and variable
    """
    if isinstance(model, AdvectionModel):
        return
    violation = find_positivity_violation(conservative_to_primitive(field.interior(), model.gamma))
    if violation is not None:
        raise violation


def check_face_states(faces: InterfacePair, halo: int = 1) -> None:
    """
    Verify positive pressure and density in reconstructed primitive face states.

    Args:
        faces: Primitive face values shaped (3, n + 2 * halo)
        halo: Reconstructed ghost cells per side, excluded from the check

    Raises:
        PositivityError: Naming the interior cell whose face is non-positive
    """
    inner = slice(halo, faces.left_face_value.shape[1] - halo)
    lowest = np.minimum(faces.left_face_value[:, inner], faces.right_face_value[:, inner])
    violation = find_positivity_violation(lowest, FACE_VARIABLES)
    if violation is not None:
        raise violation


def rhs(
    field: CellField,
    scheme: SchemeSet,
    model: PhysicsModel,
    bc: Optional[BoundaryCondition] = None,
    flux: FluxKind = FluxKind.RUSANOV,
    positivity: PositivityCheck = PositivityCheck.CELLS
) -> CellField:
    """
    Time derivative of the cell averages.

    The face at each domain boundary is reconstructed from the first ghost cell,
    so two ghost layers are required. Euler fields are reconstructed in primitive
    variables; the Rusanov/HLL signal speeds come from the two cell averages
    adjacent to each face.

    Args:
        field: Current field
        scheme: Reconstruction rule (or one per component)
        model: Physics model
        bc: Boundary condition applied first (None if ghosts are already filled)
        flux: Euler numerical flux
        positivity: Whether the reconstructed face states are checked as well

    Returns:
        Field of derivatives; ghost entries are zero

    Raises:
        GhostLayerError: With fewer than two ghost layers
        PositivityError: If an interior cell, or with FACES one of its face states,
            has non-positive density or pressure
    """
    if bc is not None:
        field = fill_ghosts(field, bc)
    grid = field.grid
    g = grid.ghost_layers
    n = grid.n_cells
    if g < 2:
        raise GhostLayerError(f"rhs needs 2 ghost layers, field has {g}")

    if isinstance(model, AdvectionModel):
        faces = reconstruct_field(field, scheme, halo=1)
        fluxes = numerical_flux(faces.right_face_value[:, :-1], faces.left_face_value[:, 1:], model)
    else:
        check_positivity(field, model)
        w = conservative_to_primitive(field.values, model.gamma)
        faces = reconstruct_values(w, scheme, g, halo=1)
        if positivity == PositivityCheck.FACES:
            check_face_states(faces)
        slow, fast = signal_speeds(w[:, g - 1:g + n + 1], model.gamma)
        bounds = (np.minimum(slow[:-1], slow[1:]), np.maximum(fast[:-1], fast[1:]))
        fluxes = numerical_flux(
            faces.right_face_value[:, :-1],
            faces.left_face_value[:, 1:],
            model,
            flux,
            bounds,
            primitive=True
        )

    derivative = np.zeros_like(field.values)
    derivative[:, grid.interior] = -(fluxes[:, 1:] - fluxes[:, :-1]) / grid.dx
    return field.with_values(derivative)


def ssp_rk3_step(u: State, dt: float, rhs_closure: Callable[[State], State]) -> State:
    """
    One three-stage strong-stability-preserving Runge-Kutta step.

        u1 = u + dt L(u)
        u2 = 3/4 u + 1/4 (u1 + dt L(u1))
        u_next = 1/3 u + 2/3 (u2 + dt L(u2))

    Args:
        u: Current state (float or array)
        dt: Time step, > 0
        rhs_closure: L

    Returns:
        State after one step
    """
    if not dt > 0.0:
        raise ValueError(f"dt must be > 0, got {dt}")
    u1 = u + dt * rhs_closure(u)
    u2 = 0.75 * u + 0.25 * (u1 + dt * rhs_closure(u1))
    return u / 3.0 + 2.0 / 3.0 * (u2 + dt * rhs_closure(u2))


def compute_dt(
    field: CellField,
    model: PhysicsModel,
    cfl: float,
    dx: Optional[float] = None,
    time: Optional[float] = None,
    t_end: Optional[float] = None
) -> float:
    """
    CFL time step cfl * dx / max wave speed, clipped to land on t_end.

    Args:
        field: Current field
        model: Physics model
        cfl: CFL number, > 0
        dx: Grid spacing (defaults to the field's)
        time: Current time, for clipping
        t_end: Target time, for clipping

    Returns:
        dt

    Raises:
        DegenerateTimestepError: If the maximal wave speed is zero
    """
    if not cfl > 0.0:
        raise ValueError(f"cfl must be > 0, got {cfl}")
    dx = field.grid.dx if dx is None else dx
    speed = max_wave_speed(field.interior(), model)
    if speed == 0.0:
        raise DegenerateTimestepError("maximal wave speed is zero")
    dt = cfl * dx / speed
    if time is not None and t_end is not None and time + dt >= t_end:
        dt = t_end - time
    return dt


def evolve(
    field: CellField,
    scheme: SchemeSet,
    model: PhysicsModel,
    bc: BoundaryCondition,
    cfl: float,
    t_end: float,
    flux: FluxKind = FluxKind.RUSANOV,
    dt_mode: TimestepMode = TimestepMode.INSTANTANEOUS,
    positivity: PositivityCheck = PositivityCheck.CELLS,
    record_tv: bool = True,
    output_times: Sequence[float] = (),
    logger: Optional[Logger] = None
) -> RunResult:
    """
    Advance a field to t_end with SSP-RK3.

    Output times are hit exactly and stored as snapshots. With a zero wave speed the
    field is stationary and returned unchanged.

    Args:
        field: Initial field
        scheme: Reconstruction rule (or one per component)
        model: Physics model
        bc: Boundary condition
        cfl: CFL number
        t_end: Final time
        flux: Euler numerical flux
        dt_mode: Instantaneous or frozen wave speed
        positivity: Whether reconstructed face states must stay positive too
        record_tv: Whether to record total variation after every step
        output_times: Times at which to keep a snapshot
        logger: Logger (defaults to DefaultLogger)

    Returns:
        RunResult

    Raises:
        PositivityError: With step and time attached
    """
    logger = logger or DefaultLogger
    started = wall_clock.perf_counter()
    periodic = bc.kind == BoundaryKind.PERIODIC
    field = fill_ghosts(field, bc)

    def tv_of(current: CellField) -> float:
        return total_variation(current, periodic=periodic)

    result = RunResult(field=field, time=0.0, steps=0)
    if record_tv:
        result.tv_history.append((0.0, tv_of(field)))

    frozen_dt: Optional[float] = None
    stationary = False
    try:
        if dt_mode == TimestepMode.FROZEN:
            frozen_dt = compute_dt(field, model, cfl)
    except DegenerateTimestepError:
        stationary = True
    except PositivityError as error:
        raise error.at(0, 0.0) from None

    t = 0.0
    step = 0
    targets = sorted({float(x) for x in output_times if 0.0 < x < t_end}) + [t_end]
    for target in targets:
        while t < target and not stationary:
            try:
                if frozen_dt is not None:
                    dt = min(frozen_dt, target - t)
                else:
                    dt = compute_dt(field, model, cfl, time=t, t_end=target)
            except DegenerateTimestepError:
                logger.debug("zero wave speed, field is stationary", t=t)
                stationary = True
                break
            except PositivityError as error:
                raise error.at(step, t) from None

            landing = dt >= target - t
            stage_time = t

            def stage_rhs(values: np.ndarray) -> np.ndarray:
                try:
                    return rhs(field.with_values(values), scheme, model, bc, flux, positivity).values
                except PositivityError as error:
                    raise error.at(step, stage_time) from None

            field = field.with_values(ssp_rk3_step(field.values, dt, stage_rhs))
            step += 1
            t = target if landing else t + dt

            if record_tv:
                result.tv_history.append((t, tv_of(field)))
            if step % PROGRESS_INTERVAL == 0:
                logger.debug("progress", step=step, t=t)

        if stationary:
            t = target
        if target != t_end:
            result.snapshots[target] = fill_ghosts(field, bc)

    try:
        check_positivity(field, model)
    except PositivityError as error:
        raise error.at(step, t) from None

    result.field = fill_ghosts(field, bc)
    result.time = t_end
    result.steps = step
    result.snapshots[t_end] = result.field
    result.wall_time = wall_clock.perf_counter() - started
    return result


def run(config: "RunConfig", logger: Optional[Logger] = None) -> RunResult:
    """
    Execute a configured run from exact initial cell averages to t_end.

    Args:
        config: Run configuration
        logger: Logger (defaults to DefaultLogger)

    Returns:
        RunResult; identical configs give bit-identical fields

    Raises:
        PositivityError: If density or pressure turns non-positive
    """
    logger = logger or DefaultLogger
    grid = config.grid()
    schemes = config.build_schemes(grid.dx)
    logger.debug("run started", preset=config.name, scheme=config.scheme, n=grid.n_cells)

    result = evolve(
        config.initial_field(grid),
        schemes,
        config.physics_model(),
        config.boundary_condition(grid),
        config.cfl,
        config.t_end,
        flux=config.flux_kind(),
        dt_mode=config.timestep_mode(),
        positivity=config.positivity_check(),
        record_tv=config.record_tv,
        output_times=config.output_times,
        logger=logger
    )

    logger.info(
        "run finished",
        preset=config.name,
        scheme=config.scheme,
        n=grid.n_cells,
        steps=result.steps,
        seconds=round(result.wall_time, 3)
    )
    return result
