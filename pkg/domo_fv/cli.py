"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Command line front end.

    domo-fv run          one run; writes the solution, its TV history or its errors
    domo-fv convergence  scheme x resolution sweep; writes the error table
    domo-fv surface      H(delta_minus, delta_plus) over a rectangle
    domo-fv section      H(delta_minus) for fixed delta_plus values
    domo-fv presets      list the preset catalog or print its checksum
    domo-fv reference    compute (or load from cache) a fine reference solution

Data goes to standard output (or --output), logs to standard error.

Exit codes: 0 success, 1 other failure, 2 configuration error, 3 positivity abort
(the abort diagnostic is printed as JSON on standard error).
"""

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from domo_fv.actors.logger import ConsoleLogger, Logger, LogLevel
from domo_fv.errors import ConfigError, DomoFVError, PositivityError
from domo_fv.experiments.config import BOUNDARIES, RunConfig, build_scheme, load_config, parse_scheme_id
from domo_fv.experiments.presets import catalog_checksum, preset, preset_names
from domo_fv.experiments.sweep import STATUS_FAILED, measure, sweep
from domo_fv.numerics.diagnostics import ErrorReport
from domo_fv.numerics.grid import CellField
from domo_fv.numerics.limiters import SlopePair
from domo_fv.numerics.physics import PRIMITIVE_NAMES, conservative_to_primitive
from domo_fv.numerics.reconstruction import LimiterScheme
from domo_fv.numerics.reference import (
    ReferenceSolution,
    load_or_make_reference,
    make_reference,
    provenance,
)
from domo_fv.numerics.solver import run
from domo_fv.numerics.weno3 import EpsilonPolicy

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_POSITIVITY = 3

ERROR_COLUMNS = ("scheme", "n", "dx", "l1", "linf", "order_l1", "order_linf", "tv")
DEFAULT_SECTION_DELTAS = (2.0, 1.0, 0.5, 0.1)


# ============================================================================
# Output
# ============================================================================

def format_number(value: Any) -> str:
    """Decimal text that round-trips doubles (17 significant digits)."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.17g" % float(value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, (float, np.floating)):
        return None if not math.isfinite(value) else float(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def render_table(columns: Sequence[str], rows: Iterable[Sequence[Any]], fmt: str) -> str:
    """
    Render rows as CSV (header line first) or as a JSON array of records.

    Args:
        columns: Column names
        rows: Row values in column order
        fmt: "csv" or "json"

    Returns:
        The rendered text
    """
    if fmt == "json":
        records = [
            {column: _json_value(value) for column, value in zip(columns, row)} for row in rows
        ]
        return json.dumps(records, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(value) for value in row])
    return buffer.getvalue()


def emit(text: str, path: Optional[str]) -> None:
    """Write text to a file, or to standard output when path is None or "-"."""
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def solution_table(field: CellField, model: str, gamma: float) -> Tuple[Tuple[str, ...], List[List[Any]]]:
    """Columns and rows of a solution: x,u or x,rho,v,p (primitive variables)."""
    x = field.grid.centers()
    if model == "euler":
        w = conservative_to_primitive(field.interior(), gamma)
        return ("x",) + PRIMITIVE_NAMES, [[x[i], w[0, i], w[1, i], w[2, i]] for i in range(x.size)]
    u = field.component(0)
    return ("x", "u"), [[x[i], u[i]] for i in range(x.size)]


def error_rows(reports: Iterable[ErrorReport]) -> List[List[Any]]:
    return [
        [r.scheme, r.n_cells, r.dx, r.l1, r.linf, r.order_l1, r.order_linf, r.tv] for r in reports
    ]


# ============================================================================
# Configuration from arguments
# ============================================================================

def _float_list(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(item) for item in text.split(",") if item.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of numbers")


def _int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(item) for item in text.split(",") if item.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers")


def _string_list(text: str) -> Tuple[str, ...]:
    return tuple(item.strip() for item in text.split(",") if item.strip())


def resolve_config(args: argparse.Namespace) -> Tuple[RunConfig, Dict[str, str]]:
    """
    Build the run configuration: config file or preset, then flag overrides.

    Returns:
        (RunConfig, [output] options of the config file)

    Raises:
        ConfigError: On invalid files, presets or values
    """
    output: Dict[str, str] = {}
    if args.config is not None:
        config, output = load_config(args.config)
    elif args.preset is not None:
        config = preset(args.preset)
    else:
        config = RunConfig()

    config = config.with_overrides(
        scheme=args.scheme,
        schemes=getattr(args, "schemes", None),
        n_cells=args.n,
        n_list=args.n_list,
        cfl=args.cfl,
        t_end=args.t_end,
        alpha=args.alpha,
        eps_override=args.eps,
        eps_policy=args.eps_policy,
        error_range=tuple(args.error_range) if args.error_range else None,
        flux=args.flux,
        dt_mode=args.dt_mode,
        positivity=args.positivity,
        boundary=args.boundary,
        smooth_switch=True if args.smooth_switch else None,
    )
    return config, output


def _load_reference(args: argparse.Namespace, config: RunConfig) -> Optional[ReferenceSolution]:
    if args.reference is None:
        return None
    return ReferenceSolution.load(args.reference, provenance(config))


# ============================================================================
# Commands
# ============================================================================

def cmd_run(args: argparse.Namespace, logger: Logger) -> int:
    config, output = resolve_config(args)
    what = args.out or output.get("what", "solution")
    fmt = args.format or output.get("format", "csv")
    path = args.output or output.get("path")
    _check_choice("out", what, ("solution", "tv", "errors"))
    _check_choice("format", fmt, ("csv", "json"))

    if what == "tv" and not config.record_tv:
        config = config.with_overrides(record_tv=True)
    result = run(config, logger)

    if what == "solution":
        columns, rows = solution_table(result.field, config.model, config.gamma)
    elif what == "tv":
        columns, rows = ("t", "tv"), [[t, tv] for t, tv in result.tv_history]
    else:
        reference = _load_reference(args, config)
        if reference is None and config.error_mode == "reference":
            if args.cache_dir is not None:
                reference = load_or_make_reference(config, args.cache_dir, logger)
            else:
                reference = make_reference(config, logger)
        columns, rows = ERROR_COLUMNS, error_rows([measure(config, result, reference)])
    emit(render_table(columns, rows, fmt), path)
    return EXIT_OK


def cmd_convergence(args: argparse.Namespace, logger: Logger) -> int:
    config, output = resolve_config(args)
    if args.scheme is not None and args.schemes is None:
        config = config.with_overrides(schemes=(args.scheme,))
    fmt = args.format or output.get("format", "csv")
    path = args.output or output.get("path")
    _check_choice("format", fmt, ("csv", "json"))

    result = sweep(
        config,
        logger=logger,
        workers=args.workers,
        cache_dir=args.cache_dir,
        reference=_load_reference(args, config),
    )
    emit(render_table(ERROR_COLUMNS, error_rows(result.table()), fmt), path)

    status = EXIT_OK
    for row in result.failures():
        if row.status != STATUS_FAILED or row.failure is None:
            continue
        diagnostic = dict(row.failure, scheme=row.scheme, n=row.n_cells)
        print(json.dumps(diagnostic), file=sys.stderr)
        code = EXIT_POSITIVITY if row.failure.get("error") == "positivity" else EXIT_CONFIG
        status = status or code
    return status


def _bind_scheme(args: argparse.Namespace) -> LimiterScheme:
    policy = EpsilonPolicy.parse(args.eps_policy) if args.eps_policy is not None else None
    return build_scheme(
        parse_scheme_id(args.scheme),
        args.dx,
        alpha=args.alpha,
        eps_policy=policy,
        eps_override=args.eps,
        radius_r=args.r,
        transition=0.1 if args.smooth_switch else 0.0,
    )


def _limited(scheme: LimiterScheme, delta_minus: np.ndarray, delta_plus: np.ndarray) -> np.ndarray:
    values = scheme.limited_slope(SlopePair(delta_minus, delta_plus))
    return np.broadcast_to(np.asarray(values, dtype=float), delta_minus.shape)


def cmd_surface(args: argparse.Namespace, logger: Logger) -> int:
    scheme = _bind_scheme(args)
    lo, hi = args.range
    if not hi > lo or args.points < 2:
        raise ConfigError("surface needs lo < hi and at least 2 points")
    axis = np.linspace(lo, hi, args.points)
    dm, dp = np.meshgrid(axis, axis, indexing="ij")
    h = _limited(scheme, dm.ravel(), dp.ravel())
    rows = [[a, b, c] for a, b, c in zip(dm.ravel(), dp.ravel(), h)]
    logger.debug("surface evaluated", scheme=scheme.name, points=len(rows))
    emit(render_table(("delta_minus", "delta_plus", "H"), rows, args.format or "csv"), args.output)
    return EXIT_OK


def cmd_section(args: argparse.Namespace, logger: Logger) -> int:
    scheme = _bind_scheme(args)
    lo, hi = args.range
    if not hi > lo or args.points < 2:
        raise ConfigError("section needs lo < hi and at least 2 points")
    dm = np.linspace(lo, hi, args.points)
    deltas = args.delta_plus or DEFAULT_SECTION_DELTAS

    rows: List[List[Any]] = []
    for delta_plus in deltas:
        h = _limited(scheme, dm, np.full_like(dm, delta_plus))
        if len(deltas) == 1:
            rows.extend([a, b] for a, b in zip(dm, h))
        else:
            rows.extend([delta_plus, a, b] for a, b in zip(dm, h))
    columns = ("delta_minus", "H") if len(deltas) == 1 else ("delta_plus", "delta_minus", "H")
    emit(render_table(columns, rows, args.format or "csv"), args.output)
    return EXIT_OK


def cmd_presets(args: argparse.Namespace, logger: Logger) -> int:
    if args.checksum:
        emit(catalog_checksum() + "\n", args.output)
    elif args.show is not None:
        emit(preset(args.show).canonical(), args.output)
    else:
        emit("".join(f"{name}\n" for name in preset_names()), args.output)
    return EXIT_OK


def cmd_reference(args: argparse.Namespace, logger: Logger) -> int:
    config, output = resolve_config(args)
    if args.reference_cells is not None:
        config = config.with_overrides(reference_cells=args.reference_cells)

    if args.cache_dir is not None:
        reference = load_or_make_reference(config, args.cache_dir, logger)
    else:
        reference = make_reference(config, logger)

    if args.save is not None:
        reference.save(args.save)
        logger.info("reference saved", path=args.save)
    columns, rows = solution_table(reference.as_field(), config.model, config.gamma)
    emit(render_table(columns, rows, args.format or output.get("format", "csv")), args.output)
    return EXIT_OK


def _check_choice(name: str, value: str, choices: Sequence[str]) -> None:
    if value not in choices:
        raise ConfigError(f"{name} must be one of {', '.join(choices)}, got '{value}'")


# ============================================================================
# Parser
# ============================================================================

def _add_logging(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--verbose", "-v", action="store_true", help="Log debug messages")
    group.add_argument("--quiet", "-q", action="store_true", help="Log errors only")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default=None, help="Output format (default csv)")
    parser.add_argument("--output", "-o", default=None, metavar="PATH", help="Output file (default stdout)")


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--preset", default=None, help=f"Preset name ({', '.join(preset_names())})")
    source.add_argument("--config", default=None, metavar="PATH", help="INI config file")
    parser.add_argument("--scheme", default=None, help="Scheme identifier, e.g. h3l-c or weno-yc:C=20.67")
    parser.add_argument("--n", type=int, default=None, help="Number of cells")
    parser.add_argument("--n-list", type=_int_list, default=None, help="Comma separated cell counts")
    parser.add_argument("--cfl", type=float, default=None, help="CFL number in (0, 1]")
    parser.add_argument("--t-end", type=float, default=None, help="Final time")
    parser.add_argument("--alpha", type=float, default=None, help="max |u0''| for combined limiters")
    parser.add_argument("--eps", type=float, default=None, help="Fixed WENO epsilon")
    parser.add_argument("--eps-policy", default=None, help="WENO-YC epsilon rule: fixed:E, yc:C=..., pow:K=..,q=..")
    parser.add_argument("--error-range", type=float, nargs=2, default=None, metavar=("LO", "HI"),
                        help="Sub-interval for error norms")
    parser.add_argument("--reference", default=None, metavar="PATH", help="Reference solution file")
    parser.add_argument("--flux", choices=("rusanov", "hll"), default=None, help="Euler numerical flux")
    parser.add_argument("--dt-mode", choices=("instantaneous", "frozen"), default=None, help="Time step rule")
    parser.add_argument("--positivity", choices=("cells", "faces"), default=None,
                        help="Euler states that must stay positive (faces adds reconstructed face states)")
    parser.add_argument("--boundary", choices=BOUNDARIES, default=None,
                        help="Boundary condition; fixed holds the initial end states")
    parser.add_argument("--smooth-switch", action="store_true", help="Blend combined limiters linearly")
    parser.add_argument("--cache-dir", default=None, metavar="DIR", help="Reference solution cache")


def _add_limiter_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", required=True, help="Scheme identifier")
    parser.add_argument("--dx", type=float, default=1.0, help="Grid spacing used by eta and epsilon")
    parser.add_argument("--alpha", type=float, default=0.0, help="max |u0''| for h3l-c")
    parser.add_argument("--r", type=float, default=1.0, help="Radius r for ct-c")
    parser.add_argument("--eps", type=float, default=None, help="Fixed WENO epsilon")
    parser.add_argument("--eps-policy", default=None, help="WENO-YC epsilon rule")
    parser.add_argument("--smooth-switch", action="store_true", help="Blend combined limiters linearly")
    parser.add_argument("--range", type=float, nargs=2, default=(-2.0, 2.0), metavar=("LO", "HI"),
                        help="delta range (default -2 2)")
    parser.add_argument("--points", type=int, default=201, help="Samples per axis (default 201)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domo-fv",
        description="Third-order finite-volume limiters and WENO3 for 1D conservation laws",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="Run one configuration")
    _add_run_options(run_parser)
    run_parser.add_argument("--out", choices=("solution", "tv", "errors"), default=None,
                            help="What to write (default solution)")
    _add_output(run_parser)
    _add_logging(run_parser)
    run_parser.set_defaults(handler=cmd_run)

    convergence = commands.add_parser("convergence", help="Error table over schemes and resolutions")
    _add_run_options(convergence)
    convergence.add_argument("--schemes", type=_string_list, default=None,
                             help="Comma separated scheme identifiers")
    convergence.add_argument("--workers", type=int, default=1, help="Solver threads (default 1)")
    _add_output(convergence)
    _add_logging(convergence)
    convergence.set_defaults(handler=cmd_convergence)

    surface = commands.add_parser("surface", help="Limiter surface H(delta_minus, delta_plus)")
    _add_limiter_options(surface)
    _add_output(surface)
    _add_logging(surface)
    surface.set_defaults(handler=cmd_surface)

    section = commands.add_parser("section", help="Limiter sections for fixed delta_plus")
    _add_limiter_options(section)
    section.add_argument("--delta-plus", type=_float_list, default=None,
                         help="Comma separated delta_plus values (default 2,1,0.5,0.1)")
    _add_output(section)
    _add_logging(section)
    section.set_defaults(handler=cmd_section)

    presets = commands.add_parser("presets", help="List presets")
    presets.add_argument("--checksum", action="store_true", help="Print the catalog checksum")
    presets.add_argument("--show", default=None, metavar="NAME", help="Print one preset")
    presets.add_argument("--output", "-o", default=None, metavar="PATH", help="Output file")
    _add_logging(presets)
    presets.set_defaults(handler=cmd_presets)

    reference = commands.add_parser("reference", help="Compute a fine reference solution")
    _add_run_options(reference)
    reference.add_argument("--reference-cells", type=int, default=None, help="Cells of the reference run")
    reference.add_argument("--save", default=None, metavar="PATH", help="Write the reference file")
    _add_output(reference)
    _add_logging(reference)
    reference.set_defaults(handler=cmd_reference)

    return parser


def make_logger(args: argparse.Namespace) -> ConsoleLogger:
    if getattr(args, "verbose", False):
        level = LogLevel.DEBUG
    elif getattr(args, "quiet", False):
        level = LogLevel.ERROR
    else:
        level = LogLevel.INFO
    return ConsoleLogger("domo-fv", level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        Exit code
    """
    args = build_parser().parse_args(argv)
    logger = make_logger(args)
    try:
        return args.handler(args, logger)
    except PositivityError as error:
        logger.error("run aborted", variable=error.variable, cell=error.cell, step=error.step, time=error.time)
        print(json.dumps(error.to_dict()), file=sys.stderr)
        return EXIT_POSITIVITY
    except ConfigError as error:
        logger.error(f"configuration error: {error}")
        return EXIT_CONFIG
    except DomoFVError as error:
        logger.error(f"{type(error).__name__}: {error}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
