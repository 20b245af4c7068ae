"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Run Configuration - Experiment description, scheme identifiers and the INI config file.

Scheme identifiers are stable strings with optional parameters:

    h3  ct  ct-tvd  ct-c[:r=1]  as[:q=1.4]  h3l  h3l-c[:alpha=...]
    minmod  vanleer  superbee
    weno-js[:eps=1e-6,p=2]  weno-yc[:C=20.67 | eps=2.25]  weno-pow:K=1,q=2

A SchemeSpec is the parsed, grid-independent identifier; build_scheme binds it to a
grid spacing, because the smoothness indicator and epsilon depend on dx.

Config file grammar (INI):

    [run]                 preset, name, model, speed, gamma, x_left, x_right, n, n_list,
                          cfl, t_end, boundary, flux, dt_mode, positivity, record_tv,
                          output_times, reference_cells
    [initial_condition]   name, offset
    [scheme]              id, schemes, alpha, alpha_components, eps, eps_policy, r, q, p,
                          smooth_switch
    [output]              error_range, errors, format, what, path

Lists are comma separated. A preset named in [run] is the starting point; every
other key overrides it.
"""

import configparser
import hashlib
import math
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from domo_fv.errors import ConfigError
from domo_fv.experiments.initial_conditions import (
    EULER_INITIAL_CONDITIONS,
    InitialCondition,
    initial_condition,
    initial_condition_names,
)
from domo_fv.numerics.grid import BoundaryCondition, BoundaryKind, CellField, Grid1D
from domo_fv.numerics.limiters import (
    LimiterKind,
    SmoothnessContext,
    phi_minmod,
    phi_superbee,
    phi_van_leer,
)
from domo_fv.numerics.physics import AdvectionModel, EulerModel, FluxKind, PhysicsModel
from domo_fv.numerics.reconstruction import LimiterScheme, SchemeSet
from domo_fv.numerics.solver import PositivityCheck, TimestepMode
from domo_fv.numerics.weno3 import DEFAULT_JS_EPSILON, EpsilonPolicy, WenoParams, WenoVariant

SMOOTH_SWITCH_WIDTH = 0.1

# family -> accepted parameters
SCHEME_FAMILIES: Dict[str, Tuple[str, ...]] = {
    "h3": (),
    "ct": (),
    "ct-tvd": (),
    "ct-c": ("r",),
    "as": ("q",),
    "h3l": (),
    "h3l-c": ("alpha",),
    "minmod": (),
    "vanleer": (),
    "superbee": (),
    "weno-js": ("eps", "p"),
    "weno-yc": ("C", "eps", "p"),
    "weno-pow": ("K", "q", "p"),
}

_FIXED_KINDS = {
    "h3": LimiterKind.PHI3_FULL,
    "ct": LimiterKind.CT,
    "ct-tvd": LimiterKind.CT_TVD,
    "h3l": LimiterKind.H3L,
}

_USER_PHI = {
    "minmod": phi_minmod,
    "vanleer": phi_van_leer,
    "superbee": phi_superbee,
}

MODELS = ("advection", "euler")
BOUNDARIES = ("periodic", "transmissive", "fixed")
ERROR_MODES = ("exact", "reference", "none")


# ============================================================================
# Scheme identifiers
# ============================================================================

@dataclass(frozen=True)
class SchemeSpec:
    """A parsed scheme identifier: family plus numeric parameters."""

    family: str
    params: Tuple[Tuple[str, float], ...] = ()

    def param(self, key: str, default: Optional[float] = None) -> Optional[float]:
        for name, value in self.params:
            if name == key:
                return value
        return default

    def has(self, key: str) -> bool:
        return any(name == key for name, _ in self.params)

    @property
    def id(self) -> str:
        """Canonical identifier text."""
        if not self.params:
            return self.family
        return self.family + ":" + ",".join(f"{key}={value:g}" for key, value in self.params)

    def __str__(self) -> str:
        return self.id


def parse_scheme_id(text: str) -> SchemeSpec:
    """
    Parse a scheme identifier such as "ct-c:r=10" or "weno-pow:K=1,q=2".

    Raises:
        ConfigError: On an unknown family, unknown parameter or bad number
    """
    head, _, tail = text.strip().partition(":")
    family = head.strip().lower()
    if family not in SCHEME_FAMILIES:
        raise ConfigError(f"unknown scheme '{text}'; known: {', '.join(SCHEME_FAMILIES)}")

    params: List[Tuple[str, float]] = []
    for item in filter(None, (part.strip() for part in tail.split(","))):
        key, equals, raw = item.partition("=")
        key = key.strip()
        if not equals or key not in SCHEME_FAMILIES[family]:
            raise ConfigError(
                f"scheme '{text}': unknown parameter '{item}' "
                f"(accepted: {', '.join(SCHEME_FAMILIES[family]) or 'none'})"
            )
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError(f"scheme '{text}': '{raw}' is not a number") from None
        if not (math.isfinite(value) and value > 0.0):
            raise ConfigError(f"scheme '{text}': {key} must be > 0")
        if key == "p" and value != int(value):
            raise ConfigError(f"scheme '{text}': p must be an integer")
        params.append((key, value))
    if family == "weno-yc" and {key for key, _ in params} >= {"C", "eps"}:
        raise ConfigError(f"scheme '{text}': give either C or eps, not both")
    return SchemeSpec(family, tuple(params))


def build_scheme(
    spec: SchemeSpec,
    dx: float,
    alpha: float = 0.0,
    eps_policy: Optional[EpsilonPolicy] = None,
    eps_override: Optional[float] = None,
    radius_r: float = 1.0,
    q: float = 1.4,
    weno_p: int = 2,
    transition: float = 0.0
) -> LimiterScheme:
    """
    Bind a scheme identifier to a grid spacing.

    Epsilon for WENO-YC comes, in order of precedence, from eps_override, the
    identifier's eps or C, then eps_policy.

    Args:
        spec: Parsed identifier
        dx: Grid spacing
        alpha: max |u0''| for H3L combined (identifier alpha wins)
        eps_policy: Epsilon rule for WENO-YC identifiers without their own
        eps_override: Fixed epsilon for every WENO identifier
        radius_r: r for CT combined (identifier r wins)
        q: Shape parameter for AS (identifier q wins)
        weno_p: WENO exponent p (identifier p wins)
        transition: Linear blend width for the combined limiters

    Returns:
        LimiterScheme

    Raises:
        ConfigError: If WENO-YC has no epsilon source or parameters are invalid
    """
    family = spec.family
    name = spec.id
    try:
        if family in _FIXED_KINDS:
            return LimiterScheme(name, kind=_FIXED_KINDS[family])
        if family in _USER_PHI:
            return LimiterScheme(name, kind=LimiterKind.USER_PHI, phi=_USER_PHI[family])
        if family == "as":
            return LimiterScheme(name, kind=LimiterKind.AS, q=float(spec.param("q", q)))
        if family == "ct-c":
            context = SmoothnessContext(
                alpha=alpha, dx=dx, radius_r=spec.param("r", radius_r), transition=transition
            )
            return LimiterScheme(name, kind=LimiterKind.CT_COMBINED, smoothness=context)
        if family == "h3l-c":
            context = SmoothnessContext(
                alpha=float(spec.param("alpha", alpha)), dx=dx, transition=transition
            )
            return LimiterScheme(name, kind=LimiterKind.H3L_COMBINED, smoothness=context)

        p = int(spec.param("p", weno_p))
        if family == "weno-js":
            epsilon = eps_override or spec.param("eps", DEFAULT_JS_EPSILON)
            return LimiterScheme(name, weno=WenoParams(WenoVariant.JS, float(epsilon), p))
        if family == "weno-pow":
            policy = EpsilonPolicy.power_law(spec.param("K", 1.0), spec.param("q", 2.0))
            epsilon = eps_override or policy.resolve(dx)
            return LimiterScheme(name, weno=WenoParams(WenoVariant.AMM, float(epsilon), p))

        if eps_override is not None:
            epsilon = eps_override
        elif spec.has("eps"):
            epsilon = spec.param("eps")
        elif spec.has("C"):
            epsilon = EpsilonPolicy.yc(spec.param("C")).resolve(dx)
        elif eps_policy is not None:
            epsilon = eps_policy.resolve(dx)
        else:
            raise ConfigError(
                f"scheme '{name}' needs an epsilon: use weno-yc:C=..., weno-yc:eps=..., "
                "--eps or an eps_policy"
            )
        return LimiterScheme(name, weno=WenoParams(WenoVariant.YC, float(epsilon), p))
    except ConfigError:
        raise
    except ValueError as error:
        raise ConfigError(f"scheme '{name}': {error}") from error


# ============================================================================
# RunConfig
# ============================================================================

@dataclass(frozen=True)
class RunConfig:
    """
    One experiment: physics, domain, initial data, resolution, time and scheme.

    Attributes:
        name: Preset name, or "custom"
        model: "advection" or "euler"
        speed: Advection speed a
        gamma: Ratio of specific heats
        ic: Initial condition name
        ic_offset: Constant added to scalar initial data
        x_left: Domain start (None takes the initial condition's)
        x_right: Domain end (None takes the initial condition's)
        n_cells: Cells of a single run
        n_list: Resolutions of a convergence sweep
        cfl: CFL number, in (0, 1]
        t_end: Final time
        boundary: "periodic", "transmissive" or "fixed" (held at the initial end states)
        scheme: Scheme identifier of a single run
        schemes: Scheme identifiers of a sweep
        alpha: max |u0''| outside the discontinuity set, for the combined limiter
        alpha_components: Per primitive variable alpha (Euler)
        eps_policy: Epsilon rule text for WENO-YC ("yc:C=20.67", "fixed:2.25", ...)
        eps_override: Fixed epsilon applied to every WENO scheme
        radius_r: r of the CT combined limiter
        as_q: q of the AS limiter
        weno_p: WENO exponent p
        smooth_switch: Blend the combined limiters linearly above eta = 1
        flux: "rusanov" or "hll"
        dt_mode: "instantaneous" or "frozen"
        error_range: Sub-interval for error norms
        error_mode: "exact" (advected initial data), "reference" (fine run) or "none"
        reference_cells: Cells of the reference run
        record_tv: Record total variation after every step
        output_times: Times at which to keep snapshots
        positivity: "cells" checks cell averages, "faces" also the reconstructed face states
    """

    name: str = "custom"
    model: str = "advection"
    speed: float = 1.0
    gamma: float = 1.4
    ic: str = "sine"
    ic_offset: float = 0.0
    x_left: Optional[float] = None
    x_right: Optional[float] = None
    n_cells: int = 100
    n_list: Tuple[int, ...] = ()
    cfl: float = 0.8
    t_end: float = 1.0
    boundary: str = "periodic"
    scheme: str = "h3"
    schemes: Tuple[str, ...] = ()
    alpha: float = 0.0
    alpha_components: Optional[Tuple[float, ...]] = None
    eps_policy: Optional[str] = None
    eps_override: Optional[float] = None
    radius_r: float = 1.0
    as_q: float = 1.4
    weno_p: int = 2
    smooth_switch: bool = False
    flux: str = "rusanov"
    dt_mode: str = "instantaneous"
    error_range: Optional[Tuple[float, float]] = None
    error_mode: str = "exact"
    reference_cells: Optional[int] = None
    record_tv: bool = True
    output_times: Tuple[float, ...] = ()
    positivity: str = "cells"

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ConfigError(f"model must be one of {MODELS}, got '{self.model}'")
        if self.ic not in initial_condition_names():
            raise ConfigError(f"unknown initial condition '{self.ic}'")
        if (self.ic in EULER_INITIAL_CONDITIONS) != (self.model == "euler"):
            raise ConfigError(f"initial condition '{self.ic}' does not fit model '{self.model}'")
        if self.model == "euler" and self.ic_offset != 0.0:
            raise ConfigError("ic_offset applies to advection only")
        if int(self.n_cells) != self.n_cells or self.n_cells < 2:
            raise ConfigError(f"n must be an integer >= 2, got {self.n_cells}")
        if any(int(n) != n or n < 2 for n in self.n_list):
            raise ConfigError(f"n_list entries must be integers >= 2, got {self.n_list}")
        if not (0.0 < self.cfl <= 1.0):
            raise ConfigError(f"cfl must lie in (0, 1], got {self.cfl}")
        if not self.gamma > 1.0:
            raise ConfigError(f"gamma must be > 1, got {self.gamma}")
        if not math.isfinite(self.speed):
            raise ConfigError(f"speed must be finite, got {self.speed}")
        if not (math.isfinite(self.t_end) and self.t_end > 0.0):
            raise ConfigError(f"t_end must be > 0, got {self.t_end}")
        x_left, x_right = self.domain()
        if not x_right > x_left:
            raise ConfigError(f"empty domain [{x_left}, {x_right}]")
        if self.boundary not in BOUNDARIES:
            raise ConfigError(f"boundary must be one of {BOUNDARIES}, got '{self.boundary}'")
        if self.flux not in {kind.value for kind in FluxKind}:
            raise ConfigError(f"flux must be rusanov or hll, got '{self.flux}'")
        if self.dt_mode not in {mode.value for mode in TimestepMode}:
            raise ConfigError(f"dt_mode must be instantaneous or frozen, got '{self.dt_mode}'")
        if self.positivity not in {check.value for check in PositivityCheck}:
            raise ConfigError(f"positivity must be cells or faces, got '{self.positivity}'")
        for scheme_id in (self.scheme,) + tuple(self.schemes):
            parse_scheme_id(scheme_id)
        if self.eps_policy is not None:
            EpsilonPolicy.parse(self.eps_policy)
        if self.eps_override is not None and not self.eps_override > 0.0:
            raise ConfigError(f"eps must be > 0, got {self.eps_override}")
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise ConfigError(f"alpha must be >= 0, got {self.alpha}")
        if self.alpha_components is not None:
            if self.model != "euler" or len(self.alpha_components) != 3:
                raise ConfigError("alpha_components needs three values and the Euler model")
            if any(not (math.isfinite(a) and a >= 0.0) for a in self.alpha_components):
                raise ConfigError(f"alpha_components must be >= 0, got {self.alpha_components}")
        if not self.radius_r > 0.0:
            raise ConfigError(f"r must be > 0, got {self.radius_r}")
        if not self.as_q > 0.0:
            raise ConfigError(f"q must be > 0, got {self.as_q}")
        if int(self.weno_p) != self.weno_p or self.weno_p < 1:
            raise ConfigError(f"p must be an integer >= 1, got {self.weno_p}")
        if self.error_range is not None and not (
            len(self.error_range) == 2 and self.error_range[0] < self.error_range[1]
        ):
            raise ConfigError(f"error_range must be (lo, hi) with lo < hi, got {self.error_range}")
        if self.error_mode not in ERROR_MODES:
            raise ConfigError(f"errors must be one of {ERROR_MODES}, got '{self.error_mode}'")
        if self.error_mode == "exact" and self.model != "advection":
            raise ConfigError("exact errors are available for advection only")
        if self.reference_cells is not None and self.reference_cells < 2:
            raise ConfigError(f"reference_cells must be >= 2, got {self.reference_cells}")
        if any(not (0.0 < t <= self.t_end) for t in self.output_times):
            raise ConfigError(f"output_times must lie in (0, t_end], got {self.output_times}")

    # ------------------------------------------------------------------------
    # Derived objects
    # ------------------------------------------------------------------------

    def initial_condition(self) -> InitialCondition:
        return initial_condition(self.ic, self.ic_offset)

    def domain(self) -> Tuple[float, float]:
        """Domain ends, falling back to those of the initial condition."""
        if self.x_left is not None and self.x_right is not None:
            return float(self.x_left), float(self.x_right)
        ic = initial_condition(self.ic)
        x_left = ic.x_left if self.x_left is None else self.x_left
        x_right = ic.x_right if self.x_right is None else self.x_right
        return float(x_left), float(x_right)

    def grid(self, n_cells: Optional[int] = None) -> Grid1D:
        x_left, x_right = self.domain()
        return Grid1D(int(n_cells or self.n_cells), x_left, x_right, ghost_layers=2)

    def physics_model(self) -> PhysicsModel:
        if self.model == "advection":
            return AdvectionModel(self.speed)
        return EulerModel(self.gamma)

    def boundary_condition(self, grid: Optional[Grid1D] = None) -> BoundaryCondition:
        """Ghost-cell rule; a fixed boundary holds the end cells of the initial averages on grid."""
        if self.boundary != BoundaryKind.FIXED_STATE.value:
            return BoundaryCondition.named(self.boundary)
        initial = self.initial_field(grid or self.grid()).interior()
        return BoundaryCondition.fixed(initial[:, 0], initial[:, -1])

    def flux_kind(self) -> FluxKind:
        return FluxKind(self.flux)

    def timestep_mode(self) -> TimestepMode:
        return TimestepMode(self.dt_mode)

    def positivity_check(self) -> PositivityCheck:
        return PositivityCheck(self.positivity)

    def scheme_spec(self) -> SchemeSpec:
        return parse_scheme_id(self.scheme)

    def epsilon_policy(self) -> Optional[EpsilonPolicy]:
        return EpsilonPolicy.parse(self.eps_policy) if self.eps_policy is not None else None

    def transition(self) -> float:
        return SMOOTH_SWITCH_WIDTH if self.smooth_switch else 0.0

    def build_schemes(self, dx: float) -> SchemeSet:
        """
        The grid-bound scheme of this run, one per component when alpha_components is set.

        Raises:
            ConfigError: If the scheme cannot be built
        """
        spec = self.scheme_spec()

        def bind(alpha: float) -> LimiterScheme:
            return build_scheme(
                spec,
                dx,
                alpha=alpha,
                eps_policy=self.epsilon_policy(),
                eps_override=self.eps_override,
                radius_r=self.radius_r,
                q=self.as_q,
                weno_p=self.weno_p,
                transition=self.transition(),
            )

        if self.alpha_components is not None:
            return [bind(alpha) for alpha in self.alpha_components]
        return bind(self.alpha)

    def initial_field(self, grid: Grid1D) -> CellField:
        """Exact initial cell averages (conservative variables)."""
        return self.initial_condition().cell_averages(grid, self.gamma)

    def exact_field(self, grid: Grid1D, time: Optional[float] = None) -> CellField:
        """Exact cell averages of the advected initial data at time (default t_end)."""
        if self.model != "advection":
            raise ConfigError("exact solutions are available for advection only")
        return self.initial_condition().exact_averages(
            grid, self.t_end if time is None else time, self.speed
        )

    def scheme_list(self) -> Tuple[str, ...]:
        return tuple(self.schemes) or (self.scheme,)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.n_list))) or (self.n_cells,)

    # ------------------------------------------------------------------------
    # Identity
    # ------------------------------------------------------------------------

    def with_overrides(self, **changes: Any) -> "RunConfig":
        """
        Copy with changed fields; None values are ignored.

        Raises:
            ConfigError: On unknown field names or invalid values
        """
        known = {f.name for f in fields(self)}
        unknown = set(changes) - known
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
        return replace(self, **{key: value for key, value in changes.items() if value is not None})

    def canonical(self) -> str:
        """Stable text rendering, one "key = value" line per field."""
        lines = []
        for f in fields(self):
            lines.append(f"{f.name} = {_render(getattr(self, f.name))}")
        return "\n".join(lines) + "\n"

    def config_hash(self) -> str:
        """SHA-256 of the canonical text."""
        return hashlib.sha256(self.canonical().encode("utf-8")).hexdigest()


def _render(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return ", ".join(_render(item) for item in value)
    return str(value)


# ============================================================================
# Config file
# ============================================================================

OUTPUT_KEYS = ("format", "what", "path")


def _floats(text: str) -> Tuple[float, ...]:
    return tuple(float(item) for item in text.split(",") if item.strip())


def _ints(text: str) -> Tuple[int, ...]:
    return tuple(int(item) for item in text.split(",") if item.strip())


def _strings(text: str) -> Tuple[str, ...]:
    return tuple(item.strip() for item in text.split(",") if item.strip())


def _boolean(text: str) -> bool:
    try:
        return configparser.ConfigParser.BOOLEAN_STATES[text.strip().lower()]
    except KeyError:
        raise ValueError(f"'{text}' is not a boolean") from None


def _pair(text: str) -> Tuple[float, float]:
    values = _floats(text)
    if len(values) != 2:
        raise ValueError(f"expected two numbers, got '{text}'")
    return values[0], values[1]


def _optional_int(text: str) -> Optional[int]:
    return None if text.strip() in ("", "-", "none") else int(text)


# (section, key) -> (RunConfig field, converter)
CONFIG_KEYS: Dict[Tuple[str, str], Tuple[str, Callable[[str], Any]]] = {
    ("run", "name"): ("name", str),
    ("run", "model"): ("model", str),
    ("run", "speed"): ("speed", float),
    ("run", "gamma"): ("gamma", float),
    ("run", "x_left"): ("x_left", float),
    ("run", "x_right"): ("x_right", float),
    ("run", "n"): ("n_cells", int),
    ("run", "n_list"): ("n_list", _ints),
    ("run", "cfl"): ("cfl", float),
    ("run", "t_end"): ("t_end", float),
    ("run", "boundary"): ("boundary", str),
    ("run", "flux"): ("flux", str),
    ("run", "dt_mode"): ("dt_mode", str),
    ("run", "positivity"): ("positivity", str),
    ("run", "record_tv"): ("record_tv", _boolean),
    ("run", "output_times"): ("output_times", _floats),
    ("run", "reference_cells"): ("reference_cells", _optional_int),
    ("initial_condition", "name"): ("ic", str),
    ("initial_condition", "offset"): ("ic_offset", float),
    ("scheme", "id"): ("scheme", str),
    ("scheme", "schemes"): ("schemes", _strings),
    ("scheme", "alpha"): ("alpha", float),
    ("scheme", "alpha_components"): ("alpha_components", _floats),
    ("scheme", "eps"): ("eps_override", float),
    ("scheme", "eps_policy"): ("eps_policy", str),
    ("scheme", "r"): ("radius_r", float),
    ("scheme", "q"): ("as_q", float),
    ("scheme", "p"): ("weno_p", int),
    ("scheme", "smooth_switch"): ("smooth_switch", _boolean),
    ("output", "error_range"): ("error_range", _pair),
    ("output", "errors"): ("error_mode", str),
}


def parse_config_text(
    text: str,
    source: str = "<config>",
    presets: Optional[Callable[[str], RunConfig]] = None
) -> Tuple[RunConfig, Dict[str, str]]:
    """
    Parse config file text.

    Args:
        text: INI text
        source: Name used in error messages
        presets: Preset lookup for the [run] preset key

    Returns:
        (RunConfig, output options from the [output] section)

    Raises:
        ConfigError: On syntax errors, unknown sections or keys, or invalid values
    """
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string(text, source=source)
    except configparser.Error as error:
        raise ConfigError(f"{source}: {error}") from error

    known_sections = {section for section, _ in CONFIG_KEYS}
    for section in parser.sections():
        if section not in known_sections:
            raise ConfigError(f"{source}: unknown section [{section}]")

    base = RunConfig()
    if parser.has_option("run", "preset"):
        if presets is None:
            from domo_fv.experiments.presets import preset as presets
        base = presets(parser.get("run", "preset").strip())

    changes: Dict[str, Any] = {}
    output: Dict[str, str] = {}
    for section in parser.sections():
        for key, raw in parser.items(section):
            if (section, key) == ("run", "preset"):
                continue
            if section == "output" and key in OUTPUT_KEYS:
                output[key] = raw.strip()
                continue
            if (section, key) not in CONFIG_KEYS:
                raise ConfigError(f"{source}: unknown key '{key}' in [{section}]")
            name, convert = CONFIG_KEYS[(section, key)]
            try:
                changes[name] = convert(raw.strip())
            except ValueError as error:
                raise ConfigError(f"{source}: [{section}] {key}: {error}") from error

    return replace(base, **changes), output


def load_config(
    path: Union[str, Path],
    presets: Optional[Callable[[str], RunConfig]] = None
) -> Tuple[RunConfig, Dict[str, str]]:
    """
    Read a config file.

    Args:
        path: INI file
        presets: Preset lookup for the [run] preset key

    Returns:
        (RunConfig, output options)

    Raises:
        ConfigError: If the file cannot be read or is invalid
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigError(f"cannot read config file {path}: {error}") from error
    return parse_config_text(text, str(path), presets)

