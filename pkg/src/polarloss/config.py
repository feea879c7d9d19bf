"""Sweep configuration files.

The format is a small sectioned key-value file::

    # comment
    [system]
    units = natural        ; natural | si
    omega_x = 1.0
    omega_c = 1.0          ; or L_cav = 3.14159..., derived from the other
    mode_index = 1
    c = 1.0

    [mirror]
    model = power_law:eta_ref=25.23,omega_ref=1.0,p=2
    # alternatively: kappa0_ref = 1e-3, omega_ref = 1.0, p = 2

    [sweep]
    variable = g_over_omega_x
    min = 0.0
    max = 1.0
    points = 21
    scale = linear         ; linear | log

    [solver]
    tol = 1e-12
    max_iter = 100

    [output]
    format = csv           ; csv | json
    path = results.csv

Unknown sections and keys are rejected with the offending line number.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import ParseError, ValidationError
from .mirror import MirrorModel
from .model import SystemParams

SPEED_OF_LIGHT_SI = 299_792_458.0
MAX_COUPLING = 1.5

SCHEMA = {
    "system": {"units", "omega_x", "omega_c", "L_cav", "mode_index", "c"},
    "mirror": {"model", "eta_ref", "kappa0_ref", "omega_ref", "p"},
    "sweep": {"variable", "min", "max", "points", "scale"},
    "solver": {"tol", "max_iter"},
    "output": {"format", "path"},
}
REQUIRED = {"system": {"omega_x"}, "sweep": {"min", "max"}}


@dataclass(frozen=True)
class SystemBlock:
    omega_x: float
    omega_c: float
    L_cav: float
    c: float = 1.0
    mode_index: int = 1
    units: str = "natural"


@dataclass(frozen=True)
class MirrorBlock:
    """Mirror given either by ``eta_ref`` or by the bare loss rate at ``omega_ref``."""

    exponent: float = 2.0
    omega_ref: float | None = None
    eta_ref: float | None = None
    kappa0_ref: float | None = None


@dataclass(frozen=True)
class SweepBlock:
    min: float
    max: float
    points: int = 11
    scale: str = "linear"
    variable: str = "g_over_omega_x"

    def grid(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.points)
        return np.linspace(self.min, self.max, self.points)


@dataclass(frozen=True)
class SolverBlock:
    tol: float = 1e-12
    max_iter: int = 100


@dataclass(frozen=True)
class OutputBlock:
    format: str = "csv"
    path: str | None = None


@dataclass(frozen=True)
class SweepConfig:
    system: SystemBlock
    mirror: MirrorBlock
    sweep: SweepBlock
    solver: SolverBlock = field(default_factory=SolverBlock)
    output: OutputBlock = field(default_factory=OutputBlock)

    @property
    def frequency_unit(self) -> float:
        """Size of the internal frequency unit (``omega_x``) in config units."""
        return self.system.omega_x

    @property
    def length_unit(self) -> float:
        return self.system.c / self.system.omega_x

    def natural_params(self, g_over_omega_x: float) -> SystemParams:
        """Closed-system parameters in internal units (``omega_x = c = 1``)."""
        s = self.system
        return SystemParams(
            omega_x=1.0,
            omega_c=s.omega_c / s.omega_x,
            g=float(g_over_omega_x),
            L_cav=s.L_cav / self.length_unit,
            c=1.0,
            mode_index=s.mode_index,
        )

    def natural_mirror(self) -> MirrorModel:
        m = self.mirror
        omega_ref = (m.omega_ref if m.omega_ref is not None else self.system.omega_x) / self.frequency_unit
        if m.eta_ref is not None:
            return MirrorModel(m.eta_ref / self.length_unit, omega_ref, m.exponent)
        # a bare rate is a frequency
        return MirrorModel.from_bare_rate(
            m.kappa0_ref / self.frequency_unit, self.natural_params(0.0), omega_ref, m.exponent
        )

    def to_dict(self) -> dict:
        return asdict(self)


def _read_sections(text: str) -> dict[str, dict[str, tuple[int, str]]]:
    sections: dict[str, dict[str, tuple[int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split(";", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(lineno, line, "malformed section header")
            current = line[1:-1].strip()
            if current not in SCHEMA:
                raise ParseError(lineno, current, "unknown section")
            if current in sections:
                raise ParseError(lineno, current, "duplicate section")
            sections[current] = {}
            continue
        key, eq, value = (part.strip() for part in line.partition("="))
        if not eq or not key:
            raise ParseError(lineno, line, "expected 'key = value'")
        if current is None:
            raise ParseError(lineno, key, "key outside of any section")
        if key not in SCHEMA[current]:
            raise ParseError(lineno, key, f"unknown key in [{current}]")
        if key in sections[current]:
            raise ParseError(lineno, key, "duplicate key")
        sections[current][key] = (lineno, value)
    return sections


def _number(block, name, key, kind=float):
    lineno, text = block[key]
    try:
        value = kind(text)
    except ValueError:
        raise ParseError(lineno, f"{name}.{key}", f"not a valid {kind.__name__}: {text!r}") from None
    if kind is float and not math.isfinite(value):
        raise ValidationError(f"{name}.{key}", "must be finite")
    return value


def _positive(value, where):
    if not value > 0:
        raise ValidationError(where, f"must be positive, got {value!r}")
    return value


def _system(block) -> SystemBlock:
    units = block.get("units", (0, "natural"))[1]
    if units not in ("natural", "si"):
        raise ValidationError("system.units", f"expected natural or si, got {units!r}")
    c_default = 1.0 if units == "natural" else SPEED_OF_LIGHT_SI
    c = _positive(_number(block, "system", "c") if "c" in block else c_default, "system.c")
    omega_x = _positive(_number(block, "system", "omega_x"), "system.omega_x")
    mode_index = _number(block, "system", "mode_index", int) if "mode_index" in block else 1
    if mode_index < 1:
        raise ValidationError("system.mode_index", "must be >= 1")

    omega_c = _number(block, "system", "omega_c") if "omega_c" in block else None
    L_cav = _number(block, "system", "L_cav") if "L_cav" in block else None
    if omega_c is not None:
        _positive(omega_c, "system.omega_c")
        derived = mode_index * math.pi * c / omega_c
        if L_cav is not None and abs(L_cav - derived) > 1e-12 * derived:
            raise ValidationError("system", "omega_c and L_cav disagree for the given mode_index and c")
        L_cav = derived
    else:
        if L_cav is None:
            if units == "si":
                raise ValidationError("system", "si units require omega_c or L_cav")
            L_cav = math.pi
        _positive(L_cav, "system.L_cav")
        omega_c = mode_index * math.pi * c / L_cav
    return SystemBlock(omega_x, omega_c, L_cav, c, mode_index, units)


def _mirror(block) -> MirrorBlock:
    if "model" in block:
        extra = set(block) - {"model"}
        if extra:
            raise ValidationError("mirror", f"'model' cannot be combined with {sorted(extra)}")
        lineno, text = block["model"]
        try:
            model = MirrorModel.from_spec(text)
        except ValueError as exc:
            raise ValidationError("mirror.model", str(exc)) from None
        return MirrorBlock(model.exponent, model.omega_ref, eta_ref=model.eta_ref)

    has_eta, has_rate = "eta_ref" in block, "kappa0_ref" in block
    if has_eta == has_rate:
        raise ValidationError("mirror", "give exactly one of model, eta_ref, kappa0_ref")
    exponent = _number(block, "mirror", "p") if "p" in block else 2.0
    if exponent < 0:
        raise ValidationError("mirror.p", "must be >= 0")
    omega_ref = _positive(_number(block, "mirror", "omega_ref"), "mirror.omega_ref") if "omega_ref" in block else None
    if has_eta:
        return MirrorBlock(exponent, omega_ref, eta_ref=_positive(_number(block, "mirror", "eta_ref"), "mirror.eta_ref"))
    return MirrorBlock(exponent, omega_ref, kappa0_ref=_positive(_number(block, "mirror", "kappa0_ref"), "mirror.kappa0_ref"))


def _sweep(block) -> SweepBlock:
    variable = block.get("variable", (0, "g_over_omega_x"))[1]
    if variable != "g_over_omega_x":
        raise ValidationError("sweep.variable", f"only g_over_omega_x is supported, got {variable!r}")
    lo, hi = _number(block, "sweep", "min"), _number(block, "sweep", "max")
    points = _number(block, "sweep", "points", int) if "points" in block else SweepBlock.points
    scale = block.get("scale", (0, "linear"))[1]
    if lo < 0:
        raise ValidationError("sweep.min", "must be >= 0")
    if hi > MAX_COUPLING:
        raise ValidationError("sweep.max", f"must be <= {MAX_COUPLING}")
    if lo > hi:
        raise ValidationError("sweep", f"min ({lo}) exceeds max ({hi})")
    if points < 2:
        raise ValidationError("sweep.points", "must be >= 2")
    if scale not in ("linear", "log"):
        raise ValidationError("sweep.scale", f"expected linear or log, got {scale!r}")
    if scale == "log" and lo <= 0:
        raise ValidationError("sweep.min", "log scale needs min > 0")
    return SweepBlock(lo, hi, points, scale, variable)


def _solver(block) -> SolverBlock:
    tol = _positive(_number(block, "solver", "tol"), "solver.tol") if "tol" in block else SolverBlock.tol
    max_iter = _number(block, "solver", "max_iter", int) if "max_iter" in block else SolverBlock.max_iter
    if max_iter < 1:
        raise ValidationError("solver.max_iter", "must be >= 1")
    return SolverBlock(tol, max_iter)


def _output(block) -> OutputBlock:
    fmt = block.get("format", (0, "csv"))[1]
    if fmt not in ("csv", "json"):
        raise ValidationError("output.format", f"expected csv or json, got {fmt!r}")
    path = block.get("path", (0, None))[1] or None
    return OutputBlock(fmt, path)


def parse_config(text: str) -> SweepConfig:
    """Parse and validate a configuration, applying defaults.

    Raises
    ------
    ParseError
        Syntax problems, unknown sections or keys, unparsable numbers.
    ValidationError
        Missing or inconsistent values.
    """
    sections = _read_sections(text)
    for name, keys in REQUIRED.items():
        missing = keys - set(sections.get(name, {}))
        if missing:
            raise ValidationError(name, f"missing required key(s) {sorted(missing)}")
    if "mirror" not in sections:
        raise ValidationError("mirror", "missing [mirror] section")

    system = _system(sections["system"])
    config = SweepConfig(
        system=system,
        mirror=_mirror(sections["mirror"]),
        sweep=_sweep(sections["sweep"]),
        solver=_solver(sections.get("solver", {})),
        output=_output(sections.get("output", {})),
    )
    try:
        config.natural_mirror()
        config.natural_params(config.sweep.max)
    except ValueError as exc:
        raise ValidationError("system", str(exc)) from None
    return config
