"""Exception hierarchy for polarloss."""

from __future__ import annotations


class PolarlossError(Exception):
    """Base class for every error raised by this package."""


class ModelError(PolarlossError, ValueError):
    """Invalid or unsupported closed-system parameters."""


class DegenerateSpectrum(ModelError):
    pass


class UnstableParameters(ModelError):
    pass


class PoleAtMatterFrequency(PolarlossError, ValueError):
    pass


class ZeroFrequency(PolarlossError, ValueError):
    pass


class SolverError(PolarlossError):
    """Failure of the complex root search. ``status`` is the short code used in output rows."""

    status = "solver_error"


class NoConvergence(SolverError):
    status = "no_convergence"


class BasinEscape(SolverError):
    status = "basin_escape"


class PoleProximity(SolverError):
    status = "pole_proximity"


class UnphysicalRoot(SolverError):
    status = "unphysical_root"


class ConfigError(PolarlossError):
    pass


class ParseError(ConfigError):
    def __init__(self, line: int, key: str, message: str = "unknown key"):
        self.line = line
        self.key = key
        super().__init__(f"line {line}: {message}: {key!r}")


class ValidationError(ConfigError):
    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"{field}: {reason}")


class EmitError(PolarlossError, OSError):
    """Output destination could not be written."""
