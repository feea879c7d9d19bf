"""Polariton loss rates in the ultrastrong light-matter coupling regime."""

from .errors import (
    BasinEscape,
    DegenerateSpectrum,
    NoConvergence,
    ParseError,
    PoleAtMatterFrequency,
    PoleProximity,
    SolverError,
    UnstableParameters,
    ValidationError,
    ZeroFrequency,
)
from .maxwell import ComplexModeResult, find_complex_mode, loss_rates_maxwell, mode_condition
from .mirror import MirrorModel, eta, kappa0
from .model import (
    PolaritonMode,
    SystemParams,
    bogoliubov_matrix,
    diagonalize,
    dielectric_function,
    polariton_frequencies_closed_form,
)
from .rates import (
    LossRateReport,
    build_report,
    coupling_weight_electric,
    coupling_weight_magnetic,
    loss_rate_electric,
    loss_rate_magnetic,
    loss_rate_standard,
)

__version__ = "0.1.0"
