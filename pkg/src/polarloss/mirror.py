"""Thin-mirror models and the bare cavity loss rate.

The front mirror is an infinitely thin layer with susceptibility amplitude
``eta(omega)`` (a length). A power law ``eta ~ omega**-p`` covers the Drude
metal (``p = 2``), the ``p = 1`` simplification and a flat mirror (``p = 0``).
The bare escape rate of cavity photons through such a mirror is

    kappa0(omega) = 2 c^3 / (omega^2 eta(omega)^2 L_cav)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ZeroFrequency
from .model import SystemParams

ZERO_FREQUENCY = 1e-300


@dataclass(frozen=True)
class MirrorModel:
    """Power-law thin mirror ``eta(omega) = eta_ref * (omega_ref / omega)**exponent``."""

    eta_ref: float
    omega_ref: float = 1.0
    exponent: float = 2.0
    kind: str = "power_law"

    def __post_init__(self):
        if self.kind != "power_law":
            raise ValueError(f"unsupported mirror kind {self.kind!r}")
        if not (math.isfinite(self.eta_ref) and self.eta_ref > 0):
            raise ValueError(f"eta_ref must be positive, got {self.eta_ref!r}")
        if not (math.isfinite(self.omega_ref) and self.omega_ref > 0):
            raise ValueError(f"omega_ref must be positive, got {self.omega_ref!r}")
        if not (math.isfinite(self.exponent) and self.exponent >= 0):
            raise ValueError(f"exponent must be >= 0, got {self.exponent!r}")

    @classmethod
    def from_bare_rate(cls, kappa0_ref, params: SystemParams, omega_ref=None, exponent=2.0):
        """Mirror whose bare loss rate at ``omega_ref`` equals ``kappa0_ref``.

        ``omega_ref`` defaults to the matter frequency.
        """
        if omega_ref is None:
            omega_ref = params.omega_x
        if not kappa0_ref > 0:
            raise ValueError(f"kappa0_ref must be positive, got {kappa0_ref!r}")
        eta_ref = math.sqrt(2 * params.c**3 / (omega_ref**2 * kappa0_ref * params.L_cav))
        return cls(eta_ref, omega_ref, exponent)

    def scaled(self, factor: float) -> MirrorModel:
        """Same frequency dependence with ``eta`` multiplied by ``factor``."""
        return MirrorModel(self.eta_ref * factor, self.omega_ref, self.exponent, self.kind)

    def to_spec(self) -> str:
        return (
            f"{self.kind}:eta_ref={self.eta_ref!r},"
            f"omega_ref={self.omega_ref!r},p={self.exponent!r}"
        )

    @classmethod
    def from_spec(cls, text: str) -> MirrorModel:
        """Parse ``power_law:eta_ref=<f>,omega_ref=<f>,p=<f>``."""
        kind, sep, body = text.strip().partition(":")
        if not sep:
            raise ValueError(f"mirror spec {text!r} lacks a '<kind>:' prefix")
        if kind != "power_law":
            raise ValueError(f"unsupported mirror kind {kind!r}")
        fields = {}
        for item in body.split(","):
            key, eq, value = item.strip().partition("=")
            if not eq:
                raise ValueError(f"malformed mirror parameter {item!r}")
            if key not in ("eta_ref", "omega_ref", "p") or key in fields:
                raise ValueError(f"unexpected mirror parameter {key!r}")
            fields[key] = float(value)
        if "eta_ref" not in fields:
            raise ValueError("mirror spec requires eta_ref")
        return cls(fields["eta_ref"], fields.get("omega_ref", 1.0), fields.get("p", 2.0), kind)


def eta(model: MirrorModel, omega):
    """Mirror amplitude at (possibly complex) ``omega``, principal branch.

    Real ``omega`` gives a real float.
    """
    if abs(omega) <= ZERO_FREQUENCY:
        raise ZeroFrequency("eta is singular at omega = 0")
    if isinstance(omega, complex):
        if model.exponent == 0:
            return complex(model.eta_ref)
        return model.eta_ref * cmath.exp(model.exponent * cmath.log(model.omega_ref / omega))
    return model.eta_ref * (model.omega_ref / omega) ** model.exponent


def kappa0(model: MirrorModel, params: SystemParams, omega: float) -> float:
    """Bare cavity loss rate ``2 c^3 / (omega^2 eta(omega)^2 L_cav)``."""
    eta_value = eta(model, omega)
    return 2 * params.c**3 / (omega**2 * eta_value**2 * params.L_cav)
