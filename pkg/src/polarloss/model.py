"""Closed-system Hopfield model in the Coulomb gauge.

The cavity mode ``a`` (frequency ``omega_c``) couples to a bosonic matter
excitation ``b`` (frequency ``omega_x``) through

    H/hbar = omega_c a^+a + omega_x b^+b + i g (a^+ + a)(b - b^+) + D (a + a^+)^2

with the diamagnetic coefficient ``D = g**2 / omega_x``. Polariton operators
are written ``p_j = w a + x b + y a^+ + z b^+``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum, ModelError, PoleAtMatterFrequency, UnstableParameters

GEOMETRY_RTOL = 1e-12
DEGENERACY_RTOL = 1e-12
IMAG_RTOL = 1e-10
POLE_RTOL = 1e-14


@dataclass(frozen=True)
class SystemParams:
    """Parameters of the closed cavity + matter system.

    Parameters
    ----------
    omega_x:
        Matter excitation frequency.
    omega_c:
        Bare frequency of the retained cavity mode. Must equal
        ``mode_index * pi * c / L_cav``.
    g:
        Light-matter coupling strength.
    L_cav:
        Cavity length.
    c:
        Speed of light.
    mode_index:
        Index ``m`` of the retained cavity mode.

    Use :meth:`from_frequency` or :meth:`from_geometry` to derive one of
    ``omega_c``/``L_cav`` from the other.
    """

    omega_x: float
    omega_c: float
    g: float
    L_cav: float
    c: float = 1.0
    mode_index: int = 1

    def __post_init__(self):
        for name in ("omega_x", "omega_c", "L_cav", "c"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ModelError(f"{name} must be positive and finite, got {value!r}")
        if not (math.isfinite(self.g) and self.g >= 0):
            raise ModelError(f"g must be non-negative and finite, got {self.g!r}")
        if int(self.mode_index) != self.mode_index or self.mode_index < 1:
            raise ModelError(f"mode_index must be a positive integer, got {self.mode_index!r}")
        expected = self.mode_index * math.pi * self.c / self.L_cav
        if abs(self.omega_c - expected) > GEOMETRY_RTOL * self.omega_c:
            raise ModelError(
                f"omega_c={self.omega_c!r} inconsistent with cavity geometry "
                f"(mode_index*pi*c/L_cav = {expected!r})"
            )

    @classmethod
    def from_frequency(cls, omega_x, omega_c, g, c=1.0, mode_index=1):
        L_cav = mode_index * math.pi * c / omega_c
        return cls(omega_x, omega_c, g, L_cav, c, mode_index)

    @classmethod
    def from_geometry(cls, omega_x, g, L_cav=math.pi, c=1.0, mode_index=1):
        omega_c = mode_index * math.pi * c / L_cav
        return cls(omega_x, omega_c, g, L_cav, c, mode_index)

    @property
    def diamagnetic(self) -> float:
        """Coefficient ``D = g**2 / omega_x`` of the ``(a + a^+)^2`` term."""
        return self.g**2 / self.omega_x

    def with_coupling(self, g: float) -> SystemParams:
        return SystemParams(self.omega_x, self.omega_c, g, self.L_cav, self.c, self.mode_index)


@dataclass(frozen=True)
class PolaritonMode:
    """One positive-frequency eigenmode ``p = w a + x b + y a^+ + z b^+``."""

    branch: str
    omega: float
    w: complex
    x: complex
    y: complex
    z: complex

    @property
    def norm(self) -> float:
        """Symplectic norm ``|w|^2 + |x|^2 - |y|^2 - |z|^2``."""
        return abs(self.w) ** 2 + abs(self.x) ** 2 - abs(self.y) ** 2 - abs(self.z) ** 2

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=complex)


def bogoliubov_matrix(params: SystemParams) -> np.ndarray:
    """Dynamical matrix ``M`` with ``M @ (w, x, y, z) = omega * (w, x, y, z)``.

    The eigenproblem encodes ``[p, H] = hbar * omega * p``; eigenvalues come in
    ``+/-`` pairs.
    """
    wc, wx, g = params.omega_c, params.omega_x, params.g
    D = params.diamagnetic
    ig = 1j * g
    return np.array(
        [
            [wc + 2 * D, -ig, -2 * D, -ig],
            [ig, wx, -ig, 0.0],
            [2 * D, -ig, -(wc + 2 * D), -ig],
            [-ig, 0.0, ig, -wx],
        ],
        dtype=complex,
    )


def polariton_frequencies_closed_form(params: SystemParams) -> tuple[float, float]:
    """Positive roots of ``(w^2 - wc^2)(w^2 - wx^2) = 4 g^2 (wc/wx) w^2``.

    Returns ``(omega_L, omega_U)``. The lower root is taken from the product
    rule ``omega_L * omega_U = omega_c * omega_x`` to avoid cancellation.
    """
    wc, wx, g = params.omega_c, params.omega_x, params.g
    b = wc**2 + wx**2 + 4 * g**2 * wc / wx
    disc = b * b - 4 * (wc * wx) ** 2
    # disc >= 0 analytically: b >= wc^2 + wx^2 >= 2 wc wx
    u_upper = 0.5 * (b + math.sqrt(max(disc, 0.0)))
    omega_U = math.sqrt(u_upper)
    omega_L = wc * wx / omega_U
    return omega_L, omega_U


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    # w real and >= 0; fall back to x when the mode has no photon part
    pivot = vec[0] if abs(vec[0]) > 1e-300 else vec[1]
    return vec * np.exp(-1j * np.angle(pivot))


def _decoupled_modes(params: SystemParams) -> tuple[PolaritonMode, PolaritonMode]:
    photon = (params.omega_c, (1.0, 0.0, 0.0, 0.0))
    matter = (params.omega_x, (0.0, 1.0, 0.0, 0.0))
    lower, upper = (photon, matter) if params.omega_c <= params.omega_x else (matter, photon)
    return (
        PolaritonMode("L", lower[0], *map(complex, lower[1])),
        PolaritonMode("U", upper[0], *map(complex, upper[1])),
    )


def _mode_from_frequency(params: SystemParams, omega: float, label: str) -> PolaritonMode:
    """Eigenvector for an exact eigenfrequency by back-substitution.

    With ``d = w - y`` the eigen-equations give ``w + y = omega d / omega_c``,
    ``x = i g d / (omega - omega_x)`` and ``z = -i g d / (omega + omega_x)``.
    ``omega - omega_x`` is taken from the characteristic equation whenever it
    is the smaller detuning, so matter-like modes keep full relative accuracy
    in their small photon components.
    """
    wc, wx, g = params.omega_c, params.omega_x, params.g
    dc = omega**2 - wc**2
    dx = omega**2 - wx**2
    if abs(dc) >= abs(dx):
        dx = 4 * g**2 * (wc / wx) * omega**2 / dc
    detuning = dx / (omega + wx)
    zeta = -g / (omega + wx)
    if g <= abs(detuning):
        rho = g / detuning
        d = 1.0 / math.sqrt(omega / wc + rho**2 - zeta**2)
        x = 1j * rho * d
    else:
        t = detuning / g
        amp = 1.0 / math.sqrt(t * t * omega / wc + 1.0 - (zeta * t) ** 2)
        amp = math.copysign(amp, t) if t != 0 else amp
        d = amp * t
        x = 1j * amp
    s = omega * d / wc
    vec = _fix_phase(np.array([(s + d) / 2, x, (s - d) / 2, 1j * zeta * d], dtype=complex))
    w, x, y, z = (complex(v) for v in vec)
    return PolaritonMode(label, float(omega), complex(w.real), x, y, z)


def diagonalize(params: SystemParams) -> tuple[PolaritonMode, PolaritonMode]:
    """Lower and upper polariton modes of the closed system.

    Eigenfrequencies come from a numerical diagonalization of the 4x4
    dynamical matrix, keeping the positive-frequency pair. Coefficients are
    normalized to unit symplectic norm with ``w`` real and non-negative.

    At ``g == 0`` the bare photon and matter modes are returned directly; the
    photon mode is labelled ``L`` when ``omega_c <= omega_x``.

    Raises
    ------
    UnstableParameters
        If an eigenvalue has a non-negligible imaginary part or the positive
        pair is not positive.
    DegenerateSpectrum
        If the two positive eigenfrequencies coincide.
    """
    if params.g == 0:
        return _decoupled_modes(params)

    evals = np.linalg.eig(bogoliubov_matrix(params))[0]
    if np.max(np.abs(evals.imag)) > IMAG_RTOL * params.omega_x:
        raise UnstableParameters(f"complex eigenfrequencies {evals!r}")
    omegas = np.sort(evals.real)[2:]
    if omegas[0] <= 0:
        raise UnstableParameters(f"non-positive eigenfrequency {omegas[0]!r}")
    if abs(omegas[1] - omegas[0]) <= DEGENERACY_RTOL * params.omega_x:
        raise DegenerateSpectrum(f"omega_L == omega_U == {omegas[0]!r}")
    lower, upper = (_mode_from_frequency(params, float(w), label) for w, label in zip(omegas, "LU"))
    return lower, upper


def plasma_frequency_squared(params: SystemParams) -> float:
    return 4 * params.g**2 * params.omega_c / params.omega_x


def dielectric_function(params: SystemParams, omega: complex) -> complex:
    """Lorentz permittivity ``1 + Op^2 / (omega_x^2 - omega^2)`` equivalent to the Hopfield model.

    ``Op^2 = 4 g^2 omega_c / omega_x``, so that ``omega^2 eps(omega) = omega_c^2``
    exactly at the polariton frequencies. Without coupling there is no pole
    and ``eps`` is identically 1.
    """
    if params.g == 0:
        return 1.0 + 0j
    denom = params.omega_x**2 - omega**2
    if abs(denom) <= POLE_RTOL * params.omega_x**2:
        raise PoleAtMatterFrequency(f"omega={omega!r} sits on the matter resonance")
    return 1 + plasma_frequency_squared(params) / denom
