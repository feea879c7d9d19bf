"""Complex eigenfrequencies of the open cavity from Maxwell's boundary conditions.

Geometry: thin mirror (delta layer of amplitude ``eta``) at ``z = 0``, vacuum
for ``z < 0``, a uniform Lorentz medium ``eps(omega)`` for ``0 < z < L`` and a
perfect mirror at ``z = L``. With time dependence ``exp(-i omega t)`` the field
inside is ``sin(k (L - z))``, outside it is an outgoing wave ``exp(-i q z)``
(``q = omega/c``, ``k = q sqrt(eps)``). Continuity of E and the delta-layer
jump ``E'(0+) - E'(0-) = -q^2 eta E(0)`` give the mode condition

    F(omega) = k cos(k L) - (i q + q^2 eta) sin(k L) = 0.

A lossless thin mirror also shifts the resonance through its reflection
phase. The back mirror is therefore placed at

    L = (m pi + arctan(1 / (q_c eta(omega_c)))) / q_c,    q_c = omega_c / c,

which keeps the empty-cavity resonance (radiation neglected) at exactly
``omega_c``. ``L`` tends to ``L_cav`` for a perfect front mirror. Loss rates
are ``kappa = -2 Im(omega)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    BasinEscape,
    NoConvergence,
    PoleAtMatterFrequency,
    PoleProximity,
    SolverError,
    UnphysicalRoot,
    ZeroFrequency,
)
from .mirror import MirrorModel, eta, kappa0
from .model import SystemParams, dielectric_function, polariton_frequencies_closed_form

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100
BASIN_RADIUS = 0.2
POLE_GUARD = 1e-6


@dataclass(frozen=True)
class ComplexModeResult:
    omega: complex
    residual: float
    iterations: int
    initial_guess: complex

    @property
    def kappa(self) -> float:
        return -2.0 * self.omega.imag


@dataclass(frozen=True)
class MaxwellBranch:
    """Outcome of the root search for one polariton branch.

    ``status`` is ``"ok"``, ``"uncoupled"`` (no photonic root exists, rate 0)
    or the status code of the :class:`SolverError` that stopped the search.
    """

    branch: str
    status: str
    result: ComplexModeResult | None = None
    message: str = ""

    @property
    def kappa(self) -> float | None:
        if self.result is not None:
            return self.result.kappa
        if self.status == "uncoupled":
            return 0.0
        return None


def back_mirror_position(params: SystemParams, mirror: MirrorModel) -> float:
    q_c = params.omega_c / params.c
    phase = math.atan(1.0 / (q_c * eta(mirror, params.omega_c)))
    return (params.mode_index * math.pi + phase) / q_c


def _terms(params, mirror, omega, branch, length):
    if abs(omega) <= 1e-300:
        raise ZeroFrequency("mode condition is undefined at omega = 0")
    q = omega / params.c
    k = branch * q * cmath.sqrt(dielectric_function(params, omega))
    A = 1j * q + q * q * eta(mirror, complex(omega))
    return k, A, k * cmath.cos(k * length) - A * cmath.sin(k * length)


def mode_condition(params: SystemParams, mirror: MirrorModel, omega: complex, branch: int = 1) -> complex:
    """Residual ``F(omega)`` of the boundary-value problem.

    ``branch=-1`` selects the other square root of ``eps``; ``F`` is odd in
    ``k`` so this only flips the sign.
    """
    length = back_mirror_position(params, mirror)
    return _terms(params, mirror, complex(omega), branch, length)[2]


def _muller_step(x0, x1, x2, f0, f1, f2):
    h1 = x1 - x0
    h2 = x2 - x1
    d1 = (f1 - f0) / h1
    d2 = (f2 - f1) / h2
    a = (d2 - d1) / (h2 + h1)
    b = a * h2 + d2
    root = cmath.sqrt(b * b - 4 * a * f2)
    den = b + root if abs(b + root) >= abs(b - root) else b - root
    if den == 0:
        # flat model; fall back to a secant-sized nudge
        return -f2 / d2 if d2 != 0 else h2
    return -2 * f2 / den


def find_complex_mode(
    params: SystemParams,
    mirror: MirrorModel,
    guess: complex,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    branch: int = 1,
) -> ComplexModeResult:
    """Muller iteration for a root of :func:`mode_condition` near ``guess``.

    Converged when ``|F| <= tol * (|k| + |i q + q^2 eta|)`` and the last step is
    below ``tol * |omega|``.

    Raises
    ------
    NoConvergence
        After ``max_iter`` iterations without meeting both criteria.
    PoleProximity
        If an iterate comes within ``1e-6 * omega_x`` of ``+/- omega_x``.
    BasinEscape
        If the root lies farther than ``0.2 * omega_x`` from ``guess``.
    UnphysicalRoot
        If the root is growing or overdamped.
    """
    guess = complex(guess)
    length = back_mirror_position(params, mirror)
    wx = params.omega_x

    def evaluate(omega):
        if params.g > 0 and min(abs(omega - wx), abs(omega + wx)) <= POLE_GUARD * wx:
            raise PoleProximity(f"iterate {omega!r} hit the matter pole")
        try:
            return _terms(params, mirror, omega, branch, length)
        except (PoleAtMatterFrequency, ZeroFrequency) as exc:
            raise PoleProximity(str(exc)) from exc

    h = 1e-4 * max(abs(guess), wx)
    xs = [guess - h, guess + h, guess]
    fs = [evaluate(x)[2] for x in xs]
    for iteration in range(1, max_iter + 1):
        step = _muller_step(*xs, *fs)
        omega = xs[2] + step
        if not (math.isfinite(omega.real) and math.isfinite(omega.imag)):
            raise NoConvergence(f"iteration diverged from {guess!r}")
        k, A, value = evaluate(omega)
        xs = [xs[1], xs[2], omega]
        fs = [fs[1], fs[2], value]
        if abs(value) <= tol * (abs(k) + abs(A)) and abs(step) <= tol * abs(omega):
            break
    else:
        raise NoConvergence(f"no root after {max_iter} iterations from {guess!r}")

    if abs(omega - guess) > BASIN_RADIUS * wx:
        raise BasinEscape(f"root {omega!r} is outside the basin of guess {guess!r}")
    if omega.imag > tol * abs(omega) or abs(omega.imag) >= 0.5 * omega.real:
        raise UnphysicalRoot(f"root {omega!r} is not an underdamped decaying mode")
    return ComplexModeResult(omega, abs(value), iteration, guess)


def loss_rates_maxwell(
    params: SystemParams,
    mirror: MirrorModel,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> tuple[MaxwellBranch, MaxwellBranch]:
    """Boundary-condition loss rates for the lower and upper polaritons.

    Each branch is seeded at its Hopfield frequency shifted by
    ``-i kappa0(omega_j) / 2``. Failures are reported per branch. With ``g = 0``
    only the photon branch has a root; the matter branch is ``"uncoupled"``.
    """
    frequencies = polariton_frequencies_closed_form(params)
    if params.g == 0:
        photon_is_lower = params.omega_c <= params.omega_x
        photonic = (photon_is_lower, not photon_is_lower)
    else:
        photonic = (True, True)

    outcomes = []
    for label, omega_j, has_root in zip("LU", frequencies, photonic):
        if not has_root:
            outcomes.append(MaxwellBranch(label, "uncoupled"))
            continue
        if params.g == 0:
            omega_j = params.omega_c
        seed = omega_j - 0.5j * kappa0(mirror, params, omega_j)
        try:
            result = find_complex_mode(params, mirror, seed, tol, max_iter)
        except SolverError as exc:
            outcomes.append(MaxwellBranch(label, exc.status, None, str(exc)))
        else:
            outcomes.append(MaxwellBranch(label, "ok", result))
    return outcomes[0], outcomes[1]
