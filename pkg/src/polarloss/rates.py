"""Golden-rule polariton loss rates from three system-environment couplings.

* standard: ``i sqrt(kappa/2pi) (alpha^+ a - a^+ alpha)``, RWA taken in the
  photon basis before diagonalizing. Weight ``|w_j|^2``.
* electric: coupling through ``(a + a^+)`` with strength
  ``sqrt(kappa0 omega_c / omega)``. Weight ``(omega_c/omega_j) |w_j - y_j|^2``.
* magnetic: coupling through ``(a - a^+)`` with strength
  ``sqrt(kappa0 (omega_c/omega)^3)``. Weight ``(omega_c/omega_j)^3 |w_j + y_j|^2``.

All rates are evaluated at the polariton frequency (Markov pole
approximation). The electric and magnetic forms are identical for exact
eigenmodes because ``omega_c (w + y) = omega_j (w - y)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .mirror import MirrorModel, kappa0
from .model import PolaritonMode, SystemParams, diagonalize

METHODS = ("standard", "electric", "magnetic", "maxwell")
# Renormalized variant of the standard approach: label reserved, not computed.
RESERVED_METHODS = ("renormalized",)


def coupling_weight_electric(mode: PolaritonMode) -> float:
    return abs(mode.w - mode.y) ** 2


def coupling_weight_magnetic(mode: PolaritonMode) -> float:
    return abs(mode.w + mode.y) ** 2


def loss_rate_electric(mode: PolaritonMode, mirror: MirrorModel, params: SystemParams) -> float:
    ratio = params.omega_c / mode.omega
    return kappa0(mirror, params, mode.omega) * ratio * coupling_weight_electric(mode)


def loss_rate_magnetic(mode: PolaritonMode, mirror: MirrorModel, params: SystemParams) -> float:
    ratio = params.omega_c / mode.omega
    return kappa0(mirror, params, mode.omega) * ratio**3 * coupling_weight_magnetic(mode)


def loss_rate_standard(mode: PolaritonMode, mirror: MirrorModel, params: SystemParams) -> float:
    """Rate from the photon-basis RWA coupling, ``kappa0(omega_j) |w_j|^2``.

    Expanding ``a = sum_j (w_j* p_j - y_j p_j^+)`` and keeping only the
    rotating terms leaves the ``|w_j|^2`` weight.
    """
    return kappa0(mirror, params, mode.omega) * abs(mode.w) ** 2


@dataclass(frozen=True)
class BranchRates:
    branch: str
    omega: float
    standard: float
    electric: float
    magnetic: float
    maxwell: float | None = None
    maxwell_status: str = "not_run"

    @property
    def identity_residual(self) -> float:
        """Relative mismatch between the electric and magnetic forms."""
        if self.electric == 0:
            return abs(self.magnetic)
        return abs(self.electric - self.magnetic) / self.electric


@dataclass(frozen=True)
class LossRateReport:
    params: SystemParams
    mirror: MirrorModel
    lower: BranchRates
    upper: BranchRates
    modes: tuple[PolaritonMode, PolaritonMode]

    @property
    def branches(self) -> tuple[BranchRates, BranchRates]:
        return self.lower, self.upper

    @property
    def identity_residuals(self) -> tuple[float, float]:
        return self.lower.identity_residual, self.upper.identity_residual

    def with_maxwell(self, lower: tuple[float | None, str], upper: tuple[float | None, str]):
        """Copy with the boundary-condition rates and their status codes attached."""
        return replace(
            self,
            lower=replace(self.lower, maxwell=lower[0], maxwell_status=lower[1]),
            upper=replace(self.upper, maxwell=upper[0], maxwell_status=upper[1]),
        )


def branch_rates(mode: PolaritonMode, mirror: MirrorModel, params: SystemParams) -> BranchRates:
    return BranchRates(
        branch=mode.branch,
        omega=mode.omega,
        standard=loss_rate_standard(mode, mirror, params),
        electric=loss_rate_electric(mode, mirror, params),
        magnetic=loss_rate_magnetic(mode, mirror, params),
    )


def build_report(params: SystemParams, mirror: MirrorModel) -> LossRateReport:
    """Diagonalize and fill in the three Hamiltonian-based rates for both branches."""
    modes = diagonalize(params)
    lower, upper = (branch_rates(m, mirror, params) for m in modes)
    return LossRateReport(params, mirror, lower, upper, modes)
