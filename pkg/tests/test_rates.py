import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarloss import (
    MirrorModel,
    SystemParams,
    build_report,
    coupling_weight_electric,
    coupling_weight_magnetic,
    diagonalize,
    kappa0,
    loss_rate_electric,
    loss_rate_magnetic,
    loss_rate_standard,
)
from polarloss.model import PolaritonMode
from polarloss.rates import RESERVED_METHODS

# 1e-3 * omega_j * |w-y|^2 and 1e-3 * omega_j^2 * |w|^2, from tests/oracles.py
KAPPA_ELEC = (4.502481404895007e-4, 5.497518595104997e-4)
KAPPA_STD = (3.696739396931841e-4, 6.729195926051026e-4)


def mirror_for(params, p, kappa_ref=1e-3):
    return MirrorModel.from_bare_rate(kappa_ref, params, exponent=p)


def test_weights_decoupled_photon():
    photon, _ = diagonalize(SystemParams.from_frequency(1.0, 0.8, 0.0))
    assert coupling_weight_electric(photon) == 1
    assert coupling_weight_magnetic(photon) == 1


def test_weights_anchor(resonant):
    lower, upper = diagonalize(resonant)
    assert coupling_weight_electric(lower) == pytest.approx(0.497518595105, rel=1e-10)
    assert coupling_weight_magnetic(lower) == pytest.approx(0.407468967007, rel=1e-10)
    assert coupling_weight_magnetic(upper) == pytest.approx(0.607468967007, rel=1e-10)
    for mode in (lower, upper):
        ratio = resonant.omega_c / mode.omega
        assert coupling_weight_electric(mode) == pytest.approx(ratio**2 * coupling_weight_magnetic(mode), rel=1e-10)


@pytest.mark.parametrize("rate", [loss_rate_electric, loss_rate_magnetic, loss_rate_standard])
def test_decoupled_photon_rate_is_bare(rate, drude):
    params = SystemParams.from_frequency(1.0, 0.8, 0.0)
    photon, matter = diagonalize(params)
    assert rate(photon, drude, params) == pytest.approx(kappa0(drude, params, 0.8), rel=1e-14)
    assert rate(matter, drude, params) == 0


def test_anchor_rates(resonant, drude):
    modes = diagonalize(resonant)
    for mode, k_elec, k_std in zip(modes, KAPPA_ELEC, KAPPA_STD):
        assert loss_rate_electric(mode, drude, resonant) == pytest.approx(k_elec, rel=1e-10)
        assert loss_rate_magnetic(mode, drude, resonant) == pytest.approx(k_elec, rel=1e-10)
        assert loss_rate_standard(mode, drude, resonant) == pytest.approx(k_std, rel=1e-10)
    lower, upper = modes
    assert loss_rate_electric(lower, drude, resonant) == pytest.approx(4.503e-4, rel=1e-3)
    assert loss_rate_electric(upper, drude, resonant) == pytest.approx(5.497e-4, rel=1e-3)
    assert loss_rate_standard(lower, drude, resonant) == pytest.approx(3.697e-4, rel=1e-3)
    assert loss_rate_standard(upper, drude, resonant) == pytest.approx(6.729e-4, rel=1e-3)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.5, 2.0), st.one_of(st.just(0.0), st.floats(1e-6, 1.0)), st.sampled_from([0.0, 1.0, 2.0]))
def test_electric_equals_magnetic(ratio_c, g, p):
    params = SystemParams.from_frequency(1.0, ratio_c, g)
    report = build_report(params, mirror_for(params, p))
    for branch in report.branches:
        assert branch.identity_residual <= 1e-8
        assert min(branch.standard, branch.electric, branch.magnetic) >= 0


@settings(max_examples=50, deadline=None)
@given(st.floats(0.5, 2.0), st.floats(1e-3, 1.0))
def test_drude_sum_rule(ratio_c, g):
    params = SystemParams.from_frequency(1.0, ratio_c, g)
    mirror = mirror_for(params, 2.0)
    report = build_report(params, mirror)
    total = report.lower.electric + report.upper.electric
    assert total == pytest.approx(kappa0(mirror, params, params.omega_c), rel=1e-8)


@pytest.mark.parametrize("p", [0.0, 1.0, 2.0])
def test_weak_coupling_limit(p):
    # detuned so that the branches are distinctly photon-like and matter-like
    params = SystemParams.from_frequency(1.0, 1.2, 1e-4)
    mirror = mirror_for(params, p)
    report = build_report(params, mirror)
    photon, matter = report.upper, report.lower
    bare = kappa0(mirror, params, photon.omega)
    for value in (photon.standard, photon.electric, photon.magnetic):
        assert value == pytest.approx(bare, rel=1e-6)
    for value in (matter.standard, matter.electric, matter.magnetic):
        assert value <= 1e-6 * kappa0(mirror, params, params.omega_c)


@pytest.mark.parametrize("phase", [0.4, 2.2, -1.1])
def test_rates_phase_invariant(resonant, drude, phase):
    u = complex(math.cos(phase), math.sin(phase))
    for mode in diagonalize(resonant):
        rotated = PolaritonMode(mode.branch, mode.omega, mode.w * u, mode.x * u, mode.y * u, mode.z * u)
        for rate in (loss_rate_electric, loss_rate_magnetic, loss_rate_standard):
            assert rate(rotated, drude, resonant) == pytest.approx(rate(mode, drude, resonant), rel=1e-14)


def test_report_shape(resonant, drude):
    report = build_report(resonant, drude)
    assert [b.branch for b in report.branches] == ["L", "U"]
    assert report.lower.maxwell is None and report.lower.maxwell_status == "not_run"
    filled = report.with_maxwell((4.5e-4, "ok"), (None, "basin_escape"))
    assert filled.lower.maxwell == 4.5e-4
    assert filled.upper.maxwell_status == "basin_escape"
    assert report.lower.maxwell is None
    assert max(report.identity_residuals) <= 1e-8
    assert RESERVED_METHODS == ("renormalized",)
