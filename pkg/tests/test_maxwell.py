import math

import pytest

from oracles import contour_root, empty_cavity_rate_asymptotic, mode_condition_reference
from polarloss import (
    BasinEscape,
    MirrorModel,
    NoConvergence,
    PoleProximity,
    SystemParams,
    build_report,
    eta,
    find_complex_mode,
    kappa0,
    loss_rates_maxwell,
    mode_condition,
)
from polarloss.maxwell import back_mirror_position


def test_back_mirror_position(resonant, drude):
    expected = math.pi + math.atan(1 / eta(drude, 1.0))
    assert back_mirror_position(resonant, drude) == pytest.approx(expected, rel=1e-15)
    assert back_mirror_position(resonant, drude.scaled(1e9)) == pytest.approx(math.pi, rel=1e-9)


@pytest.mark.parametrize("omega", [0.9 - 0.001j, 1.3 - 0.02j, 0.4 + 0.0j])
def test_mode_condition_transcription(resonant, drude, omega):
    length = back_mirror_position(resonant, drude)
    ref = mode_condition_reference(omega, 1.0, 1.0, 0.1, lambda w: eta(drude, w), length)
    assert mode_condition(resonant, drude, omega) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("omega", [0.9 - 0.001j, 1.2 - 0.3j, 0.95 + 0.01j])
def test_mode_condition_odd_in_k(resonant, drude, omega):
    plus = mode_condition(resonant, drude, omega, branch=1)
    minus = mode_condition(resonant, drude, omega, branch=-1)
    assert minus == pytest.approx(-plus, rel=1e-14)


def test_perfect_mirror_closed_cavity():
    for m in (1, 2, 3):
        params = SystemParams.from_geometry(1.0, 0.0, L_cav=math.pi, mode_index=m)
        mirror = MirrorModel(1e9, 1.0, 2.0)
        result = find_complex_mode(params, mirror, m * (1 + 1e-3))
        assert result.omega.real == pytest.approx(m, rel=1e-10)
        assert abs(result.omega.imag) < 1e-15


def test_empty_cavity_residual(resonant, drude):
    params = resonant.with_coupling(0.0)
    result = find_complex_mode(params, drude, 1 - 0.0005j)
    k = abs(result.omega)
    assert abs(mode_condition(params, drude, result.omega)) <= 1e-12 * k
    assert result.residual <= 1e-12 * k
    assert result.iterations <= 10


def test_root_agrees_with_contour_oracle(resonant, drude):
    def f(w):
        return mode_condition(resonant, drude, w)

    result = find_complex_mode(resonant, drude, 0.905 - 0.0002j)
    count, location = contour_root(f, 0.905 - 0.0002j, 0.01)
    assert count == pytest.approx(1.0, abs=1e-6)
    assert location == pytest.approx(result.omega, abs=1e-9)


def test_empty_cavity_recovers_bare_rate(resonant, drude):
    params = resonant.with_coupling(0.0)
    result = find_complex_mode(params, drude, 1 - 0.5j * kappa0(drude, params, 1.0))
    bare = empty_cavity_rate_asymptotic(eta(drude, 1.0), 1.0, math.pi)
    assert result.kappa == pytest.approx(1.0e-3, rel=5e-3)
    assert result.kappa == pytest.approx(bare, rel=5e-3)


@pytest.mark.parametrize("p", [0.0, 1.0, 2.0])
def test_empty_cavity_deviation_shrinks_with_eta(p):
    params = SystemParams.from_geometry(1.0, 0.0)
    mirror = MirrorModel.from_bare_rate(1e-3, params, exponent=p)
    devs = []
    for scale in (1, 10):
        m = mirror.scaled(scale)
        result = find_complex_mode(params, m, 1 - 0.5j * kappa0(m, params, 1.0))
        devs.append(abs(result.kappa / kappa0(m, params, 1.0) - 1))
    assert devs[1] * 5 <= devs[0]


def test_anchor_lower_polariton(resonant, drude):
    lower, _ = loss_rates_maxwell(resonant, drude)
    assert lower.status == "ok"
    assert lower.kappa == pytest.approx(4.50e-4, rel=0.05)
    assert lower.kappa == pytest.approx(build_report(resonant, drude).lower.electric, rel=0.05)
    assert lower.result.residual <= 1e-12 * abs(lower.result.omega)


def test_guess_in_gap_is_refused(resonant, drude):
    with pytest.raises((BasinEscape, NoConvergence)):
        find_complex_mode(resonant, drude, 0.5 - 0j)


def test_iteration_budget(resonant, drude):
    with pytest.raises(NoConvergence):
        find_complex_mode(resonant, drude, 0.95 - 0.01j, max_iter=1)


def test_pole_proximity(resonant, drude):
    with pytest.raises(PoleProximity):
        find_complex_mode(resonant, drude, 1.0 + 2e-7)


@pytest.mark.parametrize("g", [0.1, 0.5, 1.0])
def test_branch_independence(g, drude):
    params = SystemParams.from_geometry(1.0, g)
    for guess in (b.result.omega for b in loss_rates_maxwell(params, drude)):
        plus = find_complex_mode(params, drude, guess * (1 + 1e-5), branch=1)
        minus = find_complex_mode(params, drude, guess * (1 + 1e-5), branch=-1)
        assert abs(plus.omega - minus.omega) <= 1e-12 * abs(plus.omega)


def test_decoupled_has_single_photonic_root(resonant, drude):
    lower, upper = loss_rates_maxwell(resonant.with_coupling(0.0), drude)
    assert lower.status == "ok"
    assert lower.kappa == pytest.approx(kappa0(drude, resonant, 1.0), rel=5e-3)
    assert upper.status == "uncoupled" and upper.kappa == 0.0 and upper.result is None


def test_rates_at_anchor_both_branches(resonant, drude):
    lower, upper = loss_rates_maxwell(resonant, drude)
    assert (lower.kappa, upper.kappa) == pytest.approx((4.50e-4, 5.50e-4), rel=0.05)
    for branch in (lower, upper):
        r = branch.result
        assert r.omega.imag <= 0 and abs(r.omega.imag) < 0.5 * r.omega.real
        assert r.kappa == -2 * r.omega.imag


@pytest.mark.parametrize("p", [1.0, 2.0])
def test_deviation_from_eq5_shrinks_with_eta(resonant, p):
    mirror = MirrorModel.from_bare_rate(1e-3, resonant, exponent=p)
    devs = []
    for scale in (1, 10):
        m = mirror.scaled(scale)
        report = build_report(resonant, m)
        mbc = loss_rates_maxwell(resonant, m)
        devs.append(max(abs(b.electric / r.kappa - 1) for b, r in zip(report.branches, mbc)))
    assert devs[1] * 5 <= devs[0]


@pytest.mark.parametrize("g", [0.1, 0.6])
def test_perfect_mirror_limit(g, drude):
    params = SystemParams.from_geometry(1.0, g)
    report = build_report(params, drude)
    errors = {"L": [], "U": []}
    ratios = {"L": [], "U": []}
    for n in range(4):
        mirror = drude.scaled(10.0**n)
        rates = build_report(params, mirror)
        for branch, rate in zip(loss_rates_maxwell(params, mirror), rates.branches):
            errors[branch.branch].append(abs(branch.result.omega.real - rate.omega))
            ratios[branch.branch].append(branch.kappa / rate.electric)
    for label, hopfield in zip("LU", report.branches):
        errs = errors[label][1:]
        assert all(b < a for a, b in zip(errs, errs[1:]))
        assert errs[-1] < 1e-6 * hopfield.omega
        assert abs(ratios[label][-1] - 1) < 1e-4
        assert abs(ratios[label][-1] - 1) < abs(ratios[label][0] - 1)
