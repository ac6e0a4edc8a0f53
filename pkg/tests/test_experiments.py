import math

import numpy as np
import pytest

from qdiscord.correlations import concurrence
from qdiscord.errors import ParamOutOfRange
from qdiscord.experiments import (
    FIGURES,
    ChannelConfig,
    ConfigKind,
    StateFamily,
    discord_positivity_scan,
    esd_gamma,
    evaluate,
    evolve,
    sweep,
)
from qdiscord.states import phi_state, werner
from util import concurrence_eigvals

DEPH_W = ChannelConfig(ConfigKind.DEPHASING, StateFamily.WERNER)
GAD1 = ChannelConfig(ConfigKind.GAD, StateFamily.PHI, q=1.0)
GAD23 = ChannelConfig(ConfigKind.GAD, StateFamily.PHI, q=2 / 3)
DEPOL = ChannelConfig(ConfigKind.DEPOLARIZING, StateFamily.PHI)
DEPH_GAD = ChannelConfig(ConfigKind.DEPHASING_PLUS_GAD, StateFamily.PHI, q=1.0)


def dense_scan_esd(config, alpha, n=20001):
    """First gamma on a uniform grid where the eigvals-route concurrence vanishes."""
    for g in np.linspace(0, 1, n):
        if concurrence_eigvals(evolve(config, alpha, g)) < 1e-10:
            return g
    return None


def test_config_from_strings():
    cfg = ChannelConfig("dephasing+gad", "phi", q=0.5)
    assert cfg.kind is ConfigKind.DEPHASING_PLUS_GAD and cfg.state_family is StateFamily.PHI
    with pytest.raises(ParamOutOfRange):
        ChannelConfig("gad", "phi", q=2.0)
    with pytest.raises(ValueError):
        ChannelConfig("amplitude", "phi")


@pytest.mark.parametrize("alpha", [0.0, 0.4, 1.0])
def test_evolve_zero_gamma(alpha):
    assert np.allclose(evolve(DEPH_W, alpha, 0.0), werner(alpha), atol=1e-15)
    assert np.allclose(evolve(GAD23, alpha, 0.0), phi_state(alpha), atol=1e-15)


@pytest.mark.parametrize("alpha", [0.0, 0.3, 1.0])
def test_evolve_asymptotes(alpha):
    assert np.allclose(evolve(DEPOL, alpha, 1.0), np.eye(4) / 4, atol=1e-15)
    assert np.allclose(evolve(GAD1, alpha, 1.0), np.diag([1.0, 0, 0, 0]), atol=1e-15)


def test_sweep_shape_and_order():
    grid = sweep(DEPH_W, 5, 5)
    assert len(grid.rows) == 25
    assert [(r.alpha, r.gamma) for r in grid.rows] == [(a, g) for a in grid.alphas for g in grid.gammas]
    corner = next(r for r in grid.rows if r.alpha == 1.0 and r.gamma == 0.0)
    assert abs(corner.report.concurrence - 1) < 1e-12
    assert abs(corner.report.discord - 1) < 1e-9
    for r in grid.rows:
        assert r.report.discord == r.report.mutual_info - r.report.classical_corr


def test_sweep_rejects_tiny_grid():
    with pytest.raises(ValueError):
        sweep(DEPH_W, 1, 5)


def test_sweep_parallel_matches_serial():
    serial = sweep(GAD23, 3, 4)
    parallel = sweep(GAD23, 3, 4, workers=2)
    assert serial.rows == parallel.rows


def test_gad_23_sudden_death_every_row():
    grid = sweep(GAD23, 11, 21)
    for a in grid.alphas[1:-1]:
        row = [r for r in grid.rows if r.alpha == a]
        last_alive = max(r.gamma for r in row if r.report.concurrence > 1e-12)
        assert last_alive < 1.0
        assert row[-1].report.concurrence == 0.0


@pytest.mark.parametrize("config", [GAD1, GAD23])
def test_separable_endpoints_have_no_discord(config):
    for alpha in (0.0, 1.0):
        for g in np.linspace(0, 1, 6):
            assert evaluate(config, alpha, g).discord < 1e-6


@pytest.mark.parametrize("alpha", [0.6, 0.8])
def test_esd_gad_zero_temperature(alpha):
    res = esd_gamma(GAD1, alpha, tol=1e-6)
    assert abs(res.gamma_esd - math.sqrt((1 - alpha) / alpha)) < 1e-6
    assert abs(dense_scan_esd(GAD1, alpha, 2001) - math.sqrt((1 - alpha) / alpha)) <= 1 / 2000


def test_esd_none_for_asymptotic_decay():
    assert esd_gamma(GAD1, 0.3).gamma_esd is None
    assert esd_gamma(DEPH_W, 1.0).gamma_esd is None


def test_esd_none_for_separable_start():
    assert esd_gamma(DEPH_W, 0.2).gamma_esd is None


def test_esd_dephasing_werner():
    res = esd_gamma(DEPH_W, 0.5, tol=1e-6)
    assert abs(res.gamma_esd - 0.5) < 1e-6
    assert abs(dense_scan_esd(DEPH_W, 0.5, 2001) - 0.5) <= 1 / 2000


def test_esd_bracket_invariant():
    for config in (GAD23, DEPOL, DEPH_GAD):
        res = esd_gamma(config, 0.4, tol=1e-6)
        assert res.bracket_width < 1e-6
        assert concurrence(evolve(config, 0.4, res.gamma_esd - res.bracket_width)) > 0
        assert concurrence(evolve(config, 0.4, res.gamma_esd + res.bracket_width)) < 1e-12


def test_esd_requires_positive_tol():
    with pytest.raises(ValueError):
        esd_gamma(GAD1, 0.8, tol=0)


def test_non_additivity():
    # dephasing alone never kills |Phi> entanglement, GAD q=1 alone spares alpha < 1/2,
    # together they kill it for every alpha
    phi_deph = ChannelConfig(ConfigKind.DEPHASING, StateFamily.PHI)
    for alpha in (0.2, 0.4):
        assert esd_gamma(phi_deph, alpha).gamma_esd is None
        assert esd_gamma(GAD1, alpha).gamma_esd is None
        assert esd_gamma(DEPH_GAD, alpha).gamma_esd is not None


def test_positivity_scan_small():
    res = discord_positivity_scan(DEPH_W, n_alpha=4, n_gamma=4)
    assert res.discord > 1e-7
    assert 0.05 <= res.alpha <= 0.95 and 0 <= res.gamma <= 0.95


def test_positivity_scan_bounds():
    with pytest.raises(ParamOutOfRange):
        discord_positivity_scan(DEPH_W, gamma_range=(0.0, 1.0))


def test_depolarizing_discord_dies_at_one():
    assert evaluate(DEPOL, 0.5, 1.0).discord < 1e-9


def test_figures_table():
    assert set(FIGURES) == {"1", "2a", "2b", "2c", "2d", "3", "4"}
    assert FIGURES["2c"].q == pytest.approx(2 / 3)
    assert FIGURES["4"].kind is ConfigKind.DEPHASING_PLUS_GAD
