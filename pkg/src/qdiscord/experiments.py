"""(alpha, gamma) sweeps, sudden-death thresholds and discord positivity scans."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import channels
from .correlations import CorrelationReport, concurrence, discord
from .errors import ParamOutOfRange
from .states import phi_state, werner

# C below this counts as zero when locating sudden death
CONCURRENCE_ZERO = 1e-12


class ConfigKind(enum.Enum):
    DEPHASING = "dephasing"
    GAD = "gad"
    DEPOLARIZING = "depolarizing"
    DEPHASING_PLUS_GAD = "dephasing+gad"


class StateFamily(enum.Enum):
    WERNER = "werner"
    PHI = "phi"


@dataclass(frozen=True)
class ChannelConfig:
    kind: ConfigKind
    state_family: StateFamily = StateFamily.PHI
    q: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", ConfigKind(self.kind))
        object.__setattr__(self, "state_family", StateFamily(self.state_family))
        if not 0.0 <= float(self.q) <= 1.0:
            raise ParamOutOfRange(f"q must lie in [0, 1], got {self.q!r}")
        object.__setattr__(self, "q", float(self.q))

    def channel(self, gamma: float) -> channels.KrausChannel:
        """Single-qubit channel at decoherence degree ``gamma``."""
        if self.kind is ConfigKind.DEPHASING:
            return channels.dephasing(gamma)
        if self.kind is ConfigKind.GAD:
            return channels.gad(gamma, self.q)
        if self.kind is ConfigKind.DEPOLARIZING:
            return channels.depolarizing(gamma)
        return channels.compose(channels.dephasing(gamma), channels.gad(gamma, self.q))

    def initial_state(self, alpha: float) -> np.ndarray:
        if self.state_family is StateFamily.WERNER:
            return werner(alpha)
        return phi_state(alpha)

    def as_dict(self) -> dict:
        return {"channel": self.kind.value, "state": self.state_family.value, "q": self.q}


# configurations behind each published figure panel
FIGURES = {
    "1": ChannelConfig(ConfigKind.DEPHASING, StateFamily.WERNER),
    "2a": ChannelConfig(ConfigKind.GAD, StateFamily.PHI, q=1.0),
    "2b": ChannelConfig(ConfigKind.GAD, StateFamily.PHI, q=1.0),
    "2c": ChannelConfig(ConfigKind.GAD, StateFamily.PHI, q=2 / 3),
    "2d": ChannelConfig(ConfigKind.GAD, StateFamily.PHI, q=2 / 3),
    "3": ChannelConfig(ConfigKind.DEPOLARIZING, StateFamily.PHI),
    "4": ChannelConfig(ConfigKind.DEPHASING_PLUS_GAD, StateFamily.PHI, q=1.0),
}


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    gamma: float
    report: CorrelationReport


@dataclass
class SweepGrid:
    config: ChannelConfig
    alphas: list[float]
    gammas: list[float]
    rows: list[SweepRow] = field(default_factory=list)


@dataclass(frozen=True)
class EsdResult:
    alpha: float
    gamma_esd: float | None
    bracket_width: float


def evolve(config: ChannelConfig, alpha: float, gamma: float) -> np.ndarray:
    """State at decoherence degree ``gamma`` with the channel applied to both qubits."""
    ch = config.channel(gamma)
    return channels.apply_two_qubit(config.initial_state(alpha), ch, ch)


def evaluate(config: ChannelConfig, alpha: float, gamma: float) -> CorrelationReport:
    return discord(evolve(config, alpha, gamma))


def _evaluate_cell(args) -> CorrelationReport:
    return evaluate(*args)


def sweep(config: ChannelConfig, n_alpha: int = 101, n_gamma: int = 101, workers: int = 1) -> SweepGrid:
    """Full correlation report on a uniform grid including both endpoints.

    Rows are ordered with alpha outer and gamma inner. ``workers > 1``
    evaluates cells in separate processes; the result does not depend on it.
    """
    if n_alpha < 2 or n_gamma < 2:
        raise ValueError("a sweep needs at least two points along each axis")
    alphas = [float(a) for a in np.linspace(0.0, 1.0, n_alpha)]
    gammas = [float(g) for g in np.linspace(0.0, 1.0, n_gamma)]
    cells = [(config, a, g) for a in alphas for g in gammas]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_evaluate_cell, cells, chunksize=32))
    else:
        reports = [_evaluate_cell(c) for c in cells]
    rows = [SweepRow(a, g, r) for (_, a, g), r in zip(cells, reports)]
    return SweepGrid(config, alphas, gammas, rows)


def concurrence_at(config: ChannelConfig, alpha: float, gamma: float) -> float:
    return concurrence(evolve(config, alpha, gamma))


def esd_gamma(config: ChannelConfig, alpha: float, tol: float = 1e-6) -> EsdResult:
    """Locate the sudden-death point of concurrence along ``gamma`` by bisection.

    ``gamma_esd`` is None when the initial state is not entangled or when the
    concurrence is still nonzero at ``gamma = 1 - tol`` (decay only in the
    asymptotic limit).
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if concurrence_at(config, alpha, 0.0) < CONCURRENCE_ZERO:
        return EsdResult(alpha, None, 0.0)
    hi = 1.0 - tol
    if concurrence_at(config, alpha, hi) >= CONCURRENCE_ZERO:
        return EsdResult(alpha, None, tol)
    lo = 0.0
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if concurrence_at(config, alpha, mid) < CONCURRENCE_ZERO:
            hi = mid
        else:
            lo = mid
    return EsdResult(alpha, 0.5 * (lo + hi), hi - lo)


@dataclass(frozen=True)
class PositivityResult:
    alpha: float
    gamma: float
    discord: float


def discord_positivity_scan(
    config: ChannelConfig,
    alpha_range: tuple[float, float] = (0.05, 0.95),
    gamma_range: tuple[float, float] = (0.0, 0.95),
    n_alpha: int = 19,
    n_gamma: int = 20,
) -> PositivityResult:
    """Smallest discord over a uniform grid and where it occurs."""
    if alpha_range[0] < 0.05 or alpha_range[1] > 0.95:
        raise ParamOutOfRange("alpha range must stay within [0.05, 0.95]")
    if gamma_range[0] < 0.0 or gamma_range[1] > 0.95:
        raise ParamOutOfRange("gamma range must stay within [0, 0.95]")
    worst = None
    for a in np.linspace(*alpha_range, n_alpha):
        for g in np.linspace(*gamma_range, n_gamma):
            d = evaluate(config, float(a), float(g)).discord
            if worst is None or d < worst.discord:
                worst = PositivityResult(float(a), float(g), d)
    return worst
