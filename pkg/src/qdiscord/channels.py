"""Single-qubit Kraus channels and their independent action on two qubits."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import qmat
from .errors import InvalidChannel, InvalidState, NegativeInput, ParamOutOfRange

COMPLETENESS_TOL = 1e-12


class ChannelKind(enum.Enum):
    DEPHASING = "dephasing"
    GAD = "gad"
    DEPOLARIZING = "depolarizing"
    IDENTITY = "identity"
    COMPOSED = "composed"


@dataclass(frozen=True)
class DecayClock:
    """Decay rate ``rate`` (inverse time) and elapsed time ``t``."""

    rate: float
    t: float


@dataclass(frozen=True, eq=False)
class KrausChannel:
    kind: ChannelKind
    operators: tuple[np.ndarray, ...]
    gamma: float = 0.0
    q: float | None = None
    parts: tuple["KrausChannel", ...] = field(default=())

    def __post_init__(self):
        ops = tuple(np.asarray(e, dtype=complex) for e in self.operators)
        if not ops or any(e.shape != (2, 2) for e in ops):
            raise InvalidChannel("a single-qubit channel needs at least one 2x2 operator")
        for e in ops:
            e.setflags(write=False)
        object.__setattr__(self, "operators", ops)
        err = completeness_error(ops)
        if not err <= COMPLETENESS_TOL:
            raise InvalidChannel(
                f"{self.kind.value} Kraus set violates completeness (max deviation {err:.3e})"
            )

    def __len__(self) -> int:
        return len(self.operators)

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Act on a single-qubit density matrix."""
        rho = np.asarray(rho, dtype=complex)
        return sum(e @ rho @ qmat.dagger(e) for e in self.operators)


def completeness_error(operators) -> float:
    total = sum(qmat.dagger(e) @ e for e in operators)
    return float(np.max(np.abs(total - qmat.I2)))


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParamOutOfRange(f"{name} must lie in [0, 1], got {value!r}")
    return value


def gamma_of(clock: DecayClock) -> float:
    """Decoherence degree ``1 - exp(-rate * t)``."""
    if clock.rate < 0 or clock.t < 0:
        raise NegativeInput(f"decay rate and time must be non-negative, got {clock}")
    return -math.expm1(-clock.rate * clock.t)


def identity() -> KrausChannel:
    return KrausChannel(ChannelKind.IDENTITY, (qmat.I2,))


def dephasing(gamma: float) -> KrausChannel:
    gamma = _check_unit("gamma", gamma)
    ops = (
        np.diag([1.0, math.sqrt(1.0 - gamma)]),
        np.diag([0.0, math.sqrt(gamma)]),
    )
    return KrausChannel(ChannelKind.DEPHASING, ops, gamma=gamma)


def gad(gamma: float, q: float) -> KrausChannel:
    """Generalized amplitude damping.

    ``q`` is the asymptotic ground-state population; ``q = 1`` is plain
    zero-temperature amplitude damping.
    """
    gamma = _check_unit("gamma", gamma)
    q = _check_unit("q", q)
    lower = np.array([[0.0, 1.0], [0.0, 0.0]])  # (sx + i sy) / 2
    raise_ = np.array([[0.0, 0.0], [1.0, 0.0]])  # (sx - i sy) / 2
    ops = (
        math.sqrt(q) * np.diag([1.0, math.sqrt(1.0 - gamma)]),
        math.sqrt(q * gamma) * lower,
        math.sqrt(1.0 - q) * np.diag([math.sqrt(1.0 - gamma), 1.0]),
        math.sqrt((1.0 - q) * gamma) * raise_,
    )
    return KrausChannel(ChannelKind.GAD, ops, gamma=gamma, q=q)


def depolarizing(gamma: float) -> KrausChannel:
    gamma = _check_unit("gamma", gamma)
    w = math.sqrt(gamma / 4.0)
    ops = (math.sqrt(1.0 - 0.75 * gamma) * qmat.I2, w * qmat.SX, w * qmat.SY, w * qmat.SZ)
    return KrausChannel(ChannelKind.DEPOLARIZING, ops, gamma=gamma)


def compose(first: KrausChannel, second: KrausChannel) -> KrausChannel:
    """Channel applying ``first`` and then ``second``.

    The operator list holds every product ``F @ E`` with ``E`` from
    ``first`` and ``F`` from ``second``.
    """
    for ch in (first, second):
        if not isinstance(ch, KrausChannel):
            raise InvalidChannel(f"expected KrausChannel, got {type(ch).__name__}")
    ops = tuple(f @ e for e in first.operators for f in second.operators)
    return KrausChannel(
        ChannelKind.COMPOSED,
        ops,
        gamma=max(first.gamma, second.gamma),
        q=second.q if second.q is not None else first.q,
        parts=(first, second),
    )


def apply_two_qubit(rho0: np.ndarray, ch_a: KrausChannel, ch_b: KrausChannel) -> np.ndarray:
    """Evolve a two-qubit state with ``ch_a`` on qubit A and ``ch_b`` on qubit B."""
    from .states import check_density_matrix

    for ch in (ch_a, ch_b):
        if not isinstance(ch, KrausChannel):
            raise InvalidChannel(f"expected KrausChannel, got {type(ch).__name__}")
    rho0 = check_density_matrix(rho0)
    if rho0.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 two-qubit state, got shape {rho0.shape}")

    out = np.zeros((4, 4), dtype=complex)
    for e in ch_a.operators:
        for f in ch_b.operators:
            k = qmat.kron(e, f)
            out += k @ rho0 @ qmat.dagger(k)
    return 0.5 * (out + qmat.dagger(out))
