"""Two-qubit states used as initial conditions, plus the X-state and
Bloch-correlation views of a density matrix.

Basis ordering is |00>, |01>, |10>, |11>, so ``rho[0, 3]`` is the
|00><11| coherence and ``rho[1, 2]`` the |01><10| coherence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qmat
from .errors import InvalidState, NotHermitian, NotRepresentable, NotXForm, ParamOutOfRange

TRACE_TOL = 1e-12
HERMITIAN_TOL = 1e-12
MIN_EIGENVALUE = -1e-10
X_FORM_TOL = 1e-10

# matrix positions that vanish for an X state
X_ZERO_ENTRIES = ((0, 1), (0, 2), (1, 3), (2, 3))


def check_density_matrix(rho, *, hermitian_tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate a 2x2 or 4x4 density matrix and return it as a complex array.

    Raises:
        InvalidState: wrong shape, non-Hermitian, trace not 1 or a
            significantly negative eigenvalue.
    """
    m = np.asarray(rho, dtype=complex)
    if m.shape not in ((2, 2), (4, 4)):
        raise InvalidState(f"density matrix must be 2x2 or 4x4, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidState("density matrix has non-finite entries")
    herr = qmat.hermiticity_error(m)
    if herr > hermitian_tol:
        raise InvalidState(f"density matrix is not Hermitian (error {herr:.3e})")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidState(f"density matrix trace is {tr.real:.15g}, expected 1")
    try:
        w, _ = qmat.hermitian_eigensystem(m)
    except NotHermitian as exc:
        raise InvalidState(str(exc)) from exc
    if w[-1] < MIN_EIGENVALUE:
        raise InvalidState(f"density matrix has negative eigenvalue {w[-1]:.3e}")
    return m


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ParamOutOfRange(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha


def werner(alpha: float) -> np.ndarray:
    """Mixture ``(1 - alpha) I/4 + alpha |Psi-><Psi-|``."""
    alpha = _check_alpha(alpha)
    rho = np.diag([(1 - alpha) / 4, (1 + alpha) / 4, (1 + alpha) / 4, (1 - alpha) / 4]).astype(complex)
    rho[1, 2] = rho[2, 1] = -alpha / 2
    return rho


def phi_state(alpha: float) -> np.ndarray:
    """Projector on ``sqrt(1 - alpha)|00> + sqrt(alpha)|11>``."""
    alpha = _check_alpha(alpha)
    psi = np.array([math.sqrt(1 - alpha), 0.0, 0.0, math.sqrt(alpha)], dtype=complex)
    return np.outer(psi, psi.conj())


def pure_state(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def product_state(rho_a, rho_b) -> np.ndarray:
    return qmat.kron(rho_a, rho_b)


def swap_qubits(rho: np.ndarray) -> np.ndarray:
    """Exchange the roles of qubits A and B."""
    perm = [0, 2, 1, 3]
    return np.asarray(rho)[np.ix_(perm, perm)]


def partial_trace(rho: np.ndarray, keep: str = "A") -> np.ndarray:
    """Reduced state of qubit ``keep`` ("A" or "B")."""
    rho = check_density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidState("partial_trace expects a two-qubit state")
    t = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        red = np.einsum("ajbj->ab", t)
    elif keep == "B":
        red = np.einsum("iaib->ab", t)
    else:
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    return 0.5 * (red + qmat.dagger(red))


@dataclass(frozen=True)
class XState:
    """Populations ``diag`` and the two coherences ``rho14 = rho[0, 3]``,
    ``rho23 = rho[1, 2]`` of an X-shaped two-qubit state."""

    diag: tuple[float, float, float, float]
    rho14: complex
    rho23: complex

    def __post_init__(self):
        d = tuple(float(x) for x in self.diag)
        object.__setattr__(self, "diag", d)
        if min(d) < -TRACE_TOL or abs(sum(d) - 1.0) > TRACE_TOL:
            raise InvalidState(f"X-state populations must be >= 0 and sum to 1, got {d}")
        p = [max(x, 0.0) for x in d]
        if abs(self.rho14) > math.sqrt(p[0] * p[3]) + 1e-12:
            raise InvalidState("|rho14| exceeds sqrt(rho11 rho44)")
        if abs(self.rho23) > math.sqrt(p[1] * p[2]) + 1e-12:
            raise InvalidState("|rho23| exceeds sqrt(rho22 rho33)")

    def to_matrix(self) -> np.ndarray:
        rho = np.diag(self.diag).astype(complex)
        rho[0, 3] = self.rho14
        rho[3, 0] = np.conj(self.rho14)
        rho[1, 2] = self.rho23
        rho[2, 1] = np.conj(self.rho23)
        return rho


def to_x_state(rho: np.ndarray) -> XState:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 two-qubit state, got shape {rho.shape}")
    for i, j in X_ZERO_ENTRIES:
        if abs(rho[i, j]) >= X_FORM_TOL or abs(rho[j, i]) >= X_FORM_TOL:
            raise NotXForm(f"entry rho[{i + 1}{j + 1}] = {rho[i, j]:.3e} breaks the X structure")
    return XState(
        diag=tuple(np.real(np.diag(rho))),
        rho14=complex(rho[0, 3]),
        rho23=complex(rho[1, 2]),
    )


@dataclass(frozen=True)
class BlochCorrelationForm:
    """``rho = (I + c0 (Z(x)I + I(x)Z) + sum_j c[j] S_j(x)S_j) / 4``."""

    c0: float
    c: tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "c0", float(self.c0))
        object.__setattr__(self, "c", tuple(float(x) for x in self.c))


def from_bloch(form: BlochCorrelationForm) -> np.ndarray:
    rho = np.eye(4, dtype=complex)
    rho += form.c0 * (qmat.kron(qmat.SZ, qmat.I2) + qmat.kron(qmat.I2, qmat.SZ))
    for cj, s in zip(form.c, qmat.PAULI):
        rho += cj * qmat.kron(s, s)
    rho /= 4.0
    try:
        return check_density_matrix(rho)
    except InvalidState as exc:
        raise NotRepresentable(f"coefficients do not describe a valid state: {exc}") from exc


def to_bloch(rho: np.ndarray, tol: float = 1e-10) -> BlochCorrelationForm:
    """Project onto the Bloch-correlation form, refusing states outside it.

    Raises:
        NotRepresentable: if the reconstruction differs from ``rho`` by
            more than ``tol`` in any entry.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise NotRepresentable(f"expected a 4x4 state, got shape {rho.shape}")
    c0 = float(np.real(np.trace(rho @ qmat.kron(qmat.SZ, qmat.I2))))
    c0_b = float(np.real(np.trace(rho @ qmat.kron(qmat.I2, qmat.SZ))))
    if abs(c0 - c0_b) > tol:
        raise NotRepresentable("local polarizations of A and B differ")
    c = tuple(float(np.real(np.trace(rho @ qmat.kron(s, s)))) for s in qmat.PAULI)
    form = BlochCorrelationForm(c0, c)
    rebuilt = np.eye(4, dtype=complex)
    rebuilt += c0 * (qmat.kron(qmat.SZ, qmat.I2) + qmat.kron(qmat.I2, qmat.SZ))
    for cj, s in zip(c, qmat.PAULI):
        rebuilt += cj * qmat.kron(s, s)
    rebuilt /= 4.0
    err = float(np.max(np.abs(rebuilt - rho)))
    if err > tol:
        raise NotRepresentable(f"state has components outside the Bloch-correlation form (error {err:.3e})")
    return form
