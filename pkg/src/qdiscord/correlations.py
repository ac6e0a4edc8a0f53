"""Entanglement and correlation measures for two-qubit states.

All information quantities are in bits. Classical correlation is maximised
over rank-1 projective measurements on one qubit, parameterised by
``(theta, phi)`` as

    |psi1> = cos(theta)|0> + e^{i phi} sin(theta)|1>
    |psi2> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from . import qmat
from .errors import (
    DomainExceeded,
    InvalidState,
    NotBellDiagonal,
    NotXForm,
    OptimizerDidNotConverge,
    ParamOutOfRange,
)
from .states import (
    BlochCorrelationForm,
    XState,
    check_density_matrix,
    partial_trace,
    swap_qubits,
    to_x_state,
)

GRID_THETA = 64
GRID_PHI = 128
SIMPLEX_FTOL = 1e-10
# the simplex must also shrink in angle; equal-valued vertices placed
# symmetrically about a peak would otherwise stop the search at once
SIMPLEX_XTOL = 1e-8
SIMPLEX_MAXITER = 500
DEGENERATE_P = 1e-14
# Q may overshoot I by this much before it is reported as an optimizer error
DISCORD_FLOOR = 1e-9


@dataclass(frozen=True)
class MeasurementBasis:
    theta: float
    phi: float

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        c, s = math.cos(self.theta), math.sin(self.theta)
        e = complex(math.cos(self.phi), math.sin(self.phi))
        psi1 = np.array([c, e * s], dtype=complex)
        psi2 = np.array([s * e.conjugate(), -c], dtype=complex)
        return psi1, psi2

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        return tuple(np.outer(v, v.conj()) for v in self.vectors())

    def canonical(self) -> "MeasurementBasis":
        """Equivalent angles with theta in [0, pi/2] and phi in [0, 2 pi)."""
        theta = math.fmod(self.theta, math.pi)
        phi = self.phi
        if theta < 0:
            theta += math.pi
        if theta > math.pi / 2:
            theta = math.pi - theta
            phi += math.pi
        phi = math.fmod(phi, 2 * math.pi)
        if phi < 0:
            phi += 2 * math.pi
        return MeasurementBasis(theta, phi)


class ConditionalState(NamedTuple):
    probability: float
    state: np.ndarray
    degenerate: bool


@dataclass(frozen=True)
class CorrelationReport:
    concurrence: float
    mutual_info: float
    classical_corr: float
    discord: float
    argmax_basis: MeasurementBasis


def _xlog2x(x):
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0.0, x, 1.0)
    return np.where(x > 0.0, x * np.log2(safe), 0.0)


def _entropy_of_spectrum(w) -> float:
    w = np.clip(np.asarray(w, dtype=float), 0.0, 1.0)
    return float(-np.sum(_xlog2x(w)))


def entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits of a 2x2 or 4x4 density matrix."""
    rho = check_density_matrix(rho)
    w, _ = qmat.hermitian_eigensystem(rho)
    return _entropy_of_spectrum(w)


def mutual_information(rho: np.ndarray) -> float:
    rho = check_density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidState("mutual information needs a two-qubit state")
    mi = entropy(partial_trace(rho, "A")) + entropy(partial_trace(rho, "B")) - entropy(rho)
    # subadditivity makes I >= 0; drop round-off below zero
    return mi if mi < -1e-10 or mi > 0.0 else 0.0


def _measured_on_b(rho: np.ndarray, measured: str) -> np.ndarray:
    if measured == "B":
        return rho
    if measured == "A":
        return swap_qubits(rho)
    raise ValueError(f"measured must be 'A' or 'B', got {measured!r}")


def conditional_state(
    rho: np.ndarray, basis: MeasurementBasis, outcome: int, measured: str = "B"
) -> ConditionalState:
    """Outcome probability and post-measurement state of the unmeasured qubit."""
    if outcome not in (1, 2):
        raise ValueError(f"outcome must be 1 or 2, got {outcome!r}")
    rho = check_density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidState("conditional_state needs a two-qubit state")
    rho = _measured_on_b(rho, measured)
    proj = qmat.kron(qmat.I2, basis.projectors()[outcome - 1])
    post = proj @ rho @ proj
    p = float(np.real(np.trace(post)))
    if p < DEGENERATE_P:
        return ConditionalState(max(p, 0.0), qmat.I2 / 2, True)
    t = post.reshape(2, 2, 2, 2)
    red = np.einsum("ajbj->ab", t) / p
    return ConditionalState(p, 0.5 * (red + qmat.dagger(red)), False)


def measurement_gain(rho: np.ndarray, basis: MeasurementBasis, measured: str = "B") -> float:
    """Entropy reduction ``S(rho_X) - sum_k p_k S(rho_X|k)`` of the unmeasured qubit X."""
    rho = check_density_matrix(rho)
    keep = "A" if measured == "B" else "B"
    gain = entropy(partial_trace(rho, keep))
    for k in (1, 2):
        p, cond, degenerate = conditional_state(rho, basis, k, measured)
        if not degenerate:
            gain -= p * entropy(cond)
    return gain


def _conditional_entropy_sum(rho: np.ndarray, theta, phi) -> np.ndarray:
    """``sum_k p_k S(rho_A|k)`` for measurements on B, vectorised over angles."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c, s = np.cos(theta), np.sin(theta)
    e = np.exp(1j * phi)
    psis = (np.stack([c + 0j, e * s], axis=-1), np.stack([s * np.conj(e), -c + 0j], axis=-1))
    t = rho.reshape(2, 2, 2, 2)
    total = np.zeros(theta.shape)
    for psi in psis:
        m = np.einsum("...b,abcd,...d->...ac", psi.conj(), t, psi)
        m00 = m[..., 0, 0].real
        m11 = m[..., 1, 1].real
        p = m00 + m11
        disc = np.sqrt((m00 - m11) ** 2 + 4.0 * np.abs(m[..., 0, 1]) ** 2)
        lam_hi = 0.5 * (p + disc)
        lam_lo = np.maximum(0.5 * (p - disc), 0.0)
        # p * S(m / p) = p log2 p - sum_i lam_i log2 lam_i
        contrib = _xlog2x(p) - _xlog2x(lam_hi) - _xlog2x(lam_lo)
        total += np.where(p < DEGENERATE_P, 0.0, contrib)
    return total


def classical_correlation(rho: np.ndarray, measured: str = "B") -> tuple[float, MeasurementBasis]:
    """Maximal entropy reduction of one qubit by projectively measuring the other.

    A 64 x 128 grid over theta in [0, pi/2], phi in [0, 2 pi) locates the
    basin of the maximum; Nelder-Mead then refines from the best grid point.

    Raises:
        OptimizerDidNotConverge: the simplex stage did not reach an objective
            spread below 1e-10 (and an angular size below 1e-8) within 500
            iterations.
    """
    rho = check_density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidState("classical correlation needs a two-qubit state")
    rho = _measured_on_b(rho, measured)
    s_a = entropy(partial_trace(rho, "A"))

    thetas = np.linspace(0.0, math.pi / 2, GRID_THETA)
    phis = np.arange(GRID_PHI) * (2 * math.pi / GRID_PHI)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    cond = _conditional_entropy_sum(rho, tt, pp)
    i, j = np.unravel_index(np.argmin(cond), cond.shape)
    best_x = np.array([thetas[i], phis[j]])
    best_f = float(cond[i, j])

    def objective(x):
        return float(_conditional_entropy_sum(rho, x[0], x[1]))

    dt = thetas[1] - thetas[0]
    dp = phis[1] - phis[0]
    simplex = np.array([best_x, best_x + [dt, 0.0], best_x + [0.0, dp]])
    res = minimize(
        objective,
        best_x,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "xatol": SIMPLEX_XTOL,
            "fatol": SIMPLEX_FTOL,
            "maxiter": SIMPLEX_MAXITER,
            "maxfev": 4 * SIMPLEX_MAXITER,
        },
    )
    if not res.success:
        raise OptimizerDidNotConverge(f"measurement optimisation failed: {res.message}")
    if res.fun < best_f:
        best_x, best_f = res.x, float(res.fun)

    q = s_a - best_f
    if q < -1e-9:
        raise OptimizerDidNotConverge(f"negative classical correlation {q:.3e}")
    return max(q, 0.0), MeasurementBasis(float(best_x[0]), float(best_x[1])).canonical()


def discord(rho: np.ndarray, measured: str = "B") -> CorrelationReport:
    """Concurrence, mutual information, classical correlation and discord of ``rho``."""
    rho = check_density_matrix(rho)
    mi = mutual_information(rho)
    q, basis = classical_correlation(rho, measured)
    if mi < q <= mi + DISCORD_FLOOR:
        q = mi
    return CorrelationReport(
        concurrence=concurrence(rho),
        mutual_info=mi,
        classical_corr=q,
        discord=mi - q,
        argmax_basis=basis,
    )


def concurrence_general(rho: np.ndarray) -> float:
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the square roots of the eigenvalues of ``rho R`` with
    ``R = (Y (x) Y) rho* (Y (x) Y)``. They are evaluated as the singular
    values of ``sqrt(rho) sqrt(R)``, i.e. the eigenvalues of
    ``sqrt(sqrt(rho) R sqrt(rho))``, without forming that product.
    ``sqrt(R)`` is derived from the same computed ``sqrt(rho)``.
    """
    rho = check_density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidState("concurrence needs a two-qubit state")
    root = qmat.matrix_sqrt_psd(rho)
    root_flipped = qmat.SYSY @ root.conj() @ qmat.SYSY
    lam = qmat.singular_values(root @ root_flipped)
    return min(1.0, max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3])))


def concurrence_x(x: XState) -> float:
    """Closed-form concurrence of an X state."""
    r11, r22, r33, r44 = (max(v, 0.0) for v in x.diag)
    lam1 = abs(x.rho14) - math.sqrt(r22 * r33)
    lam2 = abs(x.rho23) - math.sqrt(r11 * r44)
    return min(1.0, 2.0 * max(0.0, lam1, lam2))


def concurrence(rho: np.ndarray) -> float:
    """X-state formula when ``rho`` has X shape, the general route otherwise."""
    try:
        x = to_x_state(rho)
    except (NotXForm, InvalidState):
        return concurrence_general(rho)
    return concurrence_x(x)


def _check_unit(name, value):
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParamOutOfRange(f"{name} must lie in [0, 1], got {value!r}")
    return value


def concurrence_dephasing_werner(alpha: float, gamma: float) -> float:
    """Concurrence of a Werner state after local dephasing of degree ``gamma``."""
    alpha = _check_unit("alpha", alpha)
    gamma = _check_unit("gamma", gamma)
    return max(0.0, alpha * (1.0 - gamma) - (1.0 - alpha) / 2.0)


def published_concurrence_dephasing_werner(alpha: float, gamma: float) -> float:
    """Printed closed form ``alpha (3/2 - 2 gamma) - 1/2``, clipped at 0.

    Kept for comparison; it does not follow from the dephasing Kraus set
    (see :func:`concurrence_dephasing_werner`).
    """
    alpha = _check_unit("alpha", alpha)
    gamma = _check_unit("gamma", gamma)
    return max(0.0, alpha * (1.5 - 2.0 * gamma) - 0.5)


def published_discord_dephasing_werner(alpha: float, gamma: float) -> float:
    """Printed compact discord ``[F(a+b) + F(a-b)]/4 - F(a)/2`` with
    ``F(x) = x log2 x``, ``a = 1 - alpha``, ``b = 2 alpha (1 - gamma)``.

    Evaluated literally. It disagrees with the numerically optimised discord
    and is only exposed for comparison.

    Raises:
        DomainExceeded: if ``a - b <= 0`` with ``b > 0``, where F(a - b) is undefined.
    """
    alpha = _check_unit("alpha", alpha)
    gamma = _check_unit("gamma", gamma)
    a = 1.0 - alpha
    b = 2.0 * alpha * (1.0 - gamma)
    if b > 0.0 and a - b <= 0.0:
        raise DomainExceeded(f"a - b = {a - b:.6g} <= 0 for alpha={alpha}, gamma={gamma}")

    def f(x):
        return x * math.log2(x) if x > 0.0 else 0.0

    return (f(a + b) + f(a - b)) / 4.0 - f(a) / 2.0


def bell_diagonal_spectrum(c) -> np.ndarray:
    c1, c2, c3 = c
    return 0.25 * np.array([
        1 - c1 - c2 - c3,
        1 - c1 + c2 + c3,
        1 + c1 - c2 + c3,
        1 + c1 + c2 - c3,
    ])


def discord_bell_diagonal(form: BlochCorrelationForm) -> float:
    """Closed-form discord of ``(I + sum_j c_j S_j (x) S_j) / 4``.

    Raises:
        NotBellDiagonal: nonzero local polarization or invalid coefficients.
    """
    if abs(form.c0) > 1e-12:
        raise NotBellDiagonal(f"c0 = {form.c0} is not zero")
    w = bell_diagonal_spectrum(form.c)
    if w.min() < -1e-10:
        raise NotBellDiagonal(f"coefficients {form.c} give a negative eigenvalue")
    mi = 2.0 - _entropy_of_spectrum(w)
    c = min(max(abs(x) for x in form.c), 1.0)
    q = 0.5 * float(_xlog2x(1.0 - c) + _xlog2x(1.0 + c))
    return mi - q
