import math

import numpy as np


def random_state(rng, rank=4):
    x = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = x @ x.conj().T
    return rho / np.trace(rho).real


def random_x_state(rng):
    p = rng.dirichlet(np.ones(4))
    rho = np.diag(p).astype(complex)
    r14 = math.sqrt(p[0] * p[3]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
    r23 = math.sqrt(p[1] * p[2]) * rng.uniform() * np.exp(1j * rng.uniform(0, 2 * np.pi))
    rho[0, 3], rho[3, 0] = r14, np.conj(r14)
    rho[1, 2], rho[2, 1] = r23, np.conj(r23)
    return rho


def concurrence_eigvals(rho):
    """Concurrence from the non-Hermitian product rho (YY) rho* (YY)."""
    yy = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])
    ev = np.linalg.eigvals(rho @ yy @ rho.conj() @ yy)
    lam = np.sort(np.sqrt(np.clip(ev.real, 0, None)))[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
