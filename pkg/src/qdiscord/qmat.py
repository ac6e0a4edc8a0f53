"""Small dense complex matrices: Pauli constants, Kronecker products and a
cyclic Jacobi eigensolver for Hermitian 2x2/4x4 matrices.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.
"""

from __future__ import annotations

import numpy as np

from .errors import NotHermitian

CMat2 = np.ndarray
CMat4 = np.ndarray

HERMITIAN_TOL = 1e-10
# eigenvalues in [-PSD_CLAMP, 0) are treated as round-off
PSD_CLAMP = 1e-10

JACOBI_OFFDIAG_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SX, SY, SZ)

# spin-flip operator sigma_y (x) sigma_y
SYSY = np.kron(SY, SY)


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def kron(a: CMat2, b: CMat2) -> CMat4:
    """Kronecker product, ``out[2i+k, 2j+l] = a[i, j] * b[k, l]``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    na, ma = a.shape
    nb, mb = b.shape
    out = np.empty((na * nb, ma * mb), dtype=complex)
    for i in range(na):
        for j in range(ma):
            out[i * nb:(i + 1) * nb, j * mb:(j + 1) * mb] = a[i, j] * b
    return out


def hermiticity_error(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - dagger(m))))


def check_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {m.shape}")
    err = hermiticity_error(m)
    if not err <= tol:
        raise NotHermitian(f"matrix is not Hermitian (max |m - m^H| = {err:.3e})")
    return m


def _offdiag_norm(a: np.ndarray) -> float:
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return float(np.sqrt(np.sum(off.real ** 2 + off.imag ** 2)))


def hermitian_eigensystem(m: CMat4) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decompose a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, v)`` with real eigenvalues ``w`` sorted in descending
    order and the matching orthonormal eigenvectors as the columns of ``v``.

    Raises:
        NotHermitian: if ``m`` deviates from ``m^H`` by more than 1e-10.
    """
    a = check_hermitian(m).copy()
    n = a.shape[0]
    # symmetrize away the admissible round-off
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)

    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) < JACOBI_OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                mag = abs(g)
                if mag < 1e-300:
                    continue
                phase = g / mag
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e8:
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # phase fix making a[p, q] real, followed by a real rotation
                ph = phase.conjugate()
                r10 = -s * ph
                r11 = c * ph
                cp = a[:, p].copy()
                cq = a[:, q]
                a[:, p] = c * cp + r10 * cq
                a[:, q] = s * cp + r11 * cq
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp + np.conj(r10) * rq
                a[q, :] = s * rp + np.conj(r11) * rq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp + r10 * vq
                v[:, q] = s * vp + r11 * vq
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")

    w = np.real(np.diag(a)).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def clamp_psd(w: np.ndarray) -> np.ndarray:
    """Clamp tiny negative eigenvalues to zero; larger negatives are an error."""
    if np.any(w < -PSD_CLAMP):
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {w.min():.3e})")
    return np.where(w < 0.0, 0.0, w)


def matrix_sqrt_psd(m: CMat4) -> CMat4:
    """Principal square root of a Hermitian positive semidefinite matrix."""
    w, v = hermitian_eigensystem(m)
    w = clamp_psd(w)
    r = (v * np.sqrt(w)) @ dagger(v)
    return 0.5 * (r + dagger(r))


def reconstruct(w: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`hermitian_eigensystem`: ``sum_i w_i v_i v_i^H``."""
    return (v * w) @ dagger(v)


def singular_values(m: np.ndarray) -> np.ndarray:
    """Singular values of a square matrix, descending.

    Computed as the non-negative half of the spectrum of the Hermitian
    embedding ``[[0, m], [m^H, 0]]``, which avoids squaring ``m``.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    h = np.zeros((2 * n, 2 * n), dtype=complex)
    h[:n, n:] = m
    h[n:, :n] = dagger(m)
    w, _ = hermitian_eigensystem(h)
    return np.maximum(w[:n], 0.0)
