import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdiscord import qmat
from qdiscord.errors import NotHermitian
from qdiscord.states import werner


def random_hermitian(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (x + x.conj().T)


def test_kron_identity():
    assert np.array_equal(qmat.kron(qmat.I2, qmat.I2), np.eye(4))


def test_kron_spin_flip_by_hand():
    # sigma_y (x) sigma_y, expanded entry by entry
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 3] = -1
    expected[1, 2] = 1
    expected[2, 1] = 1
    expected[3, 0] = -1
    assert np.array_equal(qmat.kron(qmat.SY, qmat.SY), expected)


def test_kron_projectors():
    p0 = np.diag([1.0, 0.0])
    assert np.array_equal(qmat.kron(p0, p0), np.diag([1.0, 0, 0, 0]))


def test_kron_layout_matches_numpy():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    k = qmat.kron(a, b)
    for i in range(2):
        for j in range(2):
            for m in range(2):
                for n in range(2):
                    assert abs(k[2 * i + m, 2 * j + n] - a[i, j] * b[m, n]) < 1e-15


def test_kron_bilinear():
    rng = np.random.default_rng(2)
    a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
    # equal up to one rounding per entry
    assert np.allclose(qmat.kron(a + b, c), qmat.kron(a, c) + qmat.kron(b, c), rtol=0, atol=1e-14)


def test_eigensystem_diagonal():
    w, _ = qmat.hermitian_eigensystem(np.diag([0.1, 0.4, 0.2, 0.3]))
    assert np.allclose(w, [0.4, 0.3, 0.2, 0.1], atol=1e-15)


def test_eigensystem_identity():
    w, v = qmat.hermitian_eigensystem(np.eye(4))
    assert np.allclose(w, 1.0)
    assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-14)


def test_eigensystem_werner():
    # characteristic polynomial (5x - 2)(5x - 1)^3
    w, v = qmat.hermitian_eigensystem(werner(0.2))
    assert np.allclose(w, [0.4, 0.2, 0.2, 0.2], atol=1e-14)
    assert np.allclose(werner(0.2) @ v, v * w, atol=1e-10)


def test_eigensystem_rejects_non_hermitian():
    m = np.eye(4, dtype=complex)
    m[0, 1] = 1e-6
    with pytest.raises(NotHermitian):
        qmat.hermitian_eigensystem(m)


@pytest.mark.parametrize("n", [2, 4, 8])
def test_eigensystem_against_numpy(n):
    rng = np.random.default_rng(n)
    for _ in range(100):
        h = random_hermitian(rng, n)
        w, v = qmat.hermitian_eigensystem(h)
        assert np.all(np.diff(w) <= 0)
        assert np.allclose(w, np.linalg.eigvalsh(h)[::-1], atol=1e-12)
        assert np.allclose(h @ v, v * w, atol=1e-10)
        assert np.allclose(v.conj().T @ v, np.eye(n), atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_eigensystem_reconstructs(seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = 0.5 * (m + m.conj().T)
    w, v = qmat.hermitian_eigensystem(h)
    assert np.allclose(qmat.reconstruct(w, v), h, atol=1e-9)
    # trace survives the unitary change of basis
    assert abs(np.trace(v.conj().T @ h @ v) - np.trace(h)) < 1e-10


def test_sqrt_diagonal():
    r = qmat.matrix_sqrt_psd(np.diag([4.0, 1.0, 0.0, 0.25]))
    assert np.allclose(r, np.diag([2.0, 1.0, 0.0, 0.5]), atol=1e-15)


def test_sqrt_identity():
    assert np.allclose(qmat.matrix_sqrt_psd(np.eye(4)), np.eye(4), atol=1e-15)


def test_sqrt_werner_round_trip():
    rho = werner(0.2)
    r = qmat.matrix_sqrt_psd(rho)
    assert qmat.hermiticity_error(r) < 1e-15
    assert np.allclose(r @ r, rho, atol=1e-9)


def test_sqrt_clamps_round_off_but_rejects_negative():
    m = np.diag([1.0, 0.5, -5e-11, 0.0])
    r = qmat.matrix_sqrt_psd(m)
    assert r[2, 2] == 0.0
    with pytest.raises(ValueError):
        qmat.matrix_sqrt_psd(np.diag([1.0, 0.5, -1e-6, 0.0]))


def test_singular_values_against_numpy():
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert np.allclose(qmat.singular_values(m), np.linalg.svd(m, compute_uv=False), atol=1e-12)
