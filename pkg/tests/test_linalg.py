import numpy as np
import pytest

from entgain.errors import NotHermitianError
from entgain.linalg import dagger, hermitian_eigen, kron


def kron_oracle(a, b):
    """Brute-force entrywise Kronecker product, independent of numpy's."""
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


def charpoly_roots(a):
    """Eigenvalue oracle: characteristic polynomial coefficients from power
    sums (Newton's identities, traces of powers only), roots via np.roots."""
    d = a.shape[0]
    powers = [np.eye(d, dtype=complex)]
    for _ in range(d):
        powers.append(powers[-1] @ a)
    p = [float(powers[k].trace().real) for k in range(d + 1)]
    e = [1.0]
    for k in range(1, d + 1):
        acc = 0.0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * p[i]
        e.append(acc / k)
    coeffs = [(-1) ** k * e[k] for k in range(d + 1)]
    return np.sort(np.roots(coeffs).real)


def cofactor_det(a):
    """Determinant by cofactor expansion along the first row (d <= 3 use)."""
    d = a.shape[0]
    if d == 1:
        return complex(a[0, 0])
    total = 0.0 + 0.0j
    for j in range(d):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += (-1) ** j * a[0, j] * cofactor_det(minor)
    return total


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_projector_places_block():
    proj = np.array([[1.0, 0.0], [0.0, 0.0]])
    m = np.array([[1.0, 2.0], [3.0, 4.0]])
    out = kron(proj, m)
    expected = np.zeros((4, 4), dtype=complex)
    expected[:2, :2] = m
    assert np.array_equal(out, expected)


def test_kron_matches_entrywise_oracle():
    x = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    assert np.array_equal(kron(x, z), kron_oracle(x, z))
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
        b = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
        assert np.array_equal(kron(a, b), kron_oracle(a, b))


def test_kron_associative_on_integer_matrices():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a, b, c = (rng.integers(-5, 6, size=(2, 2)).astype(complex) for _ in range(3))
        assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))


def test_kron_rejects_non_matrices():
    with pytest.raises(ValueError):
        kron(np.ones(3), np.eye(2))


def test_eigen_identity():
    res = hermitian_eigen(np.eye(3))
    assert np.allclose(res.eigenvalues, [1.0, 1.0, 1.0], atol=1e-14)


def test_eigen_symmetric_2x2():
    res = hermitian_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert np.allclose(res.eigenvalues, [1.0, 3.0], atol=1e-12)
    # eigenvectors are (1, -1)/sqrt(2) and (1, 1)/sqrt(2) up to phase
    lo = res.eigenvectors[:, 0]
    hi = res.eigenvectors[:, 1]
    assert abs(abs(np.vdot(lo, [1, -1] / np.sqrt(2))) - 1) < 1e-12
    assert abs(abs(np.vdot(hi, [1, 1] / np.sqrt(2))) - 1) < 1e-12


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigen_rejects_non_square():
    with pytest.raises(ValueError):
        hermitian_eigen(np.ones((2, 3)))


def test_eigen_matches_charpoly_oracle(random_hermitian):
    rng = np.random.default_rng(101)
    for _ in range(50):
        a = random_hermitian(rng, 4)
        w = hermitian_eigen(a).eigenvalues
        assert np.abs(w - charpoly_roots(a)).max() < 1e-8


def test_eigen_trace_and_det_invariants(random_hermitian):
    rng = np.random.default_rng(77)
    for dim in (2, 3):
        for _ in range(50):
            a = random_hermitian(rng, dim)
            scale = max(1.0, np.linalg.norm(a))
            w = hermitian_eigen(a).eigenvalues
            assert abs(w.sum() - a.trace().real) <= 1e-10 * scale
            assert abs(np.prod(w) - cofactor_det(a).real) <= 1e-10 * scale**dim


def test_eigen_residual_unitarity_reconstruction(random_hermitian):
    rng = np.random.default_rng(303)
    for dim in (2, 3, 4):
        for _ in range(30):
            a = random_hermitian(rng, dim)
            scale = max(1.0, np.linalg.norm(a))
            w, v = hermitian_eigen(a)
            for i in range(dim):
                residual = np.linalg.norm(a @ v[:, i] - w[i] * v[:, i])
                assert residual <= 1e-10 * scale
            assert np.abs(dagger(v) @ v - np.eye(dim)).max() <= 1e-10
            assert np.abs((v * w) @ dagger(v) - a).max() <= 1e-10
