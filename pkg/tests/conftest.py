import numpy as np
import pytest


@pytest.fixture
def random_hermitian():
    """Callable (rng, dim) -> Hermitian matrix with normal entries."""

    def make(rng, dim):
        a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        return (a + a.conj().T) / 2

    return make


@pytest.fixture
def random_unitary():
    """Callable (rng, dim) -> unitary built from complex plane rotations."""

    def make(rng, dim):
        u = np.eye(dim, dtype=complex)
        for p in range(dim):
            for q in range(p + 1, dim):
                theta = rng.uniform(0.0, 2.0 * np.pi)
                phi = rng.uniform(0.0, 2.0 * np.pi)
                c, s = np.cos(theta), np.sin(theta)
                g = np.eye(dim, dtype=complex)
                g[p, p] = c
                g[p, q] = -s * np.exp(1j * phi)
                g[q, p] = s * np.exp(-1j * phi)
                g[q, q] = c
                u = u @ g
        return u

    return make
