import math

import numpy as np
import pytest

from entgain.errors import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    SupportLeakError,
    TraceNotOneError,
)
from entgain.states import (
    DensityMatrix,
    embed_qutrit,
    extract_qutrit,
    is_pure,
    purity,
    qubit_portrait,
    random_density,
    validate_density,
    von_neumann_entropy,
)

LN2 = math.log(2.0)


def eig2x2(m):
    """Closed-form eigenvalues of a Hermitian 2x2: (tr +- sqrt(tr^2 - 4 det)) / 2."""
    tr = (m[0, 0] + m[1, 1]).real
    det = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real
    disc = math.sqrt(tr * tr - 4.0 * det)
    return (tr - disc) / 2.0, (tr + disc) / 2.0


def test_validate_maximally_mixed_qutrit():
    rho = validate_density(np.eye(3) / 3)
    assert rho.dim == 3
    assert np.allclose(rho.eigenvalues, [1 / 3, 1 / 3, 1 / 3], atol=1e-14)


def test_validate_rejects_indefinite():
    m = np.array([[0.6, 0.5], [0.5, 0.4]])
    low, _ = eig2x2(m)
    assert low == pytest.approx((1 - math.sqrt(1.04)) / 2)
    with pytest.raises(NotPositiveError) as err:
        validate_density(m)
    assert err.value.eigenvalue == pytest.approx(low, abs=1e-12)


def test_validate_rejects_wrong_trace():
    with pytest.raises(TraceNotOneError):
        validate_density(np.diag([0.5, 0.6]))


def test_validate_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        validate_density(np.array([[0.5, 0.5], [0.0, 0.5]]))


def test_validate_rejects_non_square_and_non_finite():
    with pytest.raises(DimensionMismatchError):
        validate_density(np.ones((2, 3)))
    with pytest.raises(ValueError):
        validate_density(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_matrix_is_stored_read_only():
    rho = validate_density(np.eye(2) / 2)
    with pytest.raises(ValueError):
        rho.mat[0, 0] = 5.0


def test_entropy_pure_state_is_zero():
    rho = validate_density(np.diag([1.0, 0.0, 0.0]))
    assert von_neumann_entropy(rho) == 0.0


def test_entropy_maximally_mixed_qubit():
    assert von_neumann_entropy(validate_density(np.eye(2) / 2)) == pytest.approx(
        LN2, abs=1e-12
    )


def test_entropy_matches_closed_form_2x2():
    m = np.array([[0.75, 0.25], [0.25, 0.25]])
    lo, hi = eig2x2(m)
    assert lo == pytest.approx((2 - math.sqrt(2)) / 4)
    assert hi == pytest.approx((2 + math.sqrt(2)) / 4)
    expected = -(lo * math.log(lo) + hi * math.log(hi))
    assert expected == pytest.approx(0.4164955306996875, abs=1e-15)
    assert von_neumann_entropy(validate_density(m)) == pytest.approx(expected, abs=1e-12)


def test_entropy_binary_grid():
    for p in np.arange(0.0, 1.01, 0.1):
        rho = validate_density(np.diag([p, 1.0 - p, 0.0]))
        expected = 0.0
        if 0.0 < p < 1.0:
            expected = -p * math.log(p) - (1 - p) * math.log(1 - p)
        assert abs(von_neumann_entropy(rho) - expected) <= 1e-10


def test_entropy_unitary_invariance(random_unitary):
    rng = np.random.default_rng(42)
    for dim in (2, 3, 4):
        for _ in range(20):
            rho = random_density(dim, rng)
            u = random_unitary(rng, dim)
            rotated = validate_density(u @ rho.mat @ u.conj().T)
            assert abs(
                von_neumann_entropy(rotated) - von_neumann_entropy(rho)
            ) <= 1e-9


def test_purity_endpoints():
    assert purity(validate_density(np.diag([1.0, 0.0, 0.0]))) == pytest.approx(1.0)
    assert purity(validate_density(np.eye(3) / 3)) == pytest.approx(1 / 3)
    assert is_pure(validate_density(np.diag([1.0, 0.0, 0.0])))
    assert not is_pure(validate_density(np.eye(3) / 3))


def test_purity_range_on_random_states():
    rng = np.random.default_rng(8)
    for _ in range(100):
        rho = random_density(3, rng)
        p = purity(rho)
        assert 1 / 3 - 1e-9 <= p <= 1 + 1e-9


def test_portrait_maximally_mixed():
    sigma = qubit_portrait(validate_density(np.eye(3) / 3))
    assert np.allclose(sigma.mat, [[2 / 3, 0], [0, 1 / 3]], atol=1e-15)


def test_portrait_pure_third_level():
    sigma = qubit_portrait(validate_density(np.diag([0.0, 0.0, 1.0])))
    assert np.array_equal(sigma.mat, np.array([[0.0, 0.0], [0.0, 1.0]]))
    assert von_neumann_entropy(sigma) == 0.0


def test_portrait_requires_qutrit():
    with pytest.raises(DimensionMismatchError):
        qubit_portrait(validate_density(np.eye(2) / 2))


def test_portrait_always_valid():
    # positivity comes from r11*r33 >= |r13|^2; trace is r11 + r22 + r33
    rng = np.random.default_rng(99)
    for _ in range(1000):
        rho = random_density(3, rng)
        assert abs(rho.mat[0, 2]) > 0.0
        sigma = qubit_portrait(rho)
        assert abs(sigma.mat.trace().real - 1.0) <= 1e-12
        assert sigma.eigenvalues[0] >= -1e-10


def test_embed_diagonal():
    rho4 = embed_qutrit(validate_density(np.diag([0.5, 0.25, 0.25])))
    assert np.array_equal(rho4.mat, np.diag([0.5, 0.25, 0.25, 0.0]).astype(complex))


def test_embed_pattern_and_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(20):
        rho = random_density(3, rng)
        rho4 = embed_qutrit(rho)
        assert np.array_equal(rho4.mat[:3, :3], rho.mat)
        assert np.all(rho4.mat[3, :] == 0) and np.all(rho4.mat[:, 3] == 0)
        back = extract_qutrit(rho4)
        assert np.array_equal(back.mat, rho.mat)


def test_embed_preserves_entropy():
    rng = np.random.default_rng(4)
    for _ in range(50):
        rho = random_density(3, rng)
        assert abs(
            von_neumann_entropy(embed_qutrit(rho)) - von_neumann_entropy(rho)
        ) <= 1e-10


def test_extract_rejects_support_leak():
    rho4 = validate_density(np.eye(4) / 4)
    with pytest.raises(SupportLeakError) as err:
        extract_qutrit(rho4)
    assert err.value.residual == pytest.approx(0.25)


def test_random_density_is_deterministic():
    a = random_density(3, 123)
    b = random_density(3, 123)
    assert np.array_equal(a.mat, b.mat)
