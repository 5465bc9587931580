import numpy as np
import pytest

from conftest import random_pair, random_vector
from rieszops import (
    LinalgError,
    expand,
    explicit,
    frame_inequality_check,
    from_generator,
    poly,
    reconstruction_residual,
    verify_biorthogonality,
)
from rieszops.models import projection_model, three_level


def test_identity_generator_gives_coordinate_bases():
    pair = from_generator(np.eye(4, dtype=complex))
    np.testing.assert_allclose(pair.phi, np.eye(4), atol=1e-15)
    np.testing.assert_allclose(pair.psi, np.eye(4), atol=1e-15)
    assert abs(pair.frame_lower - 1.0) <= 1e-12
    assert abs(pair.frame_upper - 1.0) <= 1e-12


def test_three_level_columns_match_model_at_pi_over_6():
    model = three_level(np.pi / 6)
    pair = from_generator(model.T)
    np.testing.assert_allclose(pair.phi, np.column_stack(model.phi), atol=1e-12)
    np.testing.assert_allclose(pair.psi, np.column_stack(model.psi), atol=1e-12)


def test_projection_generator_case_formulas():
    u = np.zeros(4, dtype=complex)
    u[:2] = 1 / np.sqrt(2)
    model = projection_model(4, u[:2], poly(1.0))
    pair = from_generator(model.T)
    for n in range(4):
        expected = np.eye(4)[:, n].astype(complex)
        if n < 2:
            expected = expected + 1j * np.conj(u[n]) * u
        np.testing.assert_allclose(pair.phi[:, n], expected, atol=1e-12)


def test_rejects_singular_generator():
    with pytest.raises(LinalgError, match="sigma_min"):
        from_generator(np.ones((3, 3), dtype=complex))


def test_frame_bounds_are_extreme_singular_values():
    pair = random_pair(8, 11)
    s = np.linalg.svd(pair.generator, compute_uv=False)
    assert abs(pair.frame_lower - s[-1]) <= 1e-10
    assert abs(pair.frame_upper - s[0]) <= 1e-10


def test_frame_bounds_bracket_action_norms(rng):
    pair = random_pair(8, 12)
    for _ in range(20):
        f = random_vector(rng, 8)
        ratio = np.linalg.norm(pair.generator @ f) / np.linalg.norm(f)
        assert pair.frame_lower - 1e-10 <= ratio <= pair.frame_upper + 1e-10


class TestBiorthogonality:
    def test_three_level(self):
        pair = from_generator(three_level(0.3).T)
        check = verify_biorthogonality(pair, tol=1e-12)
        assert check.passed and check.residual <= 1e-12

    def test_identity(self):
        check = verify_biorthogonality(from_generator(np.eye(5, dtype=complex)))
        assert check.residual == 0.0

    def test_random_dim_16(self):
        check = verify_biorthogonality(random_pair(16, 16))
        assert check.passed and check.residual <= 1e-10


class TestExpand:
    def test_basis_vector_coefficients_are_kronecker(self):
        pair = random_pair(6, 2)
        coeff_psi, _ = expand(pair, pair.phi[:, 3])
        np.testing.assert_allclose(coeff_psi, np.eye(6)[3], atol=1e-12)

    def test_identity_generator(self):
        pair = from_generator(np.eye(4, dtype=complex))
        coeff_psi, coeff_phi = expand(pair, np.eye(4)[0].astype(complex))
        np.testing.assert_allclose(coeff_psi, np.eye(4)[0], atol=1e-15)
        np.testing.assert_allclose(coeff_phi, np.eye(4)[0], atol=1e-15)

    def test_projection_pair_reconstruction(self, rng):
        model = projection_model(8, np.array([0.6, 0.8j]), poly(1.0))
        pair = from_generator(model.T)
        f = random_vector(rng, 8)
        assert reconstruction_residual(pair, f) <= 1e-10

    def test_dimension_mismatch(self):
        pair = random_pair(4, 1)
        with pytest.raises(ValueError, match="shape"):
            expand(pair, np.zeros(5))

    def test_hundred_random_reconstructions(self):
        pair = random_pair(8, 21)
        rng = np.random.default_rng(99)
        worst = max(
            reconstruction_residual(pair, random_vector(rng, 8)) for _ in range(100)
        )
        assert worst <= 1e-10


class TestFrameInequality:
    def test_identity_generator_equalities(self, rng):
        pair = from_generator(np.eye(5, dtype=complex))
        check = frame_inequality_check(pair, poly(1.0), random_vector(rng, 5))
        assert check.passed and check.residual <= 1e-12

    def test_three_level(self, rng):
        model = three_level(0.3)
        pair = from_generator(model.T)
        check = frame_inequality_check(
            pair, explicit(model.eps), random_vector(rng, 3)
        )
        assert check.passed

    def test_projection_linear_weights(self, rng):
        model = projection_model(6, np.array([0.6, 0.8]), poly(1.0))
        pair = from_generator(model.T)
        for _ in range(10):
            check = frame_inequality_check(pair, poly(1.0), random_vector(rng, 6))
            assert check.passed
