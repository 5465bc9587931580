import numpy as np
import pytest

from conftest import random_pair, random_vector
from rieszops import (
    build_bundle,
    build_ladder,
    check_commutator,
    check_ladder_actions,
    check_ladder_adjoints,
    check_products,
    explicit,
    factorize_from_alpha,
    from_generator,
    sqrt_poly,
)
from rieszops.models import projection_model, three_level
from rieszops.sequences import poly


def three_level_ladder(t=0.3):
    model = three_level(t)
    pair = from_generator(model.T)
    return model, pair, build_ladder(pair, model.gamma)


def bosonic_ladder(dim):
    pair = from_generator(np.eye(dim, dtype=complex))
    return pair, build_ladder(pair, sqrt_poly(1.0))


class TestBuildLadder:
    def test_three_level_lowering_actions(self):
        model, _, lp = three_level_ladder()
        g = model.gamma.terms(3)
        assert np.linalg.norm(lp.A_phi_psi @ model.phi[0]) <= 1e-12
        assert (
            np.linalg.norm(lp.A_phi_psi @ model.phi[1] - g[1] * model.phi[0]) <= 1e-12
        )
        assert (
            np.linalg.norm(lp.A_phi_psi @ model.phi[2] - g[2] * model.phi[1]) <= 1e-12
        )

    def test_three_level_raising_actions(self):
        model, _, lp = three_level_ladder()
        g = model.gamma.terms(3)
        assert (
            np.linalg.norm(lp.B_phi_psi @ model.phi[0] - g[1] * model.phi[1]) <= 1e-12
        )
        assert (
            np.linalg.norm(lp.B_phi_psi @ model.phi[1] - g[2] * model.phi[2]) <= 1e-12
        )
        assert np.linalg.norm(lp.B_phi_psi @ model.phi[2]) <= 1e-12

    def test_bosonic_matrices(self):
        _, lp = bosonic_ladder(6)
        expected_a = np.diag(np.sqrt(np.arange(1, 6)), k=1)
        expected_b = np.diag(np.sqrt(np.arange(1, 6)), k=-1)
        np.testing.assert_allclose(lp.A_phi_psi, expected_a, atol=1e-14)
        np.testing.assert_allclose(lp.B_phi_psi, expected_b, atol=1e-14)

    def test_interior_bookkeeping(self):
        pair, lp = bosonic_ladder(6)
        assert lp.interior == range(5)
        assert lp.gamma0_warning == ""

    def test_gamma0_warning_recorded(self):
        pair = random_pair(4, 2)
        lp = build_ladder(pair, explicit([0.5, 1.0, 2.0, 3.0]))
        assert "gamma_0" in lp.gamma0_warning
        check = check_products(lp)
        assert check.passed
        assert "skip index 0" in check.note

    def test_action_check_random_pair(self):
        pair = random_pair(8, 14)
        lp = build_ladder(pair, sqrt_poly(1.0))
        check = check_ladder_actions(lp)
        assert check.passed and check.residual <= 1e-10


class TestLadderAdjoints:
    def test_three_level_adjoint_actions(self):
        model, _, lp = three_level_ladder()
        g = model.gamma.terms(3)
        b_adj = lp.B_phi_psi.conj().T
        a_adj = lp.A_phi_psi.conj().T
        assert np.linalg.norm(b_adj @ model.psi[0]) <= 1e-12
        assert np.linalg.norm(b_adj @ model.psi[1] - g[1] * model.psi[0]) <= 1e-12
        assert np.linalg.norm(b_adj @ model.psi[2] - g[2] * model.psi[1]) <= 1e-12
        assert np.linalg.norm(a_adj @ model.psi[0] - g[1] * model.psi[1]) <= 1e-12
        assert np.linalg.norm(a_adj @ model.psi[1] - g[2] * model.psi[2]) <= 1e-12
        assert np.linalg.norm(a_adj @ model.psi[2]) <= 1e-12

    def test_identity_generator_real_gamma_exact(self):
        _, lp = bosonic_ladder(5)
        assert np.abs(lp.A_phi_psi.conj().T - lp.B_psi_phi).max() == 0.0

    def test_random_complex_gamma_dim_16(self):
        pair = random_pair(16, 6)
        rng = np.random.default_rng(61)
        lp = build_ladder(pair, explicit(random_vector(rng, 16)))
        check = check_ladder_adjoints(lp)
        assert check.passed and check.residual <= 1e-10

    def test_all_four_variants(self):
        pair = random_pair(8, 62)
        rng = np.random.default_rng(62)
        gamma = explicit(random_vector(rng, 8))
        lp = build_ladder(pair, gamma)
        conj = build_ladder(pair, gamma.conjugate())
        assert np.abs(lp.A_phi_psi.conj().T - conj.B_psi_phi).max() <= 1e-10
        assert np.abs(lp.A_psi_phi.conj().T - conj.B_phi_psi).max() <= 1e-10
        assert np.abs(lp.B_phi_psi.conj().T - conj.A_psi_phi).max() <= 1e-10
        assert np.abs(lp.B_psi_phi.conj().T - conj.A_phi_psi).max() <= 1e-10


class TestProducts:
    def test_three_level_factorizes_exactly(self):
        model, _, lp = three_level_ladder()
        # gamma_3 is absent at dim 3, so BA = H on the full matrix
        assert np.abs(lp.B_phi_psi @ lp.A_phi_psi - model.H).max() <= 1e-11

    def test_three_level_hat_eigenvalues(self):
        model, _, lp = three_level_ladder()
        hat = lp.A_phi_psi @ lp.B_phi_psi
        eps_tilde = (model.eps[1], model.eps[2], 0.0)
        for n in range(3):
            assert (
                np.linalg.norm(hat @ model.phi[n] - eps_tilde[n] * model.phi[n])
                <= 1e-11
            )

    def test_bosonic_number_operator(self):
        _, lp = bosonic_ladder(6)
        ba = lp.B_phi_psi @ lp.A_phi_psi
        ab = lp.A_phi_psi @ lp.B_phi_psi
        np.testing.assert_allclose(ba, np.diag(np.arange(6.0)), atol=1e-13)
        np.testing.assert_allclose(
            ab[:5, :5], np.diag(np.arange(1.0, 6.0)), atol=1e-13
        )

    def test_product_check_random_monotone(self):
        pair = random_pair(8, 63)
        lp = build_ladder(pair, sqrt_poly(1.0))
        check = check_products(lp)
        assert check.passed and check.residual <= 1e-10
        assert "matrix-level" in check.note

    def test_non_monotone_gamma_runs_action_checks_only(self):
        pair = random_pair(4, 64)
        lp = build_ladder(pair, explicit([0.0, 2.0, 1.0, 3.0]))
        check = check_products(lp)
        assert check.passed
        assert "skipped: gamma not" in check.note


class TestCommutator:
    def test_bosonic_canonical_commutation(self):
        _, lp = bosonic_ladder(8)
        f = np.eye(8)[3].astype(complex)
        check = check_commutator(lp, f)
        assert check.passed
        comm = lp.A_phi_psi @ lp.B_phi_psi - lp.B_phi_psi @ lp.A_phi_psi
        np.testing.assert_allclose(comm @ f, f, atol=1e-12)

    def test_three_level_ground_state(self):
        model, _, lp = three_level_ladder()
        comm = lp.A_phi_psi @ lp.B_phi_psi - lp.B_phi_psi @ lp.A_phi_psi
        expected = model.eps[1] * model.phi[0]
        assert np.linalg.norm(comm @ model.phi[0] - expected) <= 1e-11
        assert check_commutator(lp, model.phi[0]).passed

    def test_projection_pair_random_interior(self, rng):
        model = projection_model(8, np.array([0.6, 0.8j]), poly(1.0))
        pair = from_generator(model.T)
        lp = build_ladder(pair, sqrt_poly(1.0))
        f = pair.phi[:, :7] @ random_vector(rng, 7)
        check = check_commutator(lp, f)
        assert check.passed and check.residual <= 1e-10

    def test_rejects_vector_outside_interior_span(self):
        pair, lp = bosonic_ladder(5)
        with pytest.raises(ValueError, match="interior span"):
            check_commutator(lp, pair.phi[:, 4])

    def test_rejects_non_monotone_gamma(self, rng):
        pair = random_pair(4, 65)
        lp = build_ladder(pair, explicit([0.0, 2.0, 1.0, 3.0]))
        with pytest.raises(ValueError, match="monotone"):
            check_commutator(lp, random_vector(rng, 4))


class TestFactorizeFromAlpha:
    def test_three_level(self):
        model = three_level(0.3)
        pair = from_generator(model.T)
        bundle = build_bundle(pair, explicit(model.eps))
        lp = factorize_from_alpha(bundle)
        np.testing.assert_allclose(
            lp.gamma.terms(3), model.gamma.terms(3), atol=1e-12
        )
        assert np.abs(lp.B_phi_psi @ lp.A_phi_psi - model.H).max() <= 1e-11

    def test_bosonic(self):
        pair = from_generator(np.eye(6, dtype=complex))
        bundle = build_bundle(pair, poly(1.0))
        lp = factorize_from_alpha(bundle)
        np.testing.assert_allclose(
            lp.B_phi_psi @ lp.A_phi_psi, np.diag(np.arange(6.0)), atol=1e-12
        )

    def test_rejects_disordered_alpha(self):
        pair = random_pair(3, 66)
        bundle = build_bundle(pair, explicit([0.0, 2.0, 1.0]))
        with pytest.raises(ValueError, match="index 2"):
            factorize_from_alpha(bundle)

    def test_rejects_nonzero_start(self):
        pair = random_pair(3, 67)
        bundle = build_bundle(pair, explicit([1.0, 2.0, 3.0]))
        with pytest.raises(ValueError, match="alpha_0"):
            factorize_from_alpha(bundle)

    def test_rejects_complex_alpha(self):
        pair = random_pair(3, 68)
        bundle = build_bundle(pair, explicit([0.0, 1j, 2.0]))
        with pytest.raises(ValueError, match="not real"):
            factorize_from_alpha(bundle)
