import numpy as np
import pytest

from skewcoh.bases import amub_basis
from skewcoh.channels import (
    CHANNEL_KINDS,
    COEFFICIENT_POWERS,
    KrausChannel,
    apply_product_channel,
    channel_as_kraus,
    dynamics_curve,
    gad_reduced,
    make_channel,
    predicted_coefficients,
)
from skewcoh.coherence import coherence
from skewcoh.linalg import EYE2, SIGMA3, dagger
from skewcoh.states import (
    BellDiagonalParams,
    DensityMatrix,
    bell_diagonal,
    correlation_coefficients,
    local_bloch_vectors,
)

FIG_PARAMS = (BellDiagonalParams(-0.2, 0.6, 0.6), BellDiagonalParams(-0.6, 0.2, 0.2))


def random_state(rng):
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m = b.conj().T @ b
    return DensityMatrix(m / np.trace(m).real)


class TestMakeChannel:
    def test_flip_at_zero_is_identity(self):
        channel = make_channel("BF", 0.0)
        rho = bell_diagonal(FIG_PARAMS[0])
        assert np.allclose(apply_product_channel(channel, rho).matrix, rho.matrix, atol=1e-15)

    def test_pf_operators(self):
        p = 0.3
        channel = make_channel("PF", p)
        assert np.allclose(channel.operators[0], np.sqrt(1 - p / 2) * EYE2)
        assert np.allclose(channel.operators[1], np.sqrt(p / 2) * SIGMA3)

    @pytest.mark.parametrize("p,gamma", [(0.0, 0.0), (0.3, 0.45), (1.0, 1.0), (0.5, 0.2)])
    def test_gad_completeness(self, p, gamma):
        channel = make_channel("GAD", p, gamma)
        assert len(channel.operators) == 4
        total = sum(dagger(e) @ e for e in channel.operators)
        assert np.abs(total - EYE2).max() <= 1e-12

    def test_parameter_validation(self):
        with pytest.raises(ValueError, match="gamma"):
            make_channel("GAD", 0.5)
        with pytest.raises(ValueError, match="no gamma"):
            make_channel("BF", 0.5, gamma=0.1)
        with pytest.raises(ValueError, match="outside"):
            make_channel("PF", 1.5)
        with pytest.raises(ValueError, match="unknown channel"):
            make_channel("AD", 0.5)

    def test_incomplete_kraus_rejected(self):
        with pytest.raises(ValueError, match="complete"):
            KrausChannel(label="BF", operators=(EYE2, EYE2), p=0.0)


class TestProductChannel:
    def test_trace_preserved(self, rng):
        for kind in CHANNEL_KINDS:
            channel = channel_as_kraus(kind, 0.37)
            moved = apply_product_channel(channel, random_state(rng))
            assert abs(np.trace(moved.matrix) - 1.0) <= 1e-12

    def test_bf_coefficient_map(self):
        p = 0.3
        moved = apply_product_channel(make_channel("BF", p), bell_diagonal(FIG_PARAMS[0]))
        c1, c2, c3 = FIG_PARAMS[0].triple
        got = correlation_coefficients(moved)
        assert got == pytest.approx((c1, c2 * (1 - p) ** 2, c3 * (1 - p) ** 2), abs=1e-12)

    def test_gad_half_mixing_map(self):
        gamma = 0.45
        moved = apply_product_channel(make_channel("GAD", 0.5, gamma), bell_diagonal(FIG_PARAMS[0]))
        c1, c2, c3 = FIG_PARAMS[0].triple
        got = correlation_coefficients(moved)
        assert got == pytest.approx((c1 * (1 - gamma), c2 * (1 - gamma), c3 * (1 - gamma) ** 2), abs=1e-12)

    def test_form_preserved(self):
        for kind in CHANNEL_KINDS:
            moved = apply_product_channel(channel_as_kraus(kind, 0.3), bell_diagonal(FIG_PARAMS[1]))
            r_vec, s_vec = local_bloch_vectors(moved)
            assert np.abs(r_vec).max() <= 1e-12
            assert np.abs(s_vec).max() <= 1e-12

    def test_gad_off_half_mixing_breaks_form(self):
        # away from mixing 1/2 the output grows local Bloch components, so
        # the declarative map is only claimed at 1/2
        moved = apply_product_channel(make_channel("GAD", 0.9, 0.5), bell_diagonal(FIG_PARAMS[0]))
        r_vec, _ = local_bloch_vectors(moved)
        assert np.abs(r_vec).max() > 1e-3

    def test_wrong_dimension(self):
        single = DensityMatrix(np.eye(2) / 2)
        with pytest.raises(ValueError, match="two-qubit"):
            apply_product_channel(make_channel("BF", 0.1), single)


class TestPredictedCoefficients:
    def test_pf_row(self):
        c = BellDiagonalParams(0.4, -0.2, 0.3)
        p = 0.25
        got = predicted_coefficients("PF", c, p)
        assert got.triple == pytest.approx((0.4 * 0.75**2, -0.2 * 0.75**2, 0.3))

    @pytest.mark.parametrize("kind", CHANNEL_KINDS)
    def test_identity_at_zero(self, kind):
        c = BellDiagonalParams(0.4, -0.2, 0.3)
        assert predicted_coefficients(kind, c, 0.0).triple == c.triple

    def test_bpf_at_one(self):
        c = BellDiagonalParams(0.4, -0.2, 0.3)
        assert predicted_coefficients("BPF", c, 1.0).triple == pytest.approx((0.0, -0.2, 0.0))

    def test_powers_table_shape(self):
        assert set(COEFFICIENT_POWERS) == set(CHANNEL_KINDS)
        assert all(len(v) == 3 for v in COEFFICIENT_POWERS.values())


class TestDynamicsCurve:
    def test_pf_and_gad_die_at_one(self):
        basis = amub_basis("a1")
        for params in FIG_PARAMS:
            for kind in ("PF", "GAD"):
                curve = dynamics_curve(kind, params, basis, [0.0, 1.0])
                assert curve[-1][1] <= 1e-12

    def test_starts_at_input_coherence(self):
        basis = amub_basis("a1")
        for kind in CHANNEL_KINDS:
            curve = dynamics_curve(kind, FIG_PARAMS[0], basis, [0.0, 0.5])
            assert curve[0][1] == pytest.approx(coherence(bell_diagonal(FIG_PARAMS[0]), basis), abs=1e-12)

    def test_monotone_decrease(self):
        basis = amub_basis("a1")
        grid = np.linspace(0.0, 1.0, 101)
        for params in FIG_PARAMS:
            for kind in CHANNEL_KINDS:
                values = np.array([v for _, v in dynamics_curve(kind, params, basis, grid)])
                assert np.diff(values).max() <= 1e-10

    def test_matches_kraus_route(self):
        basis = amub_basis("a2")
        state = bell_diagonal(FIG_PARAMS[1])
        for kind in CHANNEL_KINDS:
            for p in (0.2, 0.7):
                (_, predicted), = dynamics_curve(kind, FIG_PARAMS[1], basis, [p])
                moved = apply_product_channel(channel_as_kraus(kind, p), state)
                assert predicted == pytest.approx(coherence(moved, basis), abs=1e-12)

    def test_grid_validation(self):
        with pytest.raises(ValueError, match="outside"):
            dynamics_curve("BF", FIG_PARAMS[0], amub_basis("a1"), [0.0, 1.5])


def test_gad_reduced_matches_explicit():
    assert np.allclose(
        np.array(gad_reduced(0.3).operators), np.array(make_channel("GAD", 0.5, 0.3).operators)
    )
