import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatosc.oscillator1d import QPair, hamiltonian, ladder, psi_n, psi_nm
from quatosc.specfun import make_rule
from quatosc.wavestate import (
    Mode,
    PhysicalParams,
    QuadratureOrderWarning,
    WaveState,
    apply,
    d_dx,
    evaluate,
    expectation,
    expectation_quaternionic,
    inner,
    inner_quad,
    mul_x,
    right_i,
    scale,
    time_derivative,
    zero_state,
)

PI4 = math.pi ** -0.25


def bare_gaussian(params=None, slot=0, coeff=1.0 + 0j, freq=0.0):
    return WaveState(1, (Mode(slot, coeff, ((1.0 + 0j,),), freq),), params or PhysicalParams())


def random_eigenmode_combo(rng, n_max=8):
    """Real combination of the first oscillator eigenfunctions."""
    coeffs = rng.uniform(-1.0, 1.0, size=n_max + 1)
    coeffs /= np.linalg.norm(coeffs)
    state = zero_state()
    for n, c in enumerate(coeffs):
        state = state + float(c) * psi_n(n)
    return state


class TestPhysicalParams:
    def test_defaults(self):
        p = PhysicalParams()
        assert (p.mu, p.omega, p.hbar) == (1.0, 1.0, 1.0)
        assert p.alpha == 1.0

    @pytest.mark.parametrize("bad", [dict(mu=0.0), dict(omega=-1.0), dict(hbar=math.inf)])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            PhysicalParams(**bad)

    def test_alpha_scaling(self):
        p = PhysicalParams(mu=2.0, omega=8.0, hbar=4.0)
        assert p.alpha == pytest.approx(2.0)


class TestEvaluate:
    def test_zero_state(self):
        z = zero_state()
        for x in (-2.0, 0.0, 1.5):
            assert abs(evaluate(z, x, 0.7)) == 0.0

    def test_ground_state_at_origin(self):
        q = evaluate(psi_n(0), 0.0, 0.0)
        assert q.x0 == pytest.approx(PI4, abs=1e-15)
        assert (q.x1, q.x2, q.x3) == (0.0, 0.0, 0.0)

    def test_slot_one_lands_on_j(self):
        s = bare_gaussian(slot=1)
        q = evaluate(s, 0.0, 0.0)
        assert (q.x0, q.x1, q.x3) == (0.0, 0.0, 0.0)
        assert q.x2 == pytest.approx(1.0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            evaluate(psi_n(0), [0.0, 1.0], 0.0)


class TestApply:
    def test_derivative_of_gaussian(self):
        # d/dX of the bare Gaussian leaves polynomial -X
        out = apply(d_dx(), bare_gaussian())
        for x in np.linspace(-2, 2, 9):
            want = -x * math.exp(-0.5 * x * x)
            assert evaluate(out, x).x0 == pytest.approx(want, abs=1e-14)

    def test_derivative_matches_finite_differences(self):
        rng = np.random.default_rng(3)
        s = psi_nm(QPair(3, 2, 0.9))
        ds = apply(d_dx(), s)
        h = 1e-5
        for x in rng.uniform(-3.0, 3.0, size=20):
            numeric = (evaluate(s, x + h, 0.4) - evaluate(s, x - h, 0.4)) * (0.5 / h)
            assert abs(evaluate(ds, x, 0.4) - numeric) <= 1e-7

    def test_right_i_twice_is_minus_one(self):
        s = psi_nm(QPair(1, 2, 0.6))
        twice = apply(right_i(), apply(right_i(), s))
        minus = apply(scale(-1.0), s)
        for x in (-1.0, 0.3, 2.0):
            assert abs(evaluate(twice, x, 0.8) - evaluate(minus, x, 0.8)) <= 1e-15

    @pytest.mark.parametrize("n", range(11))
    def test_eigenfunctions_of_hamiltonian(self, n):
        s = psi_n(n)
        residual = apply(hamiltonian(), s) - (n + 0.5) * s
        assert residual.norm() <= 1e-11

    def test_operator_dim_out_of_range(self):
        with pytest.raises(ValueError):
            apply(d_dx(1), psi_n(0))


class TestInner:
    def test_ground_state_normalized_any_time(self):
        s = psi_n(0)
        for t in (0.0, 1.3, -4.0):
            assert inner(s, s, t) == pytest.approx(1.0, abs=1e-14)

    def test_odd_parity_orthogonality(self):
        assert inner(psi_n(0), psi_n(1), 0.0) == 0.0

    def test_slot_orthogonality(self):
        a = bare_gaussian(slot=0, coeff=PI4)
        b = bare_gaussian(slot=1, coeff=PI4)
        assert inner(a, b, 0.7) == 0.0

    def test_symmetry(self):
        rng = np.random.default_rng(11)
        for _ in range(5):
            a = random_eigenmode_combo(rng)
            b = random_eigenmode_combo(rng)
            t = rng.uniform(-2, 2)
            assert abs(inner(a, b, t) - inner(b, a, t)) <= 1e-13

    def test_positive_and_time_independent(self):
        rng = np.random.default_rng(5)
        s = random_eigenmode_combo(rng)
        base = inner(s, s, 0.0)
        assert base >= 0.0
        for t in rng.uniform(-5, 5, size=5):
            assert abs(inner(s, s, float(t)) - base) <= 1e-12

    @given(st.floats(min_value=-3.0, max_value=3.0, allow_nan=False))
    @settings(max_examples=40, deadline=None)
    def test_linear_in_real_scalings(self, c):
        a = psi_n(1)
        b = psi_nm(QPair(1, 0, 0.4))
        assert inner(c * a, b, 0.2) == pytest.approx(c * inner(a, b, 0.2), abs=1e-13)
        assert inner(a, c * b, 0.2) == pytest.approx(c * inner(a, b, 0.2), abs=1e-13)

    def test_params_mismatch_rejected(self):
        with pytest.raises(ValueError):
            inner(psi_n(0), psi_n(0, PhysicalParams(mu=2.0)), 0.0)

    def test_physical_units_jacobian(self):
        # normalization holds in physical units, not only natural ones
        p = PhysicalParams(mu=3.0, omega=0.5, hbar=2.0)
        assert inner(psi_n(4, p), psi_n(4, p), 1.0) == pytest.approx(1.0, abs=1e-13)


class TestInnerQuad:
    def test_agrees_with_moments(self):
        rules = [make_rule("gauss_hermite", 64)]
        for n in range(11):
            s = psi_n(n)
            assert abs(inner_quad(s, s, 0.0, rules) - inner(s, s, 0.0)) <= 1e-10

    def test_zero_state(self):
        z = zero_state()
        assert inner_quad(z, z, 0.0) == 0.0

    def test_normalization_at_late_time(self):
        s = psi_n(2)
        assert inner_quad(s, s, 5.0) == pytest.approx(1.0, abs=1e-10)

    def test_insufficient_order_warns(self):
        s = psi_n(12)
        rules = [make_rule("gauss_hermite", 6)]
        with pytest.warns(QuadratureOrderWarning):
            inner_quad(s, s, 0.0, rules)

    def test_requires_hermite_rules(self):
        with pytest.raises(ValueError):
            inner_quad(psi_n(0), psi_n(0), 0.0, [make_rule("gauss_legendre", 16)])

    def test_requires_one_rule_per_dimension(self):
        with pytest.raises(ValueError):
            inner_quad(psi_n(0), psi_n(0), 0.0, [make_rule("gauss_hermite", 16)] * 2)


class TestExpectation:
    def test_position_odd(self):
        s = psi_nm(QPair(2, 3, 0.8))
        assert abs(expectation(mul_x(), s, 0.0)) <= 1e-14

    @pytest.mark.parametrize("n", range(6))
    def test_energy_eigenvalues(self, n):
        assert expectation(hamiltonian(), psi_n(n), 0.0) == pytest.approx(n + 0.5, abs=1e-12)

    def test_mixed_state_energy(self):
        s = psi_nm(QPair(1, 2, math.pi / 4))
        e = expectation(hamiltonian(), s, 0.0)
        assert e == pytest.approx(2.0, abs=1e-12)
        # quadrature oracle for the same number
        quad = inner_quad(apply(hamiltonian(), s), s, 0.0)
        assert abs(e - quad) <= 1e-10

    def test_rejects_unnormalized(self):
        s = 2.0 * psi_n(0)
        with pytest.raises(ValueError):
            expectation(mul_x(), s, 0.0)
        assert expectation(mul_x(), s, 0.0, check_norm=False) == pytest.approx(0.0, abs=1e-13)


class TestExpectationQuaternionic:
    @pytest.mark.parametrize("make_op", [hamiltonian, mul_x])
    def test_hermitian_second_term_vanishes(self, make_op):
        s = psi_nm(QPair(2, 1, 0.7))
        total, first, second = expectation_quaternionic(make_op(), s, 0.6)
        assert abs(second) <= 1e-10
        assert total == pytest.approx(first, abs=1e-10)

    def test_right_i_alone(self):
        total, first, second = expectation_quaternionic(right_i(), psi_n(0), 0.0)
        assert first == pytest.approx(0.0, abs=1e-14)
        assert second == pytest.approx(-1.0, abs=1e-14)
        assert total == pytest.approx(-1.0, abs=1e-14)


class TestTimeDerivative:
    def test_static_mode_gives_zero(self):
        s = bare_gaussian(freq=0.0)
        d = time_derivative(s)
        assert d.norm() == 0.0

    def test_slot0_phase_factor(self):
        for n in (0, 3):
            s = psi_n(n)
            d = time_derivative(s)
            z0, _ = evaluate(d, 0.7, 1.1).to_symplectic()
            w0, _ = evaluate(s, 0.7, 1.1).to_symplectic()
            assert z0 == pytest.approx(-1j * (n + 0.5) * w0, abs=1e-14)

    def test_slot1_phase_factor(self):
        s = psi_nm(QPair(0, 2, math.pi / 2))
        d = time_derivative(s)
        _, z1 = evaluate(d, 0.4, 0.9).to_symplectic()
        _, w1 = evaluate(s, 0.4, 0.9).to_symplectic()
        assert z1 == pytest.approx(1j * 2.5 * w1, abs=1e-14)

    def test_matches_finite_differences(self):
        s = psi_nm(QPair(2, 1, 0.5))
        d = time_derivative(s)
        h = 1e-6
        for x, t in [(-1.2, 0.0), (0.5, 2.2), (1.8, -0.7)]:
            numeric = (evaluate(s, x, t + h) - evaluate(s, x, t - h)) * (0.5 / h)
            assert abs(evaluate(d, x, t) - numeric) <= 1e-7


class TestLadderCommutator:
    def test_identity_action(self):
        lower, raise_ = ladder("lower"), ladder("raise")
        for n in range(21):
            s = psi_n(n)
            comm = apply(lower, apply(raise_, s)) - apply(raise_, apply(lower, s))
            assert (comm - s).norm() <= 1e-10


class TestAdditionAndMerge:
    def test_merge_preserves_evaluations(self):
        a = psi_nm(QPair(1, 0, 0.3))
        b = psi_nm(QPair(1, 2, 1.1))
        summed = a + b
        for x in np.linspace(-3, 3, 13):
            direct = evaluate(a, x, 0.8) + evaluate(b, x, 0.8)
            assert abs(evaluate(summed, x, 0.8) - direct) <= 1e-14

    def test_cancellation_produces_zero_state(self):
        s = psi_n(2)
        assert (s - s).modes == ()

    def test_mismatched_dims_rejected(self):
        one = psi_n(0)
        two = WaveState(2, (), PhysicalParams())
        with pytest.raises(ValueError):
            one + two
