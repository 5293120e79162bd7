import math

import numpy as np
import pytest

from autocomplexity.exceptions import DomainError, InvalidAlphabet
from autocomplexity.measures import (
    bound_constants,
    bounds_table,
    delta,
    entropy,
    entropy_gap,
    entropy_inv,
    log2_binomial,
    phi,
    psi,
    scaled_entropy,
    u_bound,
    u_inverse,
)


class TestEntropy:
    @pytest.mark.parametrize("p,expected", [(0, 0.0), (1, 0.0), (0.5, 1.0), (0.25, 0.8112781244591328)])
    def test_values(self, p, expected):
        assert entropy(p) == pytest.approx(expected, abs=1e-15)

    def test_array(self):
        values = entropy(np.array([0.0, 0.5, 1.0]))
        assert isinstance(values, np.ndarray)
        np.testing.assert_allclose(values, [0.0, 1.0, 0.0])

    @pytest.mark.parametrize("p", [-0.1, 1.1, float("nan")])
    def test_domain(self, p):
        with pytest.raises(DomainError):
            entropy(p)

    def test_scaled(self):
        assert scaled_entropy(0.5, 4) == pytest.approx(0.5)

    @pytest.mark.parametrize("x", np.linspace(0, 0.5, 26))
    def test_inverse(self, x):
        assert entropy_inv(entropy(x)) == pytest.approx(x, abs=1e-9)

    @pytest.mark.parametrize("y", [-0.01, 1.01])
    def test_inverse_domain(self, y):
        with pytest.raises(DomainError):
            entropy_inv(y)

    def test_binomial_approximation(self):
        assert log2_binomial(10, 3) == pytest.approx(math.log2(120))
        for n in range(1, 61):
            assert all(entropy_gap(n, k) <= math.log2(n + 1) + 1e-9 for k in range(n + 1))
        with pytest.raises(DomainError):
            log2_binomial(3, 4)

    @pytest.mark.parametrize("n", [2**e for e in range(1, 13)] + [2**12 - 1])
    def test_binomial_gap_is_logarithmic(self, n):
        gaps = [entropy_gap(n, k) for k in range(n + 1)]
        assert max(gaps) <= math.log2(n + 1) + 1e-9
        assert gaps[0] == gaps[n] == 0


class TestBoundConstants:
    def test_binary(self):
        k = bound_constants(2)
        assert k.c_b == 2.0
        assert k.L_b == pytest.approx(math.sqrt(3) / 2)
        assert k.alpha_b == pytest.approx(3.79994, abs=5e-5)
        assert k.a1 == pytest.approx(0.3546, abs=1e-4)
        assert k.a2 == pytest.approx(0.6428, abs=1e-4)
        assert k.T(0.1) == pytest.approx(0.2 / k.L_b)

    def test_slope_is_entropy_derivative(self):
        q = 0.5 - math.sqrt(3) / 4
        assert bound_constants(2).alpha_b == pytest.approx(math.log2((1 - q) / q), abs=1e-4)

    @pytest.mark.parametrize("b", [3, 4, 10])
    def test_larger_alphabets(self, b):
        k = bound_constants(b)
        assert 0 < k.a1 < k.a2 < 1
        assert k.as_dict()["b"] == b

    def test_unary_alphabet(self):
        with pytest.raises(InvalidAlphabet):
            bound_constants(1)


class TestUpperBound:
    def test_endpoints(self):
        assert u_bound(0) == 0.5
        assert u_bound(1) == 0

    @pytest.mark.parametrize("b", [2, 3])
    def test_continuity(self, b):
        k = bound_constants(b)
        for a in (k.a1, k.a2):
            assert u_bound(a - 1e-9, b) == pytest.approx(u_bound(a + 1e-9, b), abs=1e-7)
        assert u_bound(k.a1, b) == pytest.approx(k.L_b / 2, abs=1e-9)

    def test_nonincreasing(self):
        values = [u_bound(a) for a in np.linspace(0, 1, 201)]
        assert all(x >= y - 1e-12 for x, y in zip(values, values[1:]))

    @pytest.mark.parametrize("a", [-0.1, 1.5])
    def test_domain(self, a):
        with pytest.raises(DomainError):
            u_bound(a)

    @pytest.mark.parametrize("p", np.linspace(0.01, 0.5, 50))
    def test_psi_inverts_u(self, p):
        assert u_bound(psi(p)) == pytest.approx(p, abs=1e-8)
        assert u_inverse(p) == psi(p)

    def test_uncapped_psi(self):
        k = bound_constants(2)
        assert psi(0, trivial_cap=False) == k.c_b
        assert psi(0) == 1
        for p in np.linspace(0.01, 0.5, 50):
            assert psi(p, trivial_cap=False) == pytest.approx(phi(min(1.0, k.T(p)), p), abs=1e-12)

    def test_psi_domain(self):
        with pytest.raises(DomainError):
            psi(0.6)


class TestExponents:
    def test_phi_at_full_share(self):
        assert phi(1.0, 0.2) == pytest.approx(entropy(0.3))

    @pytest.mark.parametrize("T,p", [(0.1, 0.1), (1.2, 0.1), (0.5, 0.6)])
    def test_phi_domain(self, T, p):
        with pytest.raises(DomainError):
            phi(T, p)

    def test_delta_is_maximized_by_equal_shares(self):
        p, T, r = 0.1, 0.6, 0.2
        centre = delta(T / 2, T / 2, r, p)
        for eps in np.linspace(0.01, 0.19, 19):
            assert delta(T / 2 + eps, T / 2 - eps, r, p) < centre

    @pytest.mark.parametrize("b", [2, 3])
    @pytest.mark.parametrize("T", [0.2, 0.4, 0.6])
    def test_delta_stationary_in_r(self, b, T):
        p, step = 0.1, 1e-4
        r = (1 - T) * b / (b + 2)
        slope = (delta(T / 2, T / 2, r + step, p, b) - delta(T / 2, T / 2, r - step, p, b)) / (2 * step)
        assert abs(slope) < 1e-6

    @pytest.mark.parametrize("p", [0.05, 0.1, 0.15, 0.2])
    def test_phi_increases_below_threshold(self, p):
        T_p, step = bound_constants(2).T(p), 1e-5
        for T in np.linspace(2 * p + 0.01, 1.0 - step, 80):
            if abs(T - T_p) < 0.005:
                continue
            slope = (phi(T + step, p) - phi(T - step, p)) / (2 * step)
            assert (slope > 0) == (T < T_p)

    def test_delta_domain(self):
        with pytest.raises(DomainError):
            delta(0.05, 0.5, 0.1, 0.1)
        with pytest.raises(DomainError):
            delta(0.3, 0.3, 0.5, 0.1)


class TestBoundsTable:
    def test_samples(self):
        table = bounds_table(11)
        assert list(table.columns) == ["a", "u", "p", "psi"]
        assert len(table) == 11
        assert table.u.iloc[0] == 0.5
        assert table.u.iloc[-1] == 0
        assert table.psi.iloc[0] == 1

    def test_grid_too_small(self):
        with pytest.raises(ValueError):
            bounds_table(1)
