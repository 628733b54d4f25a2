"""Tests for dual numbers, observables and their gradients."""

from __future__ import annotations

import math

import numpy as np
import pytest

from staeckel_systems.autodiff.dual import Dual, seed_duals, sqrt, value_of
from staeckel_systems.autodiff.observable import Observable, fd_gradient, gradient
from staeckel_systems.errors import DomainViolation, InvalidParameter
from staeckel_systems.integrals.catalog import hamiltonian_observable
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.models.system import q_norm

from conftest import CURVED_SYSTEMS, build


# ── Helpers ──────────────────────────────────────────────────────────

def _obs(func, dim=2, label="f"):
    return Observable(label=label, dim=dim, func=func)


# ── Dual numbers ─────────────────────────────────────────────────────

class TestDual:

    def test_product_rule(self):
        x, y = seed_duals(np.array([2.0, 3.0]))
        out = x * y + x
        assert out.value == 8.0
        assert list(out.tangent) == [4.0, 2.0]

    def test_quotient_rule(self):
        x, y = seed_duals(np.array([1.0, 2.0]))
        out = x / y
        assert out.value == 0.5
        assert list(out.tangent) == pytest.approx([0.5, -0.25])

    def test_reverse_operands(self):
        (x,) = seed_duals(np.array([4.0]))
        assert list((1.0 / x).tangent) == pytest.approx([-1.0 / 16.0])
        assert list((3.0 - x).tangent) == pytest.approx([-1.0])

    def test_sqrt_and_power(self):
        (x,) = seed_duals(np.array([4.0]))
        root = sqrt(x)
        assert root.value == 2.0
        assert list(root.tangent) == pytest.approx([0.25])
        assert list((x ** 3).tangent) == pytest.approx([48.0])

    def test_float_passthrough(self):
        assert sqrt(9.0) == 3.0
        assert value_of(2) == 2.0
        assert value_of(Dual(1.5, np.zeros(2))) == 1.5


# ── Gradients ────────────────────────────────────────────────────────

class TestGradient:

    def test_mixed_monomial(self):
        obs = _obs(lambda q, p: q[0] * p[1])
        g = gradient(obs, PhaseState(q=(1.0, 2.0), p=(3.0, 4.0)))
        assert g.dq == (4.0, 0.0)
        assert g.dp == (0.0, 1.0)

    def test_radius(self):
        obs = _obs(lambda q, p: q_norm(q))
        g = gradient(obs, PhaseState(q=(3.0, 4.0), p=(0.0, 0.0)))
        assert g.dq == pytest.approx((0.6, 0.8))
        assert g.dp == (0.0, 0.0)

    def test_curved_kc_hamiltonian(self):
        ham = hamiltonian_observable(build("curved-kc", 2, alpha=0.0))
        g = gradient(ham, PhaseState(q=(1.0, 0.0), p=(0.0, 1.0)))
        assert g.dq == pytest.approx((-1.0, 0.0))
        assert g.dp == pytest.approx((0.0, 1.0))

    def test_constant_has_zero_gradient(self):
        g = gradient(Observable.constant(3.0, 2), PhaseState(q=(1.0, 1.0), p=(0.0, 0.0)))
        assert g.norm_inf() == 0.0

    def test_domain_guard_propagates(self):
        ham = hamiltonian_observable(build("curved-kc", 2))
        with pytest.raises(DomainViolation):
            gradient(ham, PhaseState(q=(0.0, 0.0), p=(1.0, 0.0)))


class TestFiniteDifferenceGradient:

    def test_quadratic_in_momentum(self):
        obs = _obs(lambda q, p: p[0] * p[0])
        g = fd_gradient(obs, PhaseState(q=(0.0, 0.0), p=(2.0, 0.0)))
        assert g.dp[0] == pytest.approx(4.0, abs=1e-9)

    def test_inverse_square(self):
        obs = _obs(lambda q, p: 1.0 / (q[0] * q[0] + q[1] * q[1]))
        g = fd_gradient(obs, PhaseState(q=(1.0, 0.0), p=(0.0, 0.0)))
        assert g.dq[0] == pytest.approx(-2.0, abs=1e-6)

    def test_non_positive_step(self):
        with pytest.raises(InvalidParameter):
            fd_gradient(_obs(lambda q, p: q[0]), PhaseState(q=(1.0, 0.0), p=(0.0, 0.0)), h=0.0)

    @pytest.mark.parametrize("name", CURVED_SYSTEMS)
    def test_agrees_with_exact(self, name):
        spec = build(name, 3)
        ham = hamiltonian_observable(spec)
        for x in sample_points(spec, 5, seed=4, r_min_margin=0.2):
            exact = gradient(ham, x).as_array()
            approx = fd_gradient(ham, x).as_array()
            scale = 1.0 + np.max(np.abs(exact))
            assert np.max(np.abs(exact - approx)) <= 1e-6 * scale

    def test_nan_free_on_sqrt_branch(self):
        g = gradient(_obs(lambda q, p: q_norm(q)), PhaseState(q=(1e-3, 0.0), p=(0.0, 0.0)))
        assert not any(math.isnan(v) for v in g.dq)
