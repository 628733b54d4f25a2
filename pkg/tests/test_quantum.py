"""Tests for normal-ordered operators and the quantum symmetry checks."""

from __future__ import annotations

import pytest
import sympy

from staeckel_systems.errors import IncompatibleKind, InvalidParameter, UnsupportedDimension
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.quantum.operator import (
    WeylOperator,
    commutator,
    op_compose,
    p_hat,
    q_hat,
    scalar,
    zero,
)
from staeckel_systems.quantum.symbols import ALPHA, HBAR, R, q_symbol
from staeckel_systems.quantum.systems import (
    build_quantum_system,
    canonical_relations,
    quantum_verdicts,
    sum_identity,
)
from staeckel_systems.quantum.zero_test import classical_symbol, is_zero, zero_residual

from conftest import CURVED_SYSTEMS, build


# ── Helpers ──────────────────────────────────────────────────────────

D1 = WeylOperator(2, {(1, 0): 1})


# ── Operator algebra ─────────────────────────────────────────────────

class TestComposition:

    def test_leibniz_on_position(self):
        out = D1 * q_hat(0, 2)
        assert out.terms == {(1, 0): q_symbol(0), (0, 0): 1}

    def test_radius_is_differentiated(self):
        out = WeylOperator(2, {(1, 0): 1 / R}) * scalar(R, 2)
        assert out.terms == {(1, 0): 1, (0, 0): q_symbol(0) / R ** 2}

    def test_canonical_commutator(self):
        out = commutator(q_hat(0, 2), p_hat(0, 2))
        assert out.terms == {(0, 0): sympy.I * HBAR}

    def test_compose_is_associative(self):
        a = WeylOperator(2, {(1, 0): 1 / R})
        b = WeylOperator(2, {(0, 1): q_symbol(0)})
        c = scalar(R ** 2, 2)
        left = op_compose(op_compose(a, b), c)
        right = op_compose(a, op_compose(b, c))
        assert is_zero(left - right)
        assert op_compose(D1, q_hat(0, 2)) == D1 * q_hat(0, 2)

    def test_scalar_on_left_rescales(self):
        out = 3 * D1
        assert out.terms == {(1, 0): 3}
        assert out.order == 1

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidParameter):
            D1 + q_hat(0, 3)

    def test_bad_multi_index(self):
        with pytest.raises(InvalidParameter):
            WeylOperator(2, {(1,): 1})


class TestZeroTest:

    def test_zero_operator(self):
        assert is_zero(zero(2))

    def test_planck_constant_is_not_zero(self):
        assert not is_zero(scalar(sympy.I * HBAR, 2))

    @pytest.mark.parametrize("dim", [2, 3])
    def test_canonical_relations(self, dim):
        for name, op in canonical_relations(dim).items():
            assert is_zero(op), name

    def test_needs_enough_points(self):
        with pytest.raises(InvalidParameter):
            zero_residual(zero(2), confidence_points=10)

    def test_reproducible_for_seed(self):
        op = commutator(scalar(1 / R, 2), p_hat(1, 2))
        assert zero_residual(op, seed=3) == zero_residual(op, seed=3)
        assert zero_residual(op, seed=3) > 0.0


# ── Quantum systems ──────────────────────────────────────────────────

class TestQuantumSystems:

    @pytest.mark.parametrize("dim", [2, 3])
    @pytest.mark.parametrize("name", CURVED_SYSTEMS)
    def test_all_relations_hold(self, name, dim):
        system = build_quantum_system(build(name, dim))
        verdicts = quantum_verdicts(system)
        assert {v.kind for v in verdicts} == {"canonical", "commutator", "identity"}
        assert [v.name for v in verdicts if not v.passed] == []

    def test_symmetry_labels(self):
        kc = build_quantum_system(build("curved-kc", 3))
        assert sorted(kc.symmetries) == ["St_1_1", "St_1_2", "St_1_3", "St_2_2", "St_2_3", "St_3_3"]
        assert "L2" in kc.angular
        tn = build_quantum_system(build("taubnut", 2))
        assert sorted(tn.symmetries) == ["St_1", "St_2"]

    def test_momentum_is_not_conserved(self):
        system = build_quantum_system(build("curved-kc", 2))
        assert not is_zero(commutator(system.hamiltonian, p_hat(0, 2)))

    def test_wrong_ordering_correction_detected(self):
        system = build_quantum_system(build("spherical-osc", 2))
        _, residual = sum_identity(system)
        assert is_zero(residual)
        assert not is_zero(residual + scalar(HBAR ** 2 * ALPHA, 2))

    def test_dimension_limit(self):
        with pytest.raises(UnsupportedDimension):
            build_quantum_system(build("curved-kc", 4))

    def test_flat_system(self):
        with pytest.raises(IncompatibleKind):
            build_quantum_system(build("flat-kc", 2))


class TestClassicalSymbol:

    def test_hamiltonian_limit(self):
        system = build_quantum_system(build("curved-kc", 2))
        x = PhaseState(q=(1.0, 0.0), p=(0.0, 1.0))
        value = classical_symbol(system.hamiltonian, x, 1e-6, {"alpha": 1.0})
        assert value.real == pytest.approx(1.5, abs=1e-4)

    def test_lrl_limit(self, radial_point3):
        system = build_quantum_system(build("spherical-osc", 3))
        value = classical_symbol(system.symmetries["St_1"], radial_point3, 1e-6, {"alpha": 0.0})
        assert value.real == pytest.approx(0.5, abs=1e-4)

    def test_dimension_mismatch(self, radial_point3):
        system = build_quantum_system(build("curved-kc", 2))
        with pytest.raises(InvalidParameter):
            classical_symbol(system.hamiltonian, radial_point3, 1.0, {})
