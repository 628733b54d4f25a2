"""Quantum Weyl-operator algebra for the curved catalog systems."""
from .operator import (
    WeylOperator, op_compose, commutator, scalar, identity, zero,
    q_hat, p_hat, p_squared, angular_component,
)
from .zero_test import is_zero, zero_residual, classical_symbol, sample_arguments
from .systems import (
    QuantumSystem, QuantumVerdict, QUANTUM_SYSTEMS, MAX_QUANTUM_DIM,
    build_quantum_system, quantum_hamiltonian, angular_operators, lrl_seed,
    canonical_relations, sum_identity, quantum_checks, quantum_verdicts,
)

__all__ = [
    "WeylOperator", "op_compose", "commutator", "scalar", "identity", "zero",
    "q_hat", "p_hat", "p_squared", "angular_component",
    "is_zero", "zero_residual", "classical_symbol", "sample_arguments",
    "QuantumSystem", "QuantumVerdict", "QUANTUM_SYSTEMS", "MAX_QUANTUM_DIM",
    "build_quantum_system", "quantum_hamiltonian", "angular_operators", "lrl_seed",
    "canonical_relations", "sum_identity", "quantum_checks", "quantum_verdicts",
]
