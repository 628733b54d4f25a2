"""Quantum curved oscillator and Kepler-Coulomb systems with their symmetries.

Operators follow the Schrödinger quantization exactly as written: the
coefficient function sits to the left of p̂², the Fradkin tensor puts q̂ᵢq̂ⱼ
to the left of the Hamiltonian, and the LRL vector uses the symmetrized
½(p̂L̂ + L̂p̂) form. Couplings stay symbolic, so every verdict holds for
generic α, λ, η.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from staeckel_systems.errors import IncompatibleKind, UnsupportedDimension
from staeckel_systems.integrals.kinds import ObservableKind
from staeckel_systems.models.system import SystemId, SystemSpec
from staeckel_systems.quantum.operator import (
    WeylOperator,
    angular_component,
    commutator,
    p_hat,
    p_squared,
    q_hat,
    scalar,
    zero,
)
from staeckel_systems.quantum.symbols import ALPHA, ETA, HBAR, LAM, R, q_symbol
from staeckel_systems.quantum.zero_test import MIN_POINTS, zero_residual

QUANTUM_SYSTEMS = (
    SystemId.CURVED_KC, SystemId.DARBOUX_III,
    SystemId.SPHERICAL_OSCILLATOR, SystemId.TAUB_NUT,
)
MAX_QUANTUM_DIM = 3

HALF = sympy.Rational(1, 2)


@dataclass
class QuantumSystem:
    """Quantum Hamiltonian with its angular and Fradkin/LRL symmetries.

    Attributes:
        id: Catalog entry.
        dim: Degrees of freedom N (2 or 3).
        hamiltonian: Ĥ.
        angular: "S^(m)" (m < N), "S_(m)" (2 <= m < N) and "L2" operators.
        symmetries: Fradkin components "St_i_j" (i <= j) or LRL components "St_i".
    """
    id: SystemId
    dim: int
    hamiltonian: WeylOperator
    angular: dict[str, WeylOperator] = field(default_factory=dict)
    symmetries: dict[str, WeylOperator] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return self.id.value

    def all_symmetries(self) -> list[WeylOperator]:
        return list(self.angular.values()) + list(self.symmetries.values())


@dataclass
class QuantumVerdict:
    """Outcome of one operator identity A = 0.

    Attributes:
        name: What was tested, e.g. "[H, St_1]" or "sum St_i^2".
        kind: "canonical", "commutator" or "identity".
        max_residual: Worst normalized coefficient value over the sample points.
        tol: Bound on ``max_residual``.
        passed: max_residual <= tol.
    """
    name: str
    kind: str
    max_residual: float
    tol: float
    passed: bool


# ── Building blocks ───────────────────────────────────────────────


def angular_tower(first: int, last: int, dim: int) -> WeylOperator:
    """Σ (q̂ᵢp̂ⱼ − q̂ⱼp̂ᵢ)² over first <= i < j <= last (0-based, inclusive)."""
    total = zero(dim)
    for i in range(first, last + 1):
        for j in range(i + 1, last + 1):
            lij = angular_component(i, j, dim)
            total = total + lij * lij
    return total


def angular_operators(dim: int) -> dict[str, WeylOperator]:
    """Ŝ^(m) for 2 <= m < N, Ŝ_(m) for 2 <= m < N, and L̂² = Ŝ^(N) = Ŝ_(N)."""
    out = {}
    for m in range(2, dim):
        out[ObservableKind.angular_left(m).label(dim)] = angular_tower(0, m - 1, dim)
        out[ObservableKind.angular_right(m).label(dim)] = angular_tower(dim - m, dim - 1, dim)
    out[ObservableKind.total_l2().label(dim)] = angular_tower(0, dim - 1, dim)
    return out


def lrl_seed(i: int, dim: int) -> WeylOperator:
    """½Σₖ p̂ₖ(q̂ₖp̂ᵢ − q̂ᵢp̂ₖ) + ½Σₖ (q̂ₖp̂ᵢ − q̂ᵢp̂ₖ)p̂ₖ (0-based i)."""
    total = zero(dim)
    for k in range(dim):
        lki = angular_component(k, i, dim)
        pk = p_hat(k, dim)
        total = total + HALF * (pk * lki) + HALF * (lki * pk)
    return total


def quantum_hamiltonian(system_id: SystemId, dim: int) -> WeylOperator:
    p2 = p_squared(dim)
    if system_id == SystemId.CURVED_KC:
        return HALF / R ** 2 * p2 + scalar(ALPHA / R ** 2, dim)
    if system_id == SystemId.DARBOUX_III:
        f = 1 + LAM * R ** 2
        return HALF / f * p2 - scalar(LAM * ALPHA * R ** 2 / f, dim)
    if system_id == SystemId.SPHERICAL_OSCILLATOR:
        return HALF * R * p2 + scalar(ALPHA * R, dim)
    return R / (2 * (ETA + R)) * p2 + scalar(ALPHA * R / (ETA + R), dim)


def _fradkin(system_id: SystemId, h: WeylOperator, dim: int) -> dict[str, WeylOperator]:
    out = {}
    for i in range(dim):
        for j in range(i, dim):
            qq = q_symbol(i) * q_symbol(j)
            pp = p_hat(i, dim) * p_hat(j, dim)
            if system_id == SystemId.CURVED_KC:
                op = pp - (2 * qq) * h
            else:
                op = pp - (2 * LAM * qq) * (h + ALPHA)
            out[ObservableKind.curved_fradkin(i + 1, j + 1).label(dim)] = op
    return out


def _lrl(system_id: SystemId, h: WeylOperator, dim: int) -> dict[str, WeylOperator]:
    factor = ETA if system_id == SystemId.TAUB_NUT else 1
    return {
        ObservableKind.curved_lrl(i + 1).label(dim): lrl_seed(i, dim) + (factor * q_symbol(i) / R) * h
        for i in range(dim)
    }


def build_quantum_system(spec: SystemSpec) -> QuantumSystem:
    """Quantum Ĥ and its symmetries for a curved catalog system.

    Only ``spec.id`` and ``spec.dim`` are used; couplings are symbolic.

    Raises:
        IncompatibleKind: spec is not one of the four curved systems.
        UnsupportedDimension: N > 3.
    """
    if spec.id not in QUANTUM_SYSTEMS:
        raise IncompatibleKind(f"{spec.label} has no quantum counterpart here (curved systems only)")
    if spec.dim > MAX_QUANTUM_DIM:
        raise UnsupportedDimension(
            f"quantum operators are built for N <= {MAX_QUANTUM_DIM}, got N={spec.dim}"
        )
    n = spec.dim
    h = quantum_hamiltonian(spec.id, n)
    if spec.id in (SystemId.CURVED_KC, SystemId.DARBOUX_III):
        symmetries = _fradkin(spec.id, h, n)
    else:
        symmetries = _lrl(spec.id, h, n)
    return QuantumSystem(spec.id, n, h, angular_operators(n), symmetries)


# ── Identities ────────────────────────────────────────────────────


def canonical_relations(dim: int) -> dict[str, WeylOperator]:
    """[q̂ᵢ, p̂ⱼ] − iħδᵢⱼ for all i, j; [q̂ᵢ, q̂ⱼ] and [p̂ᵢ, p̂ⱼ] for i < j."""
    out = {}
    for i in range(dim):
        for j in range(dim):
            delta = sympy.I * HBAR if i == j else 0
            out[f"[q{i + 1}, p{j + 1}]"] = commutator(q_hat(i, dim), p_hat(j, dim)) - delta
        for j in range(i + 1, dim):
            out[f"[q{i + 1}, q{j + 1}]"] = commutator(q_hat(i, dim), q_hat(j, dim))
            out[f"[p{i + 1}, p{j + 1}]"] = commutator(p_hat(i, dim), p_hat(j, dim))
    return out


def sum_identity(system: QuantumSystem) -> tuple[str, WeylOperator]:
    """(statement, lhs − rhs) of the system's trace or sum-of-squares identity."""
    n = system.dim
    h = system.hamiltonian
    s = list(system.symmetries.values())
    l2 = system.angular[ObservableKind.total_l2().label(n)]
    correction = sympy.Rational((n - 1) ** 2, 2) * HBAR ** 2
    if system.id == SystemId.CURVED_KC:
        diag = [system.symmetries[ObservableKind.curved_fradkin(i, i).label(n)] for i in range(1, n + 1)]
        return "sum St_ii = -2 alpha", sum(diag, zero(n)) + 2 * ALPHA
    if system.id == SystemId.DARBOUX_III:
        diag = [system.symmetries[ObservableKind.curved_fradkin(i, i).label(n)] for i in range(1, n + 1)]
        return "sum St_ii = 2 H", sum(diag, zero(n)) - 2 * h
    squares = sum((si * si for si in s), zero(n))
    if system.id == SystemId.SPHERICAL_OSCILLATOR:
        rhs = h * h - 2 * ALPHA * l2 - scalar(correction * ALPHA, n)
        return "sum St_i^2 = H^2 - 2 alpha L2 - (N-1)^2 hbar^2 alpha / 2", squares - rhs
    shifted = h - ALPHA
    rhs = 2 * (l2 * shifted) + ETA ** 2 * (h * h) + correction * shifted
    return "sum St_i^2 = 2 L2 (H - alpha) + eta^2 H^2 + (N-1)^2 hbar^2 (H - alpha) / 2", squares - rhs


def quantum_checks(system: QuantumSystem) -> list[tuple[str, str, WeylOperator]]:
    """(name, kind, operator that must vanish) for every relation of the system."""
    checks = [(name, "canonical", op) for name, op in canonical_relations(system.dim).items()]
    h = system.hamiltonian
    for label, op in {**system.angular, **system.symmetries}.items():
        checks.append((f"[H, {label}]", "commutator", commutator(h, op)))
    statement, residual = sum_identity(system)
    checks.append((statement, "identity", residual))
    return checks


def quantum_verdicts(
    system: QuantumSystem, confidence_points: int = MIN_POINTS, seed: int = 0, tol: float = 1e-10,
) -> list[QuantumVerdict]:
    """Randomized zero test of every relation; reproducible for a fixed seed."""
    verdicts = []
    for name, kind, op in quantum_checks(system):
        residual = zero_residual(op, confidence_points, seed)
        verdicts.append(QuantumVerdict(name, kind, residual, tol, residual <= tol))
    return verdicts
