"""The Stäckel transform (coupling constant metamorphosis).

Given an initial system H = p²/μ + V and an intermediate H_U = p²/μ + U,
the final system is H̃ = H/U = p²/μ̃ + Ṽ with μ̃ = μU and Ṽ = V/U. A
second-order symmetry S = S₀ + W of H whose quadratic part S₀ also
appears in a symmetry S_U = S₀ + W_U of H_U is carried to

    S̃ = S₀ − W_U·H̃.
"""

from __future__ import annotations

from dataclasses import dataclass

from staeckel_systems.autodiff.dual import value_of
from staeckel_systems.autodiff.observable import Observable
from staeckel_systems.errors import DomainViolation, IncompatibleKind, IndexOutOfRange
from staeckel_systems.integrals.catalog import angular_rule, fradkin_seed_rule, lrl_seed_rule
from staeckel_systems.models.system import (
    PositionRule,
    SystemId,
    SystemParams,
    SystemSpec,
    q_norm,
    q_squared,
)


def _zero(q):
    return 0.0


@dataclass(frozen=True)
class PotentialForm:
    """H = p²/μ(q) + V(q); μ must stay positive on the admissible domain."""
    mu: PositionRule
    v: PositionRule

    def as_observable(self, dim: int, label: str = "H", check=None) -> Observable:
        mu, v = self.mu, self.v

        def rule(q, p):
            total = 0.0
            for c in p:
                total = total + c * c
            return total / mu(q) + v(q)

        return Observable(label=label, dim=dim, func=rule, check=check)


@dataclass(frozen=True)
class SymmetryDecomposition:
    """S = S₀ + W for the initial system and S_U = S₀ + W_U for the intermediate.

    Attributes:
        s0: Pure quadratic part Σ aⁱʲ(q) p_i p_j (vanishes at p = 0).
        w: Scalar part W(q) of the initial symmetry.
        w_u: Scalar part W_U(q) of the intermediate symmetry.
    """
    s0: Observable
    w: PositionRule = _zero
    w_u: PositionRule = _zero


def transform_hamiltonian(h: PotentialForm, u: PositionRule) -> PotentialForm:
    """μ̃ = μ·U, Ṽ = V/U.

    Raises:
        DomainViolation: when evaluated where U vanishes.
    """
    def guarded_u(q):
        value = u(q)
        if value_of(value) == 0.0:
            raise DomainViolation("Stäckel factor U vanishes at this point")
        return value

    return PotentialForm(
        mu=lambda q: h.mu(q) * guarded_u(q),
        v=lambda q: h.v(q) / guarded_u(q),
    )


def transform_symmetry(dec: SymmetryDecomposition, h_tilde: SystemSpec) -> Observable:
    """S̃ = S₀ − W_U(q)·H̃(q, p), with H̃ recovered from the scaled ℋ of ``h_tilde``."""
    s0, w_u = dec.s0.func, dec.w_u
    ham, scale, shift = h_tilde.hamiltonian, h_tilde.scale, h_tilde.shift

    def rule(q, p):
        return s0(q, p) - w_u(q) * ((ham(q, p) - shift) / scale)

    return Observable(
        label=f"{dec.s0.label}~",
        dim=h_tilde.dim,
        func=rule,
        check=h_tilde.check_domain,
    )


# ── Built-in initial and intermediate systems ─────────────────────


def free_motion(params: SystemParams) -> PotentialForm:
    """H = ½p² + α."""
    a = params.alpha
    return PotentialForm(mu=lambda q: 2.0, v=lambda q: a)


def oscillator_intermediate(params: SystemParams) -> PositionRule:
    """U = γ + βq² (H_U is the flat oscillator)."""
    b, g = params.beta, params.gamma
    return lambda q: g + b * q_squared(q)


def kepler_intermediate(params: SystemParams) -> PositionRule:
    """U = (δ + ξ|q|)/|q| (H_U is the flat Kepler-Coulomb system)."""
    d, x = params.delta, params.xi
    return lambda q: (d + x * q_norm(q)) / q_norm(q)


def intermediate_for(spec: SystemSpec) -> PositionRule:
    """The U that produces a curved catalog system from free motion."""
    if spec.id in (SystemId.CURVED_KC, SystemId.DARBOUX_III):
        return oscillator_intermediate(spec.params)
    if spec.id in (SystemId.SPHERICAL_OSCILLATOR, SystemId.TAUB_NUT):
        return kepler_intermediate(spec.params)
    raise IncompatibleKind(f"{spec.label} is not a Stäckel transform of free motion")


def staeckel_hamiltonian(spec: SystemSpec) -> Observable:
    """ℋ = scale·H̃ + shift rebuilt from free motion through ``transform_hamiltonian``."""
    h_tilde = transform_hamiltonian(free_motion(spec.params), intermediate_for(spec))
    raw = h_tilde.as_observable(spec.dim).func
    scale, shift = spec.scale, spec.shift
    return Observable(
        label="H",
        dim=spec.dim,
        func=lambda q, p: scale * raw(q, p) + shift,
        check=spec.check_domain,
    )


# ── Decompositions supplied by the flat propositions ──────────────


def _check_index(spec: SystemSpec, *indices: int) -> None:
    for v in indices:
        if not 1 <= v <= spec.dim:
            raise IndexOutOfRange(f"index {v} outside 1..{spec.dim}")


def fradkin_decomposition(spec: SystemSpec, i: int, j: int) -> SymmetryDecomposition:
    """S₀ = p_i p_j, W = 0, W_U = 2β q_i q_j."""
    _check_index(spec, i, j)
    a, b = i - 1, j - 1
    beta = spec.params.beta
    s0 = Observable(label=f"S_{i}_{j}", dim=spec.dim, func=fradkin_seed_rule(a, b))
    return SymmetryDecomposition(s0=s0, w_u=lambda q: 2.0 * beta * q[a] * q[b])


def lrl_decomposition(spec: SystemSpec, i: int) -> SymmetryDecomposition:
    """S₀ = Σ_k p_k(q_k p_i − q_i p_k), W = 0, W_U = −δ q_i/|q|."""
    _check_index(spec, i)
    a = i - 1
    delta = spec.params.delta
    s0 = Observable(label=f"S_{i}", dim=spec.dim, func=lrl_seed_rule(a))
    return SymmetryDecomposition(s0=s0, w_u=lambda q: -delta * q[a] / q_norm(q))


def angular_decomposition(spec: SystemSpec, m: int, right: bool = False) -> SymmetryDecomposition:
    """S^(m) (or S_(m) when ``right``): W = W_U = 0, so S̃ = S₀."""
    n = spec.dim
    if not 2 <= m <= n:
        raise IndexOutOfRange(f"m={m} outside 2..{n}")
    rule = angular_rule(n - m, n - 1) if right else angular_rule(0, m - 1)
    label = f"S_({m})" if right else f"S^({m})"
    return SymmetryDecomposition(s0=Observable(label=label, dim=n, func=rule))
