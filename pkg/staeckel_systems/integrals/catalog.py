"""Constructors for the integrals of motion of every catalog system.

Curved symmetries embed the Hamiltonian by value: S̃ is re-evaluated from
ℋ(q, p) at each point, so {ℋ, S̃} = 0 is a genuine phase-space identity.
"""

from __future__ import annotations

from typing import Sequence

from staeckel_systems.autodiff.dual import Number
from staeckel_systems.autodiff.observable import Observable, PhaseRule
from staeckel_systems.errors import IncompatibleKind, IndexOutOfRange
from staeckel_systems.integrals.kinds import KindTag, ObservableKind
from staeckel_systems.models.system import SystemId, SystemSpec, q_norm, q_squared

# Kinds restricted to specific catalog entries.
KIND_SYSTEMS: dict[KindTag, frozenset[SystemId]] = {
    KindTag.FLAT_FRADKIN: frozenset({SystemId.FLAT_OSCILLATOR}),
    KindTag.FLAT_LRL: frozenset({SystemId.FLAT_KC}),
    KindTag.CURVED_FRADKIN: frozenset({SystemId.CURVED_KC, SystemId.DARBOUX_III}),
    KindTag.CURVED_LRL: frozenset({SystemId.SPHERICAL_OSCILLATOR, SystemId.TAUB_NUT}),
}


# ── Evaluation rules ──────────────────────────────────────────────


def angular_rule(first: int, last: int) -> PhaseRule:
    """Σ (q_i p_j − q_j p_i)² over first <= i < j <= last (0-based, inclusive)."""
    def rule(q: Sequence[Number], p: Sequence[Number]) -> Number:
        total: Number = 0.0
        for i in range(first, last + 1):
            for j in range(i + 1, last + 1):
                jij = q[i] * p[j] - q[j] * p[i]
                total = total + jij * jij
        return total
    return rule


def fradkin_seed_rule(i: int, j: int) -> PhaseRule:
    return lambda q, p: p[i] * p[j]


def lrl_seed_rule(i: int) -> PhaseRule:
    """Σ_k p_k (q_k p_i − q_i p_k) (0-based i)."""
    def rule(q: Sequence[Number], p: Sequence[Number]) -> Number:
        total: Number = 0.0
        for k in range(len(q)):
            total = total + p[k] * (q[k] * p[i] - q[i] * p[k])
        return total
    return rule


def _dot(a: Sequence[Number], b: Sequence[Number]) -> Number:
    total: Number = 0.0
    for x, y in zip(a, b):
        total = total + x * y
    return total


def _curved_fradkin_rule(spec: SystemSpec, i: int, j: int) -> PhaseRule:
    ham = spec.hamiltonian
    if spec.id == SystemId.CURVED_KC:
        return lambda q, p: p[i] * p[j] - 2.0 * q[i] * q[j] * ham(q, p)
    lam, a = spec.params.lam, spec.params.alpha
    return lambda q, p: p[i] * p[j] - 2.0 * lam * q[i] * q[j] * (ham(q, p) + a)


def _curved_lrl_rule(spec: SystemSpec, i: int) -> PhaseRule:
    ham = spec.hamiltonian
    seed = lrl_seed_rule(i)
    factor = spec.params.eta if spec.id == SystemId.TAUB_NUT else 1.0
    return lambda q, p: seed(q, p) + factor * q[i] / q_norm(q) * ham(q, p)


def _rule(spec: SystemSpec, kind: ObservableKind) -> PhaseRule:
    t = kind.tag
    ix = [v - 1 for v in kind.indices]
    n = spec.dim
    if t == KindTag.ANGULAR_LEFT:
        return angular_rule(0, ix[0])
    if t == KindTag.ANGULAR_RIGHT:
        return angular_rule(n - kind.indices[0], n - 1)
    if t == KindTag.TOTAL_L2:
        return angular_rule(0, n - 1)
    if t == KindTag.FRADKIN_SEED:
        return fradkin_seed_rule(ix[0], ix[1])
    if t == KindTag.LRL_SEED:
        return lrl_seed_rule(ix[0])
    if t == KindTag.FLAT_FRADKIN:
        i, j = ix
        b = spec.params.beta
        return lambda q, p: p[i] * p[j] + 2.0 * b * q[i] * q[j]
    if t == KindTag.FLAT_LRL:
        i = ix[0]
        seed = lrl_seed_rule(i)
        d = spec.params.delta
        return lambda q, p: seed(q, p) - d * q[i] / q_norm(q)
    if t == KindTag.CURVED_FRADKIN:
        return _curved_fradkin_rule(spec, ix[0], ix[1])
    if t == KindTag.CURVED_LRL:
        return _curved_lrl_rule(spec, ix[0])
    if t == KindTag.SO_GENERATOR:
        i, j = ix
        return lambda q, p: q[i] * p[j] - q[j] * p[i]
    if t == KindTag.SL2_MINUS:
        return lambda q, p: q_squared(q)
    if t == KindTag.SL2_PLUS:
        return lambda q, p: q_squared(p)
    if t == KindTag.SL2_THREE:
        return lambda q, p: _dot(q, p)
    return spec.hamiltonian


def _validate(spec: SystemSpec, kind: ObservableKind) -> None:
    allowed = KIND_SYSTEMS.get(kind.tag)
    if allowed is not None and spec.id not in allowed:
        names = ", ".join(sorted(s.value for s in allowed))
        raise IncompatibleKind(f"{kind.tag.value} is only defined for {names}, not {spec.label}")
    n = spec.dim
    if kind.tag in (KindTag.ANGULAR_LEFT, KindTag.ANGULAR_RIGHT):
        if not 2 <= kind.indices[0] <= n:
            raise IndexOutOfRange(f"m={kind.indices[0]} outside 2..{n}")
        return
    for v in kind.indices:
        if not 1 <= v <= n:
            raise IndexOutOfRange(f"index {v} outside 1..{n} for {kind.tag.value}")
    if kind.tag == KindTag.SO_GENERATOR and not kind.indices[0] < kind.indices[1]:
        raise IndexOutOfRange(f"J_ij needs i < j, got {kind.indices}")


def build_observable(spec: SystemSpec, kind: ObservableKind) -> Observable:
    """Evaluable observable for ``kind`` on ``spec``.

    Raises:
        IncompatibleKind: the kind does not belong to this system.
        IndexOutOfRange: an index lies outside 1..N (m outside 2..N).
    """
    _validate(spec, kind)
    return Observable(
        label=kind.label(spec.dim),
        dim=spec.dim,
        func=_rule(spec, kind),
        check=spec.check_domain,
    )


# ── Families ──────────────────────────────────────────────────────


def hamiltonian_observable(spec: SystemSpec) -> Observable:
    return build_observable(spec, ObservableKind.hamiltonian())


def angular_towers(spec: SystemSpec) -> tuple[list[Observable], list[Observable]]:
    """(S^(2)..S^(N), S_(2)..S_(N)); both towers end in L2."""
    n = spec.dim
    left = [build_observable(spec, ObservableKind.angular_left(m)) for m in range(2, n + 1)]
    right = [build_observable(spec, ObservableKind.angular_right(m)) for m in range(2, n + 1)]
    return left, right


def _fradkin_kind(spec: SystemSpec, i: int, j: int) -> ObservableKind:
    if spec.id == SystemId.FLAT_OSCILLATOR:
        return ObservableKind.flat_fradkin(i, j)
    if spec.id == SystemId.FREE_EUCLIDEAN:
        return ObservableKind.fradkin_seed(i, j)
    return ObservableKind.curved_fradkin(i, j)


def _lrl_kind(spec: SystemSpec, i: int) -> ObservableKind:
    if spec.id == SystemId.FLAT_KC:
        return ObservableKind.flat_lrl(i)
    if spec.id == SystemId.FREE_EUCLIDEAN:
        return ObservableKind.lrl_seed(i)
    return ObservableKind.curved_lrl(i)


def fradkin_components(spec: SystemSpec, diagonal_only: bool = False) -> list[Observable]:
    """Fradkin components with i <= j (only i == j when ``diagonal_only``)."""
    if not spec.id.has_fradkin:
        return []
    n = spec.dim
    return [
        build_observable(spec, _fradkin_kind(spec, i, j))
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if not diagonal_only or i == j
    ]


def lrl_components(spec: SystemSpec) -> list[Observable]:
    if not spec.id.has_lrl:
        return []
    return [build_observable(spec, _lrl_kind(spec, i)) for i in range(1, spec.dim + 1)]


def so_generators(spec: SystemSpec) -> dict[tuple[int, int], Observable]:
    """J_ij for 1 <= i < j <= N keyed by (i, j)."""
    n = spec.dim
    return {
        (i, j): build_observable(spec, ObservableKind.so_generator(i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }


def sl2_generators(spec: SystemSpec) -> tuple[Observable, Observable, Observable]:
    """(J₋, J₊, J₃) = (q², p², q·p)."""
    return (
        build_observable(spec, ObservableKind.sl2_minus()),
        build_observable(spec, ObservableKind.sl2_plus()),
        build_observable(spec, ObservableKind.sl2_three()),
    )


def catalog_symmetries(spec: SystemSpec) -> list[Observable]:
    """Every integral the system is known to carry, L2 listed once."""
    left, right = angular_towers(spec)
    symmetries = _dedupe(left + right)
    symmetries += fradkin_components(spec)
    symmetries += lrl_components(spec)
    return symmetries


def _dedupe(observables: list[Observable]) -> list[Observable]:
    seen: set[str] = set()
    out = []
    for obs in observables:
        if obs.label not in seen:
            seen.add(obs.label)
            out.append(obs)
    return out


def _base_set(spec: SystemSpec) -> list[Observable]:
    left, right = angular_towers(spec)
    return _dedupe([hamiltonian_observable(spec)] + left + right)


def _check_fixed(spec: SystemSpec, fixed_i: int) -> None:
    if not 1 <= fixed_i <= spec.dim:
        raise IndexOutOfRange(f"fixed_i={fixed_i} outside 1..{spec.dim}")


def independent_set(spec: SystemSpec, fixed_i: int) -> list[Observable]:
    """The 2N−1 functionally independent integrals of a non-free system.

    {ℋ, S^(m), S_(m) (m = 2..N), plus the fixed Fradkin diagonal or LRL
    component}, with S^(N) = S_(N) = L2 counted once.

    Raises:
        IncompatibleKind: for free motion, which has two such sets
            (see ``free_independent_sets``).
    """
    if spec.id == SystemId.FREE_EUCLIDEAN:
        raise IncompatibleKind("free motion has two independent sets; use free_independent_sets")
    _check_fixed(spec, fixed_i)
    if spec.id.has_fradkin:
        extra = build_observable(spec, _fradkin_kind(spec, fixed_i, fixed_i))
    else:
        extra = build_observable(spec, _lrl_kind(spec, fixed_i))
    return _base_set(spec) + [extra]


def free_independent_sets(spec: SystemSpec, fixed_i: int) -> tuple[list[Observable], list[Observable]]:
    """Both 2N−1 sets of free motion: one closing with S_ii, one with S_i."""
    if spec.id != SystemId.FREE_EUCLIDEAN:
        raise IncompatibleKind(f"free_independent_sets needs the free system, got {spec.label}")
    _check_fixed(spec, fixed_i)
    base = _base_set(spec)
    return (
        base + [build_observable(spec, ObservableKind.fradkin_seed(fixed_i, fixed_i))],
        base + [build_observable(spec, ObservableKind.lrl_seed(fixed_i))],
    )
