"""Trace and sum-of-squares identities tying each family of integrals to ℋ."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from staeckel_systems.config import Tolerances
from staeckel_systems.errors import InvalidParameter
from staeckel_systems.integrals.catalog import (
    angular_towers,
    build_observable,
    fradkin_components,
    hamiltonian_observable,
    lrl_components,
    so_generators,
)
from staeckel_systems.integrals.kinds import ObservableKind
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.models.system import SystemId, SystemSpec

PointValue = Callable[[PhaseState], float]


@dataclass
class TraceReport:
    """Outcome of an identity lhs = rhs over all samples.

    Attributes:
        label: Short name of the identity.
        identity: Human-readable statement.
        samples: Number of points evaluated.
        max_deviation: Largest |lhs − rhs| / (1 + |lhs| + |rhs|).
        tol: Bound on ``max_deviation``.
        passed: max_deviation <= tol.
    """
    label: str
    identity: str
    samples: int
    max_deviation: float
    tol: float
    passed: bool


@dataclass(frozen=True)
class Identity:
    label: str
    statement: str
    lhs: PointValue
    rhs: PointValue


def _sum_of(observables) -> PointValue:
    return lambda x: sum(o(x) for o in observables)


def _sum_of_squares(observables) -> PointValue:
    return lambda x: sum(o(x) ** 2 for o in observables)


def system_identities(spec: SystemSpec) -> list[Identity]:
    """The trace/sum identities a catalog system satisfies."""
    p = spec.params
    ham = hamiltonian_observable(spec)
    l2 = build_observable(spec, ObservableKind.total_l2())
    diagonal = fradkin_components(spec, diagonal_only=True)
    lrl = lrl_components(spec)
    out: list[Identity] = []
    if spec.id == SystemId.FREE_EUCLIDEAN:
        out.append(Identity("trace", "sum S_ii = 2(H - alpha)",
                            _sum_of(diagonal), lambda x: 2.0 * (ham(x) - p.alpha)))
        out.append(Identity("lrl-norm", "sum S_i^2 = 2 L^2 (H - alpha)",
                            _sum_of_squares(lrl), lambda x: 2.0 * l2(x) * (ham(x) - p.alpha)))
    elif spec.id == SystemId.FLAT_OSCILLATOR:
        out.append(Identity("trace", "sum S_U,ii = 2(H_U - gamma)",
                            _sum_of(diagonal), lambda x: 2.0 * (ham(x) - p.gamma)))
    elif spec.id == SystemId.FLAT_KC:
        out.append(Identity("lrl-norm", "sum S_U,i^2 = 2 L^2 (H_U - xi) + delta^2",
                            _sum_of_squares(lrl),
                            lambda x: 2.0 * l2(x) * (ham(x) - p.xi) + p.delta ** 2))
    elif spec.id == SystemId.CURVED_KC:
        out.append(Identity("trace", "sum St_ii = -2 alpha",
                            _sum_of(diagonal), lambda x: -2.0 * p.alpha))
    elif spec.id == SystemId.DARBOUX_III:
        out.append(Identity("trace", "sum St_ii = 2 H",
                            _sum_of(diagonal), lambda x: 2.0 * ham(x)))
    elif spec.id == SystemId.SPHERICAL_OSCILLATOR:
        out.append(Identity("lrl-norm", "sum St_i^2 = H^2 - 2 alpha L^2",
                            _sum_of_squares(lrl), lambda x: ham(x) ** 2 - 2.0 * p.alpha * l2(x)))
    else:
        out.append(Identity("lrl-norm", "sum St_i^2 = 2 L^2 (H - alpha) + eta^2 H^2",
                            _sum_of_squares(lrl),
                            lambda x: 2.0 * l2(x) * (ham(x) - p.alpha) + p.eta ** 2 * ham(x) ** 2))
    return out


def casimir_identities(spec: SystemSpec) -> list[Identity]:
    """S^(m) and S_(m) as quadratic sums of the so(N) generators."""
    n = spec.dim
    gens = so_generators(spec)
    left, right = angular_towers(spec)
    out = []
    for m, (s_left, s_right) in enumerate(zip(left, right), start=2):
        left_gens = [g for (i, j), g in gens.items() if j <= m]
        right_gens = [g for (i, j), g in gens.items() if i > n - m]
        out.append(Identity(f"casimir-left-{m}", f"S^({m}) = sum_(i<j<={m}) J_ij^2",
                            s_left, _sum_of_squares(left_gens)))
        out.append(Identity(f"casimir-right-{m}", f"S_({m}) = sum_(i>{n - m}) J_ij^2",
                            s_right, _sum_of_squares(right_gens)))
    return out


def check_identities(identities: list[Identity], points: list[PhaseState], tol: float) -> list[TraceReport]:
    reports = []
    for ident in identities:
        worst = 0.0
        for x in points:
            lhs, rhs = ident.lhs(x), ident.rhs(x)
            worst = max(worst, abs(lhs - rhs) / (1.0 + abs(lhs) + abs(rhs)))
        reports.append(TraceReport(
            label=ident.label,
            identity=ident.statement,
            samples=len(points),
            max_deviation=worst,
            tol=tol,
            passed=worst <= tol,
        ))
    return reports


def trace_identity_check(
    spec: SystemSpec,
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-10,
    tolerances: Tolerances | None = None,
) -> list[TraceReport]:
    """Evaluate both sides of the system's identities at seeded points.

    Free motion has two identities (Fradkin trace and LRL norm); every
    other system has one.
    """
    if trials < 1:
        raise InvalidParameter(f"trials must be >= 1, got {trials}")
    tolerances = tolerances or Tolerances()
    points = sample_points(spec, trials, seed, tolerances.sample_margin)
    return check_identities(system_identities(spec), points, tol)
