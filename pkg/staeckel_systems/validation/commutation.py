"""Involution and commutation suites over seeded phase-space samples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from staeckel_systems.autodiff.observable import Gradient, Observable, fd_gradient, gradient
from staeckel_systems.config import Tolerances
from staeckel_systems.errors import InvalidParameter
from staeckel_systems.integrals.catalog import (
    angular_towers,
    catalog_symmetries,
    fradkin_components,
    hamiltonian_observable,
    lrl_components,
    sl2_generators,
    so_generators,
)
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.models.system import SystemId, SystemParams, SystemSpec, make_system
from staeckel_systems.validation.brackets import bracket_from_gradients, bracket_observable


@dataclass
class BracketReport:
    """Outcome of one bracket relation {a, b} = expected over all samples.

    Attributes:
        label: Relation, e.g. "{H,St_1_1}".
        samples: Number of points evaluated.
        max_residual: Largest |{a, b} − expected|.
        max_normalized: Largest residual divided by the bracket scale.
        scale: Bracket scale at the point attaining ``max_normalized``.
        tol: Bound on ``max_normalized``.
        passed: max_normalized <= tol (and the oracle gap within bound, if checked).
        oracle_gap: Largest |exact − finite-difference| bracket over scale.
    """
    label: str
    samples: int
    max_residual: float
    max_normalized: float
    scale: float
    tol: float
    passed: bool
    oracle_gap: float | None = None


@dataclass(frozen=True)
class BracketCheck:
    """{a, b} should equal ``expected`` (zero when None)."""
    label: str
    a: Observable
    b: Observable
    expected: Observable | None = None


def _combination(terms: list[tuple[float, Observable]], dim: int) -> Observable | None:
    """Σ c·obs as an observable; None when there are no terms."""
    if not terms:
        return None

    def rule(q, p):
        total = 0.0
        for coef, obs in terms:
            total = total + coef * obs.func(q, p)
        return total

    label = " + ".join(f"{c:g}*{o.label}" for c, o in terms)
    return Observable(label=label, dim=dim, func=rule)


# ── Check lists ───────────────────────────────────────────────────


def _pair(a: Observable, b: Observable, expected: Observable | None = None) -> BracketCheck:
    return BracketCheck(label=f"{{{a.label},{b.label}}}", a=a, b=b, expected=expected)


def hamiltonian_checks(spec: SystemSpec) -> list[BracketCheck]:
    """{ℋ, S} = 0 for every catalog symmetry."""
    ham = hamiltonian_observable(spec)
    return [_pair(ham, s) for s in catalog_symmetries(spec)]


def tower_checks(spec: SystemSpec) -> list[BracketCheck]:
    """Involution within S^(m) and within S_(m)."""
    left, right = angular_towers(spec)
    return [_pair(a, b) for tower in (left, right) for a, b in combinations(tower, 2)]


def diagonal_fradkin_checks(spec: SystemSpec) -> list[BracketCheck]:
    """{S_ii, S_jj} = 0 for i < j."""
    diagonal = fradkin_components(spec, diagonal_only=True)
    return [_pair(a, b) for a, b in combinations(diagonal, 2)]


def vector_law_checks(spec: SystemSpec) -> list[BracketCheck]:
    """{J_ij, S_k} = δ_ik S_j − δ_jk S_i for LRL components S_k."""
    lrl = lrl_components(spec)
    if not lrl:
        return []
    checks = []
    for (i, j), jij in so_generators(spec).items():
        for k, s_k in enumerate(lrl, start=1):
            terms = []
            if i == k:
                terms.append((1.0, lrl[j - 1]))
            if j == k:
                terms.append((-1.0, lrl[i - 1]))
            checks.append(_pair(jij, s_k, _combination(terms, spec.dim)))
    return checks


def so_algebra_checks(spec: SystemSpec) -> list[BracketCheck]:
    """{J_ij, J_ik} = J_jk, {J_ij, J_jk} = −J_ik, {J_ik, J_jk} = J_ij for i < j < k."""
    gens = so_generators(spec)
    checks = []
    for i, j, k in combinations(range(1, spec.dim + 1), 3):
        jij, jik, jjk = gens[(i, j)], gens[(i, k)], gens[(j, k)]
        checks.append(_pair(jij, jik, _combination([(1.0, jjk)], spec.dim)))
        checks.append(_pair(jij, jjk, _combination([(-1.0, jik)], spec.dim)))
        checks.append(_pair(jik, jjk, _combination([(1.0, jij)], spec.dim)))
    return checks


def sl2_algebra_checks(spec: SystemSpec) -> list[BracketCheck]:
    """{J₃, J₊} = 2J₊, {J₃, J₋} = −2J₋, {J₋, J₊} = 4J₃."""
    minus, plus, three = sl2_generators(spec)
    n = spec.dim
    return [
        _pair(three, plus, _combination([(2.0, plus)], n)),
        _pair(three, minus, _combination([(-2.0, minus)], n)),
        _pair(minus, plus, _combination([(4.0, three)], n)),
    ]


# ── Runner ────────────────────────────────────────────────────────


def run_checks(
    checks: list[BracketCheck],
    points: list[PhaseState],
    tol: float,
    cross_check: bool = False,
    tolerances: Tolerances | None = None,
) -> list[BracketReport]:
    """Evaluate every check at every point, caching one gradient per observable and point."""
    tolerances = tolerances or Tolerances()
    stats = [_Stats() for _ in checks]
    for x in points:
        exact = _GradientCache(x, gradient)
        oracle = _GradientCache(x, lambda o, y: fd_gradient(o, y, tolerances.fd_step)) if cross_check else None
        for check, s in zip(checks, stats):
            value, scale = bracket_from_gradients(exact(check.a), exact(check.b))
            target = check.expected(x) if check.expected is not None else 0.0
            s.add(abs(value - target), scale)
            if oracle is not None:
                fd_value, _ = bracket_from_gradients(oracle(check.a), oracle(check.b))
                s.add_oracle(abs(fd_value - value) / scale)
    reports = []
    for check, s in zip(checks, stats):
        passed = s.max_normalized <= tol
        if cross_check:
            passed = passed and s.oracle_gap <= tolerances.oracle
        reports.append(BracketReport(
            label=check.label,
            samples=len(points),
            max_residual=s.max_residual,
            max_normalized=s.max_normalized,
            scale=s.scale,
            tol=tol,
            passed=passed,
            oracle_gap=s.oracle_gap if cross_check else None,
        ))
    return reports


class _Stats:
    def __init__(self):
        self.max_residual = 0.0
        self.max_normalized = 0.0
        self.scale = 1.0
        self.oracle_gap = 0.0

    def add(self, residual: float, scale: float) -> None:
        self.max_residual = max(self.max_residual, residual)
        if residual / scale >= self.max_normalized:
            self.max_normalized = residual / scale
            self.scale = scale

    def add_oracle(self, gap: float) -> None:
        self.oracle_gap = max(self.oracle_gap, gap)


class _GradientCache:
    def __init__(self, x: PhaseState, fn: Callable[[Observable, PhaseState], Gradient]):
        self.x = x
        self.fn = fn
        self.cache: dict[int, Gradient] = {}

    def __call__(self, obs: Observable) -> Gradient:
        key = id(obs)
        if key not in self.cache:
            self.cache[key] = self.fn(obs, self.x)
        return self.cache[key]


def commutation_suite(
    spec: SystemSpec,
    tol: float = 1e-9,
    trials: int = 100,
    seed: int = 0,
    cross_check: bool = False,
    tolerances: Tolerances | None = None,
) -> list[BracketReport]:
    """All involution relations the system is known to satisfy.

    Checks {ℋ, S} = 0 for every catalog symmetry, involution inside each
    angular tower, {S_ii, S_jj} = 0 for Fradkin systems and the so(N) vector
    law for LRL systems.

    Args:
        spec: System under test.
        tol: Bound on residual/scale.
        trials: Number of sampled points.
        seed: Sampling seed.
        cross_check: Also compare with finite-difference brackets.
        tolerances: Sampling margin, FD step and oracle bound.

    Returns:
        One BracketReport per relation; failures are recorded, not raised.
    """
    if trials < 1:
        raise InvalidParameter(f"trials must be >= 1, got {trials}")
    tolerances = tolerances or Tolerances()
    points = sample_points(spec, trials, seed, tolerances.sample_margin)
    checks = (
        hamiltonian_checks(spec)
        + tower_checks(spec)
        + diagonal_fradkin_checks(spec)
        + vector_law_checks(spec)
    )
    return run_checks(checks, points, tol, cross_check=cross_check, tolerances=tolerances)


def algebra_suite(dim: int, trials: int = 20, seed: int = 0, tol: float = 1e-9) -> list[BracketReport]:
    """so(N) and sl(2, R) structure relations on free phase space."""
    spec = make_system(SystemId.FREE_EUCLIDEAN, dim, SystemParams())
    points = sample_points(spec, trials, seed, Tolerances().sample_margin)
    return run_checks(so_algebra_checks(spec) + sl2_algebra_checks(spec), points, tol)


def jacobi_defect(a: Observable, b: Observable, c: Observable, x: PhaseState, h: float = 1e-3) -> tuple[float, float]:
    """(|cyclic sum|, scale) for {a,{b,c}} + {b,{c,a}} + {c,{a,b}}.

    Inner brackets are differentiated by central differences; for quadratic
    generators those are exact up to rounding, hence the large default step.
    """
    terms = []
    for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
        inner = bracket_observable(v, w)
        value, _ = bracket_from_gradients(gradient(u, x), fd_gradient(inner, x, h))
        terms.append(value)
    return abs(sum(terms)), 1.0 + sum(abs(t) for t in terms)
