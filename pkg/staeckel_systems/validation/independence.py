"""Empirical functional-independence test via Jacobian singular values."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from staeckel_systems.autodiff.observable import Observable, gradient
from staeckel_systems.config import Tolerances
from staeckel_systems.errors import InvalidParameter
from staeckel_systems.integrals.catalog import free_independent_sets, independent_set
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.models.system import SystemId, SystemSpec

PASS_FRACTION = 0.95


@dataclass
class RankReport:
    """Rank of the (2N−1)×2N Jacobian of an integral set over samples.

    Attributes:
        labels: Observables forming the rows.
        expected_rank: 2N − 1.
        singular_values: Per-sample singular values, largest first.
        ranks: Per-sample empirical rank.
        min_sigma: Smallest σ_(2N−1) over samples.
        worst_ratio: Smallest σ_(2N−1)/σ_max over samples.
        full_rank_fraction: Share of samples reaching ``expected_rank``.
        passed: full_rank_fraction >= 0.95.
    """
    labels: list[str]
    expected_rank: int
    singular_values: list[list[float]] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)
    min_sigma: float = 0.0
    worst_ratio: float = 0.0
    full_rank_fraction: float = 0.0
    passed: bool = False

    @property
    def typical_rank(self) -> int:
        """Most frequent per-sample rank."""
        return Counter(self.ranks).most_common(1)[0][0]


def jacobian_matrix(observables: list[Observable], x) -> np.ndarray:
    return np.array([gradient(o, x).as_array() for o in observables])


def independence_rank(
    spec: SystemSpec,
    fixed_i: int = 1,
    trials: int = 50,
    seed: int = 0,
    tolerances: Tolerances | None = None,
    observables: list[Observable] | None = None,
) -> RankReport:
    """Count singular values above rank·σ_max at each seeded point.

    Args:
        spec: System under test.
        fixed_i: Index of the Fradkin diagonal / LRL component closing the set.
        trials: Number of samples (>= 10).
        seed: Sampling seed.
        tolerances: Rank threshold and sampling margin.
        observables: Rows to use instead of the catalog set.
    """
    if trials < 10:
        raise InvalidParameter(f"independence_rank needs trials >= 10, got {trials}")
    tolerances = tolerances or Tolerances()
    if observables is None:
        if spec.id == SystemId.FREE_EUCLIDEAN:
            observables = free_independent_sets(spec, fixed_i)[0]
        else:
            observables = independent_set(spec, fixed_i)
    expected = 2 * spec.dim - 1
    report = RankReport(labels=[o.label for o in observables], expected_rank=expected)
    min_sigma = np.inf
    worst_ratio = np.inf
    for x in sample_points(spec, trials, seed, tolerances.sample_margin):
        sigma = np.linalg.svd(jacobian_matrix(observables, x), compute_uv=False)
        top = float(sigma[0]) if sigma.size else 0.0
        rank = int(np.sum(sigma > tolerances.rank * top)) if top > 0.0 else 0
        report.singular_values.append([float(s) for s in sigma])
        report.ranks.append(rank)
        tail = float(sigma[expected - 1]) if sigma.size >= expected else 0.0
        min_sigma = min(min_sigma, tail)
        # A vanishing Jacobian has no rank and no meaningful ratio.
        worst_ratio = min(worst_ratio, tail / top if top > 0.0 else 0.0)
    report.min_sigma = float(min_sigma)
    report.worst_ratio = float(worst_ratio)
    report.full_rank_fraction = sum(r == expected for r in report.ranks) / trials
    report.passed = report.full_rank_fraction >= PASS_FRACTION
    return report
