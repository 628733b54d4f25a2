"""Seeded, domain-aware sampling of phase-space points."""

from __future__ import annotations

import numpy as np

from staeckel_systems.errors import EmptyDomain, InvalidParameter
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.system import SystemSpec

MOMENTUM_BOUND = 2.0
RADIUS_CAP = 5.0


def sample_phase_point(spec: SystemSpec, rng_seed: int, r_min_margin: float) -> PhaseState:
    """Draw one admissible point for ``spec``.

    Positions are a uniform direction times a radius uniform in the
    margin-shrunk radial domain (capped at r = 5 when unbounded); momenta
    are uniform in [−2, 2] per component.

    Args:
        spec: System whose radial domain the point must respect.
        rng_seed: Seed; equal seeds give equal points.
        r_min_margin: Distance kept from each open end of the domain.

    Returns:
        The sampled PhaseState.
    """
    rng = np.random.default_rng(rng_seed)
    return _draw(spec, rng, r_min_margin)


def sample_points(
    spec: SystemSpec, count: int, seed: int, r_min_margin: float,
) -> list[PhaseState]:
    """``count`` independent points; reproducible for a given seed."""
    rng = np.random.default_rng(seed)
    return [_draw(spec, rng, r_min_margin) for _ in range(count)]


def _draw(spec: SystemSpec, rng: np.random.Generator, r_min_margin: float) -> PhaseState:
    if not r_min_margin > 0:
        raise InvalidParameter(f"r_min_margin must be positive, got {r_min_margin}")
    lo, hi = spec.radial_domain.shrink(r_min_margin, cap=RADIUS_CAP)
    if not lo < hi:
        raise EmptyDomain(
            f"{spec.label}: {spec.radial_domain.describe()} is empty after margin {r_min_margin}"
        )
    direction = rng.standard_normal(spec.dim)
    while np.linalg.norm(direction) < 1e-8:
        direction = rng.standard_normal(spec.dim)
    direction /= np.linalg.norm(direction)
    radius = rng.uniform(lo, hi)
    q = radius * direction
    p = rng.uniform(-MOMENTUM_BOUND, MOMENTUM_BOUND, size=spec.dim)
    return PhaseState(q=tuple(q), p=tuple(p))
