"""Canonical Poisson brackets from exact or finite-difference gradients."""

from __future__ import annotations

import numpy as np

from staeckel_systems.autodiff.observable import Gradient, Observable, fd_gradient, gradient
from staeckel_systems.models.phase_state import PhaseState


def bracket_from_gradients(ga: Gradient, gb: Gradient) -> tuple[float, float]:
    """({a, b}, scale) from two gradients.

    The scale Σᵢ(|∂a/∂qᵢ||∂b/∂pᵢ| + |∂a/∂pᵢ||∂b/∂qᵢ|) + 1 bounds the size of
    the summands, so residual/scale is dimensionless.
    """
    aq, ap = np.asarray(ga.dq), np.asarray(ga.dp)
    bq, bp = np.asarray(gb.dq), np.asarray(gb.dp)
    value = float(np.sum(aq * bp - ap * bq))
    scale = float(np.sum(np.abs(aq * bp)) + np.sum(np.abs(ap * bq))) + 1.0
    return value, scale


def poisson_bracket(a: Observable, b: Observable, x: PhaseState) -> float:
    """{a, b} = Σᵢ (∂a/∂qᵢ ∂b/∂pᵢ − ∂a/∂pᵢ ∂b/∂qᵢ) with exact gradients."""
    value, _ = bracket_from_gradients(gradient(a, x), gradient(b, x))
    return value


def bracket_scale(a: Observable, b: Observable, x: PhaseState) -> float:
    _, scale = bracket_from_gradients(gradient(a, x), gradient(b, x))
    return scale


def fd_poisson_bracket(a: Observable, b: Observable, x: PhaseState, h: float = 1e-5) -> float:
    """Bracket from central-difference gradients (oracle)."""
    value, _ = bracket_from_gradients(fd_gradient(a, x, h), fd_gradient(b, x, h))
    return value


def bracket_observable(a: Observable, b: Observable) -> Observable:
    """{a, b} as a float-only observable (differentiable by finite differences only)."""
    def check(x: PhaseState) -> None:
        if a.check is not None:
            a.check(x)
        if b.check is not None:
            b.check(x)

    def rule(q, p):
        return poisson_bracket(a, b, PhaseState(q=tuple(q), p=tuple(p)))

    return Observable(label=f"{{{a.label},{b.label}}}", dim=a.dim, func=rule, check=check)
