"""The planar Kustaanheimo-Stiefel canonical map and its inverse.

Forward:  q̃₁ = ½(q₁² − q₂²), q̃₂ = q₁q₂,
          p̃₁ = (p₁q₁ − p₂q₂)/q², p̃₂ = (p₂q₁ + p₁q₂)/q².

The inverse uses s = |q| − q₁ and is only defined off the ray
{q₂ = 0, q₁ >= 0}. Composing the two returns the original point when q₂ > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from staeckel_systems.autodiff.dual import Dual, Number, seed_duals, sqrt
from staeckel_systems.autodiff.observable import Observable
from staeckel_systems.errors import BranchViolation, OriginSingularity, UnsupportedDimension
from staeckel_systems.models.phase_state import PhaseState

MapRule = Callable[[Sequence[Number], Sequence[Number]], tuple[list[Number], list[Number]]]

# Canonical form on (q₁, q₂, p₁, p₂).
OMEGA = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])


@dataclass(frozen=True)
class CanonicalMap2D:
    """A planar phase-space map (q, p) -> (q̃, p̃)."""
    label: str
    rule: MapRule
    check: Callable[[PhaseState], None] | None = None

    def __call__(self, x: PhaseState) -> PhaseState:
        self.guard(x)
        q, p = self.rule(list(x.q), list(x.p))
        return PhaseState(q=tuple(float(v) for v in q), p=tuple(float(v) for v in p))

    def guard(self, x: PhaseState) -> None:
        if x.dim != 2:
            raise UnsupportedDimension(f"{self.label} is planar, got N={x.dim}")
        if self.check is not None:
            self.check(x)


# ── Forward map ───────────────────────────────────────────────────


def _forward_rule(q, p):
    q1, q2 = q
    p1, p2 = p
    q_sq = q1 * q1 + q2 * q2
    return (
        [0.5 * (q1 * q1 - q2 * q2), q1 * q2],
        [(p1 * q1 - p2 * q2) / q_sq, (p2 * q1 + p1 * q2) / q_sq],
    )


def _forward_check(x: PhaseState) -> None:
    if x.q_sq == 0.0:
        raise OriginSingularity("KS map is singular at q = 0")


# ── Inverse map ───────────────────────────────────────────────────


def _inverse_rule(q, p):
    q1, q2 = q
    p1, p2 = p
    s = sqrt(q1 * q1 + q2 * q2) - q1
    root = sqrt(s)
    return (
        [q2 / root, root],
        [((p1 * q2 - 2.0 * p2 * q1) * s + p2 * q2 * q2) / (s * root), (p2 * q2 - p1 * s) / root],
    )


def _inverse_check(x: PhaseState) -> None:
    q1, q2 = x.q
    if q2 == 0.0 and q1 >= 0.0:
        raise BranchViolation(f"inverse KS map undefined on q2 = 0, q1 >= 0 (q = {x.q})")


KS_FORWARD = CanonicalMap2D("ks", _forward_rule, _forward_check)
KS_INVERSE = CanonicalMap2D("ks-inverse", _inverse_rule, _inverse_check)
IDENTITY = CanonicalMap2D("id", lambda q, p: (list(q), list(p)))


def ks_forward(x: PhaseState) -> PhaseState:
    """Kepler side -> oscillator-coordinates image (q̃, p̃).

    Raises:
        OriginSingularity: q = (0, 0).
    """
    return KS_FORWARD(x)


def ks_inverse(x: PhaseState) -> PhaseState:
    """Inverse map with s = |q| − q₁ > 0.

    Raises:
        BranchViolation: q₂ = 0 and q₁ >= 0.
    """
    return KS_INVERSE(x)


def map_observable(m: CanonicalMap2D, obs: Observable) -> Observable:
    """obs ∘ m as a new observable on the source side."""
    inner = obs.func

    def check(x: PhaseState) -> None:
        m.guard(x)
        if obs.check is not None:
            obs.check(m(x))

    return Observable(
        label=obs.label if m is IDENTITY else f"{obs.label}@{m.label}",
        dim=2,
        func=lambda q, p: inner(*m.rule(q, p)),
        check=check,
    )


def jacobian(m: CanonicalMap2D, x: PhaseState) -> np.ndarray:
    """4x4 Jacobian of ``m`` at x from one dual-number sweep."""
    m.guard(x)
    seeds = seed_duals(x.as_array())
    q, p = m.rule(seeds[:2], seeds[2:])
    rows = []
    for out in list(q) + list(p):
        rows.append(out.tangent if isinstance(out, Dual) else np.zeros(4))
    return np.array(rows)


def symplectic_defect(m: CanonicalMap2D, x: PhaseState) -> float:
    """max |JᵀΩJ − Ω|; zero for a canonical map."""
    jac = jacobian(m, x)
    return float(np.max(np.abs(jac.T @ OMEGA @ jac - OMEGA)))


def sample_branch_points(count: int, seed: int, r_min: float = 0.3, r_max: float = 3.0) -> list[PhaseState]:
    """Points with q₂ > 0, where the inverse undoes the forward map."""
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        theta = rng.uniform(0.05, np.pi - 0.05)
        r = rng.uniform(r_min, r_max)
        p = rng.uniform(-2.0, 2.0, size=2)
        points.append(PhaseState(q=(r * np.cos(theta), r * np.sin(theta)), p=tuple(p)))
    return points


# ── Flat images of the planar curved integrals ────────────────────


def _cross(q, p):
    return q[0] * p[1] - q[1] * p[0]


def _norm(q):
    return sqrt(q[0] * q[0] + q[1] * q[1])


def _obs(label: str, rule) -> Observable:
    return Observable(label=label, dim=2, func=rule)


def flat_kepler(alpha: float) -> Observable:
    """½p̃² + α/(2|q̃|): the planar curved KC Hamiltonian after ``ks_forward``."""
    return _obs("H_kepler", lambda q, p: 0.5 * (p[0] * p[0] + p[1] * p[1]) + alpha / (2.0 * _norm(q)))


def flat_oscillator(alpha: float) -> Observable:
    """¼p̃² + ½αq̃²: the planar spherical oscillator after ``ks_inverse``."""
    return _obs(
        "H_osc",
        lambda q, p: 0.25 * (p[0] * p[0] + p[1] * p[1]) + 0.5 * alpha * (q[0] * q[0] + q[1] * q[1]),
    )


def kepler_side_images(alpha: float) -> dict[str, Observable]:
    """Curved KC integrals (N=2) written in the KS image coordinates.

    The Fradkin components collapse onto the planar LRL vector:
    S̃₁₁ = 2p̃₂(q̃₂p̃₁ − q̃₁p̃₂) − αq̃₁/|q̃| − α, S̃₂₂ = −S̃₁₁ − 2α,
    S̃₁₂ = 2p̃₁(q̃₁p̃₂ − q̃₂p̃₁) − αq̃₂/|q̃|, and L² = 4(q̃₁p̃₂ − q̃₂p̃₁)².
    """
    def s11(q, p):
        return 2.0 * p[1] * (q[1] * p[0] - q[0] * p[1]) - alpha * q[0] / _norm(q) - alpha

    return {
        "L2": _obs("L2", lambda q, p: 4.0 * _cross(q, p) * _cross(q, p)),
        "St_1_1": _obs("St_1_1", s11),
        "St_2_2": _obs("St_2_2", lambda q, p: -s11(q, p) - 2.0 * alpha),
        "St_1_2": _obs(
            "St_1_2",
            lambda q, p: 2.0 * p[0] * (q[0] * p[1] - q[1] * p[0]) - alpha * q[1] / _norm(q),
        ),
    }


def oscillator_side_images(alpha: float) -> dict[str, Observable]:
    """Spherical-oscillator integrals (N=2) in the inverse-KS image coordinates.

    S̃₁ = ¼(p̃₁² − p̃₂²) + ½α(q̃₁² − q̃₂²), S̃₂ = ½p̃₁p̃₂ + αq̃₁q̃₂,
    L² = ¼(q̃₁p̃₂ − q̃₂p̃₁)², plus the flat Fradkin tensor p̃ᵢp̃ⱼ + 2αq̃ᵢq̃ⱼ
    that 2(ℋ ± S̃₁) and 2S̃₂ reconstruct.
    """
    images = {
        "L2": _obs("L2", lambda q, p: 0.25 * _cross(q, p) * _cross(q, p)),
        "St_1": _obs(
            "St_1",
            lambda q, p: 0.25 * (p[0] * p[0] - p[1] * p[1]) + 0.5 * alpha * (q[0] * q[0] - q[1] * q[1]),
        ),
        "St_2": _obs("St_2", lambda q, p: 0.5 * p[0] * p[1] + alpha * q[0] * q[1]),
    }
    for i in range(2):
        for j in range(i, 2):
            label = f"SU_{i + 1}_{j + 1}"
            images[label] = _obs(
                label,
                lambda q, p, i=i, j=j: p[i] * p[j] + 2.0 * alpha * q[i] * q[j],
            )
    return images
