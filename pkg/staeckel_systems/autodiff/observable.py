"""Phase-space observables with exact and finite-difference gradients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from staeckel_systems.autodiff.dual import Dual, Number, seed_duals, value_of
from staeckel_systems.errors import InvalidParameter
from staeckel_systems.models.phase_state import PhaseState

# Evaluation rule on (q, p) sequences of floats or Duals.
PhaseRule = Callable[[Sequence[Number], Sequence[Number]], Number]
DomainCheck = Callable[[PhaseState], None]


@dataclass(frozen=True)
class Observable:
    """A scalar function on phase space.

    ``func`` must only use arithmetic and ``autodiff.dual.sqrt`` so that the
    same rule runs on floats and on Duals.

    Attributes:
        label: Name used in reports.
        dim: Arity N.
        func: Evaluation rule on (q, p).
        check: Optional domain guard raising DomainViolation.
    """
    label: str
    dim: int
    func: PhaseRule
    check: DomainCheck | None = None

    def __call__(self, x: PhaseState) -> float:
        self._guard(x)
        return value_of(self.func(list(x.q), list(x.p)))

    def _guard(self, x: PhaseState) -> None:
        if x.dim != self.dim:
            raise InvalidParameter(f"{self.label}: expected N={self.dim}, got N={x.dim}")
        if self.check is not None:
            self.check(x)

    def relabel(self, label: str) -> Observable:
        return Observable(label=label, dim=self.dim, func=self.func, check=self.check)

    @classmethod
    def constant(cls, value: float, dim: int, label: str | None = None) -> Observable:
        return cls(label=label or f"{value:g}", dim=dim, func=lambda q, p: value)


@dataclass(frozen=True)
class Gradient:
    """Partial derivatives (∂/∂q, ∂/∂p) at a point."""
    dq: tuple[float, ...]
    dp: tuple[float, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.dq + self.dp, dtype=float)

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.as_array())))


def gradient(obs: Observable, x: PhaseState) -> Gradient:
    """Exact gradient by one forward sweep with 2N-wide dual tangents.

    Raises:
        DomainViolation: propagated from the observable's domain guard.
    """
    obs._guard(x)
    n = x.dim
    seeds = seed_duals(x.as_array())
    out = obs.func(seeds[:n], seeds[n:])
    if isinstance(out, Dual):
        tangent = out.tangent
    else:
        tangent = np.zeros(2 * n)
    return Gradient(dq=tuple(float(v) for v in tangent[:n]), dp=tuple(float(v) for v in tangent[n:]))


def fd_gradient(obs: Observable, x: PhaseState, h: float = 1e-5) -> Gradient:
    """Central-difference gradient; independent of the dual-number path.

    Args:
        obs: Observable to differentiate.
        x: Point; every stencil point must stay in the domain.
        h: Step size (> 0).
    """
    if not h > 0:
        raise InvalidParameter(f"finite-difference step must be positive, got {h}")
    base = x.as_array()
    out = np.empty_like(base)
    for k in range(base.size):
        plus = base.copy()
        minus = base.copy()
        plus[k] += h
        minus[k] -= h
        out[k] = (obs(PhaseState.from_array(plus)) - obs(PhaseState.from_array(minus))) / (2.0 * h)
    n = x.dim
    return Gradient(dq=tuple(out[:n]), dp=tuple(out[n:]))
