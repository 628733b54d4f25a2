"""Phase-space points (q, p)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from staeckel_systems.errors import InvalidParameter, UnsupportedDimension


@dataclass(frozen=True)
class PhaseState:
    """A point of the 2N-dimensional phase space.

    Attributes:
        q: Positions, length N.
        p: Conjugate momenta, length N.
    """
    q: tuple[float, ...]
    p: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(float(v) for v in self.q))
        object.__setattr__(self, "p", tuple(float(v) for v in self.p))
        if len(self.q) != len(self.p):
            raise InvalidParameter(
                f"q and p must have equal length, got {len(self.q)} and {len(self.p)}"
            )
        if len(self.q) < 2:
            raise UnsupportedDimension(f"phase space needs N >= 2, got N={len(self.q)}")
        if not all(math.isfinite(v) for v in self.q + self.p):
            raise InvalidParameter(f"non-finite component in {self!r}")

    @property
    def dim(self) -> int:
        return len(self.q)

    @property
    def q_sq(self) -> float:
        """q² = Σ qᵢ²."""
        return sum(v * v for v in self.q)

    @property
    def p_sq(self) -> float:
        return sum(v * v for v in self.p)

    @property
    def radius(self) -> float:
        """|q|."""
        return math.sqrt(self.q_sq)

    def as_array(self) -> np.ndarray:
        """Flatten to (q1..qN, p1..pN)."""
        return np.array(self.q + self.p, dtype=float)

    @classmethod
    def from_array(cls, y: Sequence[float]) -> PhaseState:
        n = len(y) // 2
        return cls(q=tuple(y[:n]), p=tuple(y[n:]))

    def with_momenta(self, p: Sequence[float]) -> PhaseState:
        return PhaseState(q=self.q, p=tuple(p))

    def reversed(self) -> PhaseState:
        """Same positions, momenta negated."""
        return PhaseState(q=self.q, p=tuple(-v for v in self.p))
