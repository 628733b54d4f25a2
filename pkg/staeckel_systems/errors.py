"""Error types raised by staeckel_systems.

All errors subclass ValueError so callers that only guard against bad
input keep working.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from staeckel_systems.solver.integrator import Trajectory


class StaeckelError(ValueError):
    """Base class for every error raised by this package."""


class InvalidParameter(StaeckelError):
    """A system parameter or tolerance is missing, zero where forbidden, or malformed."""


class UnsupportedDimension(StaeckelError):
    """The requested number of degrees of freedom is not supported."""


class DomainViolation(StaeckelError):
    """A point lies outside the admissible radial domain of a system."""


class EmptyDomain(StaeckelError):
    """The margin-shrunk radial domain contains no points."""


class IncompatibleKind(StaeckelError):
    """An observable kind was requested for a system that does not carry it."""


class IndexOutOfRange(StaeckelError):
    """An observable index lies outside 1..N (or m outside 2..N)."""


class NotCurved(StaeckelError):
    """A geometric quantity was requested for a flat catalog system."""


class OriginSingularity(StaeckelError):
    """The KS map was evaluated at q = 0."""


class BranchViolation(StaeckelError):
    """The inverse KS map was evaluated on the excluded ray q2 = 0, q1 >= 0."""


class StepFailure(StaeckelError):
    """The integrator could not reach the requested local tolerance."""


class BoundaryHit(StaeckelError):
    """A trajectory came within the safety margin of the domain boundary.

    The states accepted before the abort are kept on ``partial``.
    """

    def __init__(self, message: str, partial: Trajectory | None = None):
        super().__init__(message)
        self.partial = partial
