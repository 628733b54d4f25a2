"""Configuration for verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Iterable, Mapping

from staeckel_systems.errors import InvalidParameter
from staeckel_systems.models.system import SystemId, SystemParams, SystemSpec, make_system


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds shared by the verification suites.

    Attributes:
        commutation: Bracket residual bound, relative to the bracket scale.
        trace: Relative deviation bound for trace/sum identities.
        rank: Singular values above rank·σ_max count toward the rank.
        oracle: Bound on |exact − finite-difference| bracket, relative to scale.
        fd_step: Central-difference step for the gradient oracle.
        curvature: Closed-form vs oracle curvature bound, relative to 1+|R|.
        curvature_step: Finite-difference step for f′, f″ in the curvature oracle.
        zero_test: Coefficient bound for quantum zero testing, relative to term scale.
        integrator: Local tolerance of the trajectory integrator.
        boundary_margin: Trajectories abort this close to a domain endpoint.
        sample_margin: Distance kept from open domain ends when sampling.
    """
    commutation: float = 1e-9
    trace: float = 1e-10
    rank: float = 1e-8
    oracle: float = 1e-5
    fd_step: float = 1e-5
    curvature: float = 1e-4
    curvature_step: float = 1e-4
    zero_test: float = 1e-10
    integrator: float = 1e-10
    boundary_margin: float = 1e-3
    sample_margin: float = 0.1

    @classmethod
    def from_overrides(cls, overrides: Mapping[str, float], base: Tolerances | None = None) -> Tolerances:
        """Copy of ``base`` (defaults when None) with named fields replaced."""
        base = base or cls()
        known = {f.name for f in fields(cls)}
        updates: dict[str, float] = {}
        for name, value in overrides.items():
            if name not in known:
                raise InvalidParameter(
                    f"unknown tolerance '{name}' (known: {', '.join(sorted(known))})"
                )
            try:
                number = float(value)
            except (TypeError, ValueError) as exc:
                raise InvalidParameter(f"tolerance {name}={value!r} is not a number") from exc
            if not number > 0:
                raise InvalidParameter(f"tolerance {name} must be positive, got {number}")
            updates[name] = number
        return replace(base, **updates)

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def parse_pairs(pairs: Iterable[str], what: str = "parameter") -> dict[str, float]:
    """Parse ``name=value`` strings into a mapping of floats."""
    out: dict[str, float] = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name.strip():
            raise InvalidParameter(f"{what} '{pair}' is not of the form name=value")
        try:
            out[name.strip()] = float(value)
        except ValueError as exc:
            raise InvalidParameter(f"{what} '{pair}' has a non-numeric value") from exc
    return out


@dataclass
class RunConfig:
    """One command-line run.

    Attributes:
        system: Kebab-case catalog name (e.g. "curved-kc").
        dim: Degrees of freedom N.
        params: Coupling constants by name.
        seed: Base seed for sampling.
        trials: Number of sampled points per suite.
        tolerances: Thresholds for the suites.
        output: Report destination (stdout when None).
    """
    system: str
    dim: int
    params: dict[str, float] = field(default_factory=dict)
    seed: int = 0
    trials: int = 100
    tolerances: Tolerances = field(default_factory=Tolerances)
    output: Path | None = None

    @classmethod
    def from_cli(
        cls,
        system: str,
        dim: int,
        param_pairs: Iterable[str] = (),
        seed: int = 0,
        trials: int = 100,
        tol_pairs: Iterable[str] = (),
        output: str | None = None,
    ) -> RunConfig:
        if trials < 1:
            raise InvalidParameter(f"trials must be >= 1, got {trials}")
        return cls(
            system=system,
            dim=dim,
            params=parse_pairs(param_pairs),
            seed=seed,
            trials=trials,
            tolerances=Tolerances.from_overrides(parse_pairs(tol_pairs, what="tolerance")),
            output=Path(output) if output else None,
        )

    def build_spec(self) -> SystemSpec:
        """Validate against the catalog and return the system."""
        return make_system(
            SystemId.from_name(self.system), self.dim, SystemParams.from_mapping(self.params),
        )
