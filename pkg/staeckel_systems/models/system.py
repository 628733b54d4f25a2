"""Catalog of Hamiltonian systems, their parameters and radial domains.

Every system is written as H = p²/μ̃(q) + Ṽ(q). The four curved entries are
Stäckel transforms H̃ = H/U of free motion H = ½p² + α, rescaled so that

    ℋ = scale·H̃ + shift

with (scale, shift) = (β, 0) for the curved KC system, (γ, −α) for
Darboux III, (δ, 0) for the spherical-curvature oscillator and (ξ, 0) for
the Taub-NUT oscillator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Callable, Mapping, Sequence

from staeckel_systems.autodiff.dual import Number, sqrt
from staeckel_systems.errors import (
    DomainViolation,
    IncompatibleKind,
    InvalidParameter,
    UnsupportedDimension,
)
from staeckel_systems.models.phase_state import PhaseState

# Rule on positions (floats or Duals) returning a scalar.
PositionRule = Callable[[Sequence[Number]], Number]


class SystemId(Enum):
    FREE_EUCLIDEAN = "free"
    FLAT_OSCILLATOR = "flat-oscillator"
    FLAT_KC = "flat-kc"
    CURVED_KC = "curved-kc"
    DARBOUX_III = "darboux3"
    SPHERICAL_OSCILLATOR = "spherical-osc"
    TAUB_NUT = "taubnut"

    @classmethod
    def from_name(cls, name: str) -> SystemId:
        """Look up a system by its kebab-case CLI name."""
        for member in cls:
            if member.value == name:
                return member
        choices = ", ".join(m.value for m in cls)
        raise InvalidParameter(f"unknown system '{name}' (choose from: {choices})")

    @property
    def is_curved(self) -> bool:
        return self in CURVED_SYSTEMS

    @property
    def has_fradkin(self) -> bool:
        """Carries a (flat or curved) Fradkin tensor."""
        return self in (
            SystemId.FREE_EUCLIDEAN, SystemId.FLAT_OSCILLATOR,
            SystemId.CURVED_KC, SystemId.DARBOUX_III,
        )

    @property
    def has_lrl(self) -> bool:
        """Carries a (flat or curved) Laplace-Runge-Lenz vector."""
        return self in (
            SystemId.FREE_EUCLIDEAN, SystemId.FLAT_KC,
            SystemId.SPHERICAL_OSCILLATOR, SystemId.TAUB_NUT,
        )


CURVED_SYSTEMS = frozenset({
    SystemId.CURVED_KC, SystemId.DARBOUX_III,
    SystemId.SPHERICAL_OSCILLATOR, SystemId.TAUB_NUT,
})

# Accepted spellings for parameter names on the command line.
PARAM_ALIASES: dict[str, str] = {
    "alpha": "alpha",
    "beta": "beta",
    "gamma": "gamma",
    "delta": "delta",
    "xi": "xi",
    "lambda": "lam",
    "lam": "lam",
    "eta": "eta",
}


@dataclass(frozen=True)
class SystemParams:
    """Coupling constants shared by all catalog systems.

    Only the subset relevant to a system is read; the rest stay 0.

    Attributes:
        alpha: Additive constant of free motion (becomes the curved potential strength).
        beta: Oscillator constant of H_U = ½p² + βq² + γ.
        gamma: Additive constant of the oscillator intermediate.
        delta: Coulomb constant of H_U = ½p² + δ/|q| + ξ.
        xi: Additive constant of the Kepler-Coulomb intermediate.
        lam: Darboux III deformation λ = β/γ.
        eta: Taub-NUT parameter η = δ/ξ.
    """
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    delta: float = 0.0
    xi: float = 0.0
    lam: float = 0.0
    eta: float = 0.0

    @property
    def omega2(self) -> float:
        """Darboux III oscillator frequency squared, ω² = −2λα."""
        return -2.0 * self.lam * self.alpha

    @classmethod
    def from_mapping(cls, values: Mapping[str, float]) -> SystemParams:
        """Build from a ``name -> value`` mapping (``lambda`` accepted for ``lam``)."""
        kwargs: dict[str, float] = {}
        for name, value in values.items():
            key = PARAM_ALIASES.get(name)
            if key is None:
                raise InvalidParameter(
                    f"unknown parameter '{name}' (known: {', '.join(sorted(PARAM_ALIASES))})"
                )
            try:
                kwargs[key] = float(value)
            except (TypeError, ValueError) as exc:
                raise InvalidParameter(f"parameter {name}={value!r} is not a number") from exc
            if not math.isfinite(kwargs[key]):
                raise InvalidParameter(f"parameter {name} must be finite")
        return cls(**kwargs)

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def taub_nut_params(m: float, mu: float) -> SystemParams:
    """Taub-NUT constants from mass m and charge-like μ: η = 4m, α = −μ²/(2(4m)²)."""
    if m == 0:
        raise InvalidParameter("Taub-NUT mass m must be nonzero")
    eta = 4.0 * m
    return SystemParams(eta=eta, alpha=-mu * mu / (2.0 * eta * eta), xi=1.0, delta=eta)


@dataclass(frozen=True)
class RadialDomain:
    """Admissible interval for r = |q|.

    The upper end is always open; the lower end is closed only where every
    catalog observable of the system is regular at r = lower.
    """
    lower: float = 0.0
    upper: float = math.inf
    lower_closed: bool = False

    def contains(self, r: float) -> bool:
        if self.lower_closed:
            above = r >= self.lower
        else:
            above = r > self.lower
        return above and r < self.upper

    def shrink(self, margin: float, cap: float = 5.0) -> tuple[float, float]:
        """Interval left after removing ``margin`` from each open end.

        Unbounded domains are capped at r = ``cap``.
        """
        lo = self.lower if self.lower_closed else self.lower + margin
        hi = min(self.upper - margin, cap) if math.isfinite(self.upper) else cap
        return lo, hi

    def describe(self) -> str:
        left = "[" if self.lower_closed else "("
        upper = "inf" if math.isinf(self.upper) else f"{self.upper:g}"
        return f"r in {left}{self.lower:g}, {upper})"


@dataclass(frozen=True)
class SystemSpec:
    """A catalog Hamiltonian H = p²/μ̃(q) + Ṽ(q) with its parameters.

    Attributes:
        id: Catalog entry.
        dim: Degrees of freedom N.
        params: Normalized coupling constants.
        kinetic: Rule q -> μ̃(q).
        potential: Rule q -> Ṽ(q).
        radial_domain: Admissible r = |q|.
        scale: Stäckel scale (ℋ = scale·H̃ + shift); 1 for flat entries.
        shift: Stäckel shift; 0 except for Darboux III.
    """
    id: SystemId
    dim: int
    params: SystemParams
    kinetic: PositionRule
    potential: PositionRule
    radial_domain: RadialDomain
    scale: float = 1.0
    shift: float = 0.0

    @property
    def label(self) -> str:
        return self.id.value

    def hamiltonian(self, q: Sequence[Number], p: Sequence[Number]) -> Number:
        """Evaluate ℋ on floats or Duals, without domain checks."""
        return _sum_sq(p) / self.kinetic(q) + self.potential(q)

    def check_domain(self, x: PhaseState) -> None:
        r = x.radius
        if not self.radial_domain.contains(r):
            raise DomainViolation(
                f"{self.label}: |q| = {r:.6g} outside {self.radial_domain.describe()}"
            )


# ── Position helpers (float or Dual) ──────────────────────────────


def _sum_sq(v: Sequence[Number]) -> Number:
    total: Number = 0.0
    for c in v:
        total = total + c * c
    return total


def _norm(q: Sequence[Number]) -> Number:
    return sqrt(_sum_sq(q))


def q_squared(q: Sequence[Number]) -> Number:
    return _sum_sq(q)


def q_norm(q: Sequence[Number]) -> Number:
    return _norm(q)


# ── Catalog ───────────────────────────────────────────────────────


def _normalize(system_id: SystemId, params: SystemParams) -> SystemParams:
    """Fill in Stäckel constants and reject degenerate parameters."""
    if system_id == SystemId.FLAT_OSCILLATOR and params.beta == 0:
        raise InvalidParameter("flat-oscillator: beta must be nonzero")
    if system_id == SystemId.FLAT_KC and params.delta == 0:
        raise InvalidParameter("flat-kc: delta must be nonzero")
    if system_id == SystemId.CURVED_KC:
        return replace(params, beta=params.beta or 1.0, gamma=0.0)
    if system_id == SystemId.DARBOUX_III:
        lam = params.lam
        if lam == 0 and params.beta != 0 and params.gamma != 0:
            lam = params.beta / params.gamma
        if lam == 0:
            raise InvalidParameter("darboux3: lambda must be nonzero")
        gamma = params.gamma or 1.0
        return replace(params, lam=lam, gamma=gamma, beta=lam * gamma)
    if system_id == SystemId.SPHERICAL_OSCILLATOR:
        return replace(params, delta=params.delta or 1.0, xi=0.0)
    if system_id == SystemId.TAUB_NUT:
        eta = params.eta
        if eta == 0 and params.delta != 0 and params.xi != 0:
            eta = params.delta / params.xi
        if eta == 0:
            raise InvalidParameter("taubnut: eta must be nonzero (eta -> 0 is free motion)")
        xi = params.xi or 1.0
        return replace(params, eta=eta, xi=xi, delta=eta * xi)
    return params


def _radial_domain(system_id: SystemId, params: SystemParams) -> RadialDomain:
    if system_id in (SystemId.FREE_EUCLIDEAN, SystemId.FLAT_OSCILLATOR):
        return RadialDomain(0.0, math.inf, lower_closed=True)
    if system_id == SystemId.DARBOUX_III:
        if params.lam < 0:
            return RadialDomain(0.0, 1.0 / math.sqrt(-params.lam), lower_closed=True)
        return RadialDomain(0.0, math.inf, lower_closed=True)
    if system_id == SystemId.TAUB_NUT and params.eta < 0:
        return RadialDomain(-params.eta, math.inf, lower_closed=False)
    return RadialDomain(0.0, math.inf, lower_closed=False)


def _profile(system_id: SystemId, params: SystemParams) -> tuple[PositionRule, PositionRule]:
    """(μ̃, Ṽ) rules for a catalog entry."""
    a = params.alpha
    if system_id == SystemId.FREE_EUCLIDEAN:
        return (lambda q: 2.0), (lambda q: a)
    if system_id == SystemId.FLAT_OSCILLATOR:
        b, g = params.beta, params.gamma
        return (lambda q: 2.0), (lambda q: b * _sum_sq(q) + g)
    if system_id == SystemId.FLAT_KC:
        d, x = params.delta, params.xi
        return (lambda q: 2.0), (lambda q: d / _norm(q) + x)
    if system_id == SystemId.CURVED_KC:
        return (lambda q: 2.0 * _sum_sq(q)), (lambda q: a / _sum_sq(q))
    if system_id == SystemId.DARBOUX_III:
        lam = params.lam
        return (
            lambda q: 2.0 * (1.0 + lam * _sum_sq(q)),
            lambda q: -lam * a * _sum_sq(q) / (1.0 + lam * _sum_sq(q)),
        )
    if system_id == SystemId.SPHERICAL_OSCILLATOR:
        return (lambda q: 2.0 / _norm(q)), (lambda q: a * _norm(q))
    eta = params.eta
    return (
        lambda q: 2.0 * (eta + _norm(q)) / _norm(q),
        lambda q: a * _norm(q) / (eta + _norm(q)),
    )


def _staeckel_scaling(system_id: SystemId, params: SystemParams) -> tuple[float, float]:
    if system_id == SystemId.CURVED_KC:
        return params.beta, 0.0
    if system_id == SystemId.DARBOUX_III:
        return params.gamma, -params.alpha
    if system_id == SystemId.SPHERICAL_OSCILLATOR:
        return params.delta, 0.0
    if system_id == SystemId.TAUB_NUT:
        return params.xi, 0.0
    return 1.0, 0.0


def make_system(system_id: SystemId, dim: int, params: SystemParams) -> SystemSpec:
    """Assemble a catalog system.

    Args:
        system_id: Catalog entry.
        dim: Degrees of freedom N (>= 2).
        params: Coupling constants; curved entries get their Stäckel
            constants filled in from λ or η.

    Returns:
        The validated SystemSpec.
    """
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2:
        raise UnsupportedDimension(f"dim must be an integer >= 2, got {dim!r}")
    params = _normalize(system_id, params)
    kinetic, potential = _profile(system_id, params)
    scale, shift = _staeckel_scaling(system_id, params)
    return SystemSpec(
        id=system_id,
        dim=dim,
        params=params,
        kinetic=kinetic,
        potential=potential,
        radial_domain=_radial_domain(system_id, params),
        scale=scale,
        shift=shift,
    )


def eval_hamiltonian(spec: SystemSpec, x: PhaseState) -> float:
    """Value of the system's Hamiltonian at x.

    Raises:
        DomainViolation: |q| outside the radial domain.
    """
    if x.dim != spec.dim:
        raise InvalidParameter(f"{spec.label}: expected N={spec.dim}, got N={x.dim}")
    spec.check_domain(x)
    return float(spec.hamiltonian(list(x.q), list(x.p)))


def flat_limit(spec: SystemSpec) -> SystemSpec:
    """Flat system reached as the curvature parameter goes to zero.

    Darboux III tends to the oscillator ½p² + (ω²/2)q² and Taub-NUT to free
    motion ½p² + α.
    """
    p = spec.params
    if spec.id == SystemId.DARBOUX_III:
        return make_system(
            SystemId.FLAT_OSCILLATOR, spec.dim, SystemParams(beta=p.omega2 / 2.0),
        )
    if spec.id == SystemId.TAUB_NUT:
        return make_system(SystemId.FREE_EUCLIDEAN, spec.dim, SystemParams(alpha=p.alpha))
    raise IncompatibleKind(f"{spec.label} has no flat limit in the catalog")
