"""Conformally flat, spherically symmetric metrics ds² = f(r)² dq².

For such a metric the scalar curvature is

    R = −(N−1)·[(N−4)f′² + f(2f″ + 2(N−1)f′/r)] / f⁴,

and the intrinsic Kepler-Coulomb and oscillator potentials are
u_kc = ∫ dr/(r²f) and u_o = 1/u_kc².
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from staeckel_systems.errors import DomainViolation, NotCurved
from staeckel_systems.models.system import RadialDomain, SystemId, SystemSpec

RadialRule = Callable[[float], float]


@dataclass(frozen=True)
class MetricProfile:
    """Radial conformal factor with exact first and second derivatives."""
    label: str
    f: RadialRule
    df: RadialRule
    d2f: RadialRule
    domain: RadialDomain | None = None

    def value(self, r: float) -> float:
        """f(r), rejecting radii outside the domain."""
        if self.domain is not None and not self.domain.contains(r):
            raise DomainViolation(f"{self.label}: r={r:g} outside {self.domain.describe()}")
        return self.f(r)


def _require_curved(spec: SystemSpec) -> None:
    if not spec.id.is_curved:
        raise NotCurved(f"{spec.label} is flat; no conformal factor to report")


def _require_domain(spec: SystemSpec, r: float) -> None:
    if not spec.radial_domain.contains(r):
        raise DomainViolation(f"{spec.label}: r={r:g} outside {spec.radial_domain.describe()}")


def conformal_factor(spec: SystemSpec) -> MetricProfile:
    """f(r) for a curved catalog system.

    Raises:
        NotCurved: for the three flat systems.
    """
    _require_curved(spec)
    dom = spec.radial_domain
    if spec.id == SystemId.CURVED_KC:
        return MetricProfile("f=r", lambda r: r, lambda r: 1.0, lambda r: 0.0, dom)
    if spec.id == SystemId.DARBOUX_III:
        lam = spec.params.lam

        def f(r):
            return math.sqrt(1.0 + lam * r * r)

        return MetricProfile(
            "f=sqrt(1+lambda r^2)", f,
            lambda r: lam * r / f(r),
            lambda r: lam / f(r) ** 3,
            dom,
        )
    if spec.id == SystemId.SPHERICAL_OSCILLATOR:
        return MetricProfile(
            "f=1/sqrt(r)",
            lambda r: r ** -0.5,
            lambda r: -0.5 * r ** -1.5,
            lambda r: 0.75 * r ** -2.5,
            dom,
        )
    eta = spec.params.eta

    def g(r):
        return math.sqrt((eta + r) / r)

    def dg(r):
        return -eta / (2.0 * r * r * g(r))

    return MetricProfile(
        "f=sqrt((eta+r)/r)", g, dg,
        lambda r: eta / (r ** 3 * g(r)) + eta * dg(r) / (2.0 * r * r * g(r) ** 2),
        dom,
    )


def flat_profile() -> MetricProfile:
    """f ≡ 1 (Euclidean space)."""
    return MetricProfile("f=1", lambda r: 1.0, lambda r: 0.0, lambda r: 0.0)


def curvature_from_derivatives(f: float, df: float, d2f: float, n: int, r: float) -> float:
    return -(n - 1) * ((n - 4) * df * df + f * (2.0 * d2f + 2.0 * (n - 1) * df / r)) / f ** 4


def scalar_curvature_closed(spec: SystemSpec, r: float) -> float:
    """Closed-form scalar curvature of a curved catalog system at radius r."""
    _require_curved(spec)
    _require_domain(spec, r)
    n = spec.dim
    p = spec.params
    if spec.id == SystemId.CURVED_KC:
        return -3.0 * (n - 1) * (n - 2) / r ** 4
    if spec.id == SystemId.DARBOUX_III:
        lam = p.lam
        return -lam * (n - 1) * (2 * n + 3 * (n - 2) * lam * r * r) / (1.0 + lam * r * r) ** 3
    if spec.id == SystemId.SPHERICAL_OSCILLATOR:
        return 3.0 * (n - 1) * (n - 2) / (4.0 * r)
    eta = p.eta
    return eta * (n - 1) * (4 * (n - 3) * r + 3 * (n - 2) * eta) / (4.0 * r * (eta + r) ** 3)


def scalar_curvature_oracle(profile: MetricProfile, n: int, r: float, h: float = 1e-4) -> float:
    """General curvature formula with f′, f″ from central differences of f alone.

    Raises:
        DomainViolation: a stencil point r ± h leaves the profile's domain.
    """
    f_minus, f_0, f_plus = profile.value(r - h), profile.value(r), profile.value(r + h)
    df = (f_plus - f_minus) / (2.0 * h)
    d2f = (f_plus - 2.0 * f_0 + f_minus) / (h * h)
    return curvature_from_derivatives(f_0, df, d2f, n, r)


def scalar_curvature_exact(profile: MetricProfile, n: int, r: float) -> float:
    """General curvature formula with the profile's exact derivatives."""
    return curvature_from_derivatives(profile.value(r), profile.df(r), profile.d2f(r), n, r)


def intrinsic_potentials(spec: SystemSpec, r: float) -> tuple[float, float]:
    """(u_kc, u_o) in the displayed normalization, u_o = 1/u_kc².

    Raises:
        DomainViolation: r outside the domain, or r = 0 where u_kc is singular.
    """
    _require_curved(spec)
    _require_domain(spec, r)
    if r == 0.0:
        raise DomainViolation(f"{spec.label}: intrinsic potentials are singular at r=0")
    p = spec.params
    if spec.id == SystemId.CURVED_KC:
        return -1.0 / (2.0 * r * r), 4.0 * r ** 4
    if spec.id == SystemId.DARBOUX_III:
        return -math.sqrt(1.0 + p.lam * r * r) / r, r * r / (1.0 + p.lam * r * r)
    if spec.id == SystemId.SPHERICAL_OSCILLATOR:
        return -2.0 / math.sqrt(r), r / 4.0
    eta = p.eta
    return -(2.0 / eta) * math.sqrt((eta + r) / r), eta * eta * r / (4.0 * (eta + r))


def kc_integrand(spec: SystemSpec, r: float) -> float:
    """1/(r² f(r)), the radial derivative of u_kc."""
    return 1.0 / (r * r * conformal_factor(spec).value(r))
