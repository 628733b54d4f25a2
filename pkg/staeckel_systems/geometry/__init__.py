"""Metric profiles, scalar curvature and intrinsic potentials."""
from .metric import (
    MetricProfile, conformal_factor, flat_profile,
    scalar_curvature_closed, scalar_curvature_oracle, scalar_curvature_exact,
    intrinsic_potentials, kc_integrand,
)

__all__ = [
    "MetricProfile", "conformal_factor", "flat_profile",
    "scalar_curvature_closed", "scalar_curvature_oracle", "scalar_curvature_exact",
    "intrinsic_potentials", "kc_integrand",
]
