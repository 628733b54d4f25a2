"""Hamiltonian trajectory integration and conservation drift."""
from .integrator import (
    Trajectory, integrate, drift_report, series_drift, time_reversal_gap,
    hamilton_vector_field, boundary_distance,
)

__all__ = [
    "Trajectory", "integrate", "drift_report", "series_drift", "time_reversal_gap",
    "hamilton_vector_field", "boundary_distance",
]
