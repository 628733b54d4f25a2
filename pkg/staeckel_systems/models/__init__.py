"""Phase-space primitives, the system catalog and sampling."""
from .phase_state import PhaseState
from .system import (
    SystemId, SystemParams, SystemSpec, RadialDomain,
    make_system, eval_hamiltonian, flat_limit, taub_nut_params,
)
from .sampling import sample_phase_point, sample_points

__all__ = [
    "PhaseState",
    "SystemId", "SystemParams", "SystemSpec", "RadialDomain",
    "make_system", "eval_hamiltonian", "flat_limit", "taub_nut_params",
    "sample_phase_point", "sample_points",
]
