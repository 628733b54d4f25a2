"""Stäckel transform and the planar KS canonical map."""
from .staeckel import (
    PotentialForm, SymmetryDecomposition,
    transform_hamiltonian, transform_symmetry,
    free_motion, oscillator_intermediate, kepler_intermediate, intermediate_for,
    staeckel_hamiltonian, fradkin_decomposition, lrl_decomposition, angular_decomposition,
)
from .ks_map import (
    CanonicalMap2D, KS_FORWARD, KS_INVERSE, IDENTITY,
    ks_forward, ks_inverse, map_observable, jacobian, symplectic_defect,
    sample_branch_points, flat_kepler, flat_oscillator,
    kepler_side_images, oscillator_side_images,
)

__all__ = [
    "PotentialForm", "SymmetryDecomposition",
    "transform_hamiltonian", "transform_symmetry",
    "free_motion", "oscillator_intermediate", "kepler_intermediate", "intermediate_for",
    "staeckel_hamiltonian", "fradkin_decomposition", "lrl_decomposition", "angular_decomposition",
    "CanonicalMap2D", "KS_FORWARD", "KS_INVERSE", "IDENTITY",
    "ks_forward", "ks_inverse", "map_observable", "jacobian", "symplectic_defect",
    "sample_branch_points", "flat_kepler", "flat_oscillator",
    "kepler_side_images", "oscillator_side_images",
]
