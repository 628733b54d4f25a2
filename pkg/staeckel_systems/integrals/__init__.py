"""Integrals of motion and Poisson-algebra generators."""
from .kinds import KindTag, ObservableKind
from .catalog import (
    build_observable, hamiltonian_observable, angular_towers,
    fradkin_components, lrl_components, so_generators, sl2_generators,
    catalog_symmetries, independent_set, free_independent_sets,
)

__all__ = [
    "KindTag", "ObservableKind",
    "build_observable", "hamiltonian_observable", "angular_towers",
    "fradkin_components", "lrl_components", "so_generators", "sl2_generators",
    "catalog_symmetries", "independent_set", "free_independent_sets",
]
