"""Forward-mode differentiation of phase-space observables."""
from .dual import Dual, sqrt, value_of, seed_duals
from .observable import Observable, Gradient, gradient, fd_gradient

__all__ = [
    "Dual", "sqrt", "value_of", "seed_duals",
    "Observable", "Gradient", "gradient", "fd_gradient",
]
