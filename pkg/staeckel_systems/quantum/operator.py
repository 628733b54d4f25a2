"""Normal-ordered differential operators Σ c_a(q)·∂^a.

Each term is a symbolic coefficient to the left of a derivative
multi-index, so p̂ⱼ = −iħ∂ⱼ and q̂ⱼ is multiplication by qⱼ. Products are
brought back to normal order with the multivariate Leibniz rule

    ∂^a ∘ g = Σ_{b ≤ a} C(a, b) (∂^{a−b} g) ∂^b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Union

import sympy

from staeckel_systems.errors import InvalidParameter
from staeckel_systems.quantum.symbols import HBAR, partial, q_symbol

MultiIndex = tuple[int, ...]
Scalar = Union[int, float, sympy.Expr]


@dataclass(frozen=True)
class WeylOperator:
    """Σ terms[a]·∂^a on functions of N variables.

    Attributes:
        dim: Number of position variables N.
        terms: Derivative multi-index -> coefficient; structurally zero
            coefficients are dropped on construction.
    """
    # lets sympy defer `expr * op` to __rmul__
    _op_priority = 20.0

    dim: int
    terms: dict[MultiIndex, sympy.Expr] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for index, coeff in self.terms.items():
            if len(index) != self.dim:
                raise InvalidParameter(f"multi-index {index} does not have length {self.dim}")
            coeff = sympy.sympify(coeff)
            if coeff != 0:
                cleaned[tuple(index)] = coeff
        object.__setattr__(self, "terms", cleaned)

    @property
    def order(self) -> int:
        """Highest derivative order present (0 for multiplication operators)."""
        return max((sum(a) for a in self.terms), default=0)

    def is_structurally_zero(self) -> bool:
        return not self.terms

    def coefficient(self, index: MultiIndex) -> sympy.Expr:
        return self.terms.get(tuple(index), sympy.Integer(0))

    # ── Arithmetic ────────────────────────────────────────────────

    def _same_dim(self, other: WeylOperator) -> None:
        if other.dim != self.dim:
            raise InvalidParameter(f"operators act on N={self.dim} and N={other.dim}")

    def __add__(self, other: WeylOperator | Scalar) -> WeylOperator:
        other = _lift(other, self.dim)
        self._same_dim(other)
        out = dict(self.terms)
        for index, coeff in other.terms.items():
            out[index] = out.get(index, 0) + coeff
        return WeylOperator(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> WeylOperator:
        return WeylOperator(self.dim, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other: WeylOperator | Scalar) -> WeylOperator:
        return self + (-_lift(other, self.dim))

    def __rsub__(self, other: Scalar) -> WeylOperator:
        return _lift(other, self.dim) - self

    def __mul__(self, other: WeylOperator | Scalar) -> WeylOperator:
        """Composition self ∘ other; a scalar on the right acts as a multiplication operator."""
        return op_compose(self, _lift(other, self.dim))

    def __rmul__(self, other: Scalar) -> WeylOperator:
        # scalar on the left only rescales coefficients
        return WeylOperator(self.dim, {a: other * c for a, c in self.terms.items()})

    def __pow__(self, k: int) -> WeylOperator:
        if not isinstance(k, int) or k < 0:
            raise InvalidParameter(f"operator powers must be non-negative integers, got {k!r}")
        out = identity(self.dim)
        for _ in range(k):
            out = op_compose(out, self)
        return out

    def __repr__(self) -> str:
        parts = [f"({c})*d{list(a)}" for a, c in sorted(self.terms.items())]
        return f"WeylOperator(N={self.dim}: " + (" + ".join(parts) or "0") + ")"


def _lift(value: WeylOperator | Scalar, dim: int) -> WeylOperator:
    if isinstance(value, WeylOperator):
        return value
    return scalar(value, dim)


def _zero_index(dim: int) -> MultiIndex:
    return (0,) * dim


def _unit_index(i: int, dim: int) -> MultiIndex:
    return tuple(1 if k == i else 0 for k in range(dim))


def _below(index: MultiIndex):
    """Every multi-index b with b <= index componentwise."""
    return product(*(range(a + 1) for a in index))


def op_compose(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    """Normal-ordered product a ∘ b."""
    a._same_dim(b)
    out: dict[MultiIndex, sympy.Expr] = {}
    for alpha, c_a in a.terms.items():
        for beta, g in b.terms.items():
            for low in _below(alpha):
                moved = tuple(x - y for x, y in zip(alpha, low))
                weight = 1
                for x, y in zip(alpha, low):
                    weight *= comb(x, y)
                dg = partial(g, moved)
                if dg == 0:
                    continue
                target = tuple(x + y for x, y in zip(low, beta))
                out[target] = out.get(target, 0) + weight * c_a * dg
    return WeylOperator(a.dim, out)


def commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    """[a, b] = a∘b − b∘a."""
    return op_compose(a, b) - op_compose(b, a)


# ── Constructors ──────────────────────────────────────────────────


def scalar(value: Scalar, dim: int) -> WeylOperator:
    """Multiplication by a coefficient function."""
    return WeylOperator(dim, {_zero_index(dim): sympy.sympify(value)})


def identity(dim: int) -> WeylOperator:
    return scalar(1, dim)


def zero(dim: int) -> WeylOperator:
    return WeylOperator(dim, {})


def q_hat(i: int, dim: int) -> WeylOperator:
    """Position operator q̂ᵢ (0-based i)."""
    return scalar(q_symbol(i), dim)


def p_hat(i: int, dim: int) -> WeylOperator:
    """Momentum operator p̂ᵢ = −iħ∂ᵢ (0-based i)."""
    return WeylOperator(dim, {_unit_index(i, dim): -sympy.I * HBAR})


def p_squared(dim: int) -> WeylOperator:
    """p̂² = −ħ²Σ∂ᵢ²."""
    return WeylOperator(dim, {
        tuple(2 if k == i else 0 for k in range(dim)): -HBAR ** 2 for i in range(dim)
    })


def angular_component(i: int, j: int, dim: int) -> WeylOperator:
    """q̂ᵢp̂ⱼ − q̂ⱼp̂ᵢ (0-based)."""
    return q_hat(i, dim) * p_hat(j, dim) - q_hat(j, dim) * p_hat(i, dim)
