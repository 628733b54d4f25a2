"""Symbols carried by quantum operator coefficients.

Coefficients are sympy expressions in q1..qN, the radius r, ħ and the
couplings α, λ, η. The radius stays a free symbol; differentiation applies
∂r/∂qᵢ = qᵢ/r and evaluation binds r = √(Σqᵢ²).
"""

from __future__ import annotations

from functools import lru_cache

import sympy

R = sympy.Symbol("r", positive=True)
HBAR = sympy.Symbol("hbar", positive=True)
ALPHA = sympy.Symbol("alpha", real=True)
LAM = sympy.Symbol("lam", real=True)
ETA = sympy.Symbol("eta", real=True)

PARAMETER_SYMBOLS = (HBAR, ALPHA, LAM, ETA)


def q_symbol(i: int) -> sympy.Symbol:
    """Position symbol q_{i+1} (0-based i)."""
    return sympy.Symbol(f"q{i + 1}", real=True)


def q_symbols(dim: int) -> tuple[sympy.Symbol, ...]:
    return tuple(q_symbol(i) for i in range(dim))


def evaluation_symbols(dim: int) -> tuple[sympy.Symbol, ...]:
    """Argument order of every lambdified coefficient: q1..qN, r, ħ, α, λ, η."""
    return q_symbols(dim) + (R,) + PARAMETER_SYMBOLS


def d_dq(expr: sympy.Expr, i: int) -> sympy.Expr:
    """Total derivative ∂/∂qᵢ with r treated as |q|."""
    qi = q_symbol(i)
    return expr.diff(qi) + expr.diff(R) * qi / R


@lru_cache(maxsize=None)
def partial(expr: sympy.Expr, index: tuple[int, ...]) -> sympy.Expr:
    """Mixed partial ∂^index of a coefficient (cached, composition reuses them)."""
    if not any(index):
        return expr
    i = next(k for k, a in enumerate(index) if a)
    lower = list(index)
    lower[i] -= 1
    return d_dq(partial(expr, tuple(lower)), i)
