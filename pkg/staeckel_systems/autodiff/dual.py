"""Dual numbers for forward-mode differentiation.

A Dual carries a value and a tangent vector. Seeding the 2N phase-space
coordinates with the unit vectors e_1..e_2N propagates all 2N directional
derivatives through one evaluation of an observable.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np


class Dual:
    __slots__ = ("value", "tangent")

    def __init__(self, value: float, tangent: np.ndarray):
        self.value = float(value)
        self.tangent = tangent

    def __repr__(self) -> str:
        return f"Dual({self.value!r}, {self.tangent!r})"

    def __add__(self, other: Number) -> Dual:
        if isinstance(other, Dual):
            return Dual(self.value + other.value, self.tangent + other.tangent)
        return Dual(self.value + other, self.tangent)

    __radd__ = __add__

    def __sub__(self, other: Number) -> Dual:
        if isinstance(other, Dual):
            return Dual(self.value - other.value, self.tangent - other.tangent)
        return Dual(self.value - other, self.tangent)

    def __rsub__(self, other: Number) -> Dual:
        return Dual(other - self.value, -self.tangent)

    def __mul__(self, other: Number) -> Dual:
        if isinstance(other, Dual):
            return Dual(
                self.value * other.value,
                self.value * other.tangent + other.value * self.tangent,
            )
        return Dual(self.value * other, self.tangent * other)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> Dual:
        if isinstance(other, Dual):
            return Dual(
                self.value / other.value,
                (self.tangent * other.value - self.value * other.tangent) / (other.value ** 2),
            )
        return Dual(self.value / other, self.tangent / other)

    def __rtruediv__(self, other: Number) -> Dual:
        return Dual(other / self.value, -other * self.tangent / (self.value ** 2))

    def __neg__(self) -> Dual:
        return Dual(-self.value, -self.tangent)

    def __pos__(self) -> Dual:
        return self

    def __pow__(self, power: float) -> Dual:
        if isinstance(power, Dual):
            raise TypeError("Dual exponents are not supported")
        if power == 0:
            return Dual(1.0, np.zeros_like(self.tangent))
        return Dual(self.value ** power, power * self.value ** (power - 1) * self.tangent)

    def sqrt(self) -> Dual:
        root = math.sqrt(self.value)
        return Dual(root, self.tangent / (2.0 * root))


Number = Union[Dual, float, int]


def sqrt(x: Number) -> Number:
    """Square root dispatching on Dual or plain float."""
    if isinstance(x, Dual):
        return x.sqrt()
    return math.sqrt(x)


def value_of(x: Number) -> float:
    """Primal value of a Dual, or the float itself."""
    if isinstance(x, Dual):
        return x.value
    return float(x)


def seed_duals(values: np.ndarray) -> list[Dual]:
    """One Dual per coordinate, tangent set to the matching unit vector."""
    n = len(values)
    eye = np.eye(n)
    return [Dual(values[k], eye[k]) for k in range(n)]
