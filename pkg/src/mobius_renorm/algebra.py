"""Target-algebra handles for convolution.

A handle bundles the unit, zero and the three operations a convolution
algebra needs (add, mul, scalar action by rationals), plus a commutativity
flag that character-level operations consult.  Values themselves are plain
library objects: Fractions, LaurentSeries, or LinCombs.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .laurent import LaurentSeries


@dataclass(frozen=True)
class Algebra:
    name: str
    one: Any
    zero: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    scale: Callable[[Fraction, Any], Any]
    commutative: bool = True

    def sub(self, x, y):
        return self.add(x, self.scale(Fraction(-1), y))

    def from_scalar(self, c):
        return self.scale(Fraction(c), self.one)

    def __repr__(self):
        return f"Algebra({self.name})"


RATIONALS = Algebra(
    name="rationals",
    one=Fraction(1),
    zero=Fraction(0),
    add=operator.add,
    mul=operator.mul,
    scale=lambda c, x: Fraction(c) * x,
)

LAURENT = Algebra(
    name="laurent",
    one=LaurentSeries.one(),
    zero=LaurentSeries.zero(),
    add=operator.add,
    mul=operator.mul,
    scale=lambda c, x: x.scale(c),
)
