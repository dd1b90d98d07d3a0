"""Bialgebras, multiplicative maps (characters), and the antipode for
not-quite-connected bialgebras.

The antipode is itself an instance of abstract Moebius inversion: invert the
operator T (1 on group-likes, identity on the positive-degree complement)
inside Lin(B, B).  The resulting S inverts any character by precomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

from .algebra import Algebra
from .coalgebra import CoalgebraSpec, LinMap, convolve, moebius_invert_recursive
from .errors import NonCommutativeTarget
from .lincomb import LinComb


@dataclass(frozen=True, kw_only=True)
class BialgebraSpec(CoalgebraSpec):
    """Coalgebra plus a compatible product on basis keys.

    ``mult`` returns the product of two basis keys as a LinComb;
    ``plus_complement`` selects the complement of the group-like span
    (for graded instances: the positive-degree keys).
    """

    mult: Callable[[Any, Any], LinComb]
    unit_key: Any
    plus_complement: Callable[[Any], bool]

    def __repr__(self):
        return f"BialgebraSpec({self.name})"


def mult_lincomb(b: BialgebraSpec, u: LinComb, v: LinComb) -> LinComb:
    """Bilinear extension of the basis product."""
    out = LinComb()
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            out = out + (c1 * c2) * b.mult(k1, k2)
    return out


@lru_cache(maxsize=None)
def bialgebra_algebra(b: BialgebraSpec) -> Algebra:
    """B itself as a target algebra, with LinComb values."""
    return Algebra(
        name=f"{b.name} (as algebra)",
        one=LinComb.single(b.unit_key),
        zero=LinComb(),
        add=lambda u, v: u + v,
        mul=lambda u, v: mult_lincomb(b, u, v),
        scale=lambda c, u: u.scale(c),
        commutative=True,
    )


class Character(LinMap):
    """A LinMap that is multiplicative and sends group-likes to 1.

    Multiplicativity is not re-verified per call; it is supplied by the
    construction (multiplicative extension from generators) or by the
    closure lemma for convolutions of characters.
    """

    def __init__(self, bialgebra: BialgebraSpec, target: Algebra, rule, name=""):
        super().__init__(bialgebra, target, rule, name)
        self.bialgebra = bialgebra


def as_character(b: BialgebraSpec, f: LinMap, name="") -> Character:
    """Re-wrap an existing LinMap on b as a Character (caller vouches)."""
    return Character(b, f.target, f.__call__, name or f.name)


def is_multiplicative(f: LinMap, b: BialgebraSpec, max_degree: int) -> bool:
    """Check f(x*y) = f(x) f(y) over all basis pairs with total degree at
    most ``max_degree`` (left side extended linearly over the product)."""
    if b.basis_up_to is None:
        raise ValueError("multiplicativity check needs a basis enumeration")
    A = f.target
    keys = b.basis_up_to(max_degree)
    for x in keys:
        dx = b.degree(x)
        for y in keys:
            if dx + b.degree(y) > max_degree:
                continue
            if f.on_lincomb(b.mult(x, y)) != A.mul(f(x), f(y)):
                return False
    return True


def convolve_characters(alpha: Character, beta: Character) -> Character:
    """Convolution of two characters, again a character (the closure lemma
    needs the target to be commutative)."""
    if alpha.bialgebra is not beta.bialgebra:
        raise ValueError("characters live on different bialgebras")
    if not alpha.target.commutative:
        raise NonCommutativeTarget(
            f"target {alpha.target.name} is not commutative"
        )
    conv = convolve(alpha, beta)
    result = Character(alpha.bialgebra, alpha.target, conv.__call__, name=conv.name)
    if __debug__ and alpha.bialgebra.basis_up_to is not None:
        assert is_multiplicative(result, alpha.bialgebra, 4)
    return result


def t_operator(b: BialgebraSpec) -> LinMap:
    """T: 1 on group-like keys, identity on the positive complement."""
    A = bialgebra_algebra(b)

    def rule(x):
        if b.is_grouplike(x):
            return A.one
        if b.plus_complement(x):
            return LinComb.single(x)
        raise ValueError(f"key {x!r} is neither group-like nor in the complement")

    return LinMap(b, A, rule, name="T")


def antipode(b: BialgebraSpec) -> LinMap:
    """Convolution inverse of the T operator in Lin(B, B), computed by the
    inversion engine: S = e - S * (T - e)."""
    s = moebius_invert_recursive(t_operator(b))
    s.name = "S"
    return s


def invert_via_antipode(phi: Character, s: LinMap) -> LinMap:
    """phi o S, extended linearly; equals the convolution inverse of phi
    whenever phi is multiplicative."""
    return LinMap(
        phi.coalgebra, phi.target, lambda x: phi.on_lincomb(s(x)), name=f"{phi.name}oS"
    )
