"""Filtered coalgebras, convolution algebras Lin(C, A), and abstract
Moebius inversion.

A :class:`CoalgebraSpec` is a behavioural contract: comultiplication and
counit on basis keys, a filtration degree, a group-like flag, and optionally
a finite basis enumeration per degree for tests.  The standing assumption
throughout is that the degree-0 part is spanned by group-like keys; that is
what makes the inversion recursion well founded.

Two independent inversion routes are provided on purpose and are compared
against each other in the test suite: the recursion psi = e - psi*(phi - e),
and the alternating even/odd series psi = sum_n (-1)^n (phi - e)^{*n}, which
terminates at n = degree(x) for each key.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .algebra import Algebra, RATIONALS
from .errors import NotUnitOnGrouplike
from .lincomb import LinComb


@dataclass(frozen=True, kw_only=True)
class CoalgebraSpec:
    """Basis-level description of a filtered coalgebra.

    ``comult`` returns a LinComb over pair keys; ``basis_up_to`` maps a degree
    bound to the finite list of keys of at most that degree (None for
    instances that cannot enumerate, e.g. untruncated monoids).
    """

    name: str
    comult: Callable[[Any], LinComb]
    counit: Callable[[Any], Fraction]
    degree: Callable[[Any], int]
    is_grouplike: Callable[[Any], bool]
    basis_up_to: Callable[[int], list] | None = None

    def __repr__(self):
        return f"CoalgebraSpec({self.name})"


class LinMap:
    """Element of Lin(C, A): a rule on basis keys with a transparent cache.

    The memo is the only mutable state; a value is computed once per key and
    concurrent reads of computed entries are safe.  Instances behave as pure
    functions.
    """

    def __init__(self, coalgebra: CoalgebraSpec, target: Algebra, rule, name=""):
        self.coalgebra = coalgebra
        self.target = target
        self.name = name
        self._rule = rule
        self._memo = {}

    def __call__(self, key):
        try:
            return self._memo[key]
        except KeyError:
            value = self._rule(key)
            self._memo[key] = value
            return value

    def on_lincomb(self, lc: LinComb):
        """Linear extension to a combination of basis keys."""
        A = self.target
        acc = A.zero
        for key, c in lc.items():
            acc = A.add(acc, A.scale(c, self(key)))
        return acc

    def __repr__(self):
        return f"LinMap({self.name or '?'}: {self.coalgebra.name} -> {self.target.name})"


def neutral_e(C: CoalgebraSpec, A: Algebra) -> LinMap:
    """Unit of the convolution algebra: e(x) = counit(x) * 1."""
    return LinMap(C, A, lambda x: A.from_scalar(C.counit(x)), name="e")


def zeta(C: CoalgebraSpec, A: Algebra) -> LinMap:
    """The map sending every basis key to 1."""
    return LinMap(C, A, lambda x: A.one, name="zeta")


def convolve(f: LinMap, g: LinMap) -> LinMap:
    """Convolution product: (f*g)(x) = sum over comult(x) of f(x1)*g(x2)."""
    if f.coalgebra is not g.coalgebra:
        raise ValueError("convolution requires a shared coalgebra")
    if f.target is not g.target:
        raise ValueError("convolution requires a shared target algebra")
    C, A = f.coalgebra, f.target

    def rule(x):
        acc = A.zero
        for (k1, k2), c in C.comult(x).items():
            acc = A.add(acc, A.scale(c, A.mul(f(k1), g(k2))))
        return acc

    return LinMap(C, A, rule, name=f"({f.name}*{g.name})")


def _phi_minus_e(phi: LinMap) -> LinMap:
    """phi - e, checking lazily that phi is 1 on every group-like key visited."""
    C, A = phi.coalgebra, phi.target

    def rule(x):
        v = phi(x)
        if C.is_grouplike(x) and v != A.one:
            raise NotUnitOnGrouplike(x)
        return A.sub(v, A.from_scalar(C.counit(x)))

    return LinMap(C, A, rule, name=f"({phi.name}-e)")


def moebius_invert_recursive(phi: LinMap) -> LinMap:
    """Convolution inverse of phi via psi = e - psi*(phi - e).

    phi must send group-like keys to 1; this is checked lazily at each key
    the recursion visits.  The recursion is well founded because (phi - e)
    vanishes on group-likes, so the left factor always has strictly smaller
    degree.
    """
    C, A = phi.coalgebra, phi.target
    diff = _phi_minus_e(phi)

    def rule(x):
        if C.is_grouplike(x):
            if phi(x) != A.one:
                raise NotUnitOnGrouplike(x)
            return A.one
        dx = C.degree(x)
        acc = A.from_scalar(C.counit(x))
        for (k1, k2), c in C.comult(x).items():
            v2 = diff(k2)
            if v2 == A.zero:
                continue
            assert C.degree(k1) < dx, "inversion recursion is not well founded"
            acc = A.sub(acc, A.scale(c, A.mul(psi(k1), v2)))
        return acc

    psi = LinMap(C, A, rule, name=f"inv({phi.name})")
    return psi


def moebius_invert_evenodd(phi: LinMap) -> LinMap:
    """Convolution inverse of phi as the alternating even/odd series.

    psi_0 = e, psi_{n+1} = psi_n * (phi - e), psi = sum (-1)^n psi_n; the sum
    stops at n = degree(x) for each key because higher convolution powers of
    (phi - e) vanish there.
    """
    C, A = phi.coalgebra, phi.target
    diff = _phi_minus_e(phi)
    levels = [neutral_e(C, A)]

    def level(n):
        while len(levels) <= n:
            levels.append(convolve(levels[-1], diff))
        return levels[n]

    def rule(x):
        if C.is_grouplike(x) and phi(x) != A.one:
            raise NotUnitOnGrouplike(x)
        acc = A.zero
        for n in range(C.degree(x) + 1):
            term = level(n)(x)
            acc = A.add(acc, term) if n % 2 == 0 else A.sub(acc, term)
        return acc

    return LinMap(C, A, rule, name=f"invEO({phi.name})")


def check_standing_assumption(C: CoalgebraSpec, max_degree: int) -> bool:
    """True iff every degree-0 key is group-like (structurally: comult(x) =
    x (x) x and counit(x) = 1) and every key flagged group-like has counit 1,
    on the enumerated basis up to ``max_degree``."""
    if C.basis_up_to is None:
        raise ValueError("standing-assumption check needs a basis enumeration")
    for key in C.basis_up_to(max_degree):
        structurally_gl = (
            C.comult(key) == LinComb.single((key, key)) and C.counit(key) == 1
        )
        if C.degree(key) == 0 and not structurally_gl:
            return False
        if C.is_grouplike(key):
            if not structurally_gl or C.counit(key) != 1:
                return False
    return True


def pointwise_equal(f: LinMap, g: LinMap, keys) -> bool:
    return all(f(k) == g(k) for k in keys)


def _flatten(C: CoalgebraSpec, pair_lc: LinComb, side: str) -> LinComb:
    # Expand one tensor factor of a LinComb over pair keys into triples.
    out = LinComb()
    for (k1, k2), c in pair_lc.items():
        if side == "left":
            for (a, b), c2 in C.comult(k1).items():
                out = out + (c * c2) * LinComb.single((a, b, k2))
        else:
            for (a, b), c2 in C.comult(k2).items():
                out = out + (c * c2) * LinComb.single((k1, a, b))
    return out


def check_coassociativity(C: CoalgebraSpec, keys) -> bool:
    """(comult (x) id) o comult = (id (x) comult) o comult on the given keys."""
    for key in keys:
        dx = C.comult(key)
        if _flatten(C, dx, "left") != _flatten(C, dx, "right"):
            return False
    return True


def check_counit_laws(C: CoalgebraSpec, keys) -> bool:
    """(counit (x) id) o comult = id = (id (x) counit) o comult on the keys."""
    for key in keys:
        left = LinComb()
        right = LinComb()
        for (k1, k2), c in C.comult(key).items():
            left = left + (c * C.counit(k1)) * LinComb.single(k2)
            right = right + (c * C.counit(k2)) * LinComb.single(k1)
        if left != LinComb.single(key) or right != LinComb.single(key):
            return False
    return True
