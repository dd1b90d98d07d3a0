"""Rota-Baxter layer: modified convolution, the Bogoliubov counter-term
recursion, the Atkinson even/odd series, Birkhoff decomposition, and the
final finite evaluation.

The counter-term construction is Moebius inversion with one change: an
idempotent Rota-Baxter operator R is applied after each convolution.  With
R = identity the constructions reduce to plain Moebius inversion; with
R = pole part on Laurent series they perform minimal subtraction.  The
modified convolution *_R is neither associative nor unital, so the even/odd
iteration keeps all parentheses nested on the left; nothing here relies on
associativity of *_R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .algebra import Algebra, LAURENT
from .bialgebra import Character, is_multiplicative
from .coalgebra import LinMap, convolve, neutral_e, _phi_minus_e
from .errors import NotUnitOnGrouplike, UnitNotInKerR


@dataclass(frozen=True)
class RotaBaxterAlgebra:
    """A commutative unital algebra together with a linear operator R.

    For the constructions below R should be idempotent and satisfy the
    weight-1 Rota-Baxter equation; that is what :func:`rb_check` verifies
    and what the test suite asserts for the shipped instances.  The holder
    itself does not validate, so deliberately broken operators can be built
    as negative controls.
    """

    algebra: Algebra
    operator: Callable[[Any], Any]
    name: str = ""


def pole_part_rb() -> RotaBaxterAlgebra:
    """Minimal subtraction: R = pole part on Laurent series."""
    return RotaBaxterAlgebra(LAURENT, lambda x: x.pole_part(), name="pole-part")


def identity_rb(algebra: Algebra) -> RotaBaxterAlgebra:
    """R = identity; the counter-term constructions degenerate to plain
    Moebius inversion."""
    return RotaBaxterAlgebra(algebra, lambda x: x, name="identity")


def rb_check(rb: RotaBaxterAlgebra, x, y) -> bool:
    """Weight-1 Rota-Baxter equation, exactly:
    R(xy) + R(x)R(y) = R(R(x)y + xR(y))."""
    A, R = rb.algebra, rb.operator
    lhs = A.add(R(A.mul(x, y)), A.mul(R(x), R(y)))
    rhs = R(A.add(A.mul(R(x), y), A.mul(x, R(y))))
    return lhs == rhs


def convolve_R(f: LinMap, g: LinMap, rb: RotaBaxterAlgebra) -> LinMap:
    """Modified convolution (f *_R g)(x) = R((f*g)(x)).

    Not associative and not unital; callers must not assume either.
    """
    conv = convolve(f, g)
    return LinMap(f.coalgebra, f.target, lambda x: rb.operator(conv(x)),
                  name=f"({f.name}*R{g.name})")


def bogoliubov_counterterm(phi: LinMap, rb: RotaBaxterAlgebra) -> LinMap:
    """Counter-term via the recursion psi = e - R[psi * (phi - e)].

    phi must send group-like keys to 1 (checked lazily per visited key).
    Well founded for the same reason as plain inversion: (phi - e) kills
    group-likes, so the left convolution factor drops in degree.
    """
    C, A = phi.coalgebra, phi.target
    R = rb.operator
    diff = _phi_minus_e(phi)

    def rule(x):
        if C.is_grouplike(x):
            if phi(x) != A.one:
                raise NotUnitOnGrouplike(x)
            return A.one
        dx = C.degree(x)
        inner = A.zero
        for (k1, k2), c in C.comult(x).items():
            v2 = diff(k2)
            if v2 == A.zero:
                continue
            assert C.degree(k1) < dx, "counter-term recursion is not well founded"
            inner = A.add(inner, A.scale(c, A.mul(psi(k1), v2)))
        return A.sub(A.from_scalar(C.counit(x)), R(inner))

    psi = LinMap(C, A, rule, name=f"ct({phi.name})")
    return psi


def atkinson_counterterm(phi: LinMap, rb: RotaBaxterAlgebra) -> LinMap:
    """Counter-term as the alternating series of left-nested *_R powers:
    psi_0 = e, psi_{n+1} = psi_n *_R (phi - e), psi = sum (-1)^n psi_n,
    summed to n = degree(x) per key."""
    C, A = phi.coalgebra, phi.target
    diff = _phi_minus_e(phi)
    levels = [neutral_e(C, A)]

    def level(n):
        # Left nesting is structural: each level is built from the previous
        # one on the left, never re-associated.
        while len(levels) <= n:
            levels.append(convolve_R(levels[-1], diff, rb))
        return levels[n]

    def rule(x):
        if C.is_grouplike(x) and phi(x) != A.one:
            raise NotUnitOnGrouplike(x)
        acc = A.zero
        for n in range(C.degree(x) + 1):
            term = level(n)(x)
            acc = A.add(acc, term) if n % 2 == 0 else A.sub(acc, term)
        return acc

    return LinMap(C, A, rule, name=f"ctEO({phi.name})")


@dataclass(frozen=True)
class BirkhoffPair:
    """Counter-term and renormalised map: minus, and plus = minus * phi."""

    minus: LinMap
    plus: LinMap


def birkhoff(phi: LinMap, rb: RotaBaxterAlgebra) -> BirkhoffPair:
    """Split phi into (phi_minus, phi_plus = phi_minus * phi).

    Requires R(1) = 0 so that phi_plus lands in Ker R on all of the
    coalgebra, group-likes included.  The returned maps assert their
    containments per evaluated key: minus(x) in Im R for x in Ker(counit),
    plus(x) in Ker R everywhere.
    """
    A = phi.target
    R = rb.operator
    if R(A.one) != A.zero:
        raise UnitNotInKerR(f"R(1) = {R(A.one)!r} is not 0 in {A.name}")
    C = phi.coalgebra
    minus_raw = bogoliubov_counterterm(phi, rb)
    plus_raw = convolve(minus_raw, phi)

    def minus_rule(x):
        v = minus_raw(x)
        assert C.counit(x) != 0 or R(v) == v, f"counter-term at {x!r} left Im R"
        return v

    def plus_rule(x):
        v = plus_raw(x)
        assert R(v) == A.zero, f"renormalised value at {x!r} left Ker R"
        return v

    return BirkhoffPair(
        minus=LinMap(C, A, minus_rule, name=f"minus({phi.name})"),
        plus=LinMap(C, A, plus_rule, name=f"plus({phi.name})"),
    )


def bphz_value(phi: LinMap, rb: RotaBaxterAlgebra, key) -> Fraction:
    """Finite value at a key: evaluate the renormalised map at the origin.

    Intended for Laurent targets with R = pole part; PolePresent here means
    a violated Birkhoff postcondition, not expected behaviour.
    """
    return birkhoff(phi, rb).plus(key).eval_at_zero()


def counterterm_multiplicativity_check(
    phi: Character, rb: RotaBaxterAlgebra, max_degree: int
) -> bool:
    """True iff both Birkhoff factors of a character are again multiplicative
    up to the given degree.  Fails for operators that are not Rota-Baxter."""
    b = phi.bialgebra
    minus = bogoliubov_counterterm(phi, rb)
    plus = convolve(minus, phi)
    return is_multiplicative(minus, b, max_degree) and is_multiplicative(
        plus, b, max_degree
    )
