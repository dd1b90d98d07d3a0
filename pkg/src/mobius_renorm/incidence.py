"""Finite posets, their interval coalgebras, and classical Dirichlet
arithmetic: Moebius functions, totients, derangements, finite differences.

Poset intervals are graded by longest-chain length, the minimal filtration
that makes the interval comultiplication degree-compatible and the one-point
intervals the degree-0 keys.  The divisor coalgebra is the multiplicative
monoid truncated to a bound N; comultiplication of n only references
divisors of n, so the truncation is exact for every n <= N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import RATIONALS
from .coalgebra import CoalgebraSpec, moebius_invert_recursive, zeta
from .errors import CycleDetected, ParseError
from .lincomb import LinComb


class Poset:
    """Finite partial order.  Elements keep their construction order, which
    fixes the iteration order of every table the library prints."""

    def __init__(self, elements, up):
        self.elements = tuple(elements)
        self._up = {x: frozenset(s) for x, s in up.items()}
        self._chain_memo = {}

    @classmethod
    def _from_leq(cls, elements, leq):
        elements = list(elements)
        up = {x: {y for y in elements if leq(x, y)} for x in elements}
        return cls(elements, up)

    def leq(self, x, y):
        return y in self._up[x]

    def interval(self, lo, hi):
        if not self.leq(lo, hi):
            raise ValueError(f"{lo!r} is not below {hi!r}")
        return [z for z in self.elements if self.leq(lo, z) and self.leq(z, hi)]

    def intervals(self):
        return [
            (lo, hi) for lo in self.elements for hi in self.elements if self.leq(lo, hi)
        ]

    def interval_degree(self, lo, hi):
        """Length of the longest chain lo = z0 < ... < z_k = hi."""
        if not self.leq(lo, hi):
            raise ValueError(f"{lo!r} is not below {hi!r}")

        def longest(z):
            if z == hi:
                return 0
            key = (z, hi)
            if key not in self._chain_memo:
                self._chain_memo[key] = 1 + max(
                    longest(w)
                    for w in self.elements
                    if w != z and self.leq(z, w) and self.leq(w, hi)
                )
            return self._chain_memo[key]

        return longest(lo)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Poset({len(self.elements)} elements)"


def poset_from_cover_relations(elements, covers) -> Poset:
    """Reflexive-transitive closure of an acyclic cover relation."""
    elements = list(elements)
    known = set(elements)
    succ = {x: [] for x in elements}
    for a, b in covers:
        if a not in known or b not in known:
            raise ValueError(f"cover ({a!r}, {b!r}) mentions an unknown element")
        succ[a].append(b)

    up: dict = {}
    state: dict = {}  # 1 = on the current DFS path, 2 = closed

    def close(x):
        state[x] = 1
        reach = {x}
        for y in succ[x]:
            if state.get(y) == 1:
                raise CycleDetected(f"cover relations contain a cycle through {y!r}")
            if state.get(y) != 2:
                close(y)
            reach |= up[y]
        up[x] = reach
        state[x] = 2

    for x in elements:
        if state.get(x) != 2:
            close(x)
    return Poset(elements, up)


def chain_poset(n: int) -> Poset:
    """Total order on 0 .. n-1."""
    return poset_from_cover_relations(range(n), [(i, i + 1) for i in range(n - 1)])


def boolean_lattice(n: int) -> Poset:
    """Subsets of an n-set as bit tuples, ordered by inclusion."""
    import itertools

    elements = list(itertools.product((0, 1), repeat=n))
    return Poset._from_leq(elements, lambda x, y: all(a <= b for a, b in zip(x, y)))


def poset_product(p: Poset, q: Poset) -> Poset:
    elements = [(a, b) for a in p.elements for b in q.elements]
    return Poset._from_leq(
        elements, lambda x, y: p.leq(x[0], y[0]) and q.leq(x[1], y[1])
    )


def parse_poset(text: str) -> Poset:
    """Poset file format: a line ``elements: a b c``, then cover lines
    ``a < b``; ``#`` starts a comment."""
    elements = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if elements is not None:
                raise ParseError("duplicate 'elements:' line", lineno)
            elements = line[len("elements:"):].split()
            if not elements:
                raise ParseError("empty element list", lineno)
            if len(set(elements)) != len(elements):
                raise ParseError("repeated element label", lineno)
        else:
            parts = line.split("<")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise ParseError("expected a cover line 'a < b'", lineno)
            covers.append((parts[0].strip(), parts[1].strip()))
    if elements is None:
        raise ParseError("missing 'elements:' line", 0)
    known = set(elements)
    for a, b in covers:
        if a not in known or b not in known:
            raise ParseError(f"cover ({a}, {b}) mentions an unknown element", 0)
    return poset_from_cover_relations(elements, covers)


def load_poset(path) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_poset(fh.read())


def interval_coalgebra(p: Poset) -> CoalgebraSpec:
    """Basis = intervals [x, y]; comult splits at interior points."""

    def comult(key):
        lo, hi = key
        return LinComb({((lo, z), (z, hi)): 1 for z in p.interval(lo, hi)})

    def basis_up_to(d):
        return [k for k in p.intervals() if p.interval_degree(*k) <= d]

    return CoalgebraSpec(
        name=f"intervals[{len(p)} elements]",
        comult=comult,
        counit=lambda k: Fraction(1 if k[0] == k[1] else 0),
        degree=lambda k: p.interval_degree(*k),
        is_grouplike=lambda k: k[0] == k[1],
        basis_up_to=basis_up_to,
    )


def moebius_poset(p: Poset, lo, hi) -> Fraction:
    """Moebius function of one interval, via the inversion engine on zeta."""
    coalg = interval_coalgebra(p)
    mu = moebius_invert_recursive(zeta(coalg, RATIONALS))
    return mu((lo, hi))


# ---------------------------------------------------------------------------
# Divisibility: the multiplicative monoid of positive integers.

@lru_cache(maxsize=None)
def factorize(n: int) -> tuple:
    """Prime factorisation as ((p, exponent), ...), ascending primes."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def big_omega(n: int) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(e for _, e in factorize(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def classical_mu(n: int) -> int:
    """0 on numbers with a square factor, else (-1)^(number of primes)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def divisibility_coalgebra(bound: int) -> CoalgebraSpec:
    """Basis 1..bound, comult(n) = sum over factorisations n = i*j of i (x) j,
    graded by big_omega.  Exact for every n <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")

    def comult(n):
        return LinComb({(d, n // d): 1 for d in divisors(n)})

    def basis_up_to(d):
        return [n for n in range(1, bound + 1) if big_omega(n) <= d]

    return CoalgebraSpec(
        name=f"divisors<={bound}",
        comult=comult,
        counit=lambda n: Fraction(1 if n == 1 else 0),
        degree=big_omega,
        is_grouplike=lambda n: n == 1,
        basis_up_to=basis_up_to,
    )


@lru_cache(maxsize=None)
def nat_plus_coalgebra() -> CoalgebraSpec:
    """The additive monoid of naturals: comult(n) = sum_{i+j=n} i (x) j.

    Degree slices are singletons, so a full enumeration per degree exists
    even though the key set is infinite.
    """

    def comult(n):
        return LinComb({(i, n - i): 1 for i in range(n + 1)})

    return CoalgebraSpec(
        name="nat-plus",
        comult=comult,
        counit=lambda n: Fraction(1 if n == 0 else 0),
        degree=lambda n: n,
        is_grouplike=lambda n: n == 0,
        basis_up_to=lambda d: list(range(d + 1)),
    )


# ---------------------------------------------------------------------------
# Arithmetic functions under Dirichlet convolution.

@dataclass(frozen=True)
class ArithFn:
    """Function on 1..bound with exact rational values (index 0 unused)."""

    values: tuple

    @property
    def bound(self):
        return len(self.values) - 1

    def __call__(self, n):
        if not 1 <= n <= self.bound:
            raise ValueError(f"{n} outside 1..{self.bound}")
        return self.values[n]

    @classmethod
    def from_function(cls, fn, bound):
        return cls((Fraction(0),) + tuple(Fraction(fn(n)) for n in range(1, bound + 1)))


def eps_fn(bound: int) -> ArithFn:
    return ArithFn.from_function(lambda n: 1 if n == 1 else 0, bound)


def zeta_fn(bound: int) -> ArithFn:
    return ArithFn.from_function(lambda n: 1, bound)


def iota_fn(bound: int) -> ArithFn:
    return ArithFn.from_function(lambda n: n, bound)


def mu_fn(bound: int) -> ArithFn:
    return ArithFn.from_function(classical_mu, bound)


def dirichlet_convolve(f: ArithFn, g: ArithFn) -> ArithFn:
    """(f*g)(n) = sum over n = i*j of f(i) g(j), on the shared bound."""
    if f.bound != g.bound:
        raise ValueError("Dirichlet convolution needs a shared bound")
    n = f.bound
    out = [Fraction(0)] * (n + 1)
    for d in range(1, n + 1):
        fd = f.values[d]
        if not fd:
            continue
        for m in range(d, n + 1, d):
            out[m] += fd * g.values[m // d]
    return ArithFn(tuple(out))


def totient_via_inversion(n: int) -> int:
    """Euler totient through phi(n) = sum_{d|n} d * mu(n/d)."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    return sum(d * classical_mu(n // d) for d in divisors(n))


def derangements_via_ie(n: int) -> int:
    """Fixpoint-free permutation count by inclusion-exclusion over the
    powerset lattice: der(n) = sum_k (-1)^(n-k) C(n,k) k!."""
    if not 0 <= n <= 12:
        raise ValueError("derangements supported for 0 <= n <= 12")
    return sum((-1) ** (n - k) * math.comb(n, k) * math.factorial(k) for k in range(n + 1))


def finite_difference(values) -> list:
    """Backward differences: g(0) = f(0), g(n) = f(n) - f(n-1).

    Inverse of cumulative summation; this is convolution with the Moebius
    function of the additive monoid of naturals.
    """
    out = []
    prev = Fraction(0)
    for k, v in enumerate(values):
        v = Fraction(v)
        out.append(v if k == 0 else v - prev)
        prev = v
    return out
