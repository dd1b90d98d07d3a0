"""Truncated formal Laurent series with exact rational coefficients.

A series is stored sparsely as ``{order: Fraction}`` together with a window.
``min_order`` bounds the support from below; ``trunc_order`` is the largest
order whose coefficient is determined.  ``trunc_order=None`` means every
order is determined, i.e. the value is a genuine Laurent polynomial; that is
the natural result of operations such as :func:`pole_part` whose output is
exact at every order.  Coefficients above a finite ``trunc_order`` are
unknown, never silently zero.

The window invariant ``trunc_order >= -1`` keeps the strictly negative part
of every series finitely supported and exactly known, so pole extraction and
evaluation at the origin never lose information.  All arithmetic is exact;
multiplication computes the sharpest truncation order the inputs support and
raises :class:`InsufficientPrecision` rather than exposing a coefficient
outside the guaranteed window.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InsufficientPrecision, ParseError, PolePresent

# Default window for randomly generated series; desk-scale examples never
# need more, and the negative part stays exact regardless.
DEFAULT_MIN_ORDER = -16
DEFAULT_TRUNC_ORDER = 16


def _min_trunc(*orders):
    """Minimum of truncation orders, where None plays the role of +infinity."""
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None


class LaurentSeries:
    """Immutable truncated Laurent series over the rationals."""

    __slots__ = ("coeffs", "min_order", "trunc_order")

    def __init__(self, coeffs=None, trunc_order=None):
        if trunc_order is not None and trunc_order < -1:
            raise InsufficientPrecision(
                f"truncation order {trunc_order} leaves the pole part undetermined"
            )
        clean = {}
        for order, c in (coeffs or {}).items():
            if trunc_order is not None and order > trunc_order:
                continue
            c = Fraction(c)
            if c:
                clean[order] = c
        self.coeffs = clean
        self.trunc_order = trunc_order
        if clean:
            self.min_order = min(clean)
        else:
            # Canonical empty series: min_order equals the truncation order of
            # the context, or 0 for the fully-determined zero.
            self.min_order = trunc_order if trunc_order is not None else 0

    @classmethod
    def zero(cls, trunc_order=None):
        return cls({}, trunc_order)

    @classmethod
    def one(cls):
        return cls({0: Fraction(1)})

    @classmethod
    def from_fraction(cls, value):
        return cls({0: Fraction(value)})

    @classmethod
    def monomial(cls, order, coeff=1):
        return cls({order: Fraction(coeff)})

    def is_zero(self):
        return not self.coeffs

    def has_pole(self):
        return bool(self.coeffs) and self.min_order < 0

    def coefficient(self, order):
        if self.trunc_order is not None and order > self.trunc_order:
            raise InsufficientPrecision(
                f"coefficient of order {order} lies above truncation order {self.trunc_order}"
            )
        return self.coeffs.get(order, Fraction(0))

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LaurentSeries()  # 0 * x is exactly zero at every order
        return LaurentSeries({o: c * v for o, v in self.coeffs.items()}, self.trunc_order)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = _min_trunc(self.trunc_order, other.trunc_order)
        merged = dict(self.coeffs)
        for o, c in other.coeffs.items():
            merged[o] = merged.get(o, Fraction(0)) + c
        return LaurentSeries(merged, trunc)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # An exactly-known zero annihilates everything, unknown tails included.
        if not self.coeffs and self.trunc_order is None:
            return LaurentSeries()
        if not other.coeffs and other.trunc_order is None:
            return LaurentSeries()
        candidates = []
        if other.trunc_order is not None:
            candidates.append(self.min_order + other.trunc_order)
        if self.trunc_order is not None:
            candidates.append(other.min_order + self.trunc_order)
        trunc = min(candidates) if candidates else None
        out = {}
        for o1, c1 in self.coeffs.items():
            for o2, c2 in other.coeffs.items():
                o = o1 + o2
                if trunc is not None and o > trunc:
                    continue
                out[o] = out.get(o, Fraction(0)) + c1 * c2
        return LaurentSeries(out, trunc)

    def truncate(self, trunc_order):
        return LaurentSeries(self.coeffs, _min_trunc(self.trunc_order, trunc_order))

    def pole_part(self):
        """Restriction to strictly negative orders; exact at every order."""
        return LaurentSeries({o: c for o, c in self.coeffs.items() if o < 0})

    def eval_at_zero(self):
        if self.has_pole():
            raise PolePresent(f"series {self} has pole part {self.pole_part()}")
        if self.trunc_order is not None and self.trunc_order < 0:
            raise InsufficientPrecision("order-0 coefficient lies above the truncation window")
        return self.coeffs.get(0, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.trunc_order == other.trunc_order

    __hash__ = None

    def to_text(self):
        return format_laurent(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        if self.trunc_order is None:
            return f"Laurent({self.to_text()})"
        return f"Laurent({self.to_text()}; trunc={self.trunc_order})"


def pole_part(x: LaurentSeries) -> LaurentSeries:
    return x.pole_part()


def eval_at_zero(x: LaurentSeries) -> Fraction:
    return x.eval_at_zero()


def agree_on_common_window(a: LaurentSeries, b: LaurentSeries) -> bool:
    """Equality of all coefficients both windows determine."""
    t = _min_trunc(a.trunc_order, b.trunc_order)
    return a.truncate(t) == b.truncate(t)


def format_laurent(x: LaurentSeries) -> str:
    """Render in the textual grammar, orders ascending, lowest first."""
    if not x.coeffs:
        return "0"
    parts = []
    for order in sorted(x.coeffs):
        c = x.coeffs[order]
        mag = -c if c < 0 else c
        if order == 0:
            body = str(mag)
        else:
            e = "e" if order == 1 else f"e^{order}"
            body = e if mag == 1 else f"{mag}*{e}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_laurent(text: str) -> LaurentSeries:
    """Parse ``series := term (('+'|'-') term)*`` with terms like ``3/2*e^-2``.

    Whitespace-insensitive; repeated orders fold by addition.  One optional
    sign is allowed before the first term so printed series round-trip.
    The result is fully determined (no unknown tail).
    """
    s = text
    n = len(s)
    i = 0
    coeffs: dict[int, Fraction] = {}

    def skip():
        nonlocal i
        while i < n and s[i].isspace():
            i += 1

    def read_uint(what):
        nonlocal i
        start = i
        while i < n and s[i].isdigit():
            i += 1
        if i == start:
            raise ParseError(f"expected {what}", start)
        return int(s[start:i])

    def read_epart():
        # Called with s[i] == "e"; returns the order.
        nonlocal i
        i += 1
        skip()
        if i < n and s[i] == "^":
            i += 1
            skip()
            esign = 1
            if i < n and s[i] in "+-":
                esign = -1 if s[i] == "-" else 1
                i += 1
                skip()
            return esign * read_uint("exponent")
        return 1

    def read_term():
        nonlocal i
        if i < n and s[i].isdigit():
            num = read_uint("integer")
            skip()
            if i < n and s[i] == "/":
                i += 1
                skip()
                pos = i
                den = read_uint("positive denominator")
                if den == 0:
                    raise ParseError("zero denominator", pos)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            skip()
            if i < n and s[i] == "*":
                i += 1
                skip()
                if i >= n or s[i] != "e":
                    raise ParseError("expected 'e' after '*'", i)
                return coeff, read_epart()
            return coeff, 0
        if i < n and s[i] == "e":
            return Fraction(1), read_epart()
        raise ParseError("expected a term", i)

    skip()
    if i == n:
        raise ParseError("empty input", 0)
    sign = 1
    if s[i] in "+-":
        sign = -1 if s[i] == "-" else 1
        i += 1
    while True:
        skip()
        coeff, order = read_term()
        coeffs[order] = coeffs.get(order, Fraction(0)) + sign * coeff
        skip()
        if i >= n:
            break
        if s[i] == "+":
            sign = 1
        elif s[i] == "-":
            sign = -1
        else:
            raise ParseError(f"unexpected character {s[i]!r}", i)
        i += 1
    return LaurentSeries(coeffs)
