"""Finite formal linear combinations of ordered basis keys.

Keys are opaque tokens: interval pairs, integers, canonical forest strings,
or 2-tuples of keys for tensor factors.  They only need to be hashable and
totally ordered within one coalgebra.  Zero coefficients are pruned eagerly,
so structural equality coincides with mathematical equality, and iteration
follows key order, which makes printing deterministic.
"""

from __future__ import annotations

from fractions import Fraction


class LinComb:

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                c = Fraction(c)
                if not c:
                    continue
                acc = data.get(key, Fraction(0)) + c
                if acc:
                    data[key] = acc
                else:
                    data.pop(key, None)
        self.terms = data

    @classmethod
    def single(cls, key, coeff=1):
        return cls({key: coeff})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def keys(self):
        return sorted(self.terms)

    def coeff(self, key):
        return self.terms.get(key, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + c
        return LinComb(merged)

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LinComb()
        return LinComb({key: c * v for key, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def tensor(self, other):
        """Bilinear tensor over pair keys: coefficient of (k, l) is a[k]*b[l]."""
        if not isinstance(other, LinComb):
            raise TypeError("tensor expects a LinComb")
        out = {}
        for k, ck in self.terms.items():
            for l, cl in other.terms.items():
                out[(k, l)] = ck * cl
        return LinComb(out)

    def to_str(self, key_fmt=str):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.items():
            mag = -c if c < 0 else c
            body = f"{mag}*{key_fmt(key)}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LinComb({self.to_str()})"
