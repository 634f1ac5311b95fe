"""Coefficient fields: exact rationals or a prime field.

Coefficients are plain Python numbers.  Over Q an element is an ``int`` when
integral and a reduced ``Fraction`` otherwise; over F_p it is an ``int`` in
``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .config import _is_prime


@dataclass(frozen=True)
class Field:
    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (_is_prime(self.p) and self.p < 2**31):
            raise ValueError(f"need a prime below 2^31, got {self.p}")

    @property
    def tag(self) -> str:
        return "Q" if self.p is None else "Fp"

    def __str__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    def coerce(self, x) -> int | Fraction:
        if self.p is None:
            if isinstance(x, bool):
                x = int(x)
            if isinstance(x, int):
                return x
            if isinstance(x, Rational):
                x = Fraction(x)
                return x.numerator if x.denominator == 1 else x
            if isinstance(x, str):
                return self.coerce(Fraction(x))
            raise TypeError(f"cannot coerce {x!r} to an exact rational")
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Rational):
            x = Fraction(x)
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} to {self}")

    def canon(self, x):
        """Canonical form of an already-exact value produced by arithmetic."""
        if self.p is not None:
            return x % self.p
        if type(x) is int:
            return x
        return x.numerator if x.denominator == 1 else x

    def div(self, a, b):
        if self.p is not None:
            return a * pow(b, -1, self.p) % self.p
        q = Fraction(a, 1) / b
        return q.numerator if q.denominator == 1 else q

    def signed(self, x) -> int | Fraction:
        """Representative in (-p/2, p/2] for display over F_p."""
        if self.p is not None and x > self.p // 2:
            return x - self.p
        return x


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)
