"""Exact coefficient fields: the rationals and prime fields F_p with p < 2^31.

Rational scalars are `fractions.Fraction`; prime-field scalars are plain ints
in the range 0..p-1.  All arithmetic goes through a `FieldSpec` so that the
linear-algebra and polynomial layers stay field-generic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: kind 'rational', or 'prime' with modulus p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not (2 <= self.p < 2**31) or not is_prime(self.p):
                raise ValueError(f"modulus must be a prime below 2^31, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    def zero(self):
        return Fraction(0) if self.is_rational else 0

    def one(self):
        return Fraction(1) if self.is_rational else 1

    def coerce(self, value):
        """Bring an int or Fraction into canonical scalar form."""
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def add(self, a, b):
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a):
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a):
        if self.is_rational:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __str__(self):
        return "Q" if self.is_rational else f"F_{self.p}"


QQ = FieldSpec("rational")


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("prime", p)
