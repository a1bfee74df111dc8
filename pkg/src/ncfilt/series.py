"""Exact univariate polynomials, rational functions, and truncated power
series in the variable z over the rationals.

This is the arithmetic backing every Hilbert-series computation.  A
polynomial is a dense coefficient list indexed by degree with trailing zeros
stripped; a rational function is a reduced fraction whose denominator has
constant term 1 (so it is invertible in Q[[z]]); a truncated series is a
coefficient list of fixed length D+1.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonInvertibleDenominator, SingularSystem


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, coeff, degree):
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d <= self.degree else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[d] + other[d] for d in range(n)))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[d] - other[d] for d in range(n)))

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by z^k."""
        if self.is_zero():
            return self
        return Polynomial((0,) * k + self.coeffs)

    def divmod(self, other) -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quo), Polynomial(rem)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        return render_poly_text(self)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over Q."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a.coeffs[-1])


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def render_poly_text(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for d, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if d == 0:
            term = str(c)
        else:
            zpow = "z" if d == 1 else f"z^{d}"
            term = zpow if c == 1 else f"-{zpow}" if c == -1 else f"{c}*{zpow}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


class RationalFunction:
    """Reduced fraction of polynomials with denominator constant term 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Polynomial((1,))):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,)) if num else Polynomial()
        if not isinstance(den, Polynomial):
            den = Polynomial((den,)) if den else Polynomial()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        c = den[0]
        if c == 0:
            raise NonInvertibleDenominator(
                "denominator has zero constant term; not invertible in Q[[z]]"
            )
        if c != 1:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(Polynomial())

    @classmethod
    def one(cls):
        return cls(Polynomial((1,)))

    @classmethod
    def from_poly(cls, p: Polynomial):
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def substitute_neg_z(self) -> "RationalFunction":
        """f(z) -> f(-z)."""
        flip = lambda p: Polynomial(
            tuple(c if d % 2 == 0 else -c for d, c in enumerate(p.coeffs))
        )
        return RationalFunction(flip(self.num), flip(self.den))

    def expand(self, trunc_degree: int) -> "TruncatedSeries":
        return ratfunc_expand(self, trunc_degree)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({render_poly_text(self.num)})/({render_poly_text(self.den)})"


class TruncatedSeries:
    """Power-series prefix: coefficients 0..D, exactly D+1 of them."""

    __slots__ = ("coeffs", "trunc_degree")

    def __init__(self, coeffs, trunc_degree=None):
        cs = tuple(Fraction(c) for c in coeffs)
        if trunc_degree is None:
            trunc_degree = len(cs) - 1
        if len(cs) != trunc_degree + 1:
            raise ValueError("coefficient list must have length D+1")
        self.coeffs = cs
        self.trunc_degree = trunc_degree

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.trunc_degree == other.trunc_degree
            and self.coeffs == other.coeffs
        )

    def __getitem__(self, d):
        return self.coeffs[d]

    def __len__(self):
        return len(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def ratfunc_expand(f: RationalFunction, trunc_degree: int) -> TruncatedSeries:
    """Coefficients 0..D of the power-series expansion of f."""
    den = f.den
    if den[0] == 0:
        raise NonInvertibleDenominator("denominator has zero constant term")
    out = []
    for k in range(trunc_degree + 1):
        c = f.num[k]
        for i in range(1, min(k, den.degree) + 1):
            c -= den[i] * out[k - i]
        out.append(c / den[0])
    return TruncatedSeries(out, trunc_degree)


def series_match(s: TruncatedSeries, f: RationalFunction) -> bool:
    return ratfunc_expand(f, s.trunc_degree) == s


def solve_rational_system(
    matrix: list[list[RationalFunction]], rhs: list[RationalFunction]
) -> list[RationalFunction]:
    """Solve a square linear system over Q(z) by Gaussian elimination.

    Pivots are required to be invertible in Q[[z]] (nonzero constant term):
    the systems built from filtration tables and avoidance automata have
    determinant with constant term 1, so such pivots always exist unless the
    table is degenerate.
    """
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            entry = a[r][col]
            if not entry.is_zero() and entry.num[0] != 0:
                pivot = r
                break
        if pivot is None:
            raise SingularSystem(f"no invertible pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        inv = RationalFunction.one() / a[col][col]
        a[col] = [entry * inv for entry in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
