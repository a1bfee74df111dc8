"""Words, degree-lexicographic orders, and polynomials in the free
associative algebra over an exact coefficient field.

A word is a tuple of 0-based generator indices.  Generator names are
presentation metadata; everything here works on indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, SingularMatrix, ZeroPolynomial
from .fields import FieldSpec

Word = tuple  # tuple of generator indices

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class GenOrder:
    """Linear order on generators: sequence lists indices from smallest to
    largest, so x_{sequence[0]} < x_{sequence[1]} < ...
    """

    sequence: tuple

    def __post_init__(self):
        seq = tuple(self.sequence)
        object.__setattr__(self, "sequence", seq)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError(f"not a permutation: {seq}")
        ranks = [0] * len(seq)
        for pos, idx in enumerate(seq):
            ranks[idx] = pos
        object.__setattr__(self, "_ranks", tuple(ranks))
        object.__setattr__(self, "_key_cache", {})

    @classmethod
    def identity(cls, n: int) -> "GenOrder":
        return cls(tuple(range(n)))

    def rank(self, gen: int) -> int:
        return self._ranks[gen]

    @property
    def ngens(self) -> int:
        return len(self.sequence)

    def word_key(self, w: Word):
        """Sort key realizing deglex: degree first, then letter ranks."""
        cache = self._key_cache
        key = cache.get(w)
        if key is None:
            ranks = self._ranks
            key = (len(w), tuple(ranks[i] for i in w))
            cache[w] = key
        return key

    def reversed(self) -> "GenOrder":
        return GenOrder(tuple(reversed(self.sequence)))


def word_compare(u: Word, v: Word, ord: GenOrder) -> int:
    """-1, 0, or 1 comparing u and v in deglex; shorter words come first."""
    ku, kv = ord.word_key(u), ord.word_key(v)
    return -1 if ku < kv else (1 if ku > kv else 0)


class NcPoly:
    """Polynomial in the free algebra: finite map word -> nonzero scalar."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms=None):
        self.field = field
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, field: FieldSpec) -> "NcPoly":
        return cls(field)

    @classmethod
    def monomial(cls, field: FieldSpec, word: Word, coeff=1) -> "NcPoly":
        c = field.coerce(coeff)
        return cls(field, {tuple(word): c} if c != 0 else {})

    @classmethod
    def one(cls, field: FieldSpec) -> "NcPoly":
        return cls.monomial(field, EMPTY_WORD)

    @classmethod
    def generator(cls, field: FieldSpec, index: int) -> "NcPoly":
        return cls.monomial(field, (index,))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_field(self, other: "NcPoly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        return (
            isinstance(other, NcPoly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_field(other)
        out = dict(self.terms)
        fld = self.field
        for w, c in other.terms.items():
            s = fld.add(out.get(w, fld.zero()), c)
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(self.field, out)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one()))

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one()))

    def scale(self, c) -> "NcPoly":
        c = self.field.coerce(c)
        if c == 0:
            return NcPoly.zero(self.field)
        fld = self.field
        return NcPoly(self.field, {w: fld.mul(a, c) for w, a in self.terms.items()})

    def __mul__(self, other):
        self._check_field(other)
        fld = self.field
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = fld.add(out.get(w, fld.zero()), fld.mul(a, b))
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return NcPoly(self.field, out)

    def mul_word(self, left: Word, right: Word) -> "NcPoly":
        """left * self * right for plain words (no coefficient bookkeeping)."""
        return NcPoly(
            self.field, {left + w + right: c for w, c in self.terms.items()}
        )

    @property
    def degree(self) -> int:
        """Maximal word length; -1 for zero."""
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def is_homogeneous(self) -> bool:
        lengths = {len(w) for w in self.terms}
        return len(lengths) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self, ord: GenOrder):
        """Deglex-greatest word and its coefficient."""
        if not self.terms:
            raise ZeroPolynomial("leading monomial of zero")
        w = max(self.terms, key=ord.word_key)
        return w, self.terms[w]

    def monic(self, ord: GenOrder) -> "NcPoly":
        _, c = self.leading(ord)
        return self.scale(self.field.inv(c))

    def max_letter(self) -> int:
        return max((max(w) for w in self.terms if w), default=-1)

    def render(self, names) -> str:
        return render_poly(self, names)

    def __repr__(self):
        return f"NcPoly({self.field}, {self.terms})"


def leading_monomial(f: NcPoly, ord: GenOrder):
    return f.leading(ord)


def poly_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    return f * g


def _matrix_rank(field: FieldSpec, mat) -> int:
    rows = [list(map(field.coerce, row)) for row in mat]
    n = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f_ = rows[r][col]
                rows[r] = [
                    field.sub(x, field.mul(f_, y))
                    for x, y in zip(rows[r], rows[rank])
                ]
        rank += 1
    return rank


def apply_linear_change(f: NcPoly, matrix) -> NcPoly:
    """Substitute x_i -> sum_j matrix[i][j] x_j and expand.

    matrix must be square of size at least the largest generator index in f,
    and invertible over f's field.
    """
    field = f.field
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise SingularMatrix("matrix not square")
    if f.max_letter() >= n:
        raise SingularMatrix("matrix smaller than generator count")
    if _matrix_rank(field, matrix) != n:
        raise SingularMatrix("substitution matrix is singular")
    images = [
        NcPoly(
            field,
            {(j,): field.coerce(matrix[i][j]) for j in range(n)},
        )
        for i in range(n)
    ]
    out = NcPoly.zero(field)
    for w, c in f.terms.items():
        term = NcPoly.monomial(field, EMPTY_WORD, c)
        for letter in w:
            term = term * images[letter]
        out = out + term
    return out


def render_word(w: Word, names) -> str:
    if not w:
        return "1"
    return "*".join(names[i] for i in w)


def render_poly(f: NcPoly, names, ord: GenOrder | None = None) -> str:
    if f.is_zero():
        return "0"
    if ord is None:
        ord = GenOrder.identity(max(f.max_letter() + 1, len(names)))
    words = sorted(f.terms, key=ord.word_key, reverse=True)
    parts = []
    for w in words:
        c = f.terms[w]
        body = render_word(w, names)
        if w == EMPTY_WORD:
            term = str(c)
        elif c == 1:
            term = body
        elif c == -1:
            term = f"-{body}"
        else:
            term = f"{c}*{body}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)
