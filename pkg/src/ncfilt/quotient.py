"""Finitely presented graded quotient algebras R = F/I.

Provides normal-word bases and graded multiplication against a (possibly
truncated) Groebner basis, Hilbert functions, the transfer-matrix rational
Hilbert series for monomial algebras, quadratic duals, the power-series
duality residual, and tensor / semi-tensor products.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from . import groebner
from .errors import (
    FieldMismatch,
    InsufficientGBBound,
    NonMonomialInput,
    NonQuadraticInput,
)
from .fields import FieldSpec
from .freealg import EMPTY_WORD, GenOrder, NcPoly, Word
from .series import Polynomial, RationalFunction, TruncatedSeries, solve_rational_system


@dataclass(frozen=True)
class Presentation:
    """Generators with a linear order, a coefficient field, and homogeneous
    relations of degree >= 2."""

    names: tuple
    field: FieldSpec
    ord: GenOrder
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "relations", tuple(self.relations))
        n = len(self.names)
        if n < 1:
            raise ValueError("at least one generator required")
        if len(set(self.names)) != n:
            raise ValueError("generator names must be distinct")
        if self.ord.ngens != n:
            raise ValueError("order size does not match generator count")
        for rel in self.relations:
            if rel.is_zero():
                raise ValueError("zero relation")
            if not rel.is_homogeneous() or rel.degree < 2:
                raise ValueError("relations must be homogeneous of degree >= 2")
            if rel.field != self.field:
                raise FieldMismatch("relation field differs from presentation")
            if rel.max_letter() >= n:
                raise ValueError("relation uses an unknown generator index")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def with_order(self, ord: GenOrder) -> "Presentation":
        return Presentation(self.names, self.field, ord, self.relations)


def presentation(names, field: FieldSpec, relations, order=None) -> Presentation:
    ord = order if order is not None else GenOrder.identity(len(names))
    return Presentation(tuple(names), field, ord, tuple(relations))


class QuotientAlgebra:
    """R = F/I with per-degree normal-word bases and letter-multiplication
    matrices, all filled lazily under a lock."""

    def __init__(self, pres: Presentation, degree_bound: int = 8, gb=None):
        self.pres = pres
        if gb is None:
            gb = groebner.complete(list(pres.relations), pres.ord, pres.ngens,
                                   degree_bound, pres.field)
        self.gb = gb
        self._normal: list[list[Word]] = [[EMPTY_WORD]]
        self._index: list[dict] = [{EMPTY_WORD: 0}]
        self._letter_rows: dict = {}
        self._lock = threading.RLock()

    @property
    def field(self) -> FieldSpec:
        return self.pres.field

    @property
    def ord(self) -> GenOrder:
        return self.pres.ord

    @property
    def ngens(self) -> int:
        return self.pres.ngens

    def _check_bound(self, d: int):
        if d > self.gb.degree_bound and not self.gb.complete:
            raise InsufficientGBBound(
                f"degree {d} beyond Groebner bound {self.gb.degree_bound} "
                "and the basis is not certified complete")

    def normal_words(self, d: int) -> list:
        """Deglex-sorted words of degree d avoiding the leading words."""
        self._check_bound(d)
        with self._lock:
            lead = self.gb.lead_words
            letters = self.pres.ord.sequence
            while len(self._normal) <= d:
                nxt = []
                for w in self._normal[-1]:
                    for a in letters:
                        cand = w + (a,)
                        if not any(cand[len(cand) - len(lm):] == lm
                                   for lm in lead if len(lm) <= len(cand)):
                            nxt.append(cand)
                self._normal.append(nxt)
                self._index.append({w: i for i, w in enumerate(nxt)})
            return self._normal[d]

    def dim(self, d: int) -> int:
        return len(self.normal_words(d))

    def word_index(self, d: int) -> dict:
        self.normal_words(d)
        return self._index[d]

    def reduce(self, f: NcPoly) -> NcPoly:
        return groebner.reduce(f, self.gb)

    def poly_coords(self, f: NcPoly, degree: int | None = None) -> dict:
        """Coordinates of the image of f in the normal-word basis of its
        degree; f must be homogeneous."""
        nf = self.reduce(f)
        if nf.is_zero():
            return {}
        if not nf.is_homogeneous():
            raise ValueError("coordinates need a homogeneous element")
        d = nf.degree if degree is None else degree
        index = self.word_index(d)
        return {index[w]: c for w, c in nf.terms.items()}

    def coords_to_poly(self, vec: dict, d: int) -> NcPoly:
        words = self.normal_words(d)
        return NcPoly(self.field, {words[i]: c for i, c in vec.items()})

    def letter_matrix(self, d: int, letter: int) -> list:
        """Row i = coordinates of (normal word i of degree d) * x_letter."""
        key = (d, letter)
        with self._lock:
            if key not in self._letter_rows:
                index = self.word_index(d + 1)
                rows = []
                for w in self.normal_words(d):
                    nf = self.reduce(NcPoly.monomial(self.field, w + (letter,)))
                    rows.append({index[u]: c for u, c in nf.terms.items()})
                self._letter_rows[key] = rows
            return self._letter_rows[key]

    def letter_matrix_dense(self, d: int, letter: int):
        """Dense int64 form of letter_matrix, for the modp matmul kernels."""
        key = ("dense", d, letter)
        with self._lock:
            if key not in self._letter_rows:
                from .linalg import densify

                self._letter_rows[key] = densify(self.letter_matrix(d, letter),
                                                 self.dim(d + 1))
            return self._letter_rows[key]

    def rmul_letter(self, vec: dict, d: int, letter: int) -> dict:
        """Right-multiply a degree-d coordinate vector by x_letter."""
        rows = self.letter_matrix(d, letter)
        out: dict = {}
        if self.field.is_rational:
            for i, c in vec.items():
                for j, m in rows[i].items():
                    s = out.get(j, 0) + c * m
                    if s:
                        out[j] = s
                    else:
                        out.pop(j, None)
        else:
            p = self.field.p
            for i, c in vec.items():
                for j, m in rows[i].items():
                    s = (out.get(j, 0) + c * m) % p
                    if s:
                        out[j] = s
                    else:
                        out.pop(j, None)
        return out

    def hilbert_function(self, trunc_degree: int) -> TruncatedSeries:
        return TruncatedSeries([self.dim(d) for d in range(trunc_degree + 1)],
                               trunc_degree)


def normal_words(Q: QuotientAlgebra, d: int) -> list:
    return Q.normal_words(d)


def hilbert_function(Q: QuotientAlgebra, trunc_degree: int) -> TruncatedSeries:
    return Q.hilbert_function(trunc_degree)


def monomial_hilbert_ratfunc(Q: QuotientAlgebra) -> RationalFunction:
    """Exact Hilbert series of a monomial algebra via the factor-avoidance
    automaton: states are proper prefixes of the forbidden words, and the
    series solves the linear system (I - zT)u = 1 over Q(z)."""
    if not all(rel.is_monomial() for rel in Q.pres.relations):
        raise NonMonomialInput("transfer-matrix series needs monomial relations")
    forbidden = Q.gb.lead_words
    states = {EMPTY_WORD}
    for w in forbidden:
        for k in range(1, len(w)):
            states.add(w[:k])
    states = sorted(states, key=lambda w: (len(w), w))
    pos = {w: i for i, w in enumerate(states)}
    nstates = len(states)
    counts = [[0] * nstates for _ in range(nstates)]
    for s in states:
        for a in range(Q.ngens):
            t = s + (a,)
            if any(t[len(t) - len(w):] == w for w in forbidden
                   if len(w) <= len(t)):
                continue
            nxt = next(t[k:] for k in range(len(t) + 1) if t[k:] in pos)
            counts[pos[s]][pos[nxt]] += 1
    one = RationalFunction.one()
    z = RationalFunction(Polynomial((0, 1)))
    matrix = [[(one if i == j else RationalFunction.zero())
               - z * RationalFunction(Polynomial((counts[i][j],)))
               for j in range(nstates)] for i in range(nstates)]
    rhs = [one] * nstates
    solution = solve_rational_system(matrix, rhs)
    return solution[pos[EMPTY_WORD]]


def quadratic_dual(pres: Presentation) -> Presentation:
    """Presentation on dual generators whose relation space is the orthogonal
    complement of the input relation span under <x_i x_j, x_k' x_l'> =
    delta_ik delta_jl."""
    from . import linalg

    n = pres.ngens
    field = pres.field
    for rel in pres.relations:
        if rel.degree != 2:
            raise NonQuadraticInput("dual needs quadratic relations")
    rows = [{w[0] * n + w[1]: c for w, c in rel.terms.items()}
            for rel in pres.relations]
    duals = []
    for vec in linalg.null_space(field, rows, n * n):
        terms = {(c // n, c % n): x for c, x in vec.items()}
        duals.append(NcPoly(field, terms))
    names = tuple(f"{name}'" for name in pres.names)
    return Presentation(names, field, pres.ord, tuple(duals))


def froberg_check(pres: Presentation, trunc_degree: int,
                  degree_bound: int | None = None) -> TruncatedSeries:
    """Coefficients 0..D of R(z) * Rdual(-z) - 1; identically zero is the
    power-series consequence of Koszulness."""
    bound = trunc_degree if degree_bound is None else degree_bound
    primal = QuotientAlgebra(pres, bound).hilbert_function(trunc_degree)
    dual = QuotientAlgebra(quadratic_dual(pres), bound).hilbert_function(trunc_degree)
    residual = []
    for k in range(trunc_degree + 1):
        total = sum(primal[i] * (dual[k - i] if (k - i) % 2 == 0
                                 else -dual[k - i])
                    for i in range(k + 1))
        residual.append(total - (1 if k == 0 else 0))
    return TruncatedSeries(residual, trunc_degree)


def _fresh_name(name: str, taken: set) -> str:
    candidate = name
    k = 2
    while candidate in taken:
        candidate = f"{name}_{k}"
        k += 1
    return candidate


def tensor_product(left: Presentation, right: Presentation) -> Presentation:
    """Presentation of the tensor product: both relation sets plus the
    commutators xy - yx, generators ordered with the left block above the
    right block (X > Y)."""
    if left.field != right.field:
        raise FieldMismatch("tensor factors over different fields")
    field = left.field
    n_left = left.ngens
    taken = set(left.names)
    right_names = []
    for name in right.names:
        fresh = _fresh_name(name, taken)
        taken.add(fresh)
        right_names.append(fresh)
    names = tuple(left.names) + tuple(right_names)
    order = GenOrder(tuple(n_left + i for i in right.ord.sequence)
                     + tuple(left.ord.sequence))
    rels = list(left.relations)
    for rel in right.relations:
        rels.append(NcPoly(field, {tuple(n_left + a for a in w): c
                                   for w, c in rel.terms.items()}))
    one = field.one()
    for i in range(n_left):
        for j in range(right.ngens):
            y = n_left + j
            rels.append(NcPoly(field, {(i, y): one, (y, i): field.neg(one)}))
    return Presentation(names, field, order, tuple(rels))


def semi_tensor_check(combined: Presentation, left: Presentation,
                      right: Presentation, degree_bound: int = 3) -> bool:
    """Leading-word test for the semi-tensor property: the Groebner basis of
    `combined` under the X > Y deglex order must have exactly the leading
    words of `left`, of `right`, and all products xy.

    A mismatch among leading words of degree <= degree_bound decides False
    even when the combined basis is truncated (those words are final);
    otherwise an uncertified completion cannot decide and raises
    InsufficientGBBound.
    """
    if set(left.names) & set(right.names):
        raise ValueError("factor generator names must be disjoint")
    if set(combined.names) != set(left.names) | set(right.names):
        raise ValueError("combined generators must split as the two factors")
    where = {name: i for i, name in enumerate(combined.names)}
    x_of = [where[name] for name in left.names]
    y_of = [where[name] for name in right.names]
    order = GenOrder(tuple(y_of[i] for i in right.ord.sequence)
                     + tuple(x_of[i] for i in left.ord.sequence))

    gb_left = groebner.complete(list(left.relations), left.ord, left.ngens,
                                degree_bound, left.field)
    gb_right = groebner.complete(list(right.relations), right.ord, right.ngens,
                                 degree_bound, right.field)
    if not (gb_left.complete and gb_right.complete):
        raise InsufficientGBBound("factor bases not certified complete")

    target = {tuple(x_of[a] for a in w) for w in gb_left.lead_words}
    target |= {tuple(y_of[a] for a in w) for w in gb_right.lead_words}
    target |= {(x, y) for x in x_of for y in y_of}

    gb = groebner.complete(list(combined.relations), order, combined.ngens,
                           degree_bound, combined.field)
    fragment = set(gb.lead_words)
    if fragment != target:
        return False
    if not gb.complete:
        raise InsufficientGBBound(
            "combined basis matches so far but is not certified complete")
    return True
