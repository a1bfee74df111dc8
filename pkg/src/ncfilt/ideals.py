"""Graded right-sided ideals of a quotient algebra, held extensionally as
per-degree row spaces over the normal-word basis.

Right ideals of noncommutative quotients have no finite one-sided Groebner
theory in general, so components are computed degree by degree with exact
linear algebra.  Components are canonical (reduced row echelon form), making
componentwise comparison of ideals syntactic.  For nested row spaces the
pivot columns are nested too, so complements (minimal generators) are read
off by comparing pivot sets instead of re-eliminating.
"""

from __future__ import annotations

import numpy as np

from ._kernels import modp_matmul
from .errors import DegreeOutOfRange
from .freealg import NcPoly
from .linalg import (
    densify,
    left_kernel,
    rank,
    residual,
    row_count,
    rref,
    stack_rows,
)
from .quotient import Presentation, QuotientAlgebra


class GradedIdeal:
    """Right ideal with components I_d as canonical RREF row lists.

    Ideals built from generators extend lazily to any degree; ideals built
    from explicit components (colon ideals) are frozen at their bound.
    """

    def __init__(self, ambient: QuotientAlgebra, generators, components,
                 computed_to: int, extensible: bool, unit_colon: bool = False):
        self.ambient = ambient
        self.generators = list(generators)
        self._components = components  # degree -> list of canonical rows
        self.computed_to = computed_to
        self.extensible = extensible
        self.unit_colon = unit_colon

    def component(self, d: int) -> list:
        if d > self.computed_to:
            self.ensure_degree(d)
        return self._components[d]

    def dim(self, d: int) -> int:
        return len(self.component(d))

    def _product_rows(self, d: int):
        """Spanning rows of I_d * R_1 inside degree d+1; a dense matrix over
        prime fields, sparse dict rows over the rationals."""
        Q = self.ambient
        comp = self._components[d]
        if not comp:
            return [] if Q.field.is_rational else np.zeros(
                (0, Q.dim(d + 1)), dtype=np.int64)
        if not Q.field.is_rational:
            dense = densify(comp, Q.dim(d))
            blocks = [modp_matmul(dense, Q.letter_matrix_dense(d, letter),
                                  Q.field.p)
                      for letter in range(Q.ngens)]
            return np.vstack(blocks)
        rows = []
        for v in comp:
            for letter in range(Q.ngens):
                w = Q.rmul_letter(v, d, letter)
                if w:
                    rows.append(w)
        return rows

    def ensure_degree(self, d: int):
        if d <= self.computed_to:
            return
        if not self.extensible:
            raise DegreeOutOfRange(
                f"ideal computed to degree {self.computed_to}, asked for {d}")
        Q = self.ambient
        gens_by_degree: dict[int, list] = {}
        for g in self.generators:
            gens_by_degree.setdefault(g.degree, []).append(g)
        for e in range(self.computed_to + 1, d + 1):
            rows = stack_rows(
                Q.field, Q.dim(e), self._product_rows(e - 1),
                [Q.poly_coords(g) for g in gens_by_degree.get(e, [])])
            self._components.append(rref(Q.field, rows, Q.dim(e)))
        self.computed_to = d

    def dims(self, up_to: int) -> list:
        self.ensure_degree(up_to)
        return [len(self._components[d]) for d in range(up_to + 1)]

    def is_zero_to(self, up_to: int) -> bool:
        return all(n == 0 for n in self.dims(up_to))

    def __repr__(self):
        return (f"GradedIdeal({len(self.generators)} generators, "
                f"computed_to={self.computed_to})")


def ideal_from_generators(Q: QuotientAlgebra, gens, up_to: int) -> GradedIdeal:
    """Span {g*w : w normal} degree by degree, row-reduced."""
    images = []
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("ideal generators must be homogeneous")
        ng = Q.reduce(g)
        if not ng.is_zero():
            images.append(ng)
    unit = any(g.degree == 0 for g in images)
    start = [{0: Q.field.one()}] if unit else []
    ideal = GradedIdeal(Q, images, [start], 0, True, unit_colon=unit)
    ideal.ensure_degree(up_to)
    return ideal


def zero_ideal(Q: QuotientAlgebra, up_to: int = 0) -> GradedIdeal:
    return ideal_from_generators(Q, [], up_to)


def maximal_ideal(Q: QuotientAlgebra, up_to: int) -> GradedIdeal:
    gens = [NcPoly.generator(Q.field, i) for i in range(Q.ngens)]
    return ideal_from_generators(Q, gens, up_to)


def unit_ideal(Q: QuotientAlgebra, up_to: int) -> GradedIdeal:
    return ideal_from_generators(Q, [NcPoly.one(Q.field)], up_to)


def membership(f: NcPoly, ideal: GradedIdeal) -> bool:
    Q = ideal.ambient
    nf = Q.reduce(f)
    if nf.is_zero():
        return True
    if not nf.is_homogeneous():
        raise ValueError("membership needs a homogeneous element")
    d = nf.degree
    if d > ideal.computed_to and not ideal.extensible:
        raise DegreeOutOfRange(f"degree {d} beyond computed range")
    return not residual(Q.field, ideal.component(d), Q.poly_coords(nf))


def minimal_generator_vectors(ideal: GradedIdeal, up_to: int) -> list:
    """Representatives [(degree, coordinate vector)] of a minimal generating
    set in degrees <= up_to: per degree, the component rows whose pivot
    column is not a pivot of I_{d-1} * R_1."""
    ideal.ensure_degree(up_to)
    Q = ideal.ambient
    out = [(0, v) for v in ideal.component(0)]
    for d in range(1, up_to + 1):
        sub = rref(Q.field, ideal._product_rows(d - 1), Q.dim(d))
        sub_pivots = {min(r) for r in sub}
        out.extend((d, v) for v in ideal.component(d)
                   if min(v) not in sub_pivots)
    return out


def min_generators(ideal: GradedIdeal, up_to: int):
    """Counts of minimal generators per degree, plus the top generator
    degree m(I) within the computed range (0 for the zero ideal)."""
    vectors = minimal_generator_vectors(ideal, up_to)
    counts: dict[int, int] = {}
    for d, _ in vectors:
        counts[d] = counts.get(d, 0) + 1
    pairs = sorted(counts.items())
    m = max(counts) if counts else 0
    return pairs, m


def _image_rows_under_left_multiplication(Q: QuotientAlgebra, x: NcPoly,
                                          d: int) -> list:
    """Row i = coordinates of x * (normal word i of degree d)."""
    c = x.degree
    level = {(): Q.poly_coords(x)}
    for e in range(d):
        nxt = {}
        for w in Q.normal_words(e + 1):
            nxt[w] = Q.rmul_letter(level[w[:-1]], c + e, w[-1])
        level = nxt
    return [level[w] for w in Q.normal_words(d)]


def _image_matrix_modp(Q: QuotientAlgebra, x: NcPoly, d: int) -> np.ndarray:
    """Dense counterpart of _image_rows_under_left_multiplication."""
    c = x.degree
    p = Q.field.p
    level = np.zeros((1, Q.dim(c)), dtype=np.int64)
    for idx, val in Q.poly_coords(x).items():
        level[0, idx] = val
    for e in range(d):
        words = Q.normal_words(e + 1)
        parent_index = Q.word_index(e)
        nxt = np.zeros((len(words), Q.dim(c + e + 1)), dtype=np.int64)
        by_letter: dict[int, list] = {}
        for i, w in enumerate(words):
            by_letter.setdefault(w[-1], []).append(i)
        for letter, idxs in by_letter.items():
            parents = [parent_index[words[i][:-1]] for i in idxs]
            nxt[idxs] = modp_matmul(level[parents],
                                    Q.letter_matrix_dense(c + e, letter), p)
        level = nxt
    return level


def colon_ideal(x: NcPoly, J: GradedIdeal, up_to: int) -> GradedIdeal:
    """The right ideal (x : J) = {a : x*a in J}, computed per degree as the
    kernel of a |-> x*a modulo J.  When x lies in J the result is the unit
    ideal, flagged via `unit_colon`."""
    Q = J.ambient
    x = Q.reduce(x)
    if x.is_zero() or membership(x, J):
        return unit_ideal(Q, up_to)
    if not x.is_homogeneous() or x.degree < 1:
        raise ValueError("colon witness must be homogeneous of degree >= 1")
    c = x.degree
    J.ensure_degree(up_to + c)
    field = Q.field
    components = [[]]
    for d in range(1, up_to + 1):
        jref = J.component(d + c)
        if field.is_rational:
            rows = [residual(field, jref, row)
                    for row in _image_rows_under_left_multiplication(Q, x, d)]
        else:
            rows = _image_matrix_modp(Q, x, d)
            if jref:
                pivots = [min(r) for r in jref]
                dense_j = densify(jref, Q.dim(d + c))
                rows = (rows - modp_matmul(rows[:, pivots], dense_j,
                                           field.p)) % field.p
        components.append(left_kernel(field, rows, Q.dim(d + c)))
    ideal = GradedIdeal(Q, [], components, up_to, False)
    ideal.generators = [Q.coords_to_poly(v, d)
                        for d, v in minimal_generator_vectors(ideal, up_to)]
    _assert_right_closed(ideal, up_to)
    return ideal


def _assert_right_closed(ideal: GradedIdeal, up_to: int):
    Q = ideal.ambient
    for d in range(up_to):
        nxt = ideal.component(d + 1)
        prod = ideal._product_rows(d)
        if row_count(prod) and rank(
                Q.field, stack_rows(Q.field, Q.dim(d + 1), prod, nxt),
                Q.dim(d + 1)) != len(nxt):
            raise AssertionError(
                f"component at degree {d} not closed under right multiplication")


def components_equal(a: GradedIdeal, b: GradedIdeal, up_to: int) -> bool:
    a.ensure_degree(up_to)
    b.ensure_degree(up_to)
    return all(a.component(d) == b.component(d) for d in range(up_to + 1))


def sum_with_principal(J: GradedIdeal, x: NcPoly, up_to: int) -> GradedIdeal:
    """The ideal J + xR, as explicit components."""
    Q = J.ambient
    return ideal_from_generators(
        Q, [Q.coords_to_poly(v, d)
            for d, v in minimal_generator_vectors(J, up_to)] + [x], up_to)


def opposite_transform(pres: Presentation) -> Presentation:
    """Reverse every relation word: right-ideal machinery on the result
    answers left-ideal questions about the original algebra."""
    rels = tuple(
        NcPoly(pres.field, {tuple(reversed(w)): c for w, c in rel.terms.items()})
        for rel in pres.relations)
    return Presentation(pres.names, pres.field, pres.ord, rels)
