"""Koszul flags, Koszul filtrations, and rate filtrations: data model,
verification, the monomial constructions, the initially-Koszul criterion and
order search, the single-relation normal form, and the exact rational
Hilbert-series solver.

A filtration is a finite explicit table: every nonzero ideal carries a
certificate entry I = J + xR with a stored witness x and a link to the colon
ideal (x : J).  Verification re-derives every closure claim and certifies
Koszulness of members only to explicit bounds.  Tables unrolled from
infinite constructions may mark boundary ideals whose entries are exempt
(iteration budget); such tables verify structurally but cannot be fed to the
series solver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (
    ColonNotSubsetGenerated,
    NonQuadraticInput,
    NonQuadraticMonomialInput,
    SearchLimitExceeded,
    SingularSystem,
    ZeroPolynomial,
)
from .fields import FieldSpec
from .freealg import GenOrder, NcPoly, apply_linear_change, render_word
from .groebner import pbw_certificate
from .homology import koszul_certificate, rate_bound_check
from .ideals import (
    GradedIdeal,
    colon_ideal,
    components_equal,
    ideal_from_generators,
    membership,
    min_generators,
    minimal_generator_vectors,
)
from .linalg import null_space, rank, rref
from .quotient import Presentation, QuotientAlgebra, quadratic_dual
from .series import Polynomial, RationalFunction, solve_rational_system

ZERO_ID = "0"


@dataclass
class FiltrationEntry:
    ideal_id: str
    parent_id: str
    witness: NcPoly
    colon_id: str

    @property
    def x_degree(self) -> int:
        return self.witness.degree


@dataclass
class FiltrationTable:
    ambient: QuotientAlgebra
    ideals: dict  # id -> GradedIdeal
    entries: dict  # id -> FiltrationEntry, for every nonzero non-boundary id
    kind: str  # "koszul" or "rate"
    degree: int  # d: maximal generator degree over the table
    top_id: str  # id of the maximal homogeneous ideal
    boundary_ids: set = dc_field(default_factory=set)

    def nonzero_ids(self):
        return [i for i in self.ideals if i != ZERO_ID]


@dataclass
class VerificationReport:
    valid: bool
    violations: list
    certificates: dict
    flag_chain: list
    degree_bound: int
    hom_bound: int
    kind: str

    def __bool__(self):
        return self.valid


def _maximal_components(Q: QuotientAlgebra, up_to: int) -> GradedIdeal:
    from .ideals import maximal_ideal

    return maximal_ideal(Q, up_to)


def check_structure(table: FiltrationTable, degree_bound: int) -> list:
    """Closure part of verification: membership of witnesses, the
    decomposition I = J + xR, colon links, parent well-foundedness, and the
    generator-degree discipline of the kind."""
    Q = table.ambient
    violations = []
    if ZERO_ID not in table.ideals:
        violations.append("zero ideal missing from the table")
    elif not table.ideals[ZERO_ID].is_zero_to(degree_bound):
        violations.append("ideal '0' is not the zero ideal")
    top = table.ideals.get(table.top_id)
    if top is None:
        violations.append("maximal homogeneous ideal missing from the table")
    elif not components_equal(top, _maximal_components(Q, degree_bound),
                              degree_bound):
        violations.append(
            f"ideal '{table.top_id}' is not the maximal homogeneous ideal")

    for ideal_id in table.nonzero_ids():
        ideal = table.ideals[ideal_id]
        if ideal_id in table.boundary_ids:
            continue
        entry = table.entries.get(ideal_id)
        if entry is None:
            violations.append(f"'{ideal_id}': entry missing")
            continue
        if entry.parent_id not in table.ideals:
            violations.append(f"'{ideal_id}': parent id unresolved")
            continue
        if entry.colon_id not in table.ideals:
            violations.append(f"'{ideal_id}': colon id unresolved")
            continue
        x = entry.witness
        if x.is_zero() or not x.is_homogeneous() or x.degree < 1:
            violations.append(f"'{ideal_id}': witness not homogeneous of "
                              "positive degree")
            continue
        if not membership(x, ideal):
            violations.append(f"'{ideal_id}': witness not inside the ideal")
        parent = table.ideals[entry.parent_id]
        xR = ideal_from_generators(Q, [x], degree_bound)
        for d in range(degree_bound + 1):
            combined = parent.component(d) + xR.component(d)
            want = ideal.component(d)
            if rank(Q.field, combined + want, Q.dim(d)) != len(want) \
                    or rank(Q.field, combined, Q.dim(d)) != len(want):
                violations.append(
                    f"'{ideal_id}': I != J + xR first fails at degree {d}")
                break
        colon_bound = max(degree_bound - x.degree, 1)
        computed = colon_ideal(x, parent, colon_bound)
        if computed.unit_colon:
            violations.append(f"'{ideal_id}': colon is the unit ideal "
                              "(witness lies in the parent)")
        elif not components_equal(computed, table.ideals[entry.colon_id],
                                  colon_bound):
            violations.append(f"'{ideal_id}': stored colon link does not "
                              f"match (x : J) up to degree {colon_bound}")
        gens, m = min_generators(ideal, degree_bound)
        limit = 1 if table.kind == "koszul" else table.degree
        if m > limit or any(d > limit for d, _ in gens):
            violations.append(
                f"'{ideal_id}': generated in degree {m} > {limit}")
        if table.kind == "rate":
            _, m_parent = min_generators(parent, degree_bound)
            if m_parent > m:
                violations.append(
                    f"'{ideal_id}': m(J) = {m_parent} exceeds m(I) = {m}")

    # parent relation must be well-founded
    for ideal_id in table.entries:
        seen = set()
        cur = ideal_id
        while cur != ZERO_ID and cur not in seen:
            seen.add(cur)
            entry = table.entries.get(cur)
            if entry is None:
                break
            cur = entry.parent_id
        if cur in seen:
            violations.append(f"'{ideal_id}': parent chain has a cycle")
    return violations


def extract_flag_chain(table: FiltrationTable) -> list:
    """Follow parents from the maximal ideal down to zero: the one-generator
    steps of this chain are the flag contained in the filtration."""
    chain = [table.top_id]
    seen = {table.top_id}
    cur = table.top_id
    while cur != ZERO_ID:
        entry = table.entries.get(cur)
        if entry is None or entry.parent_id in seen:
            break
        cur = entry.parent_id
        seen.add(cur)
        chain.append(cur)
    return chain


def verify_filtration(table: FiltrationTable, degree_bound: int,
                      hom_bound: int) -> VerificationReport:
    """Full verification: structural closure plus bounded homological
    certificates for every member (Koszul certificates for kind 'koszul',
    the generator-degree Tor bound for kind 'rate')."""
    violations = check_structure(table, degree_bound)
    certificates = {}
    for ideal_id in table.nonzero_ids():
        ideal = table.ideals[ideal_id]
        if table.kind == "koszul":
            cert = koszul_certificate(ideal, hom_bound, ideal_id)
            if cert.koszul_to_bound:
                certificates[ideal_id] = (
                    f"KoszulToBound(i_max={hom_bound}, j_max={cert.j_max})")
            else:
                certificates[ideal_id] = f"NotKoszul{cert.witness}"
                violations.append(
                    f"'{ideal_id}': not Koszul, witness H_{cert.witness[0]} "
                    f"at degree {cert.witness[1]}")
        else:
            ok = rate_bound_check(ideal, table.degree, hom_bound, ideal_id)
            certificates[ideal_id] = (
                f"RateBound(d={table.degree}, i_max={hom_bound}): "
                f"{'holds' if ok else 'fails'}")
            if not ok:
                violations.append(
                    f"'{ideal_id}': Tor bound t_i <= m + {table.degree}*i fails")
    chain = extract_flag_chain(table)
    if chain[-1] != ZERO_ID:
        violations.append("parent chain from the maximal ideal does not "
                          "reach the zero ideal")
    return VerificationReport(not violations, violations, certificates,
                              chain, degree_bound, hom_bound, table.kind)


# -- monomial constructions ----------------------------------------------------


def _monomial_words(pres: Presentation, quadratic: bool):
    words = []
    for rel in pres.relations:
        if not rel.is_monomial() or (quadratic and rel.degree != 2):
            raise NonQuadraticMonomialInput(
                "construction needs monomial relations"
                + (" of degree 2" if quadratic else ""))
        words.append(next(iter(rel.terms)))
    return words


def _subset_id(pres: Presentation, subset) -> str:
    if not subset:
        return ZERO_ID
    return "{" + ",".join(pres.names[i] for i in sorted(subset)) + "}"


def monomial_subset_filtration(pres: Presentation,
                               degree_bound: int = 6) -> FiltrationTable:
    """The 2^n right ideals generated by subsets of the generators of a
    quadratic monomial algebra, with colon links resolved; the colon of each
    witness is itself generated by a subset of the generators, and a failure
    of that claim raises ColonNotSubsetGenerated."""
    _monomial_words(pres, quadratic=True)
    Q = QuotientAlgebra(pres, max(degree_bound + 1, 3))
    n = pres.ngens
    ideals = {}
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            gens = [NcPoly.generator(pres.field, i) for i in subset]
            ideals[_subset_id(pres, subset)] = (
                frozenset(subset),
                ideal_from_generators(Q, gens, degree_bound))
    entries = {}
    colon_bound = max(degree_bound - 1, 1)
    for ideal_id, (subset, _) in ideals.items():
        if not subset:
            continue
        x_index = max(subset)
        parent = frozenset(subset - {x_index})
        x = NcPoly.generator(pres.field, x_index)
        colon = colon_ideal(x, ideals[_subset_id(pres, parent)][1],
                            colon_bound)
        colon_subset = set()
        for v in colon.component(1):
            if len(v) != 1:
                raise ColonNotSubsetGenerated(
                    f"colon of '{ideal_id}' has a non-monomial linear part")
            colon_subset.add(min(v))
        colon_id = _subset_id(pres, colon_subset)
        if not components_equal(colon, ideals[colon_id][1], colon_bound):
            raise ColonNotSubsetGenerated(
                f"colon of '{ideal_id}' is not the subset ideal {colon_id}")
        entries[ideal_id] = FiltrationEntry(ideal_id, _subset_id(pres, parent),
                                            x, colon_id)
    table = FiltrationTable(Q, {k: v for k, (_, v) in ideals.items()},
                            entries, "koszul", 1,
                            _subset_id(pres, range(n)))
    return table


def _monomial_gen_id(Q: QuotientAlgebra, words) -> str:
    if not words:
        return ZERO_ID
    names = Q.pres.names
    ordered = sorted(words, key=Q.ord.word_key)
    return "{" + ",".join(render_word(w, names) for w in ordered) + "}"


def monomial_rate_filtration(pres: Presentation, degree_limit: int,
                             degree_bound: int = 6) -> FiltrationTable:
    """All right ideals of a monomial algebra generated by normal monomials
    of degree <= degree_limit, as a rate filtration of that degree.

    Distinct ideals correspond to prefix-antichains of normal words; the
    witness of each ideal is its deglex-greatest generator of top degree.
    """
    _monomial_words(pres, quadratic=False)
    Q = QuotientAlgebra(pres, max(degree_bound + degree_limit, 3))
    pool = []
    for d in range(1, degree_limit + 1):
        pool.extend(Q.normal_words(d))

    def minimal_set(words):
        out = []
        for w in sorted(words, key=len):
            if not any(w[:len(u)] == u for u in out):
                out.append(w)
        return frozenset(out)

    families = {}
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            key = minimal_set(combo)
            if key not in families:
                families[key] = None
    ideals = {}
    id_of = {}
    for key in families:
        gens = [NcPoly.monomial(pres.field, w) for w in key]
        ident = _monomial_gen_id(Q, key)
        id_of[key] = ident
        ideals[ident] = (key, ideal_from_generators(Q, gens, degree_bound))
    entries = {}
    for key, ident in id_of.items():
        if not key:
            continue
        witness_word = max(key, key=lambda w: (len(w), Q.ord.word_key(w)))
        rest = minimal_set(key - {witness_word})
        x = NcPoly.monomial(pres.field, witness_word)
        colon_bound = max(degree_bound - len(witness_word), 1)
        colon = colon_ideal(x, ideals[id_of[rest]][1], colon_bound)
        colon_words = []
        for g in colon.generators:
            if not g.is_monomial():
                raise ColonNotSubsetGenerated(
                    f"colon of '{ident}' has a non-monomial generator")
            w = next(iter(g.terms))
            if len(w) > degree_limit:
                raise ColonNotSubsetGenerated(
                    f"colon of '{ident}' needs a generator of degree "
                    f"{len(w)} > {degree_limit}")
            colon_words.append(w)
        colon_key = minimal_set(colon_words)
        colon_id = id_of.get(colon_key)
        if colon_id is None or not components_equal(
                colon, ideals[colon_id][1], colon_bound):
            raise ColonNotSubsetGenerated(
                f"colon of '{ident}' is not a family member")
        entries[ident] = FiltrationEntry(ident, id_of[rest], x, colon_id)
    top_key = minimal_set(Q.normal_words(1))
    table = FiltrationTable(Q, {k: v for k, (_, v) in ideals.items()},
                            entries, "rate", degree_limit, id_of[top_key])
    return table


# -- initially Koszul ----------------------------------------------------------


@dataclass
class InitiallyKoszulResult:
    initially_koszul: bool
    reason: str = ""  # "", "not-pbw", or "segment"
    witness: object = None  # overlap word, or 1-based (k, j, i) positions

    def __bool__(self):
        return self.initially_koszul


def initially_koszul_criterion(pres: Presentation,
                               ord: GenOrder | None = None
                               ) -> InitiallyKoszulResult:
    """PBW plus the left-segment property of the quadratic leading words:
    whenever x_k x_j is a leading word, so is x_k x_i for every i < j
    (positions taken in the given order)."""
    if ord is None:
        ord = pres.ord
    probe = pres.with_order(ord)
    pbw = pbw_certificate(probe)
    if not pbw.is_pbw:
        return InitiallyKoszulResult(False, "not-pbw", pbw.witness)
    lead = {(ord.rank(w[0]), ord.rank(w[1]))
            for w in (e.leading(ord)[0] for e in pbw.basis)}
    for k, j in sorted(lead):
        for i in range(j):
            if (k, i) not in lead:
                return InitiallyKoszulResult(False, "segment",
                                             (k + 1, j + 1, i + 1))
    return InitiallyKoszulResult(True)


@dataclass
class OrderSearchResult:
    found: bool
    order: GenOrder | None = None

    def __bool__(self):
        return self.found


def initially_koszul_search(pres: Presentation,
                            limit: int = 8) -> OrderSearchResult:
    """Try every generator order (lexicographically by index sequence) and
    return the first one whose flag is a Groebner flag."""
    if pres.ngens > limit:
        raise SearchLimitExceeded(
            f"{pres.ngens} generators exceed the search limit {limit}")
    for seq in itertools.permutations(range(pres.ngens)):
        ord = GenOrder(seq)
        if initially_koszul_criterion(pres, ord):
            return OrderSearchResult(True, ord)
    return OrderSearchResult(False)


def monomial_dual_flag_check(pres: Presentation, ord: GenOrder) -> bool:
    """For a quadratic monomial algebra passing the criterion under `ord`,
    its quadratic dual must pass it under the reversed order."""
    _monomial_words(pres, quadratic=True)
    dual = quadratic_dual(pres.with_order(ord))
    return bool(initially_koszul_criterion(dual, ord.reversed()))


# -- single quadratic relation -------------------------------------------------


def _sqrt_rational(x: Fraction):
    if x < 0:
        return None
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def _sqrt_modp(a: int, p: int):
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _field_sqrt(field: FieldSpec, a):
    return _sqrt_rational(a) if field.is_rational else _sqrt_modp(a, field.p)


def _quad_matrix(f: NcPoly, n: int):
    field = f.field
    C = [[field.zero()] * n for _ in range(n)]
    for w, c in f.terms.items():
        C[w[0]][w[1]] = c
    return C


def _dot(field, u, v):
    total = field.zero()
    for a, b in zip(u, v):
        total = field.add(total, field.mul(a, b))
    return total


def _vec_times_matrix(field, v, C):
    n = len(C)
    return [_dot(field, v, [C[i][j] for i in range(n)]) for j in range(n)]


def _matrix_times_vec(field, C, v):
    return [_dot(field, row, v) for row in C]


def _kernel_of_functionals(field, functionals, n):
    rows = [{i: c for i, c in enumerate(fn) if c != 0} for fn in functionals]
    return [[v.get(i, field.zero()) for i in range(n)]
            for v in null_space(field, rows, n)]


def _isotropic_vector(field, C, n):
    """Nonzero v with v^T C v = 0 and v^T C != 0, searched over supports of
    size <= 2; None when the search fails (possible over non-closed fields)."""

    def accept(v):
        vC = _vec_times_matrix(field, v, C)
        if any(c != 0 for c in vC) and _dot(field, v, vC) == 0:
            return v
        return None

    basis = [[field.one() if k == i else field.zero() for k in range(n)]
             for i in range(n)]
    for i in range(n):
        if C[i][i] == 0:
            got = accept(basis[i])
            if got:
                return got
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            # (e_i + t e_j): C_ii + t (C_ij + C_ji) + t^2 C_jj = 0
            a2 = C[j][j]
            a1 = field.add(C[i][j], C[j][i])
            a0 = C[i][i]
            roots = []
            if not field.is_rational and field.p <= 101:
                roots = [t for t in range(field.p)
                         if field.add(field.add(
                             field.mul(field.mul(t, t), a2),
                             field.mul(t, a1)), a0) == 0]
            elif a2 == 0:
                if a1 != 0:
                    roots = [field.div(field.neg(a0), a1)]
            else:
                disc = field.sub(field.mul(a1, a1),
                                 field.mul(field.coerce(4),
                                           field.mul(a2, a0)))
                root = _field_sqrt(field, disc)
                if root is not None:
                    half = field.inv(field.mul(field.coerce(2), a2))
                    roots = [field.mul(field.sub(r, a1), half)
                             for r in (root, field.neg(root))]
            for t in roots:
                if t == 0:
                    continue
                v = list(basis[i])
                v[j] = t
                got = accept(v)
                if got:
                    return got
    return None


@dataclass
class NormalizeResult:
    supported: bool
    matrix: list | None = None  # substitution matrix for apply_linear_change
    form: str | None = None  # "x_n*x_1" or "x_1^2"

    def __bool__(self):
        return self.supported


def single_relation_normalize(f: NcPoly,
                              ngens: int | None = None) -> NormalizeResult:
    """Change of generators turning one quadratic relation into leading form
    x_n x_1, or into x_1^2 when the relation is a perfect square.

    Follows the factor-or-eliminate reduction: a rank-one coefficient matrix
    factors as a product of linear forms; otherwise an isotropic direction
    (no x_n^2 term) is sought and its left cofactor is sent to x_1.  Over a
    field without the needed square roots the search may fail; then the
    result is Unsupported rather than a wrong answer.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot normalize the zero relation")
    if not f.is_homogeneous() or f.degree != 2:
        raise NonQuadraticInput("normalization needs one quadratic relation")
    field = f.field
    n = ngens if ngens is not None else f.max_letter() + 1
    C = _quad_matrix(f, n)

    cols = _rank_one_columns(field, C, n)
    if cols is None:
        cols = _rank_two_columns(field, C, n)
        form = "x_n*x_1"
    else:
        cols, form = cols
    if cols is None:
        return NormalizeResult(False)
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    _verify_normal_form(f, matrix, form, n)
    return NormalizeResult(True, matrix, form)


def _rank_one_columns(field, C, n):
    pivot_row = next((i for i in range(n) if any(c != 0 for c in C[i])), None)
    if pivot_row is None:
        return None
    b = C[pivot_row]
    j0 = next(j for j in range(n) if b[j] != 0)
    a = [field.div(C[i][j0], b[j0]) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if C[i][j] != field.mul(a[i], b[j]):
                return None  # rank >= 2
    # f = (a.x)(b.x); parallel forms give the square shape x_1^2
    ratio = None
    parallel = True
    for i in range(n):
        if a[i] == 0 and b[i] == 0:
            continue
        if a[i] == 0 or b[i] == 0:
            parallel = False
            break
        r = field.div(b[i], a[i])
        if ratio is None:
            ratio = r
        elif r != ratio:
            parallel = False
            break
    if parallel:
        first = _solve_functional(field, a, n)
        kernel = _kernel_of_functionals(field, [a], n)
        return [first] + kernel, "x_1^2"
    first = _solve_two_functionals(field, a, b, n, lo=0, hi=1)
    last = _solve_two_functionals(field, a, b, n, lo=1, hi=0)
    middle = _kernel_of_functionals(field, [a, b], n)
    return [first] + middle + [last], "x_n*x_1"


def _solve_functional(field, a, n):
    """Some v with a.v = 1."""
    j = next(j for j in range(n) if a[j] != 0)
    v = [field.zero()] * n
    v[j] = field.inv(a[j])
    return v


def _solve_two_functionals(field, a, b, n, lo, hi):
    """Some v with a.v = lo and b.v = hi, for independent a, b."""
    kernel = _kernel_of_functionals(field, [a], n) if lo == 0 else \
        _kernel_of_functionals(field, [b], n)
    fn = b if lo == 0 else a
    want = field.coerce(hi if lo == 0 else lo)
    for k in kernel:
        beta = _dot(field, fn, k)
        if beta != 0:
            return [field.mul(field.div(want, beta), c) for c in k]
    raise AssertionError("functionals were not independent")


def _rank_two_columns(field, C, n):
    v = _isotropic_vector(field, C, n)
    if v is None:
        return None
    vC = _vec_times_matrix(field, v, C)
    first = _solve_functional(field, vC, n)
    kernel = _kernel_of_functionals(field, [vC], n)
    # v lies in ker(vC .); complete it to a basis of that kernel
    middle = []
    span = [{i: c for i, c in enumerate(v) if c != 0}]
    for k in kernel:
        vec = {i: c for i, c in enumerate(k) if c != 0}
        if rank(field, span + [vec], n) > len(span):
            span.append(rref(field, span + [vec], n)[len(span) - 1]
                        if False else vec)
            middle.append(k)
    middle = middle[:n - 2]
    return [first] + middle + [v], None


def _verify_normal_form(f, matrix, form, n):
    image = apply_linear_change(f, matrix)
    ord = GenOrder.identity(n)
    lm, _ = image.leading(ord)
    want = (0, 0) if form == "x_1^2" else (n - 1, 0)
    if lm != want:
        raise AssertionError(f"normal form verification failed: lm {lm}")


# -- rational Hilbert series from a filtration ----------------------------------


def hilbert_from_filtration(table: FiltrationTable):
    """Solve the linear system over Q(z) coupling the series of all table
    members: each entry I = J + xR with colon N contributes
    H_I = H_J + z^c (R - H_N), and R itself enters through the maximal
    ideal as R = H_top + 1.

    Returns (R, {ideal_id: series}); numerator and denominator degrees are
    asserted against the bound d*s with s the number of distinct nonzero
    solved series.
    """
    if table.boundary_ids:
        raise SingularSystem(
            "table has unresolved boundary ideals (iteration budget); "
            "the series system is not closed")
    ids = sorted(table.nonzero_ids())
    for ideal_id in ids:
        if ideal_id not in table.entries:
            raise SingularSystem(f"'{ideal_id}' has no decomposition entry")
    index = {ideal_id: k for k, ideal_id in enumerate(ids)}
    size = len(ids)
    zero = RationalFunction.zero()
    one = RationalFunction.one()
    matrix = [[zero] * size for _ in range(size)]
    rhs = [zero] * size
    top = index[table.top_id]
    for ideal_id in ids:
        row = index[ideal_id]
        entry = table.entries[ideal_id]
        c = entry.x_degree
        z_c = RationalFunction(Polynomial.monomial(1, c))
        matrix[row][row] = matrix[row][row] + one
        if entry.parent_id != ZERO_ID:
            col = index[entry.parent_id]
            matrix[row][col] = matrix[row][col] - one
        if entry.colon_id != ZERO_ID:
            col = index[entry.colon_id]
            matrix[row][col] = matrix[row][col] + z_c
        matrix[row][top] = matrix[row][top] - z_c
        rhs[row] = rhs[row] + z_c
    solution = solve_rational_system(matrix, rhs)
    series = {ideal_id: solution[index[ideal_id]] for ideal_id in ids}
    series[ZERO_ID] = zero
    total = series[table.top_id] + one
    distinct = {s for s in solution if not s.is_zero()}
    bound = table.degree * len(distinct)
    for value in [total] + list(distinct):
        if value.num.degree > bound or value.den.degree > bound:
            raise AssertionError(
                f"solved series degree exceeds the bound d*s = {bound}")
    return total, series


# -- JSON round trip -------------------------------------------------------------


def filtration_to_json(table: FiltrationTable) -> dict:
    from .presfile import render_poly_text

    names = table.ambient.pres.names
    gens_of = {}
    for ideal_id, ideal in table.ideals.items():
        gens_of[ideal_id] = {
            "gens": [render_poly_text(g, names) for g in ideal.generators]}
    entries = {
        ideal_id: {"parent": e.parent_id,
                   "x": render_poly_text(e.witness, names),
                   "colon": e.colon_id}
        for ideal_id, e in table.entries.items()}
    data = {"kind": table.kind, "degree": table.degree,
            "top": table.top_id, "ideals": gens_of, "entries": entries}
    if table.boundary_ids:
        data["boundary"] = sorted(table.boundary_ids)
    return data


def filtration_from_json(data: dict, pres: Presentation, degree_bound: int,
                         Q: QuotientAlgebra | None = None) -> FiltrationTable:
    from .presfile import parse_poly

    if Q is None:
        Q = QuotientAlgebra(pres, max(degree_bound + 1, 3))
    ideals = {}
    for ideal_id, spec_ in data["ideals"].items():
        gens = [parse_poly(text, pres) for text in spec_.get("gens", [])]
        ideals[ideal_id] = ideal_from_generators(Q, gens, degree_bound)
    entries = {}
    for ideal_id, e in data.get("entries", {}).items():
        entries[ideal_id] = FiltrationEntry(
            ideal_id, e["parent"], parse_poly(e["x"], pres), e["colon"])
    kind = data.get("kind", "koszul")
    degree = int(data.get("degree", 1))
    top_id = data.get("top")
    if top_id is None:
        maximal = _maximal_components(Q, degree_bound)
        top_id = next((i for i, ideal in ideals.items()
                       if components_equal(ideal, maximal, degree_bound)),
                      None)
        if top_id is None:
            raise ValueError("no ideal in the table equals the maximal ideal")
    boundary = set(data.get("boundary", []))
    return FiltrationTable(Q, ideals, entries, kind, degree, top_id, boundary)
