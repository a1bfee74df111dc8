"""Randomized checks for quadratic algebras with generic relations over a
large prime field.

Genericity is operationalized as uniform random coefficients over F_p
(default p = 32003); deviations from the generic rank pattern are reported
as genericity failures (resample advised), never silently absorbed.  Reports
are deterministic functions of (n, r, p, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .fields import FieldSpec, prime_field
from .filtration import (
    ZERO_ID,
    FiltrationEntry,
    FiltrationTable,
    VerificationReport,
    verify_filtration,
)
from .freealg import NcPoly
from .ideals import (
    colon_ideal,
    components_equal,
    ideal_from_generators,
    maximal_ideal,
    min_generators,
    zero_ideal,
)
from .quotient import Presentation, QuotientAlgebra, presentation
from .series import Polynomial, RationalFunction, TruncatedSeries, ratfunc_expand


@dataclass
class RandomQuadraticSample:
    """A presentation with generic quadratic relations f_j = sum_i x_i l_j^i,
    keeping the left-factor linear forms l_j^i for later extraction."""

    presentation: Presentation
    left_forms: list  # left_forms[j][i] = NcPoly l_j^i


def random_quadratic_presentation(n: int, r: int, p: int,
                                  seed) -> RandomQuadraticSample:
    if r > n * n:
        raise ValueError(f"at most n^2 = {n * n} quadratic relations possible")
    field = prime_field(p)
    rng = random.Random((n, r, p, seed).__repr__())
    names = tuple(f"x{i + 1}" for i in range(n))
    left_forms = []
    relations = []
    for _ in range(r):
        forms = [NcPoly(field, {(k,): rng.randrange(p) for k in range(n)})
                 for _ in range(n)]
        left_forms.append(forms)
        rel = NcPoly.zero(field)
        for i in range(n):
            rel = rel + NcPoly.generator(field, i) * forms[i]
        relations.append(rel)
    return RandomQuadraticSample(presentation(names, field, relations),
                                 left_forms)


def golod_shafarevich_series(n: int, r: int,
                             trunc_degree: int) -> TruncatedSeries:
    """Expansion of 1/(1 - nz + rz^2) to the given degree."""
    return ratfunc_expand(
        RationalFunction(Polynomial((1,)), Polynomial((1, -n, r))),
        trunc_degree)


@dataclass
class GenericExperimentReport:
    kind: str
    n: int
    r: int
    prime: int
    seed: object
    checks: dict = dc_field(default_factory=dict)
    details: list = dc_field(default_factory=list)
    hilbert_prefix: list = dc_field(default_factory=list)
    expected_prefix: list = dc_field(default_factory=list)
    filtration_report: VerificationReport | None = None

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks[name] = bool(ok)
        if not ok:
            self.details.append(detail or f"check failed: {name}")

    @property
    def genericity_failure(self) -> bool:
        return not all(self.checks.values())

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        data = {"kind": self.kind, "n": self.n, "r": self.r,
                "prime": self.prime, "seed": self.seed,
                "checks": dict(self.checks),
                "hilbert": [str(c) for c in self.hilbert_prefix],
                "expected": [str(c) for c in self.expected_prefix],
                "genericity_failure": self.genericity_failure,
                "valid": self.valid, "details": list(self.details)}
        if self.filtration_report is not None:
            data["filtration"] = {
                "valid": self.filtration_report.valid,
                "violations": self.filtration_report.violations,
                "certificates": self.filtration_report.certificates,
                "flag_chain": self.filtration_report.flag_chain}
        return data


def small_r_experiment(n: int, r: int, p: int, seed, trunc_degree: int = 6,
                       hom_bound: int = 4) -> GenericExperimentReport:
    """The r < n construction: the generator flag I_1 c ... c I_n plus the
    chain J_t generated by the n-th left forms gives n + r + 1 ideals whose
    colon table is 0 / J_r / 0 row by row; the resulting filtration is
    verified and the Hilbert prefix is compared with the Golod-Shafarevich
    expansion."""
    if not r < n:
        raise ValueError("small-r construction needs r < n")
    report = GenericExperimentReport("small-r", n, r, p, seed)
    sample = random_quadratic_presentation(n, r, p, seed)
    pres = sample.presentation
    field = pres.field
    Q = QuotientAlgebra(pres, trunc_degree)

    expected = golod_shafarevich_series(n, r, trunc_degree)
    got = Q.hilbert_function(trunc_degree)
    report.hilbert_prefix = [int(c) for c in got.coeffs]
    report.expected_prefix = [int(c) for c in expected.coeffs]
    report.record("hilbert_matches_golod_shafarevich", got == expected,
                  f"hilbert {report.hilbert_prefix} != GS "
                  f"{report.expected_prefix}")

    gens = [NcPoly.generator(field, i) for i in range(n)]
    flag = {0: zero_ideal(Q, trunc_degree)}
    for t in range(1, n + 1):
        flag[t] = ideal_from_generators(Q, gens[:t], trunc_degree)
    last_forms = [sample.left_forms[j][n - 1] for j in range(r)]
    jchain = {0: flag[0]}
    for t in range(1, r + 1):
        jchain[t] = ideal_from_generators(Q, last_forms[:t], trunc_degree)

    colon_bound = max(trunc_degree - 1, 1)
    for t in range(1, n):
        colon = colon_ideal(gens[t - 1], flag[t - 1], colon_bound)
        report.record(f"colon_x{t}_is_zero", colon.is_zero_to(colon_bound),
                      f"(x_{t} : I_{t - 1}) is nonzero")
    top_colon = colon_ideal(gens[n - 1], flag[n - 1], colon_bound)
    report.record("colon_xn_is_J_r",
                  components_equal(top_colon, jchain[r], colon_bound),
                  f"(x_{n} : I_{n - 1}) differs from J_{r}")
    for t in range(1, r + 1):
        colon = colon_ideal(last_forms[t - 1], jchain[t - 1], colon_bound)
        report.record(f"colon_l{t}_is_zero", colon.is_zero_to(colon_bound),
                      f"(l_{t} : J_{t - 1}) is nonzero")

    ids = {ZERO_ID: flag[0]}
    entries = {}
    for t in range(1, n + 1):
        ident = f"I{t}"
        ids[ident] = flag[t]
        parent = ZERO_ID if t == 1 else f"I{t - 1}"
        colon_id = f"J{r}" if (t == n and r > 0) else ZERO_ID
        entries[ident] = FiltrationEntry(ident, parent, gens[t - 1], colon_id)
    for t in range(1, r + 1):
        ident = f"J{t}"
        ids[ident] = jchain[t]
        parent = ZERO_ID if t == 1 else f"J{t - 1}"
        entries[ident] = FiltrationEntry(ident, parent, last_forms[t - 1],
                                         ZERO_ID)
    table = FiltrationTable(Q, ids, entries, "koszul", 1, f"I{n}")
    fr = verify_filtration(table, trunc_degree, hom_bound)
    report.filtration_report = fr
    report.record("koszul_filtration_verified", fr.valid,
                  "; ".join(fr.violations))
    return report


def large_r_experiment(n: int, r: int, p: int, seed, steps: int = 5,
                       trunc_degree: int = 4,
                       hom_bound: int = 4) -> GenericExperimentReport:
    """The r > n^2 - n construction: R_2 has dimension n^2 - r and R_3
    vanishes; flag colons equal the whole maximal ideal from the second step
    on, and the annihilator chain Ann(x_1), Ann(x_1^1), ... is unrolled for
    `steps` rounds (or until it closes), each annihilator generated by
    exactly n - s linear forms."""
    if not (n * n - n < r <= n * n):
        raise ValueError("large-r construction needs n^2 - n < r <= n^2")
    report = GenericExperimentReport("large-r", n, r, p, seed)
    sample = random_quadratic_presentation(n, r, p, seed)
    pres = sample.presentation
    field = pres.field
    # certificates scan internal degrees up to hom_bound + 2
    Q = QuotientAlgebra(pres, max(trunc_degree, hom_bound + 2, 3))
    s = n * n - r

    report.hilbert_prefix = [Q.dim(d) for d in range(4)]
    report.expected_prefix = [1, n, s, 0]
    report.record("dim_R2", Q.dim(2) == s, f"dim R_2 = {Q.dim(2)} != {s}")
    report.record("dim_R3", Q.dim(3) == 0, f"dim R_3 = {Q.dim(3)} != 0")

    gens = [NcPoly.generator(field, i) for i in range(n)]
    top = maximal_ideal(Q, trunc_degree)
    ids = {ZERO_ID: zero_ideal(Q, trunc_degree)}
    entries = {}
    boundary = set()
    colon_bound = max(trunc_degree - 1, 1)

    def add_flag(tag: str, forms) -> list:
        chain_ids = []
        for t in range(1, len(forms) + 1):
            ident = f"{tag}{t}"
            ids[ident] = ideal_from_generators(Q, forms[:t], trunc_degree)
            chain_ids.append(ident)
        return chain_ids

    flag_ids = add_flag("I", gens)
    top_id = flag_ids[-1]
    if not components_equal(ids[top_id], top, trunc_degree):
        report.record("flag_spans_maximal_ideal", False,
                      "generator flag does not reach the maximal ideal")
    for t in range(2, n + 1):
        colon = colon_ideal(gens[t - 1], ids[f"I{t - 1}"], colon_bound)
        ok = components_equal(colon, top, colon_bound)
        report.record(f"colon_x{t}_is_maximal", ok,
                      f"(x_{t} : I_{t - 1}) is not the maximal ideal")
        entries[f"I{t}"] = FiltrationEntry(f"I{t}", f"I{t - 1}", gens[t - 1],
                                           top_id if ok else ZERO_ID)

    pending = ("I1", gens[0])  # ideal whose colon entry is the annihilator
    current = gens[0]
    closed = False
    for round_no in range(1, steps + 1):
        ann = colon_ideal(current, ids[ZERO_ID], colon_bound)
        counts, m = min_generators(ann, colon_bound)
        ok = counts == [(1, n - s)] if n - s else counts == []
        report.record(f"annihilator_round_{round_no}_linear",
                      ok, f"Ann round {round_no}: generators {counts}, "
                          f"expected {n - s} linear forms")
        if not ok:
            break
        forms = [Q.coords_to_poly(v, 1) for v in ann.component(1)]
        existing = next((i for i, ideal in ids.items()
                         if components_equal(ideal, ann, colon_bound)), None)
        if existing is not None:
            entries[pending[0]] = FiltrationEntry(pending[0],
                                                  _parent_of(pending[0]),
                                                  pending[1], existing)
            closed = True
            break
        chain_ids = add_flag(f"A{round_no}_", forms)
        entries[pending[0]] = FiltrationEntry(pending[0],
                                              _parent_of(pending[0]),
                                              pending[1], chain_ids[-1])
        for t in range(2, len(forms) + 1):
            ident = chain_ids[t - 1]
            colon = colon_ideal(forms[t - 1], ids[chain_ids[t - 2]],
                                colon_bound)
            ok = components_equal(colon, top, colon_bound)
            report.record(f"round_{round_no}_colon_{t}_is_maximal", ok,
                          f"round {round_no}: (x^{round_no}_{t} : ...) is "
                          "not the maximal ideal")
            entries[ident] = FiltrationEntry(ident, chain_ids[t - 2],
                                             forms[t - 1],
                                             top_id if ok else ZERO_ID)
        pending = (chain_ids[0], forms[0])
        current = forms[0]
    if not closed and steps > 0 and pending[0] not in entries:
        # iteration budget exhausted: the final annihilator stays unresolved
        ann = colon_ideal(current, ids[ZERO_ID], colon_bound)
        ident = f"A{steps + 1}_boundary"
        gens_b = [Q.coords_to_poly(v, 1) for v in ann.component(1)]
        ids[ident] = ideal_from_generators(Q, gens_b, trunc_degree)
        boundary.add(ident)
        entries[pending[0]] = FiltrationEntry(pending[0],
                                              _parent_of(pending[0]),
                                              pending[1], ident)
    if steps == 0:
        ann = colon_ideal(current, ids[ZERO_ID], colon_bound)
        ident = "A1_boundary"
        gens_b = [Q.coords_to_poly(v, 1) for v in ann.component(1)]
        ids[ident] = ideal_from_generators(Q, gens_b, trunc_degree)
        boundary.add(ident)
        entries["I1"] = FiltrationEntry("I1", ZERO_ID, gens[0], ident)

    table = FiltrationTable(Q, ids, entries, "koszul", 1, top_id, boundary)
    fr = verify_filtration(table, trunc_degree, hom_bound)
    report.filtration_report = fr
    report.record("koszul_filtration_verified", fr.valid,
                  "; ".join(fr.violations))
    return report


def _parent_of(ident: str) -> str:
    if ident.startswith("I"):
        t = int(ident[1:])
        return ZERO_ID if t == 1 else f"I{t - 1}"
    prefix, t = ident.rsplit("_", 1)
    t = int(t)
    return ZERO_ID if t == 1 else f"{prefix}_{t - 1}"


@dataclass
class ObstructionResult:
    series: Polynomial  # the first-syzygy Hilbert obstruction of I_p
    negative: bool  # some coefficient is negative: cannot be a Hilbert series

    def __bool__(self):
        return self.negative


def h1_obstruction_series(n: int, r: int) -> ObstructionResult:
    """Symbolic first-syzygy obstruction for the flag in the regime
    n <= r <= n^2/4: with r = qn + p the series p*z - R(z)^{-1} I_p(z)
    collapses to the polynomial -qr z^2, whose negative coefficient (q > 0)
    certifies that the generic flag is not Koszul."""
    q, p_rem = divmod(r, n)
    gs_inverse = Polynomial((1, -n, r))
    total = RationalFunction(Polynomial((1,)), gs_inverse)
    ideal_series = RationalFunction(
        Polynomial((0, p_rem, q * r))) * total
    obstruction = (RationalFunction(Polynomial((0, p_rem)))
                   - RationalFunction(gs_inverse) * ideal_series)
    if obstruction.den != Polynomial((1,)):
        raise AssertionError("obstruction did not collapse to a polynomial")
    poly = obstruction.num
    return ObstructionResult(poly, any(c < 0 for c in poly.coeffs))
