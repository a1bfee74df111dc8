"""Minimal graded free resolutions by exact linear algebra: Tor tables,
bounded Koszulness certificates, rate estimation, and Anick chains for
quadratic monomial algebras.

Resolutions are computed internal-degree-major: all homological stages are
advanced one internal degree at a time.  Stage generators at degree j are a
complement of (earlier syzygies) * R_1 inside the degree-j kernel, which
keeps the resolution minimal; the certificate can therefore stop at the
first off-diagonal Tor without touching higher degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import NonQuadraticMonomialInput, NotSingleDegreeGenerated
from .ideals import GradedIdeal, maximal_ideal
from .linalg import left_kernel, rref
from .quotient import Presentation, QuotientAlgebra


@dataclass
class TorTable:
    """dims[(i, j)] = dim H_i(M)_j = dim Tor_i(M, k)_j, for i <= i_max and
    j <= j_max; zero entries are omitted."""

    dims: dict
    i_max: int
    j_max: int
    module_id: str

    def dim(self, i: int, j: int) -> int:
        return self.dims.get((i, j), 0)

    def top_degree(self, i: int) -> int:
        """t_i = max {j : H_i(M)_j != 0}, or 0 when H_i vanishes."""
        degrees = [j for (ii, j) in self.dims if ii == i]
        return max(degrees) if degrees else 0

    def to_json(self) -> dict:
        entries = [{"i": i, "j": j, "dim": n}
                   for (i, j), n in sorted(self.dims.items())]
        return {"module": self.module_id, "i_max": self.i_max,
                "j_max": self.j_max, "dims": entries}

    def betti_text(self) -> str:
        """Betti diagram: rows are homological degrees, columns are j - i."""
        if not self.dims:
            return "(empty table)"
        slopes = sorted({j - i for (i, j) in self.dims})
        lines = ["i\\(j-i) " + " ".join(f"{s:>4}" for s in slopes)]
        for i in range(self.i_max + 1):
            row = [self.dim(i, i + s) for s in slopes]
            lines.append(f"{i:>7} " + " ".join(
                f"{n:>4}" if n else "   ." for n in row))
        return "\n".join(lines)


class _FreeContext:
    """Coordinates of a graded free right module over the quotient algebra,
    with one block per generator; supports right letter multiplication."""

    def __init__(self, Q: QuotientAlgebra):
        self.Q = Q
        self.gen_degrees: list[int] = []
        self._layout: dict = {}

    def add_generator(self, degree: int):
        self.gen_degrees.append(degree)

    def _degree_layout(self, j: int):
        key = (j, len(self.gen_degrees))
        if key not in self._layout:
            offsets = []
            decode = []
            total = 0
            for t, dt in enumerate(self.gen_degrees):
                offsets.append(total)
                if j >= dt:
                    size = self.Q.dim(j - dt)
                    decode.extend((t, loc) for loc in range(size))
                    total += size
            self._layout[key] = (offsets, decode, total)
        return self._layout[key]

    def dim(self, j: int) -> int:
        return self._degree_layout(j)[2]

    def rmul_letter(self, vec: dict, j: int, letter: int) -> dict:
        Q = self.Q
        rational = Q.field.is_rational
        p = Q.field.p
        _, decode, _ = self._degree_layout(j)
        offsets_next = self._degree_layout(j + 1)[0]
        out: dict = {}
        for idx, c in vec.items():
            t, loc = decode[idx]
            rows = Q.letter_matrix(j - self.gen_degrees[t], letter)
            base = offsets_next[t]
            for lj, m in rows[loc].items():
                g = base + lj
                s = (out.get(g, 0) + c * m) if rational \
                    else (out.get(g, 0) + c * m) % p
                if s:
                    out[g] = s
                else:
                    out.pop(g, None)
        return out


class _AmbientContext:
    def __init__(self, Q: QuotientAlgebra):
        self.Q = Q

    def dim(self, j: int) -> int:
        return self.Q.dim(j)

    def rmul_letter(self, vec, j, letter):
        return self.Q.rmul_letter(vec, j, letter)


class _Stage:
    """One homological stage: generators (degree, image vector in the
    target's coordinates) plus per-generator product caches."""

    def __init__(self, target):
        self.target = target  # context the images live in
        self.gens: list[tuple] = []
        self._levels: list[dict] = []  # per gen: word -> image * word

    def add_gen(self, degree: int, image: dict):
        self.gens.append((degree, image))
        self._levels.append({(): image})

    def image_rows(self, Q: QuotientAlgebra, j: int):
        """Rows of the stage map at internal degree j, enumerated in the free
        module's coordinate order; also returns flags marking constant-word
        coordinates (their kernel entries must vanish by minimality)."""
        rows = []
        is_const = []
        for t, (dt, _) in enumerate(self.gens):
            if j < dt:
                continue
            level = self._levels[t]
            words = Q.normal_words(j - dt)
            if words and words[0] not in level and j - dt > 0:
                for w in words:
                    level[w] = self.target.rmul_letter(
                        level[w[:-1]], j - 1, w[-1])
            for w in words:
                rows.append(level[w])
                is_const.append(j == dt)
        return rows, is_const


def _resolution_scan(module: GradedIdeal, i_max: int, j_max: int,
                     on_entry) -> None:
    """Advance the minimal resolution degree by degree, reporting each
    nonzero H_i(M)_j through on_entry(i, j, count); raising StopIteration
    from the callback aborts the scan."""
    Q = module.ambient
    fld = Q.field
    stages: list[_Stage] = [_Stage(_AmbientContext(Q))]
    free: list[_FreeContext] = [_FreeContext(Q)]  # free[i] hosts stage-i gens
    kernels_prev: list[list] = [[]]  # kernels[i] at degree j-1, in free[i] coords

    module.ensure_degree(0)
    if module.component(0):
        raise ValueError("module must live in positive degrees")

    for j in range(1, j_max + 1):
        module.ensure_degree(j)
        # stage 0: new minimal module generators at degree j
        sub = rref(fld, module._product_rows(j - 1), Q.dim(j))
        sub_pivots = {min(r) for r in sub}
        new0 = [v for v in module.component(j) if min(v) not in sub_pivots]
        if new0:
            on_entry(0, j, len(new0))
        for v in new0:
            stages[0].add_gen(j, v)
            free[0].add_generator(j)

        kernels_here: list[list] = []
        for i in range(min(len(stages), i_max)):
            stage = stages[i]
            if not stage.gens:
                kernels_here.append([])
                continue
            rows, is_const = stage.image_rows(Q, j)
            kernel = left_kernel(fld, rows, stage.target.dim(j))
            for vec in kernel:
                if any(is_const[idx] for idx in vec):
                    raise AssertionError(
                        "resolution differential acquired a unit entry")
            prod = []
            for v in kernels_prev[i] if i < len(kernels_prev) else []:
                for letter in range(Q.ngens):
                    w = free[i].rmul_letter(v, j - 1, letter)
                    if w:
                        prod.append(w)
            sub = rref(fld, prod, free[i].dim(j))
            sub_pivots = {min(r) for r in sub}
            new = [v for v in kernel if min(v) not in sub_pivots]
            if new:
                on_entry(i + 1, j, len(new))
                if len(stages) == i + 1:
                    stages.append(_Stage(free[i]))
                    free.append(_FreeContext(Q))
                for v in new:
                    stages[i + 1].add_gen(j, v)
                    free[i + 1].add_generator(j)
            kernels_here.append(kernel)
        kernels_prev = kernels_here


def tor_table_ideal(module: GradedIdeal, i_max: int, j_max: int,
                    module_id: str = "ideal") -> TorTable:
    dims: dict = {}

    def record(i, j, count):
        dims[(i, j)] = count

    _resolution_scan(module, i_max, j_max, record)
    return TorTable(dims, i_max, j_max, module_id)


def tor_table_trivial(Q: QuotientAlgebra, i_max: int, j_max: int) -> TorTable:
    """Tor of the trivial module k: H_0(k) = k and H_i(k) = H_{i-1} of the
    maximal homogeneous ideal for i >= 1."""
    dims = {(0, 0): 1}
    if i_max >= 1:
        inner = tor_table_ideal(maximal_ideal(Q, 1), i_max - 1, j_max)
        for (i, j), n in inner.dims.items():
            dims[(i + 1, j)] = n
    return TorTable(dims, i_max, j_max, "k")


def tor_table(module, i_max: int, j_max: int) -> TorTable:
    """module is either a GradedIdeal or a QuotientAlgebra (meaning the
    trivial module k over it)."""
    if isinstance(module, QuotientAlgebra):
        return tor_table_trivial(module, i_max, j_max)
    return tor_table_ideal(module, i_max, j_max)


@dataclass
class KoszulResult:
    koszul_to_bound: bool
    witness: tuple | None  # (i, j, dim) of the first off-diagonal entry
    i_max: int
    j_max: int
    generation_degree: int
    module_id: str = "module"

    def __bool__(self):
        return self.koszul_to_bound


class _OffDiagonal(Exception):
    def __init__(self, entry):
        self.entry = entry


def koszul_certificate(module, i_max: int,
                       module_id: str = "module") -> KoszulResult:
    """Bounded linear-resolution certificate: scan H_i(M)_j for i <= i_max,
    j <= i_max + d + 1, and report the first entry off the line j = i + d.

    For a GradedIdeal the generation degree d is discovered and must be
    unique (NotSingleDegreeGenerated otherwise).  Passing a QuotientAlgebra
    certifies the trivial module k (d = 0).
    """
    if isinstance(module, QuotientAlgebra):
        Q = module
        inner = koszul_certificate(maximal_ideal(Q, 1), i_max - 1, "maximal")
        witness = None
        if inner.witness:
            i, j, n = inner.witness
            witness = (i + 1, j, n)
        return KoszulResult(inner.koszul_to_bound, witness, i_max,
                            inner.j_max, 0, module_id if module_id != "module"
                            else "k")

    module.ensure_degree(1)
    gen_degree: list = []

    def check(i, j, count):
        if i == 0:
            if not gen_degree:
                gen_degree.append(j)
            elif j != gen_degree[0]:
                raise NotSingleDegreeGenerated(
                    f"generators at degrees {gen_degree[0]} and {j}")
        if gen_degree and j != i + gen_degree[0]:
            raise _OffDiagonal((i, j, count))

    d_guess = min((d for d, _ in
                   ((g.degree, g) for g in module.generators)), default=1)
    j_max = i_max + d_guess + 1
    try:
        _resolution_scan(module, i_max, j_max, check)
    except _OffDiagonal as stop:
        return KoszulResult(False, stop.entry, i_max, j_max,
                            gen_degree[0] if gen_degree else d_guess, module_id)
    return KoszulResult(True, None, i_max, j_max,
                        gen_degree[0] if gen_degree else d_guess, module_id)


def rate_estimate(table: TorTable) -> Fraction:
    """sup over 2 <= i <= i_max of (t_i - 1)/(i - 1) for the trivial module,
    with the empty sup (and anything below 1) reported as 1."""
    best = Fraction(1)
    for i in range(2, table.i_max + 1):
        t_i = table.top_degree(i)
        if t_i:
            best = max(best, Fraction(t_i - 1, i - 1))
    return best


def rate_bound_check(module: GradedIdeal, filtration_degree: int,
                     i_max: int, module_id: str = "ideal") -> bool:
    """Check t_i(M) <= m(M) + d*i for all computed i <= i_max, scanning
    internal degrees up to m(M) + d*i_max + 1."""
    from .ideals import min_generators

    _, m = min_generators(module, filtration_degree)
    j_max = m + filtration_degree * i_max + 1
    table = tor_table_ideal(module, i_max, j_max, module_id)
    return all(table.top_degree(i) <= m + filtration_degree * i
               for i in range(i_max + 1))


@dataclass
class ChainSet:
    """Anick chains of a quadratic monomial algebra: chains[i] lists the
    words of homological degree i (length i, every adjacent pair forbidden)."""

    chains: list = dc_field(default_factory=list)

    @property
    def counts(self) -> list:
        return [len(level) for level in self.chains]


def anick_chains_quadratic_monomial(pres: Presentation,
                                    i_max: int) -> ChainSet:
    forbidden = set()
    for rel in pres.relations:
        if not rel.is_monomial() or rel.degree != 2:
            raise NonQuadraticMonomialInput(
                "chains need quadratic monomial relations")
        forbidden.add(next(iter(rel.terms)))
    levels = [[()]]
    if i_max >= 1:
        levels.append([(a,) for a in range(pres.ngens)])
    for _ in range(2, i_max + 1):
        levels.append([w + (b,) for w in levels[-1]
                       for b in range(pres.ngens) if (w[-1], b) in forbidden])
    return ChainSet(levels)
