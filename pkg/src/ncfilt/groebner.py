"""Reduction, overlap analysis, degree-truncated Groebner completion, the
PBW certificate, and restricted-processing checks for two-sided ideals of
the free associative algebra.

Completion follows the diamond lemma: S-polynomials of overlap ambiguities
are reduced in increasing overlap-word degree.  A basis is certified
complete only when every ambiguity, at every degree, resolves; truncation at
the degree bound is reported through the `complete` flag, never silently.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import NonQuadraticInput
from .fields import FieldSpec
from .freealg import GenOrder, NcPoly, Word


class GroebnerBasis:
    """Interreduced, monic, homogeneous basis with a completion record."""

    __slots__ = ("elements", "ord", "ngens", "degree_bound", "complete",
                 "field", "lead_words", "_by_first_letter")

    def __init__(self, elements, ord: GenOrder, ngens: int, degree_bound: int,
                 complete: bool, field: FieldSpec):
        self.elements = list(elements)
        self.ord = ord
        self.ngens = ngens
        self.degree_bound = degree_bound
        self.complete = complete
        self.field = field
        self.lead_words = [e.leading(ord)[0] for e in self.elements]
        index: dict[int, list] = {}
        for gi, lm in enumerate(self.lead_words):
            index.setdefault(lm[0], []).append((gi, lm))
        self._by_first_letter = index

    def __repr__(self):
        return (f"GroebnerBasis({len(self.elements)} elements, "
                f"bound={self.degree_bound}, complete={self.complete})")


def _find_leftmost_reduction(word: Word, by_first_letter) -> tuple | None:
    """Leftmost (position, basis index) where a leading word divides `word`."""
    n = len(word)
    for pos in range(n):
        candidates = by_first_letter.get(word[pos])
        if not candidates:
            continue
        best = None
        for gi, lm in candidates:
            if word[pos:pos + len(lm)] == lm and (best is None or gi < best[1]):
                best = (pos, gi)
        if best:
            return best
    return None


def _first_letter_index(lead_words):
    index: dict[int, list] = {}
    for gi, lm in enumerate(lead_words):
        index.setdefault(lm[0], []).append((gi, lm))
    return index


_NEG_KEYS: dict = {}


def _neg_key(key):
    out = _NEG_KEYS.get(key)
    if out is None:
        out = (-key[0], tuple(-r for r in key[1]))
        _NEG_KEYS[key] = out
    return out


def _reduce(f: NcPoly, elements, ord: GenOrder, by_first_letter=None) -> NcPoly:
    if by_first_letter is None:
        by_first_letter = _first_letter_index([e.leading(ord)[0] for e in elements])
    field = f.field
    rational = field.is_rational
    p = field.p
    irreducible: set = set()
    key = ord.word_key
    terms = dict(f.terms)
    # greatest-word-first agenda; rewriting only introduces smaller words
    agenda = [(_neg_key(key(w)), w) for w in terms]
    heapq.heapify(agenda)
    while agenda:
        _, target = heapq.heappop(agenda)
        if target not in terms or target in irreducible:
            continue
        hit = _find_leftmost_reduction(target, by_first_letter)
        if hit is None:
            irreducible.add(target)
            continue
        pos, gi = hit
        g = elements[gi]
        lm = g.leading(ord)[0]
        left, right = target[:pos], target[pos + len(lm):]
        coeff = terms[target]
        for u, gc in g.terms.items():
            word = left + u + right
            if rational:
                value = terms.get(word, 0) - coeff * gc
            else:
                value = (terms.get(word, 0) - coeff * gc) % p
            if value:
                terms[word] = value
                if word != target and word not in irreducible:
                    heapq.heappush(agenda, (_neg_key(key(word)), word))
            else:
                terms.pop(word, None)
    return NcPoly(field, terms)


def reduce(f: NcPoly, G: GroebnerBasis) -> NcPoly:
    """Normal form of f: rewrite the deglex-greatest reducible word at its
    leftmost reducible position until no stored word contains a leading
    word of the basis."""
    return _reduce(f, G.elements, G.ord, G._by_first_letter)


def interreduce(elements, ord: GenOrder):
    """Monic basis where no leading word divides another element's words."""
    elems = [e.monic(ord) for e in elements if not e.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(elems)):
            others = elems[:i] + elems[i + 1:]
            r = _reduce(elems[i], others, ord) if others else elems[i]
            if r != elems[i]:
                changed = True
                if r.is_zero():
                    elems.pop(i)
                else:
                    elems[i] = r.monic(ord)
                break
    elems.sort(key=lambda e: ord.word_key(e.leading(ord)[0]))
    return elems


def _obstructions(lead_words):
    """All overlap and inclusion ambiguities among the leading words.

    Yields (kind, i, j, word, offset): for overlaps, `offset` is the shared
    length s with lm_i = a·s, lm_j = s·b and word = a·s·b; for inclusions,
    `offset` is the position of lm_i inside lm_j = word.
    """
    out = []
    for i, u in enumerate(lead_words):
        for j, v in enumerate(lead_words):
            for s in range(1, min(len(u), len(v))):
                if u[len(u) - s:] == v[:s]:
                    out.append(("overlap", i, j, u + v[s:], s))
            if i != j and len(u) <= len(v):
                for k in range(len(v) - len(u) + 1):
                    if v[k:k + len(u)] == u:
                        out.append(("inclusion", i, j, v, k))
    return out


def _spoly(elements, lead_words, kind, i, j, word, offset) -> NcPoly:
    if kind == "overlap":
        u = lead_words[i]
        left = u[:len(u) - offset]
        right = word[len(u):]
        return elements[i].mul_word((), right) - elements[j].mul_word(left, ())
    u = lead_words[i]
    return elements[j] - elements[i].mul_word(word[:offset],
                                              word[offset + len(u):])


def overlaps(G: GroebnerBasis):
    """Minimal superposition words among the leading monomials: returns a
    duplicate-free sorted list of (i, j, word)."""
    seen = set()
    out = []
    for kind, i, j, word, _ in _obstructions(G.lead_words):
        if (i, j, word) not in seen:
            seen.add((i, j, word))
            out.append((i, j, word))
    out.sort(key=lambda t: (len(t[2]), t[0], t[1], G.ord.word_key(t[2])))
    return out


def complete(rels, ord: GenOrder, ngens: int, dmax: int,
             field: FieldSpec | None = None) -> GroebnerBasis:
    """Truncated completion: resolve all ambiguities of overlap degree <= dmax.

    `complete=True` on the result certifies that no ambiguity at any degree
    is left unresolved, i.e. the basis is a full Groebner basis.  Ambiguities
    beyond the bound are not an error; they just leave the flag False.
    """
    rels = [r for r in rels if not r.is_zero()]
    if field is None:
        if not rels:
            raise ValueError("field required for an empty relation list")
        field = rels[0].field
    for r in rels:
        if not r.is_homogeneous():
            raise ValueError("relations must be homogeneous")
    elems = interreduce(rels, ord)
    processed: set = set()
    while True:
        lead = [e.leading(ord)[0] for e in elems]
        pending = []
        for kind, i, j, word, offset in _obstructions(lead):
            if len(word) > dmax:
                continue
            sig = (lead[i], lead[j], word)
            if sig in processed:
                continue
            pending.append((len(word), i, j, ord.word_key(word), kind, word,
                            offset, sig))
        if not pending:
            break
        pending.sort(key=lambda t: t[:4])
        _, i, j, _, kind, word, offset, sig = pending[0]
        processed.add(sig)
        h = _reduce(_spoly(elems, lead, kind, i, j, word, offset), elems, ord)
        if not h.is_zero():
            elems = interreduce(elems + [h.monic(ord)], ord)
            processed = set()
    lead = [e.leading(ord)[0] for e in elems]
    truncated = any(len(word) > dmax
                    for _, _, _, word, _ in _obstructions(lead))
    return GroebnerBasis(elems, ord, ngens, dmax, not truncated, field)


@dataclass
class PbwResult:
    is_pbw: bool
    witness: Word | None
    basis: list  # the interreduced quadratic relations


def quadratic_basis(relations, ord: GenOrder):
    """Interreduce and insist every element is quadratic."""
    elems = interreduce(relations, ord)
    for e in elems:
        if e.degree != 2:
            raise NonQuadraticInput(
                f"interreduced relation of degree {e.degree}, expected 2")
    return elems


def pbw_certificate(pres) -> PbwResult:
    """Decide the PBW property: a quadratic interreduced set is a Groebner
    basis iff every degree-3 ambiguity S-polynomial reduces to zero."""
    elems = quadratic_basis(pres.relations, pres.ord)
    ord = pres.ord
    lead = [e.leading(ord)[0] for e in elems]
    obs = [(len(w), i, j, ord.word_key(w), kind, w, off)
           for kind, i, j, w, off in _obstructions(lead)]
    obs.sort(key=lambda t: t[:4])
    for _, i, j, _, kind, word, offset in obs:
        h = _reduce(_spoly(elems, lead, kind, i, j, word, offset), elems, ord)
        if not h.is_zero():
            return PbwResult(False, word, elems)
    return PbwResult(True, None, elems)


def normal_words_up_to(lead_words, ngens: int, dmax: int):
    """Words of each degree <= dmax avoiding the leading words as factors."""
    by_degree = [[()]]
    for _ in range(dmax):
        nxt = []
        for w in by_degree[-1]:
            for a in range(ngens):
                cand = w + (a,)
                if not any(cand[len(cand) - len(lm):] == lm
                           for lm in lead_words if len(lm) <= len(cand)):
                    nxt.append(cand)
        by_degree.append(nxt)
    return by_degree


@dataclass
class ProcessingResult:
    holds: bool
    p: Word | None = None
    q: Word | None = None
    split: tuple | None = None


def restricted_processing_check(G: GroebnerBasis, r: int,
                                dmax: int) -> ProcessingResult:
    """Check N(p q) = N(p q1) q2 for all normal monomials with
    deg p + deg q <= dmax, where q1 is the prefix of q of length min(r, |q|).
    """
    words = normal_words_up_to(G.lead_words, G.ngens, dmax)
    nf_cache: dict[Word, NcPoly] = {}

    def normal_form(w: Word) -> NcPoly:
        if w not in nf_cache:
            nf_cache[w] = _reduce(NcPoly.monomial(G.field, w), G.elements,
                                  G.ord, G._by_first_letter)
        return nf_cache[w]

    for dp in range(1, dmax):
        for p in words[dp]:
            for dq in range(1, dmax - dp + 1):
                for q in words[dq]:
                    q1, q2 = q[:min(r, len(q))], q[min(r, len(q)):]
                    lhs = normal_form(p + q)
                    rhs = normal_form(p + q1).mul_word((), q2)
                    if lhs != rhs:
                        return ProcessingResult(False, p, q, (q1, q2))
    return ProcessingResult(True)


@dataclass
class OverlapGraph:
    """Arrow i -> j iff some nonempty word is both a suffix of a non-leading
    monomial of g_i and a prefix of the leading monomial of g_j."""

    edges: dict

    def __iter__(self):
        return iter(sorted((i, j) for i, js in self.edges.items() for j in js))


def overlap_graph(G: GroebnerBasis):
    edges: dict[int, set] = {i: set() for i in range(len(G.elements))}
    for i, g in enumerate(G.elements):
        lm_i = G.lead_words[i]
        tails = [w for w in g.terms if w != lm_i and w]
        for j, lm_j in enumerate(G.lead_words):
            if any(m[len(m) - s:] == lm_j[:s]
                   for m in tails
                   for s in range(1, min(len(m), len(lm_j)) + 1)):
                edges[i].add(j)
    graph = OverlapGraph(edges)

    color: dict[int, int] = {}

    def has_cycle(v) -> bool:
        color[v] = 1
        for w in edges[v]:
            c = color.get(w, 0)
            if c == 1 or (c == 0 and has_cycle(w)):
                return True
        color[v] = 2
        return False

    acyclic = not any(color.get(v, 0) == 0 and has_cycle(v) for v in edges)
    return graph, acyclic
