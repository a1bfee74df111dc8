"""Presentation-file grammar: parsing and rendering.

    field rational            (or: field prime 32003)
    generators x y z          (listed order = ascending generator order)
    order y x z               (optional reordering, listed = ascending)
    relations
      x*y - 2/3 y*x
      z*z
    end

One polynomial per relation line; a term is [coeff][*]word with word names
joined by '*' and coeff an integer or a/b (reduced mod p over prime fields).
Blank lines and '#' comments are tolerated.  Parse errors carry line/column.
"""

from __future__ import annotations

import re

from .errors import NonHomogeneousRelation, ParseError, UnknownGenerator
from .fields import FieldSpec, QQ, prime_field
from .freealg import GenOrder, NcPoly, render_poly
from .quotient import Presentation

_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_']*|\d+|[*/+\-]|\S")

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")


def _tokens(line: str, lineno: int):
    out = []
    for match in _TOKEN.finditer(line):
        text = match.group(0)
        if text == "#":
            break
        col = match.start() + 1
        if text.isdigit():
            out.append(("int", text, col))
        elif NAME_RE.match(text):
            out.append(("name", text, col))
        elif text in "*/+-":
            out.append((text, text, col))
        else:
            raise ParseError(lineno, col, f"token, found {text!r}")
    return out


def parse_poly(text: str, pres: Presentation, lineno: int = 1) -> NcPoly:
    """Parse one polynomial in the relation syntax against a presentation's
    generator names and field."""
    toks = _tokens(text, lineno)
    if not toks:
        raise ParseError(lineno, 1, "a polynomial")
    gen_index = {name: i for i, name in enumerate(pres.names)}
    field = pres.field
    result = NcPoly.zero(field)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None,
                                                  len(text.rstrip()) + 1)

    first = True
    while pos < len(toks):
        sign = 1
        kind, _, col = peek()
        if kind in ("+", "-"):
            sign = -1 if kind == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(lineno, col, "'+' or '-' between terms")
        first = False
        kind, value, col = peek()
        coeff = field.one()
        have_coeff = False
        if kind == "int":
            num = int(value)
            pos += 1
            kind, value, _ = peek()
            if kind == "/":
                pos += 1
                kind, value, col = peek()
                if kind != "int":
                    raise ParseError(lineno, col, "denominator integer")
                den = int(value)
                pos += 1
                if field.is_rational:
                    coeff = field.coerce(num) / field.coerce(den)
                else:
                    coeff = field.mul(field.coerce(num),
                                      field.inv(field.coerce(den)))
            else:
                coeff = field.coerce(num)
            have_coeff = True
            kind, value, col = peek()
            if kind == "*":
                nxt = toks[pos + 1] if pos + 1 < len(toks) else (None,) * 3
                if nxt[0] == "name":
                    pos += 1
                    kind, value, col = peek()
        letters = []
        if kind == "name":
            while True:
                kind, value, col = peek()
                if kind != "name":
                    raise ParseError(lineno, col, "generator name")
                if value not in gen_index:
                    raise UnknownGenerator(
                        f"line {lineno}: unknown generator {value!r}")
                letters.append(gen_index[value])
                pos += 1
                kind, value, col = peek()
                if kind == "*":
                    pos += 1
                    continue
                break
        elif not have_coeff:
            raise ParseError(lineno, col, "a coefficient or a word")
        scalar = coeff if sign == 1 else field.neg(coeff)
        result = result + NcPoly.monomial(field, tuple(letters), scalar)
    return result


def render_poly_text(f: NcPoly, names, ord: GenOrder | None = None) -> str:
    return render_poly(f, names, ord)


def parse_presentation(text: str) -> Presentation:
    lines = text.replace("\r\n", "\n").split("\n")
    significant = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            significant.append((lineno, raw, stripped))
    cursor = 0

    def next_line(expected: str):
        nonlocal cursor
        if cursor >= len(significant):
            last = significant[-1][0] if significant else 1
            raise ParseError(last, 1, expected)
        item = significant[cursor]
        cursor += 1
        return item

    lineno, raw, _ = next_line("'field' line")
    toks = _tokens(raw, lineno)
    if not toks or toks[0][1] != "field":
        raise ParseError(lineno, toks[0][2] if toks else 1, "'field'")
    if len(toks) >= 2 and toks[1][1] == "rational":
        field: FieldSpec = QQ
    elif len(toks) >= 3 and toks[1][1] == "prime" and toks[2][0] == "int":
        try:
            field = prime_field(int(toks[2][1]))
        except ValueError as exc:
            raise ParseError(lineno, toks[2][2], f"a prime ({exc})")
    else:
        raise ParseError(lineno, toks[1][2] if len(toks) > 1 else 1,
                         "'rational' or 'prime <p>'")

    lineno, raw, _ = next_line("'generators' line")
    toks = _tokens(raw, lineno)
    if not toks or toks[0][1] != "generators":
        raise ParseError(lineno, toks[0][2] if toks else 1, "'generators'")
    names = []
    for kind, value, col in toks[1:]:
        if kind != "name":
            raise ParseError(lineno, col, "generator name")
        names.append(value)
    if not names:
        raise ParseError(lineno, len(raw) + 1, "at least one generator")
    if len(set(names)) != len(names):
        raise ParseError(lineno, 1, "distinct generator names")

    order = GenOrder.identity(len(names))
    lineno, raw, stripped = next_line("'order' or 'relations'")
    toks = _tokens(raw, lineno)
    if toks and toks[0][1] == "order":
        listed = []
        for kind, value, col in toks[1:]:
            if kind != "name" or value not in names:
                raise ParseError(lineno, col, "a declared generator name")
            listed.append(names.index(value))
        if sorted(listed) != list(range(len(names))):
            raise ParseError(lineno, 1, "a permutation of all generators")
        order = GenOrder(tuple(listed))
        lineno, raw, stripped = next_line("'relations'")
        toks = _tokens(raw, lineno)
    if not toks or toks[0][1] != "relations" or len(toks) > 1:
        raise ParseError(lineno, toks[0][2] if toks else 1, "'relations'")

    shell = Presentation(tuple(names), field, order, ())
    relations = []
    while True:
        lineno, raw, stripped = next_line("a relation or 'end'")
        if stripped == "end":
            break
        rel = parse_poly(raw, shell, lineno)
        if rel.is_zero():
            raise ParseError(lineno, 1, "a nonzero relation")
        if not rel.is_homogeneous():
            raise NonHomogeneousRelation(
                f"line {lineno}: relation is not homogeneous")
        relations.append(rel)
    return Presentation(tuple(names), field, order, tuple(relations))


def render_presentation(pres: Presentation) -> str:
    lines = []
    if pres.field.is_rational:
        lines.append("field rational")
    else:
        lines.append(f"field prime {pres.field.p}")
    lines.append("generators " + " ".join(pres.names))
    if pres.ord.sequence != tuple(range(pres.ngens)):
        lines.append("order " + " ".join(pres.names[i]
                                         for i in pres.ord.sequence))
    lines.append("relations")
    for rel in pres.relations:
        lines.append("  " + render_poly(rel, pres.names, pres.ord))
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_presentation(path: str) -> Presentation:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_presentation(handle.read())


def parse_ideal_file(text: str, pres: Presentation) -> list:
    """One generator polynomial per line; blanks and '#' comments skipped."""
    gens = []
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"),
                                 start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            gens.append(parse_poly(raw, pres, lineno))
    return gens
