"""Exact linear algebra over the coefficient fields.

Vectors are sparse dicts ``{column: nonzero scalar}``.  Over the rationals
everything runs on these sparse rows (the matrices arising from monomial
algebras are elementary, so sparse elimination is near-linear).  Over prime
fields the batch operations densify and call the modp kernels, which is the
package's hot path.

All row spaces are kept in reduced row echelon form, which is canonical:
component equality of ideals is a syntactic comparison of these rows.
"""

from __future__ import annotations

import numpy as np

from ._kernels import rref_modp
from .fields import FieldSpec

# -- sparse vector helpers ---------------------------------------------------


def vec_from_list(field: FieldSpec, values) -> dict:
    return {i: field.coerce(v) for i, v in enumerate(values) if v != 0}


def vec_to_list(field: FieldSpec, v: dict, ncols: int) -> list:
    out = [field.zero()] * ncols
    for c, x in v.items():
        out[c] = x
    return out


def vec_scale(field: FieldSpec, v: dict, c) -> dict:
    if c == 0:
        return {}
    return {col: field.mul(x, c) for col, x in v.items()}


def vec_sub_scaled(field: FieldSpec, v: dict, w: dict, c) -> dict:
    """v - c*w, dropping zeros."""
    out = dict(v)
    if field.is_rational:
        for col, x in w.items():
            nv = out.get(col, 0) - c * x
            if nv:
                out[col] = nv
            else:
                out.pop(col, None)
    else:
        p = field.p
        for col, x in w.items():
            nv = (out.get(col, 0) - c * x) % p
            if nv:
                out[col] = nv
            else:
                out.pop(col, None)
    return out


# -- dense modp paths ---------------------------------------------------------


def densify(rows, ncols) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        return rows
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, x in row.items():
            a[i, c] = x
    return a


def sparsify(a: np.ndarray) -> list[dict]:
    out = []
    for i in range(a.shape[0]):
        nz = np.nonzero(a[i])[0]
        out.append({int(c): int(a[i, c]) for c in nz})
    return out


# -- batch operations ----------------------------------------------------------


def stack_rows(field: FieldSpec, ncols: int, *groups):
    """Concatenate row groups, keeping the field's preferred representation
    (dense over prime fields, dict lists over the rationals)."""
    if field.is_rational:
        out = []
        for g in groups:
            out.extend(g)
        return out
    mats = [densify(g, ncols) for g in groups]
    return np.vstack(mats) if mats else np.zeros((0, ncols), dtype=np.int64)


def row_count(rows) -> int:
    return rows.shape[0] if isinstance(rows, np.ndarray) else len(rows)


def rref(field: FieldSpec, rows, ncols: int) -> list[dict]:
    """Canonical RREF basis of the row space, sorted by pivot column.

    Over prime fields `rows` may also be a dense int64 matrix."""
    if not field.is_rational:
        dense = densify(rows, ncols)
        if dense.size == 0:
            return []
        reduced, _ = rref_modp(dense, field.p)
        return sparsify(reduced)
    rows = [r for r in rows if r]
    if not rows:
        return []
    basis = RowBasis(field, ncols)
    for r in rows:
        basis.add(r)
    return basis.rows()


def rank(field: FieldSpec, rows, ncols: int) -> int:
    return len(rref(field, rows, ncols))


def left_kernel(field: FieldSpec, rows, ncols: int) -> list[dict]:
    """Basis of {c : sum_i c_i * rows[i] = 0}, in canonical RREF.

    Over prime fields `rows` may also be a dense int64 matrix."""
    m = len(rows)
    if m == 0:
        return []
    if not field.is_rational:
        aug = np.zeros((m, ncols + m), dtype=np.int64)
        aug[:, :ncols] = densify(rows, ncols)
        aug[np.arange(m), ncols + np.arange(m)] = 1
        reduced, pivots = rref_modp(aug, field.p)
        for i, pc in enumerate(pivots):
            if pc >= ncols:
                return sparsify(reduced[i:, ncols:])
        return []
    pivots: dict[int, dict] = {}
    kernel = []
    one = field.one()
    for i, r in enumerate(rows):
        v = dict(r)
        v[ncols + i] = one
        v = _eliminate(field, pivots, v)
        lead = min((c for c in v if c < ncols), default=None)
        if lead is None:
            kernel.append({c - ncols: x for c, x in v.items()})
        else:
            _install_pivot(field, pivots, v, lead)
    return rref(field, kernel, m)


def null_space(field: FieldSpec, rows, ncols: int) -> list[dict]:
    """Basis of {v : sum_c row[c] v[c] = 0 for every row}: one vector per
    free column of the RREF, in canonical form."""
    reduced = rref(field, rows, ncols)
    pivot_set = {min(r) for r in reduced}
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: field.one()}
        for r in reduced:
            coef = r.get(free)
            if coef:
                vec[min(r)] = field.neg(coef)
        out.append(vec)
    return out


def in_row_space(field: FieldSpec, rref_rows, v: dict) -> bool:
    return not residual(field, rref_rows, v)


def residual(field: FieldSpec, rref_rows, v: dict) -> dict:
    """Reduce v against canonical RREF rows (pivot = leftmost column)."""
    v = dict(v)
    for row in rref_rows:
        pc = min(row)
        c = v.get(pc)
        if c:
            v = vec_sub_scaled(field, v, row, c)
    return v


# -- incremental row spaces ----------------------------------------------------


def _eliminate(field, pivots, v):
    cols = [c for c in v if c in pivots]
    for c in cols:
        coef = v.get(c)
        if not coef:
            continue
        v = vec_sub_scaled(field, v, pivots[c], coef)
    return v


def _install_pivot(field, pivots, v, lead):
    inv = field.inv(v[lead])
    v = vec_scale(field, v, inv)
    for other in pivots.values():
        c = other.get(lead)
        if c:
            reduced = vec_sub_scaled(field, other, v, c)
            other.clear()
            other.update(reduced)
    pivots[lead] = v


class RowBasis:
    """Mutable row space in canonical RREF; supports incremental insertion."""

    __slots__ = ("field", "ncols", "_pivots")

    def __init__(self, field: FieldSpec, ncols: int, rows=()):
        self.field = field
        self.ncols = ncols
        self._pivots: dict[int, dict] = {}
        for r in rows:
            self.add(r)

    def add(self, v: dict) -> bool:
        """Insert a vector; True iff it enlarged the space."""
        v = _eliminate(self.field, self._pivots, dict(v))
        if not v:
            return False
        _install_pivot(self.field, self._pivots, v, min(v))
        return True

    def contains(self, v: dict) -> bool:
        return not _eliminate(self.field, self._pivots, dict(v))

    def residual(self, v: dict) -> dict:
        return _eliminate(self.field, self._pivots, dict(v))

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def rows(self) -> list[dict]:
        return [self._pivots[c] for c in sorted(self._pivots)]

    def copy(self) -> "RowBasis":
        dup = RowBasis(self.field, self.ncols)
        dup._pivots = {c: dict(r) for c, r in self._pivots.items()}
        return dup

    def __eq__(self, other):
        return (
            isinstance(other, RowBasis)
            and self.ncols == other.ncols
            and self.rows() == other.rows()
        )

    def __repr__(self):
        return f"RowBasis(dim={self.dim}, ncols={self.ncols})"
