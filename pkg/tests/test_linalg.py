import random
from fractions import Fraction

import numpy as np
import pytest

from ncfilt import linalg
from ncfilt._kernels import modp_matmul, rref_modp_numpy, _build_numba_kernel
from ncfilt.fields import QQ, prime_field


def reference_rref_modp(rows, p):
    """Independent schoolbook elimination for the lane-comparison tests."""
    a = [list(r) for r in rows]
    if not a:
        return []
    n = len(a[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(a)) if a[i][col] % p), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col] % p:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return a[:rank]


def test_kernel_lanes_agree():
    rng = random.Random(3)
    p = 32003
    numba_impl = _build_numba_kernel()
    for _ in range(10):
        m, n = rng.randint(1, 12), rng.randint(1, 12)
        mat = np.array([[rng.randrange(p) for _ in range(n)]
                        for _ in range(m)], dtype=np.int64)
        ref = reference_rref_modp(mat.tolist(), p)
        got_np, piv_np = rref_modp_numpy(mat, p)
        got_nb, piv_nb = numba_impl(mat, p)
        assert got_np.tolist() == ref
        assert got_nb.tolist() == ref
        assert piv_np == piv_nb


def test_modp_matmul_chunked_matches_direct():
    rng = random.Random(11)
    p = (1 << 31) - 1  # Mersenne prime: forces the chunked path
    a = np.array([[rng.randrange(p) for _ in range(7)] for _ in range(4)],
                 dtype=np.int64)
    b = np.array([[rng.randrange(p) for _ in range(3)] for _ in range(7)],
                 dtype=np.int64)
    want = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(7)) % p
             for j in range(3)] for i in range(4)]
    assert modp_matmul(a, b, p).tolist() == want


def test_rref_rational_canonical():
    rows = [{0: Fraction(2), 1: Fraction(4)}, {0: Fraction(1), 2: Fraction(1)}]
    reduced = linalg.rref(QQ, rows, 3)
    assert reduced == [{0: 1, 2: 1}, {1: 1, 2: Fraction(-1, 2)}]
    # canonical: same space, different spanning set, same rows
    other = linalg.rref(QQ, [
        {0: Fraction(1), 1: Fraction(2)},
        {0: Fraction(3), 1: Fraction(6), 2: Fraction(0)},
        {0: Fraction(1), 1: Fraction(4), 2: Fraction(-1)},
    ], 3)
    assert other == reduced or linalg.rank(QQ, rows + other, 3) == 2


def test_left_kernel_rational():
    rows = [{0: Fraction(1)}, {0: Fraction(2)}, {1: Fraction(1)}]
    kernel = linalg.left_kernel(QQ, rows, 2)
    assert kernel == [{0: 2, 1: -1}]
    for vec in kernel:
        combo = {}
        for i, c in vec.items():
            for col, x in rows[i].items():
                combo[col] = combo.get(col, 0) + c * x
        assert all(v == 0 for v in combo.values())


def test_left_kernel_modp_matches_rational_on_integer_matrix():
    rng = random.Random(23)
    field = prime_field(10007)
    for _ in range(8):
        m, n = rng.randint(1, 6), rng.randint(1, 5)
        rows_int = [{j: rng.randint(0, 3) for j in range(n)} for _ in range(m)]
        rows_int = [{j: v for j, v in r.items() if v} for r in rows_int]
        kq = linalg.left_kernel(
            QQ, [{j: Fraction(v) for j, v in r.items()} for r in rows_int], n)
        kp = linalg.left_kernel(field, rows_int, n)
        assert len(kq) == len(kp)  # small entries: no accidental rank drop


def test_null_space():
    rows = [{0: Fraction(1), 1: Fraction(1)}]
    basis = linalg.null_space(QQ, rows, 3)
    assert basis == [{1: 1, 0: -1}, {2: 1}]
    for v in basis:
        assert sum(rows[0].get(c, 0) * x for c, x in v.items()) == 0


def test_row_basis_incremental():
    basis = linalg.RowBasis(QQ, 3)
    assert basis.add({0: Fraction(1), 1: Fraction(1)})
    assert not basis.add({0: Fraction(2), 1: Fraction(2)})
    assert basis.add({1: Fraction(1)})
    assert basis.dim == 2
    assert basis.contains({0: Fraction(5)})
    assert not basis.contains({2: Fraction(1)})


def test_residual_and_stack():
    field = prime_field(7)
    reduced = linalg.rref(field, [{0: 1, 1: 3}], 2)
    assert linalg.residual(field, reduced, {0: 2, 1: 6}) == {}
    assert linalg.residual(field, reduced, {1: 1}) == {1: 1}
    stacked = linalg.stack_rows(field, 2, [{0: 1}], [{1: 1}])
    assert linalg.row_count(stacked) == 2
