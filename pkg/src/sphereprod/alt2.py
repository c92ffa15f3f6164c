"""Alternating square of 3x3 integer matrices and a section of it.

The wedge basis is ordered lexicographically: (e1^e2, e1^e3, e2^e3).  The
entry of alt2(g) at row {i<j}, column {k<l} is the 2x2 minor of g on rows
{i,j} and columns {k,l}; this makes alt2 functorial and multiplicative.
Every determinant-one matrix factors into elementary shears, and each
elementary shear in wedge coordinates has an explicit shear preimage, so
alt2 admits a constructive section on SL(3, Z).
"""

from __future__ import annotations

from .errors import DimensionMismatch, NotSL
from .matrices import IntMatrix

_WEDGE_BASIS = ((0, 1), (0, 2), (1, 2))


def elementary_matrix(i, j, a, size=3):
    """E_ij(a): identity plus a in row i, column j (1-based, i != j)."""
    if i == j or not (1 <= i <= size and 1 <= j <= size):
        raise ValueError("invalid elementary position")
    data = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
    data[i - 1][j - 1] = a
    return IntMatrix(data)


def alt2(matrix):
    """Matrix of 2x2 minors in the lexicographic wedge basis."""
    if matrix.shape != (3, 3):
        raise DimensionMismatch("alt2 is defined for 3x3 matrices")
    m = matrix.data
    data = []
    for (i, j) in _WEDGE_BASIS:
        row = []
        for (k, l) in _WEDGE_BASIS:
            row.append(m[i][k] * m[j][l] - m[i][l] * m[j][k])
        data.append(row)
    return IntMatrix(data)


# Preimage of the wedge-basis shear E_IJ(a) under alt2, one entry per
# off-diagonal position (I, J) in wedge coordinates.  Derived by direct
# minor computation; test_alt2 re-derives every entry from scratch.
_SECTION_TABLE = {
    (1, 2): lambda a: elementary_matrix(2, 3, a),
    (1, 3): lambda a: elementary_matrix(1, 3, -a),
    (2, 1): lambda a: elementary_matrix(3, 2, a),
    (2, 3): lambda a: elementary_matrix(1, 2, a),
    (3, 1): lambda a: elementary_matrix(3, 1, -a),
    (3, 2): lambda a: elementary_matrix(2, 1, a),
}


def _record(ops, m, i, j, a):
    """Apply row_i += a * row_j to m in place and record the operation."""
    if a == 0:
        return
    m[i] = [x + a * y for x, y in zip(m[i], m[j])]
    ops.append((i, j, a))


def _signed_swap(ops, m, i, j):
    """(row_i, row_j) -> (row_j, -row_i) as three elementary operations."""
    _record(ops, m, i, j, 1)
    _record(ops, m, j, i, -1)
    _record(ops, m, i, j, 1)


def _negate_pair(ops, m, i, j):
    """(row_i, row_j) -> (-row_i, -row_j) as six elementary operations."""
    _signed_swap(ops, m, i, j)
    _signed_swap(ops, m, i, j)


def _clear_column(ops, m, col, rows):
    """Euclid on the given rows until the first carries the gcd."""
    pivot = rows[0]
    while True:
        nonzero = [r for r in rows[1:] if m[r][col] != 0]
        if not nonzero:
            break
        for r in nonzero:
            a, b = m[pivot][col], m[r][col]
            if a != 0:
                q = b // a
                _record(ops, m, r, pivot, -q)
            if m[r][col] != 0:
                _signed_swap(ops, m, pivot, r)
    if m[pivot][col] < 0:
        other = rows[1] if len(rows) > 1 else (rows[0] + 1) % 3
        _negate_pair(ops, m, pivot, other)


def elementary_factorization(matrix):
    """Factor a determinant-one 3x3 matrix into elementary shears.

    Returns a list of (i, j, a) triples, 1-based, whose ordered product
    E_i1j1(a1) @ E_i2j2(a2) @ ... equals the input exactly.
    """
    if matrix.shape != (3, 3):
        raise DimensionMismatch("expected a 3x3 matrix")
    if matrix.det() != 1:
        raise NotSL("matrix must have determinant +1")
    m = matrix.to_lists()
    ops = []

    _clear_column(ops, m, 0, [0, 1, 2])
    # pivot is now gcd of the column, which divides det = 1
    assert m[0][0] == 1
    _record(ops, m, 1, 0, -m[1][0])
    _record(ops, m, 2, 0, -m[2][0])
    _clear_column(ops, m, 1, [1, 2])
    assert m[1][1] == 1
    _record(ops, m, 2, 1, -m[2][1])
    assert m[2][2] == 1   # determinant is +1
    _record(ops, m, 0, 2, -m[0][2])
    _record(ops, m, 1, 2, -m[1][2])
    _record(ops, m, 0, 1, -m[0][1])
    assert all(m[r][c] == (1 if r == c else 0)
               for r in range(3) for c in range(3))

    # ops applied left give L_k ... L_1 M = I, so M = inv(L_1) ... inv(L_k)
    return [(i + 1, j + 1, -a) for (i, j, a) in ops]


def product_of_elementaries(factors, size=3):
    out = IntMatrix.identity(size)
    for (i, j, a) in factors:
        out = out @ elementary_matrix(i, j, a, size=size)
    return out


def alt2_section(matrix):
    """Some Y in GL(3, Z) with alt2(Y) equal to the given SL(3, Z) matrix."""
    if matrix.shape != (3, 3):
        raise DimensionMismatch("expected a 3x3 matrix")
    if matrix.det() != 1:
        raise NotSL("alt2 section exists only for determinant +1")
    out = IntMatrix.identity(3)
    for (i, j, a) in elementary_factorization(matrix):
        out = out @ _SECTION_TABLE[(i, j)](a)
    return out
