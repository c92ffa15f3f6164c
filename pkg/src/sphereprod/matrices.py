"""Dense exact matrices over the integers and the rationals.

Entries are Python ints (arbitrary precision) or fractions.Fraction (always
in lowest terms with positive denominator), so no operation ever overflows
or rounds.  Matrices are immutable; algorithms copy the entries into lists,
mutate those, and wrap the result.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, SingularInput


def _check_int(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"integer entry expected, got {type(x).__name__}")
    return x


class IntMatrix:
    """Immutable dense matrix with integer entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(_check_int(x) for x in row) for row in data)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *args):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            rows = 0
        return cls([[col[i] for col in columns] for i in range(rows)],
                   cols=len(columns))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self):
        return [list(row) for row in self.data]

    def transpose(self):
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            return self.to_rational() @ other
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.shape} by {other.shape}")
        ot = other.transpose().data
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot]
             for row in self.data], cols=other.cols)

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match cols")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch in addition")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)],
                         cols=self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntMatrix([[-a for a in row] for row in self.data],
                         cols=self.cols)

    def scale(self, k):
        return IntMatrix([[k * a for a in row] for row in self.data],
                         cols=self.cols)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and self.data == other.data)

    def __hash__(self):
        return hash((self.shape, self.data))

    def is_identity(self):
        return (self.rows == self.cols and
                all(self.data[i][j] == (1 if i == j else 0)
                    for i in range(self.rows) for j in range(self.cols)))

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def is_diagonal(self):
        return all(self.data[i][j] == 0
                   for i in range(self.rows) for j in range(self.cols)
                   if i != j)

    def diagonal(self):
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def submatrix(self, row_indices, col_indices):
        return IntMatrix([[self.data[i][j] for j in col_indices]
                          for i in row_indices], cols=len(col_indices))

    def det(self):
        """Determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_rational(self):
        return RatMatrix([[Fraction(x) for x in row] for row in self.data],
                         cols=self.cols)

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r})"


def _check_frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"rational entry expected, got {type(x).__name__}")


class RatMatrix:
    """Immutable dense matrix with rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(_check_frac(x) for x in row) for row in data)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *args):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(_check_frac(x) for x in c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            rows = 0
        return cls([[col[i] for col in columns] for i in range(rows)],
                   cols=len(columns))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i, j):
        return self.data[i][j]

    def column(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self):
        return [list(row) for row in self.data]

    def transpose(self):
        return RatMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rational()
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.shape} by {other.shape}")
        ot = other.transpose().data
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot]
             for row in self.data], cols=other.cols)

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match cols")
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0))
                     for row in self.data)

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.shape == other.shape
                and self.data == other.data)

    def __hash__(self):
        return hash((self.shape, self.data))

    def is_integral(self):
        return all(x.denominator == 1 for row in self.data for x in row)

    def to_int(self):
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix([[int(x) for x in row] for row in self.data],
                         cols=self.cols)

    def det(self):
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        m = self.to_lists()
        n = self.rows
        det = Fraction(1)
        for k in range(n):
            pivot = None
            for i in range(k, n):
                if m[i][k] != 0:
                    pivot = i
                    break
            if pivot is None:
                return Fraction(0)
            if pivot != k:
                m[k], m[pivot] = m[pivot], m[k]
                det = -det
            det *= m[k][k]
            inv = 1 / m[k][k]
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    f = m[i][k] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return det

    def __repr__(self):
        return f"RatMatrix({self.to_lists()!r})"


def rat_rank(matrix):
    """Rank over the rationals, by Gaussian elimination."""
    m = matrix.to_lists() if isinstance(matrix, RatMatrix) \
        else matrix.to_rational().to_lists()
    rows = len(m)
    cols = len(m[0]) if rows else matrix.cols
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rat_solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly.

    Returns the solution tuple, or None when the system is inconsistent.
    Free variables (columns without a pivot) are set to zero, so for a
    full-column-rank matrix the returned solution is the unique one.
    """
    a = matrix if isinstance(matrix, RatMatrix) else matrix.to_rational()
    if len(rhs) != a.rows:
        raise DimensionMismatch("right-hand side has wrong length")
    m = [list(row) + [_check_frac(b)] for row, b in zip(a.data, rhs)]
    rows, cols = a.rows, a.cols
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    for i in range(rank, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for r, col in enumerate(pivots):
        x[col] = m[r][cols]
    return tuple(x)


def rat_inverse(matrix):
    """Exact inverse of a square rational matrix."""
    a = matrix if isinstance(matrix, RatMatrix) else matrix.to_rational()
    if a.rows != a.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = a.rows
    m = [list(row) + [Fraction(1) if i == j else Fraction(0)
                      for j in range(n)] for i, row in enumerate(a.data)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            raise SingularInput("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return RatMatrix([row[n:] for row in m], cols=n)


def int_inverse_unimodular(matrix):
    """Inverse of a unimodular integer matrix, returned over the integers."""
    inv = rat_inverse(matrix.to_rational())
    if not inv.is_integral():
        raise SingularInput("matrix is not unimodular")
    return inv.to_int()


def rat_kernel_basis(matrix):
    """Basis (list of tuples) of the rational right kernel of matrix."""
    a = matrix if isinstance(matrix, RatMatrix) else matrix.to_rational()
    m = a.to_lists()
    rows, cols = a.rows, a.cols
    pivots = []
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis
