import random

import pytest

from sphereprod.errors import SingularInput
from sphereprod.matrices import IntMatrix
from sphereprod.normal_forms import (
    hnf,
    snf,
    snf_constrained_sl,
    integer_kernel_basis,
    elementary_divisors_via_minors,
    xgcd,
)


def random_matrix(rng, rows, cols, bound=9):
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)]
                      for _ in range(rows)])


def is_hnf(h):
    prev_pivot_col = -1
    seen_zero_row = False
    for i in range(h.rows):
        row = h.row(i)
        pivots = [j for j, x in enumerate(row) if x != 0]
        if not pivots:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        j = pivots[0]
        if j <= prev_pivot_col or row[j] <= 0:
            return False
        for k in range(i):
            if not 0 <= h.entry(k, j) < row[j]:
                return False
        prev_pivot_col = j
    return True


def test_xgcd_basic():
    for a, b in [(0, 0), (4, 6), (-4, 6), (7, 0), (0, -3), (12, 18)]:
        g, s, t = xgcd(a, b)
        assert g == s * a + t * b
        assert g >= 0


def test_hnf_identity():
    h, u = hnf(IntMatrix.identity(3))
    assert h.is_identity() and u.is_identity()


def test_hnf_already_diagonal():
    a = IntMatrix([[2, 0], [0, 3]])
    h, u = hnf(a)
    assert h == a
    assert u.is_identity()


def test_hnf_gcd_pivot():
    a = IntMatrix([[4, 6], [2, 4]])
    h, u = hnf(a)
    assert u @ a == h
    assert abs(u.det()) == 1
    assert h.entry(0, 0) == 2
    assert is_hnf(h)


def test_hnf_idempotent_random():
    rng = random.Random(1001)
    for _ in range(60):
        a = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        h, u = hnf(a)
        assert u @ a == h
        assert abs(u.det()) == 1
        assert is_hnf(h)
        h2, u2 = hnf(h)
        assert h2 == h
        assert u2.is_identity()


def test_snf_examples():
    res = snf(IntMatrix([[6, 0], [0, 4]]))
    assert res.diagonal == [2, 12]
    assert res.verify(IntMatrix([[6, 0], [0, 4]]))

    res = snf(IntMatrix.identity(3))
    assert res.D.is_identity() and res.U.is_identity() and res.V.is_identity()

    z = IntMatrix.zeros(2, 3)
    res = snf(z)
    assert res.D == z
    assert res.U.is_identity() and res.V.is_identity()


def test_snf_random_matches_minor_oracle():
    rng = random.Random(1002)
    for _ in range(80):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        a = random_matrix(rng, rows, cols)
        res = snf(a)
        assert res.verify(a)
        assert res.diagonal == elementary_divisors_via_minors(a)


def test_snf_constrained_sign_absorbed():
    a = IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    res = snf_constrained_sl(a, side="right")
    assert res.diagonal == [1, 1, 1]
    assert res.V.det() == 1
    assert res.U @ a @ res.V == res.D

    res = snf_constrained_sl(IntMatrix.identity(3), side="right")
    assert res.D.is_identity()
    assert res.V.det() == 1

    a = IntMatrix([[2, 0, 0], [0, 6, 0], [0, 0, 6]])
    res = snf_constrained_sl(a, side="right")
    assert res.diagonal == [2, 6, 6]
    assert res.V.det() == 1


def test_snf_constrained_left_and_random():
    rng = random.Random(1003)
    for side in ("left", "right"):
        for _ in range(40):
            while True:
                a = random_matrix(rng, 3, 3, bound=6)
                if a.det() != 0:
                    break
            res = snf_constrained_sl(a, side=side)
            assert res.U @ a @ res.V == res.D
            assert res.verify(a)
            constrained = res.V if side == "right" else res.U
            assert constrained.det() == 1


def test_snf_constrained_singular_rejected():
    with pytest.raises(SingularInput):
        snf_constrained_sl(IntMatrix.zeros(3, 3))


def test_integer_kernel():
    a = IntMatrix([[2, 2, 2], [3, 3, 3]])
    kernel = integer_kernel_basis(a)
    assert len(kernel) == 2
    for k in kernel:
        assert a.mul_vector(k) == (0, 0)
    # saturation: (1, -1, 0) must be an integer combination of the basis
    from sphereprod.lattices import Lattice
    lat = Lattice.from_columns(kernel, ambient_dim=3)
    assert (1, -1, 0) in lat
    assert (-1, 0, 1) in lat
