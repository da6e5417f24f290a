import random

import pytest

from cpgraphs.matrices import DimensionMismatch, IntMatrix


def brute_matmul(a, b):
    # reference product, written independently of IntMatrix.__matmul__
    n = a.n
    return [[sum(a.rows[i][k] * b.rows[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_identity_and_zeros():
    i3 = IntMatrix.identity(3)
    z3 = IntMatrix.zeros(3)
    assert i3.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert z3.rows == ((0, 0, 0), (0, 0, 0), (0, 0, 0))
    assert IntMatrix.ones(2).rows == ((1, 1), (1, 1))


def test_rejects_ragged_and_nonsquare():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(TypeError):
        IntMatrix.from_rows([[1.5]])


def test_matmul_against_reference():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 5)
        a = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        b = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        assert (a @ b).rows == tuple(tuple(r) for r in brute_matmul(a, b))


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        IntMatrix.identity(2) @ IntMatrix.identity(3)


def test_transpose_involution():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 5)
        a = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        assert a.t.t == a
        assert a.t.rows == tuple(tuple(a.rows[j][i] for j in range(n)) for i in range(n))


def test_add():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[10, 0], [0, 10]])
    assert (a + b).rows == ((11, 2), (3, 14))


def test_is_symmetric():
    assert IntMatrix.from_rows([[0, 5], [5, 0]]).is_symmetric()
    assert not IntMatrix.from_rows([[0, 5], [4, 0]]).is_symmetric()


def test_leading_submatrix():
    a = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert a.leading(2).rows == ((1, 2), (4, 5))
    assert a.leading(0).rows == ()


def test_symmetric_permute_is_relabeling():
    a = IntMatrix.from_rows([[0, 1, 2], [1, 0, 3], [2, 3, 0]])
    p = a.symmetric_permute((3, 1, 2))
    # entry (i, j) of the result reads the old matrix at (order[i], order[j])
    assert p.rows == ((0, 2, 3), (2, 0, 1), (3, 1, 0))


def test_json_round_trip():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(1, 4)
        a = IntMatrix.from_rows([[rng.randint(-10**12, 10**12) for _ in range(n)] for _ in range(n)])
        assert IntMatrix.from_json_rows(a.to_json_rows()) == a
    # big entries survive as decimal strings
    big = IntMatrix.from_rows([[10**40]])
    assert big.to_json_rows() == [["1" + "0" * 40]]
    assert IntMatrix.from_json_rows(big.to_json_rows()) == big
