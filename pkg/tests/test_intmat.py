import random

import pytest

from ckbundle import (
    IntMatrix,
    IntPolynomial,
    NotUnimodular,
    charpoly,
    det,
    kernel_basis,
    matmul,
    matpow,
    smith_normal_form,
    trace,
    unimodular_inverse,
)
from ckbundle.bundle import random_unimodular

from conftest import A2, A3, FIB, random_matrix
from oracles import (
    brute_kernel_vectors,
    det_cofactor,
    matpow_naive,
    rank_by_minors,
    snf_2x2_oracle,
)


def test_constructor_rejects_bad_shapes():
    with pytest.raises(ValueError):
        IntMatrix([])
    with pytest.raises(ValueError):
        IntMatrix([[]])
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])


def test_value_semantics():
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix([[1, 2], [3, 4]])
    assert a == b and hash(a) == hash(b)
    assert a != IntMatrix([[1, 2], [3, 5]])
    assert a[0, 1] == 2 and a[1] == (3, 4)
    assert a.transpose() == IntMatrix([[1, 3], [2, 4]])


def test_matmul_identity():
    assert matmul(IntMatrix.identity(2), A2) == A2


def test_matmul_hand_expansion():
    assert matmul(FIB, FIB) == IntMatrix([[2, 1], [1, 1]])


def test_matmul_rectangular():
    a = IntMatrix([[1, 2, 3], [4, 5, 6]])
    b = IntMatrix([[7], [8], [9]])
    # dot products by hand: 7+16+27 and 28+40+54
    assert matmul(a, b) == IntMatrix([[50], [122]])


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError):
        matmul(IntMatrix([[1, 2]]), IntMatrix([[1, 2]]))


def test_matpow_base_cases():
    assert matpow(A2, 0) == IntMatrix.identity(2)
    assert matpow(A2, 1) == A2


def test_matpow_fibonacci():
    expected = IntMatrix(matpow_naive(FIB.to_lists(), 5))
    assert expected == IntMatrix([[8, 5], [5, 3]])
    assert matpow(FIB, 5) == expected


def test_matpow_rejects():
    with pytest.raises(ValueError):
        matpow(IntMatrix([[1, 2, 3]]), 2)
    with pytest.raises(ValueError):
        matpow(A2, -1)


def test_matpow_additivity():
    rng = random.Random(11)
    for _ in range(25):
        a = random_matrix(rng, 3, 3, -4, 4)
        j, k = rng.randint(0, 4), rng.randint(0, 4)
        assert matpow(a, j + k) == matmul(matpow(a, j), matpow(a, k))


def test_det_examples():
    assert det(IntMatrix.identity(4)) == 1
    assert det(A2) == 5 * 1 - 2 * 2 == 1
    assert det(A3) == 5 * 1 - 1 * 4 == 1


def test_det_matches_cofactor_oracle():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n, -9, 9)
        assert det(a) == det_cofactor(a.to_lists())


def test_det_multiplicative():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n, -6, 6)
        b = random_matrix(rng, n, n, -6, 6)
        assert det(matmul(a, b)) == det(a) * det(b)


def test_det_nonsquare():
    with pytest.raises(ValueError):
        det(IntMatrix([[1, 2, 3], [4, 5, 6]]))


def test_trace_examples():
    assert trace(IntMatrix.identity(3)) == 3
    assert trace(A2) == 6
    assert trace(IntMatrix([[1, 7], [0, 1]])) == 2
    with pytest.raises(ValueError):
        trace(IntMatrix([[1, 2]]))


def test_charpoly_examples():
    assert charpoly(A2) == IntPolynomial((1, -6, 1))
    assert charpoly(IntMatrix.identity(2)) == IntPolynomial((1, -2, 1))
    assert charpoly(IntMatrix([[0, 1], [1, 0]])) == IntPolynomial((-1, 0, 1))


def test_charpoly_agrees_with_cofactor_evaluation():
    # p(x) must equal det(xI - A) at sample points, computed independently
    rng = random.Random(14)
    for _ in range(25):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n, -5, 5)
        p = charpoly(a)
        assert p.degree == n and p.coefficients[-1] == 1
        for x in range(-3, 4):
            shifted = [
                [x * int(i == j) - a[i, j] for j in range(n)] for i in range(n)
            ]
            assert p(x) == det_cofactor(shifted)


def test_charpoly_constant_term_is_signed_det():
    rng = random.Random(15)
    for _ in range(25):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n, -6, 6)
        assert charpoly(a)(0) == (-1) ** n * det(a)


def test_polynomial_normalization_and_eval():
    p = IntPolynomial((1, -6, 1, 0, 0))
    assert p.coefficients == (1, -6, 1)
    assert p.degree == 2
    assert p(0) == 1 and p(6) == 1
    assert IntPolynomial((0, 0)).is_zero
    assert IntPolynomial().degree == -1


def test_polynomial_str():
    assert str(IntPolynomial((1, -6, 1))) == "t^2 - 6t + 1"
    assert str(IntPolynomial((-1, 0, 1))) == "t^2 - 1"
    assert str(IntPolynomial((1, -2, 1))) == "t^2 - 2t + 1"
    assert str(IntPolynomial((0, 1))) == "t"
    assert str(IntPolynomial((1, 0, -2))) == "-2t^2 + 1"
    assert str(IntPolynomial()) == "0"


def _check_decomposition(a):
    dec = smith_normal_form(a)
    assert matmul(matmul(dec.u, a), dec.v) == dec.d
    assert det(dec.u) in (1, -1)
    assert det(dec.v) in (1, -1)
    diag = dec.diagonal()
    assert all(x >= 0 for x in diag)
    # off-diagonal zero
    for i in range(dec.d.rows):
        for j in range(dec.d.cols):
            if i != j:
                assert dec.d[i, j] == 0
    # zeros last, divisor chain on the nonzero prefix
    nonzero = [x for x in diag if x != 0]
    assert tuple(nonzero) + (0,) * (len(diag) - len(nonzero)) == diag
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    return dec


def test_snf_paper_style_examples():
    dec = _check_decomposition(IntMatrix([[-4, -2], [-2, 0]]))
    assert dec.diagonal() == snf_2x2_oracle([[-4, -2], [-2, 0]]) == (2, 2)

    dec = _check_decomposition(IntMatrix.diagonal([6, 4]))
    assert dec.diagonal() == snf_2x2_oracle([[6, 0], [0, 4]]) == (2, 12)

    dec = _check_decomposition(IntMatrix.zero(2, 2))
    assert dec.diagonal() == (0, 0)


def test_snf_randomized_invariants():
    rng = random.Random(16)
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = random_matrix(rng, rows, cols, -20, 20)
        dec = _check_decomposition(a)
        # transpose invariance of the diagonal
        assert dec.diagonal() == smith_normal_form(a.transpose()).diagonal()
        if rows == cols:
            d = det(a)
            if d != 0:
                prod = 1
                for x in dec.diagonal():
                    prod *= x
                assert prod == abs(d)


def test_snf_2x2_gcd_oracle():
    rng = random.Random(17)
    for _ in range(300):
        a = random_matrix(rng, 2, 2, -30, 30)
        assert smith_normal_form(a).diagonal() == snf_2x2_oracle(a.to_lists())


def test_snf_deterministic():
    a = IntMatrix([[6, 4, 2], [2, 8, 4], [0, 10, 2]])
    assert smith_normal_form(a) == smith_normal_form(a)


def test_kernel_examples():
    a = IntMatrix([[0, 0], [-2, 0]])
    # brute force over the box [-1, 1]^2: only vectors with first entry 0
    assert brute_kernel_vectors(a.to_lists(), 1) == [(0, -1), (0, 0), (0, 1)]
    assert kernel_basis(a) == [(0, 1)]
    assert kernel_basis(IntMatrix.identity(2)) == []
    assert len(kernel_basis(IntMatrix.zero(2, 2))) == 2


def test_kernel_randomized():
    rng = random.Random(18)
    for _ in range(40):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = random_matrix(rng, rows, cols, -4, 4)
        basis = kernel_basis(a)
        assert len(basis) == cols - rank_by_minors(a.to_lists())
        for v in basis:
            assert all(sum(a[i, j] * v[j] for j in range(cols)) == 0 for i in range(rows))
        if basis:
            # basis vectors are linearly independent
            assert rank_by_minors([list(v) for v in basis]) == len(basis)


def test_unimodular_inverse():
    rng = random.Random(19)
    for _ in range(20):
        n = rng.randint(1, 4)
        u = random_unimodular(n, rng.randint(0, 6), rng)
        assert matmul(u, unimodular_inverse(u)) == IntMatrix.identity(n)
    with pytest.raises(NotUnimodular):
        unimodular_inverse(IntMatrix([[2, 0], [0, 1]]))
