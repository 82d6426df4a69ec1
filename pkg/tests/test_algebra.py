"""
测试整数矩阵、Smith 标准形、同调与多项式拟合
"""

import pytest
from fractions import Fraction
from sympy import Matrix

from algebra.fitting import fit_polynomial, residuals, sample_window
from algebra.homology import (
    HomologyGroup, betti_from_boundaries, homology_from_boundaries, rational_homology_basis,
)
from algebra.matrices import IntMatrix, rank_over_rationals, rational_nullspace, smith_normal_form
from algebra.polynomials import IntPolynomial, series_coefficient, series_coefficients
from utils.exceptions import NonUnitConstantTerm, NotAComplex, WindowTooSmall


# ----------------------------------------------------------------------
# 矩阵
# ----------------------------------------------------------------------
def test_sparse_matrix_arithmetic():
    a = IntMatrix.from_dense([[1, 2], [0, -1]])
    b = IntMatrix.from_dense([[1, 0], [3, 1]])
    assert (a @ b).to_dense() == [[7, 2], [-3, -1]]
    assert a.transpose().to_dense() == [[1, 0], [2, -1]]
    assert IntMatrix.identity(2) @ a == a
    a.add(0, 0, -1)
    assert a[0, 0] == 0
    assert a.nnz == 2


def test_smith_normal_form_known_example():
    matrix = IntMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(matrix).invariants == (2, 6, 12)


def test_smith_normal_form_rank_deficient():
    matrix = IntMatrix.from_dense([[2, 4], [1, 2], [3, 6]])
    result = smith_normal_form(matrix)
    assert result.rank == 1
    assert result.invariants == (1,)


def _check_unimodular(matrix):
    result = smith_normal_form(matrix, transforms=True)
    diagonal = IntMatrix(matrix.nrows, matrix.ncols,
                         {(k, k): d for k, d in enumerate(result.invariants)})
    assert result.U @ matrix @ result.V == diagonal
    assert abs(Matrix(result.U.to_dense()).det()) == 1
    assert abs(Matrix(result.V.to_dense()).det()) == 1
    assert all(b % a == 0 for a, b in zip(result.invariants, result.invariants[1:]))
    assert result.rank == Matrix(matrix.to_dense()).rank()


def test_smith_transforms_on_random_matrices(rng):
    for _ in range(25):
        rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
        dense = rng.integers(-6, 7, size=(rows, cols)).tolist()
        _check_unimodular(IntMatrix.from_dense(dense, cols))


def test_smith_transforms_need_gcd_fix():
    _check_unimodular(IntMatrix.from_dense([[2, 0], [0, 3]]))


def test_rank_and_nullspace():
    matrix = IntMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    assert rank_over_rationals(matrix) == 2
    basis = rational_nullspace(matrix)
    assert len(basis) == 1
    assert (Matrix(matrix.to_dense()) * Matrix(basis[0])).is_zero_matrix


# ----------------------------------------------------------------------
# 同调
# ----------------------------------------------------------------------
def _triangle_boundary():
    # 三个顶点、三条边的圆周
    return IntMatrix.from_dense([[-1, 0, 1], [1, -1, 0], [0, 1, -1]])


def test_circle_homology():
    d1 = _triangle_boundary()
    assert homology_from_boundaries(IntMatrix(0, 3), d1) == HomologyGroup(1, ())
    assert homology_from_boundaries(d1, IntMatrix(3, 0)) == HomologyGroup(1, ())
    assert betti_from_boundaries(d1, IntMatrix(3, 0)) == 1
    assert rational_homology_basis(d1, IntMatrix(3, 0)).dimension == 1


def test_torsion():
    group = homology_from_boundaries(IntMatrix(0, 1), IntMatrix.from_dense([[2]]))
    assert group == HomologyGroup(0, (2,))
    assert group.describe() == "Z/2"
    assert group.to_dict() == {'free_rank': 0, 'torsion': [2]}


def test_not_a_complex():
    one = IntMatrix.from_dense([[1]])
    with pytest.raises(NotAComplex):
        homology_from_boundaries(one, one)


# ----------------------------------------------------------------------
# 多项式
# ----------------------------------------------------------------------
def test_int_polynomial_arithmetic():
    p = IntPolynomial([-1, 1])
    assert (p ** 3).to_list() == [-1, 3, -3, 1]
    assert (p * p - p).to_list() == [2, -3, 1]
    assert p(5) == 4
    assert IntPolynomial([1, 2, 0, 0]).degree == 1
    assert IntPolynomial().degree == -1
    assert IntPolynomial([1, 3]).reverse(2).to_list() == [0, 3, 1]
    assert str(IntPolynomial([1, -2, 0, 1])) == "1 - 2t + t^3"


def test_series_coefficients():
    # 1 / (1-t)^2 = Σ (k+1) t^k
    denominator = IntPolynomial([1, -1]) ** 2
    assert series_coefficients(IntPolynomial([1]), denominator, 4) == [1, 2, 3, 4, 5]
    assert series_coefficient(IntPolynomial([1, -1]), denominator, 10) == 1
    with pytest.raises(NonUnitConstantTerm):
        series_coefficient(1, IntPolynomial([2, 1]), 3)


# ----------------------------------------------------------------------
# 拟合
# ----------------------------------------------------------------------
def test_fit_recovers_quadratic():
    samples = {(m,): m * m + 3 * m + 1 for m in range(8)}
    result = fit_polynomial(samples, degree=2)
    assert result.stable
    assert result.total_degree == 2
    assert result.polynomial(10) == 131
    assert all(row[3] == 0 for row in residuals(result, samples))


def test_fit_two_variables():
    samples = {(a, b): (a + 1) * (b + 2) for a in range(5) for b in range(5)}
    result = fit_polynomial(samples, degree=2)
    assert result.stable
    assert result.degrees == (1, 1)
    assert result.total_degree == 2


def test_fit_rejects_exponential():
    samples = {(m,): 2 ** m for m in range(8)}
    result = fit_polynomial(samples, degree=2)
    assert not result.stable
    assert result.mismatches


def test_fit_rational_coefficients():
    samples = {(m,): m * (m - 1) // 2 for m in range(7)}
    result = fit_polynomial(samples)
    assert result.stable
    assert result.polynomial.coefficients()[(2,)] == Fraction(1, 2)


def test_window_checks():
    with pytest.raises(WindowTooSmall):
        fit_polynomial({(m,): m for m in range(3)}, degree=2)
    with pytest.raises(WindowTooSmall):
        sample_window({(0,): 1, (2,): 1})
    assert sample_window({(a, b): 0 for a in range(2) for b in range(1, 3)}) == ((0, 1), (1, 2))
