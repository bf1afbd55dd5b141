import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from lubanski.exact_linalg import (
    I, ONE, ZERO, Matrix, Scalar, ScalarDivisionByZero, ShapeError, as_scalar, mat_arith, rank,
    rank_and_kernel, same_subspace, scalar_arith, span_contains,
)

from conftest import gaussians, matrices, square_matrices
from oracle import naive_rank, to_sympy


def _pairs(M):
    return [[(x.re, x.im) for x in r] for r in M.to_rows()]


# ----------------------------------------------------------------------
# scalars


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@given(gaussians, gaussians)
def test_conjugation_and_modulus(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a * a.conj() == Scalar(a.abs2())
    assert a.abs2() == a.re ** 2 + a.im ** 2


@given(gaussians)
def test_hash_follows_equality(a):
    same = Scalar(Fraction(a.re.numerator * 3, a.re.denominator * 3), a.im)
    assert same == a and hash(same) == hash(a)


@given(gaussians, st.integers(-4, 4))
def test_integer_powers(a, n):
    if a == ZERO and n < 0:
        with pytest.raises(ScalarDivisionByZero):
            a ** n
        return
    expected = ONE
    for _ in range(abs(n)):
        expected = expected * a
    if n < 0:
        expected = expected.inverse()
    assert a ** n == expected


def test_imaginary_unit():
    assert I * I == -ONE
    assert I ** 4 == ONE
    assert I.conj() == -I


@pytest.mark.parametrize("value, text", [
    (Scalar(3), "3"),
    (Scalar(Fraction(-1, 2)), "-1/2"),
    (Scalar(0, 2), "2i"),
    (Scalar(1, -1), "1-1i"),
    (Scalar(Fraction(1, 3), Fraction(2, 5)), "1/3+2/5i"),
    (ZERO, "0"),
])
def test_scalar_str(value, text):
    assert str(value) == text


def test_division_by_zero_raises():
    with pytest.raises(ScalarDivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ScalarDivisionByZero):
        scalar_arith(1, 0, "div")


def test_as_scalar_coercions():
    assert as_scalar(2) == Scalar(2)
    assert as_scalar(Fraction(3, 4)) == Scalar(Fraction(3, 4))
    assert as_scalar("-5/6") == Scalar(Fraction(-5, 6))
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_scalar_arith_dispatch():
    assert scalar_arith(1, 2, "add") == Scalar(3)
    assert scalar_arith(1, 2, "sub") == Scalar(-1)
    assert scalar_arith(I, I, "mul") == Scalar(-1)
    assert scalar_arith(Scalar(1, 1), None, "conj") == Scalar(1, -1)
    with pytest.raises(ValueError):
        scalar_arith(1, 2, "pow")


# ----------------------------------------------------------------------
# matrices


def test_constructors_and_shapes():
    M = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert M.shape == (2, 3)
    assert M[1, 2] == Scalar(6)
    assert M.T.shape == (3, 2)
    assert Matrix.identity(3) @ M.T == M.T
    assert Matrix.zeros(2, 3).is_zero()
    assert Matrix.diag([1, 2]).trace() == Scalar(3)
    assert Matrix.unit(3, 1) == Matrix.column([0, 1, 0])
    assert Matrix.vstack([M, M]).shape == (4, 3)
    assert Matrix.hstack([M, M]).shape == (2, 6)
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix(2, 2, [1, 2, 3])


def test_shape_errors():
    A, B = Matrix.zeros(2, 3), Matrix.zeros(2, 2)
    with pytest.raises(ShapeError):
        A @ A
    with pytest.raises(ShapeError):
        A + B
    with pytest.raises(ShapeError):
        A.det()
    with pytest.raises(ShapeError):
        A.inverse()
    with pytest.raises(ShapeError):
        A.trace()
    with pytest.raises(ShapeError):
        Matrix.vstack([A, B])
    with pytest.raises(ShapeError):
        same_subspace([Matrix.zeros(2, 1)], [Matrix.zeros(3, 1)])


def test_mat_arith_dispatch():
    A = Matrix.from_rows([[1, I], [0, 2]])
    assert mat_arith(A, A, "add") == A.scale(2)
    assert mat_arith(A, A, "sub").is_zero()
    assert mat_arith(A, A, "mul") == A @ A
    assert mat_arith(A, I, "scalar_mul") == A.scale(I)
    assert mat_arith(A, Matrix.identity(2), "kron").shape == (4, 4)
    assert mat_arith(A, None, "conj_transpose") == Matrix.from_rows([[1, 0], [-I, 2]])
    with pytest.raises(ValueError):
        mat_arith(A, A, "div")


@given(matrices(), st.data())
def test_product_matches_sympy(A, data):
    B = data.draw(matrices(rows=st.just(A.cols)))
    assert to_sympy(A @ B) == (to_sympy(A) * to_sympy(B)).expand()
    assert (A @ B).H == B.H @ A.H


@given(square_matrices(2), square_matrices(2), square_matrices(2))
def test_kron_mixed_product(A, B, C):
    D = Matrix.identity(2)
    assert A.kron(B) @ C.kron(D) == (A @ C).kron(B @ D)


@given(square_matrices(3), square_matrices(3))
def test_commutator_identities(A, B):
    assert A.commutator(B) == -(B.commutator(A))
    assert A.commutator(B) + A.anticommutator(B) == (A @ B).scale(2)
    assert A.commutator(B).trace() == ZERO


@given(square_matrices(3))
def test_det_and_inverse_match_sympy(A):
    assert to_sympy(Matrix.from_rows([[A.det()]]))[0, 0] == sp.expand(to_sympy(A).det())
    if A.det():
        assert A @ A.inverse() == Matrix.identity(3)
        assert A.inverse() @ A == Matrix.identity(3)
    else:
        with pytest.raises(ScalarDivisionByZero):
            A.inverse()


@given(square_matrices(3), square_matrices(3))
def test_det_multiplicative(A, B):
    assert (A @ B).det() == A.det() * B.det()


def test_frobenius_and_counts():
    A = Matrix.from_rows([[1, I], [0, Scalar(2, 1)]])
    assert A.frobenius2() == 1 + 1 + 5
    assert A.nonzero_count() == 3


# ----------------------------------------------------------------------
# rank and kernel


@given(matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)))
def test_rank_matches_independent_elimination(A):
    rep = rank_and_kernel(A)
    assert rep.rank == rank(A) == naive_rank(_pairs(A))
    assert rep.rank + rep.kernel_dim == A.cols
    for v in rep.kernel_basis:
        assert (A @ v).is_zero()
    if rep.kernel_dim:
        assert rank(rep.basis_matrix()) == rep.kernel_dim


@given(matrices(rows=st.integers(1, 4), cols=st.integers(2, 5), elements=st.integers(-2, 2).map(Scalar)))
def test_low_rank_integer_matrices(A):
    # small integer entries produce many rank-deficient cases
    rep = rank_and_kernel(A)
    assert rep.rank == to_sympy(A).rank()
    assert rep.kernel_dim == len(to_sympy(A).nullspace())


def test_rank_of_constructed_deficient_matrix():
    rng = random.Random(7)
    for _ in range(20):
        u = Matrix.column([Scalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
        w = Matrix.column([Scalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)])
        v = Matrix.column([Scalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
        x = Matrix.column([Scalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)])
        A = u @ w.T + v @ x.T
        assert rank(A) == naive_rank(_pairs(A)) <= 2


def test_kernel_basis_is_reduced_echelon():
    A = Matrix.from_rows([[1, 2, 0, 3], [0, 0, 1, 4]])
    rep = rank_and_kernel(A)
    assert rep.pivot_columns == (0, 2)
    assert rep.kernel_basis == (Matrix.column([-2, 1, 0, 0]), Matrix.column([-3, 0, -4, 1]))


def test_kernel_of_gaussian_matrix():
    A = Matrix.from_rows([[1, I], [I, -1]])
    rep = rank_and_kernel(A)
    assert rep.rank == 1 and rep.kernel_dim == 1
    assert (A @ rep.kernel_basis[0]).is_zero()


def test_empty_matrix_rejected():
    assert rank(Matrix.zeros(0, 3)) == 0
    with pytest.raises(ValueError):
        rank_and_kernel(Matrix.zeros(0, 3))


@given(matrices(rows=st.integers(1, 3), cols=st.integers(3, 5)), st.data())
def test_same_subspace_under_recombination(A, data):
    basis = rank_and_kernel(A).kernel_basis
    if not basis:
        return
    n = len(basis)
    C = data.draw(square_matrices(n))
    if not C.det():
        return
    mixed = (Matrix.hstack(basis) @ C).columns()
    assert same_subspace(basis, mixed)
    assert span_contains(basis, mixed)


def test_same_subspace_negative():
    e = [Matrix.unit(3, k) for k in range(3)]
    assert not same_subspace([e[0]], [e[1]])
    assert not same_subspace([e[0]], [e[0], e[1]])
    assert span_contains([e[0], e[1]], [e[0].scale(I) + e[1]])
    assert not span_contains([e[0]], [e[2]])
    assert same_subspace([], [Matrix.zeros(3, 1)])
