import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import gaussians, matrices, to_sympy
from spinbundles.exact import (
    ONE,
    ZERO,
    DimensionError,
    ExactMatrix,
    GaussianRational,
    SingularMatrixError,
    cayley_unitary,
    circle_point,
    gq,
    kronecker,
    mat_mul,
    nullspace,
    random_matrix,
    random_skew_hermitian,
    real_linear_kernel,
    sphere3_point,
)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == ONE
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * a.conj()).im == 0


def test_i_squared():
    i = gq(0, 1)
    assert i * i == gq(-1)
    assert i ** 4 == ONE
    assert i ** -1 == gq(0, -1)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_mat_mul_hand_expanded():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[gq(0, 1), 1], [0, gq(2, -1)]])
    # [[1*i + 0, 1 + 2(2-i)], [3i, 3 + 4(2-i)]]
    assert mat_mul(a, b) == ExactMatrix.from_rows([[gq(0, 1), gq(5, -2)], [gq(0, 3), gq(11, -4)]])


def test_mat_mul_shape_error_names_shapes():
    with pytest.raises(DimensionError, match=r"2x3.*2x3"):
        mat_mul(ExactMatrix.zeros(2, 3), ExactMatrix.zeros(2, 3))


@given(matrices(2, 3), matrices(3, 2))
def test_mat_mul_matches_sympy(a, b):
    assert (to_sympy(a @ b) - to_sympy(a) * to_sympy(b)).expand().is_zero_matrix


@given(matrices(2, 2), matrices(2, 2), matrices(2, 2), matrices(2, 2))
def test_kronecker_mixed_product(a, b, c, d):
    assert kronecker(a, b) @ kronecker(c, d) == kronecker(a @ c, b @ d)


def test_kronecker_block_layout():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.identity(2)
    k = kronecker(a, b)
    assert k.to_rows()[0] == [1, 0, 2, 0]
    assert k.to_rows()[3] == [0, 3, 0, 4]


@given(matrices(3, 5))
def test_nullspace_is_exact_kernel(m):
    basis = nullspace(m)
    for v in basis:
        assert (m @ v).is_zero()
    assert len(basis) == m.cols - m.rank()


def test_nullspace_free_column_convention():
    m = ExactMatrix.from_rows([[1, 2, 3]])
    vs = [v.col(0) for v in nullspace(m)]
    assert vs == [[gq(-2), ONE, ZERO], [gq(-3), ZERO, ONE]]


@given(matrices(3, 3))
def test_det_and_inverse_match_sympy(m):
    assert sympy.expand(to_sympy(m).det(method="berkowitz") - to_sympy(ExactMatrix.from_rows([[m.det()]]))[0]) == 0
    if m.det():
        assert m @ m.inverse() == ExactMatrix.identity(3)
    else:
        with pytest.raises(SingularMatrixError):
            m.inverse()


def test_cayley_unitary_samples():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(10):
            u = cayley_unitary(random_skew_hermitian(rng, n))
            assert u.is_unitary()


def test_cayley_rejects_non_skew():
    with pytest.raises(ValueError):
        cayley_unitary(ExactMatrix.identity(2))


@given(st.fractions(max_denominator=50))
def test_circle_point(t):
    a, b = circle_point(t)
    assert a * a + b * b == 1


@given(st.lists(st.fractions(max_denominator=20), min_size=3, max_size=3))
def test_sphere3_point(v):
    z, w = sphere3_point(v)
    assert z.norm() + w.norm() == 1


def test_real_linear_kernel_of_conjugation():
    # u = conj(u) has real solutions only: dimension 1 over R
    basis = real_linear_kernel(lambda x: [x[0] - x[0].conj()], 1)
    assert len(basis) == 1
    assert basis[0][0].im == 0


def test_random_matrix_deterministic():
    assert random_matrix(random.Random(3), 2, 2) == random_matrix(random.Random(3), 2, 2)
