"""2x2 matrix arithmetic, both regimes, and the kernel routine."""

import math

import pytest
from hypothesis import given, strategies as st

from paulikit.catalog import exact_pauli_matrices, pauli_label
from paulikit.matrix2 import (
    FullRank,
    Matrix2,
    SingularMatrix,
    complex_identity,
    eigenvalues,
    exact_identity,
    kernel_2x2,
)
from paulikit.scalars import GaussianRational


def gr(re, im=0):
    return GaussianRational(re, im)


X, Y, Z = exact_pauli_matrices()
I = exact_identity()

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=20)
gaussians = st.builds(GaussianRational, rationals, rationals)
exact_matrices = st.builds(Matrix2, gaussians, gaussians, gaussians, gaussians)


class TestExactArithmetic:
    def test_product_of_first_two_generators(self):
        # hand multiplication: X*Y = [[i, 0], [0, -i]]
        assert X * Y == Matrix2(gr(0, 1), gr(0), gr(0), gr(0, -1))

    def test_identity_is_neutral(self):
        for m in (X, Y, Z, X * Y * Z):
            assert I * m == m
            assert m * I == m

    def test_generators_are_involutions(self):
        assert X * X == I
        assert Y * Y == I
        assert Z * Z == I

    @given(exact_matrices, exact_matrices, exact_matrices)
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(exact_matrices, exact_matrices)
    def test_determinant_is_multiplicative(self, a, b):
        assert (a * b).det() == a.det() * b.det()

    def test_trace_det_adjoint(self):
        m = X * Y
        assert m.trace() == gr(0)
        assert m.det() == gr(1)
        assert m.adjoint() == Matrix2(gr(0, -1), gr(0), gr(0), gr(0, 1))

    def test_pow(self):
        xy = X * Y
        assert xy ** 0 == I
        assert xy ** 4 == I
        assert xy ** 2 == xy * xy


class TestInverse:
    def test_involution_inverts_to_itself(self):
        assert Z.inverse() == Z
        assert I.inverse() == I

    def test_order_four_element(self):
        # closure oracle: XY has order 4, so its inverse is its cube
        xy = X * Y
        cube = xy * xy * xy
        assert xy.inverse() == cube
        assert xy * cube == I

    def test_singular_exact(self):
        with pytest.raises(SingularMatrix):
            Matrix2(gr(1), gr(1), gr(1), gr(1)).inverse()

    def test_singular_floating(self):
        with pytest.raises(SingularMatrix):
            Matrix2(1 + 0j, 1 + 0j, 1 + 0j, (1 + 1e-14) + 0j).inverse(tol=1e-12)

    def test_floating_inverse(self):
        m = Matrix2(2 + 0j, 1j, -1j, 1 + 0j)
        assert (m * m.inverse()).max_diff(complex_identity()) < 1e-14


class TestRegimes:
    def test_no_mixed_products(self):
        with pytest.raises(TypeError):
            X * complex_identity()

    def test_explicit_conversion(self):
        xc = X.to_complex()
        assert not xc.is_exact
        assert xc.max_diff(Matrix2(0j, 1 + 0j, 1 + 0j, 0j)) == 0.0

    def test_max_diff_and_approx_eq(self):
        a = complex_identity()
        b = Matrix2(1 + 1e-13j, 0j, 0j, 1 + 0j)
        assert a.approx_eq(b, tol=1e-12)
        assert not a.approx_eq(b, tol=1e-14)


class TestKernel:
    def test_nilpotent_jordan_block(self):
        v = kernel_2x2(Matrix2(0j, 1 + 0j, 0j, 0j))
        assert abs(v[0] - 1) < 1e-15 and abs(v[1]) < 1e-15

    def test_identity_has_no_kernel(self):
        with pytest.raises(FullRank):
            kernel_2x2(complex_identity())

    def test_hand_solved_kernel(self):
        # a at the base parameter point: (1/2) [[-1, -1], [1, 1]];
        # solving a v = 0 by hand gives v = (1, -1)/sqrt(2)
        a = Matrix2(-0.5 + 0j, -0.5 + 0j, 0.5 + 0j, 0.5 + 0j)
        v = kernel_2x2(a)
        s = 1 / math.sqrt(2)
        assert abs(v[0] - s) < 1e-15
        assert abs(v[1] + s) < 1e-15

    def test_sign_convention_first_component_real_positive(self):
        # kernel spanned by (i, 1): phase must be rotated onto the first slot
        m = Matrix2(1 + 0j, -1j, 1j, 1 + 0j)  # rows orthogonal to (i,1)? check: (1)(i)+(-i)(1)=0
        v = kernel_2x2(m)
        assert v[0].imag == pytest.approx(0.0, abs=1e-15)
        assert v[0].real > 0

    @given(
        st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    )
    def test_rank_one_matrices_have_small_residual(self, u0, u1, w0, w1):
        # rank-1 matrix u w^T always has a kernel; residual stays within 10*tol
        m = Matrix2(u0 * w0, u0 * w1, u1 * w0, u1 * w1)
        v = kernel_2x2(m, tol=1e-9)
        r = m.apply(v)
        assert math.sqrt(abs(r[0]) ** 2 + abs(r[1]) ** 2) <= 10 * 1e-9

    def test_zero_matrix_convention(self):
        assert kernel_2x2(Matrix2(0j, 0j, 0j, 0j)) == (1 + 0j, 0j)


class TestEigenvalues:
    def test_sorted_real_pair(self):
        m = Matrix2(0j, 2.5 + 0j, 2.5 + 0j, 0j)
        lo, hi = eigenvalues(m)
        assert lo == pytest.approx(-2.5)
        assert hi == pytest.approx(2.5)


def test_pauli_label_exhaustive():
    seen = set()
    phase = GaussianRational.one()
    for _ in range(4):
        for base in (I, X, Y, Z):
            seen.add(pauli_label(base.scale(phase)))
        phase = phase.times_i()
    assert len(seen) == 16
    with pytest.raises(ValueError):
        pauli_label(Matrix2(gr(2), gr(0), gr(0), gr(2)))
