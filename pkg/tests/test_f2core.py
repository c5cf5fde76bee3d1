"""Tests for the GF(2) kernel."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transversal_class.errors import DimensionMismatchError, SingularMatrixError
from transversal_class.f2core import (
    F2Matrix,
    F2Vector,
    RowSpace,
    add,
    invert,
    member,
    mul,
    rank,
    rref,
    transpose,
)


@st.composite
def f2_matrices(draw, max_rows=64, max_cols=64, square=False):
    nrows = draw(st.integers(1, max_rows))
    ncols = nrows if square else draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    return F2Matrix(tuple(rows), ncols)


class TestF2Vector:
    """Tests for F2Vector."""

    def test_from_bits(self):
        """Test building a vector from coordinates."""
        v = F2Vector.from_bits([1, 0, 1])
        assert v.length == 3
        assert v.bits == 0b101
        assert v.to_list() == [1, 0, 1]
        assert str(v) == "101"

    def test_bits_beyond_length_rejected(self):
        """Test that stray high bits are rejected."""
        with pytest.raises(ValueError):
            F2Vector(2, 0b100)

    def test_add_is_xor(self):
        """Test vector addition."""
        assert F2Vector(3, 0b110) + F2Vector(3, 0b011) == F2Vector(3, 0b101)

    def test_add_length_mismatch(self):
        """Test that vectors of different length cannot be added."""
        with pytest.raises(DimensionMismatchError):
            F2Vector(2, 1) + F2Vector(3, 1)

    def test_numpy_interop(self):
        """Test conversion to and from numpy."""
        v = F2Vector.from_numpy(np.array([0, 1, 1, 0, 1]))
        assert v.to_list() == [0, 1, 1, 0, 1]
        assert v.to_numpy().tolist() == [0, 1, 1, 0, 1]

    def test_vector_times_matrix(self):
        """Test row vector times matrix."""
        m = F2Matrix.from_rows([[1, 1], [0, 1]])
        assert (F2Vector.from_bits([1, 1]) @ m).to_list() == [1, 0]


class TestF2Matrix:
    """Tests for F2Matrix construction and arithmetic."""

    def test_identity_and_zeros(self):
        """Test the basic constructors."""
        assert F2Matrix.identity(3).to_list() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert F2Matrix.zeros(2, 3).is_zero()
        assert F2Matrix.zeros(2, 3).shape == (2, 3)

    def test_text_round_trip(self):
        """Test from_text and to_text."""
        m = F2Matrix.from_text("1010\n0100\n0010\n0101")
        assert m.to_text() == "1010\n0100\n0010\n0101"
        assert m[0, 2] == 1
        assert m[1, 0] == 0

    def test_from_text_rejects_bad_rows(self):
        """Test that ragged or non-binary text is rejected."""
        with pytest.raises(ValueError):
            F2Matrix.from_text("10\n1")
        with pytest.raises(ValueError):
            F2Matrix.from_text("12\n01")

    def test_j_squared_is_identity(self):
        """Test J.J = I."""
        j = F2Matrix.from_rows([[0, 1], [1, 0]])
        assert j @ j == F2Matrix.identity(2)

    def test_facet_squared(self):
        """Test that the facet matrix squares to its inverse."""
        f = F2Matrix.from_rows([[1, 1], [1, 0]])
        assert f @ f == F2Matrix.from_rows([[0, 1], [1, 1]])

    def test_mul_dimension_mismatch(self):
        """Test that non-conforming products raise."""
        with pytest.raises(DimensionMismatchError):
            mul(F2Matrix.identity(2), F2Matrix.identity(3))

    def test_add_dimension_mismatch(self):
        """Test that non-conforming sums raise."""
        with pytest.raises(DimensionMismatchError):
            add(F2Matrix.identity(2), F2Matrix.zeros(2, 3))

    def test_block_diag_and_kron(self):
        """Test block_diag and kron."""
        j = F2Matrix.from_rows([[0, 1], [1, 0]])
        d = F2Matrix.block_diag(j, F2Matrix.identity(1))
        assert d.to_list() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        k = F2Matrix.kron(F2Matrix.from_rows([[1, 1], [0, 1]]), j)
        assert k.to_list() == [[0, 1, 0, 1], [1, 0, 1, 0], [0, 0, 0, 1], [0, 0, 1, 0]]

    def test_hashable(self):
        """Test that equal matrices hash equally."""
        a = F2Matrix.from_rows([[1, 0], [1, 1]])
        b = F2Matrix.from_text("10\n11")
        assert len({a, b}) == 1

    @given(f2_matrices(max_rows=8, max_cols=8))
    def test_a_plus_a_is_zero(self, m):
        """Test characteristic two."""
        assert (m + m).is_zero()

    @given(f2_matrices(max_rows=12, max_cols=12), st.integers(1, 12), st.data())
    def test_packed_product_matches_numpy(self, a, ncols, data):
        """Test packed multiplication against a per-bit numpy reference."""
        rows = data.draw(
            st.lists(st.integers(0, (1 << ncols) - 1), min_size=a.ncols, max_size=a.ncols)
        )
        b = F2Matrix(tuple(rows), ncols)
        expected = (a.to_numpy().astype(int) @ b.to_numpy().astype(int)) % 2
        assert (a @ b).to_list() == expected.tolist()

    @given(f2_matrices(max_rows=16, max_cols=16))
    def test_transpose_matches_numpy(self, m):
        """Test transpose against numpy."""
        assert transpose(m).to_list() == m.to_numpy().T.tolist()
        assert F2Matrix.from_numpy(m.to_numpy()) == m


class TestRref:
    """Tests for row reduction."""

    def test_invertible(self):
        """Test an invertible 2x2 matrix."""
        reduced, r = rref(F2Matrix.from_rows([[1, 1], [0, 1]]))
        assert reduced == F2Matrix.identity(2)
        assert r == 2

    def test_repeated_row(self):
        """Test a matrix with a repeated row."""
        reduced, r = rref(F2Matrix.from_rows([[1, 1], [1, 1]]))
        assert reduced == F2Matrix.from_rows([[1, 1], [0, 0]])
        assert r == 1

    def test_zero_matrix(self):
        """Test the zero matrix."""
        reduced, r = rref(F2Matrix.zeros(3, 3))
        assert reduced == F2Matrix.zeros(3, 3)
        assert r == 0

    @given(f2_matrices(max_rows=20, max_cols=20))
    def test_idempotent(self, m):
        """Test rref(rref(m)) = rref(m)."""
        once, _ = rref(m)
        assert rref(once)[0] == once

    @given(f2_matrices(max_rows=20, max_cols=20))
    def test_row_space_preserved(self, m):
        """Test mutual membership of rows of m and rref(m)."""
        reduced, _ = rref(m)
        original = RowSpace.span(m)
        after = RowSpace.span(reduced)
        assert all(after.contains_bits(row) for row in m.data)
        assert all(original.contains_bits(row) for row in reduced.data)
        assert original == after

    @settings(max_examples=50)
    @given(f2_matrices())
    def test_rank_of_transpose(self, m):
        """Test rank(m) = rank(m^t) up to 64x64."""
        assert rank(m) == rank(transpose(m))
        assert rank(m) <= min(m.shape)


class TestInvert:
    """Tests for matrix inversion."""

    def test_identity(self):
        """Test that the identity is its own inverse."""
        assert invert(F2Matrix.identity(4)) == F2Matrix.identity(4)

    def test_self_inverse(self):
        """Test a transvection that is its own inverse."""
        m = F2Matrix.from_rows([[1, 0], [1, 1]])
        assert invert(m) == m

    def test_singular(self):
        """Test that a singular matrix raises."""
        with pytest.raises(SingularMatrixError) as excinfo:
            invert(F2Matrix.from_rows([[1, 1], [1, 1]]))
        assert excinfo.value.rank == 1

    def test_non_square(self):
        """Test that a non-square matrix raises."""
        with pytest.raises(DimensionMismatchError):
            invert(F2Matrix.zeros(2, 3))

    @given(f2_matrices(max_rows=16, square=True))
    def test_inverse_or_rank_deficient(self, m):
        """Test that invert succeeds exactly when the matrix has full rank."""
        n = m.nrows
        if rank(m) < n:
            with pytest.raises(SingularMatrixError):
                invert(m)
        else:
            inv = invert(m)
            assert inv @ m == F2Matrix.identity(n)
            assert m @ inv == F2Matrix.identity(n)


class TestRowSpace:
    """Tests for RowSpace and membership."""

    def test_full_space(self):
        """Test membership in the full space."""
        s = RowSpace.span(F2Matrix.identity(2))
        assert member(F2Vector.from_bits([1, 1]), s)

    def test_not_member(self):
        """Test a vector outside the span."""
        s = RowSpace.span(F2Matrix.from_rows([[0, 1]]))
        assert not member(F2Vector.from_bits([1, 0]), s)

    def test_zero_vector_always_member(self):
        """Test that 0 lies in every subspace."""
        assert member(F2Vector(3), RowSpace.zero(3))
        assert member(F2Vector(3), RowSpace.span(F2Matrix.from_rows([[1, 0, 1]])))

    def test_length_mismatch(self):
        """Test that membership checks lengths."""
        with pytest.raises(DimensionMismatchError):
            member(F2Vector(2), RowSpace.zero(3))

    def test_basis_is_canonical(self):
        """Test that different generators of one space give one basis."""
        a = RowSpace.span(F2Matrix.from_rows([[1, 1, 0], [0, 1, 1]]))
        b = RowSpace.span(F2Matrix.from_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]]))
        assert a == b
        assert a.dim == 2
        assert a.pivots == (0, 1)

    def test_rejects_non_echelon_basis(self):
        """Test that the basis invariant is enforced."""
        with pytest.raises(ValueError):
            RowSpace(F2Matrix.from_rows([[0, 1], [1, 0]]))
        with pytest.raises(ValueError):
            RowSpace(F2Matrix.from_rows([[0, 0]]))

    def test_elements(self):
        """Test enumeration of every vector in a subspace."""
        s = RowSpace.span(F2Matrix.from_rows([[1, 0, 1], [0, 1, 1]]))
        assert sorted(s.elements()) == sorted([0b000, 0b101, 0b110, 0b011])

    @given(f2_matrices(max_rows=10, max_cols=10))
    def test_orthogonal_complement(self, m):
        """Test dimension and orthogonality of the complement."""
        s = RowSpace.span(m)
        perp = s.orthogonal_complement()
        assert s.dim + perp.dim == m.ncols
        for a in s.basis.data:
            for b in perp.basis.data:
                assert (a & b).bit_count() % 2 == 0

    def test_issubset(self):
        """Test subspace inclusion."""
        small = RowSpace.span(F2Matrix.from_rows([[1, 1, 0]]))
        big = RowSpace.span(F2Matrix.from_rows([[1, 0, 0], [0, 1, 0]]))
        assert small.issubset(big)
        assert not big.issubset(small)
