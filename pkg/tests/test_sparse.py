"""Exact sparse matrix arithmetic."""

from fractions import Fraction

import pytest

from wmfock.sparse import FockVector, SparseOp, frac_str


def test_zero_entries_are_dropped():
    op = SparseOp(3, {(0, 0): Fraction(0), (1, 2): Fraction(1, 3)})
    assert op.nnz == 1
    assert op.entries == {(1, 2): Fraction(1, 3)}


def test_out_of_range_entry_rejected():
    with pytest.raises(ValueError):
        SparseOp(2, {(2, 0): 1})


def test_addition_cancels_exactly():
    a = SparseOp(2, {(0, 1): Fraction(1, 3)})
    b = SparseOp(2, {(0, 1): Fraction(-1, 3), (1, 0): 2})
    assert (a + b).entries == {(1, 0): Fraction(2)}


def test_matmul_matches_dense_arithmetic():
    a = SparseOp(3, {(0, 1): Fraction(1, 2), (2, 2): 3})
    b = SparseOp(3, {(1, 0): 4, (2, 2): Fraction(1, 3)})
    prod = a @ b
    assert prod.entries == {(0, 0): Fraction(2), (2, 2): Fraction(1)}


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        SparseOp(2) @ SparseOp(3)


def test_transpose_is_involutive():
    a = SparseOp(3, {(0, 1): Fraction(1, 2), (2, 0): -1})
    assert a.transpose().transpose() == a
    assert a.adjoint().entries == {(1, 0): Fraction(1, 2), (0, 2): Fraction(-1)}


def test_rank_exact():
    dependent = SparseOp(3, {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 4})
    assert dependent.rank() == 1
    assert SparseOp.identity(5).rank() == 5
    assert SparseOp.zero(4).rank() == 0


def test_apply_and_restrict():
    a = SparseOp(3, {(0, 1): Fraction(1, 2), (2, 2): 3})
    v = FockVector(3, {1: Fraction(2), 2: Fraction(1)})
    out = a.apply(v)
    assert out.entries == {0: Fraction(1), 2: Fraction(3)}
    assert a.restrict_columns(2).entries == {(0, 1): Fraction(1, 2)}


def test_serialization_round_trip():
    a = SparseOp(2, {(1, 0): Fraction(-2, 7)})
    assert a.to_coords() == [[1, 0, "-2/7"]]
    assert frac_str(Fraction(3)) == "3/1"
