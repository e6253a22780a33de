"""Exact sparse linear algebra over the rationals.

Operators are square matrices stored as dictionaries mapping ``(row, col)``
to nonzero :class:`~fractions.Fraction` values.  Everything here is exact:
equality of operators is literal equality of entry maps, so verification
verdicts need no tolerances.  All scalars in the core model are real
rationals, hence the adjoint is the plain transpose.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

Coord = Tuple[int, int]
Scalar = Fraction


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def frac_str(value: Fraction) -> str:
    """Render a rational as ``p/q`` (denominator always shown)."""
    value = _frac(value)
    return "%d/%d" % (value.numerator, value.denominator)


class FockVector:
    """Sparse vector over the enumerated basis; zero entries are never stored."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Optional[Mapping[int, Scalar]] = None):
        self.dim = dim
        self.entries: Dict[int, Fraction] = {}
        if entries:
            for pos, val in entries.items():
                if not 0 <= pos < dim:
                    raise ValueError("position %d outside basis of size %d" % (pos, dim))
                val = _frac(val)
                if val:
                    self.entries[pos] = val

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self) -> str:
        body = ", ".join("%d: %s" % (p, frac_str(v)) for p, v in sorted(self.entries.items()))
        return "FockVector(%d, {%s})" % (self.dim, body)

    def is_zero(self) -> bool:
        return not self.entries


class SparseOp:
    """Square sparse matrix with exact rational entries."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Optional[Mapping[Coord, Scalar]] = None):
        self.dim = dim
        self.entries: Dict[Coord, Fraction] = {}
        if entries:
            for (r, c), val in entries.items():
                if not (0 <= r < dim and 0 <= c < dim):
                    raise ValueError("entry (%d, %d) outside %dx%d matrix" % (r, c, dim, dim))
                val = _frac(val)
                if val:
                    self.entries[r, c] = val

    @classmethod
    def zero(cls, dim: int) -> "SparseOp":
        return cls(dim)

    @classmethod
    def identity(cls, dim: int) -> "SparseOp":
        return cls(dim, {(i, i): Fraction(1) for i in range(dim)})

    @classmethod
    def unit(cls, dim: int, row: int, col: int, value: Scalar = Fraction(1)) -> "SparseOp":
        return cls(dim, {(row, col): value})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOp):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self) -> str:
        return "SparseOp(dim=%d, nnz=%d)" % (self.dim, len(self.entries))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def _require_same_dim(self, other: "SparseOp") -> None:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch: %d vs %d" % (self.dim, other.dim))

    def __add__(self, other: "SparseOp") -> "SparseOp":
        self._require_same_dim(other)
        out = dict(self.entries)
        for coord, val in other.entries.items():
            acc = out.get(coord, Fraction(0)) + val
            if acc:
                out[coord] = acc
            else:
                out.pop(coord, None)
        result = SparseOp(self.dim)
        result.entries = out
        return result

    def __neg__(self) -> "SparseOp":
        result = SparseOp(self.dim)
        result.entries = {coord: -val for coord, val in self.entries.items()}
        return result

    def __sub__(self, other: "SparseOp") -> "SparseOp":
        return self + (-other)

    def __rmul__(self, scalar) -> "SparseOp":
        scalar = _frac(scalar)
        result = SparseOp(self.dim)
        if scalar:
            result.entries = {coord: scalar * val for coord, val in self.entries.items()}
        return result

    def __matmul__(self, other: "SparseOp") -> "SparseOp":
        self._require_same_dim(other)
        by_col: Dict[int, list] = {}
        for (r, c), val in self.entries.items():
            by_col.setdefault(c, []).append((r, val))
        out: Dict[Coord, Fraction] = {}
        for (k, c), bval in other.entries.items():
            for r, aval in by_col.get(k, ()):
                coord = (r, c)
                acc = out.get(coord, Fraction(0)) + aval * bval
                if acc:
                    out[coord] = acc
                else:
                    del out[coord]
        result = SparseOp(self.dim)
        result.entries = out
        return result

    def transpose(self) -> "SparseOp":
        result = SparseOp(self.dim)
        result.entries = {(c, r): val for (r, c), val in self.entries.items()}
        return result

    # all core scalars are real rationals, so the adjoint is the transpose
    adjoint = transpose

    def apply(self, vec: FockVector) -> FockVector:
        if vec.dim != self.dim:
            raise ValueError("dimension mismatch: %d vs %d" % (self.dim, vec.dim))
        out: Dict[int, Fraction] = {}
        cols = vec.entries
        for (r, c), val in self.entries.items():
            x = cols.get(c)
            if x is None:
                continue
            acc = out.get(r, Fraction(0)) + val * x
            if acc:
                out[r] = acc
            else:
                del out[r]
        result = FockVector(self.dim)
        result.entries = out
        return result

    def column(self, col: int) -> Dict[int, Fraction]:
        return {r: val for (r, c), val in self.entries.items() if c == col}

    def columns(self) -> Dict[int, Dict[int, Fraction]]:
        out: Dict[int, Dict[int, Fraction]] = {}
        for (r, c), val in self.entries.items():
            out.setdefault(c, {})[r] = val
        return out

    def diagonal(self) -> Dict[int, Fraction]:
        return {r: val for (r, c), val in self.entries.items() if r == c}

    def restrict_columns(self, ncols: int) -> "SparseOp":
        """Drop every entry whose column is ``>= ncols`` (guard-band filter)."""
        result = SparseOp(self.dim)
        result.entries = {coord: val for coord, val in self.entries.items() if coord[1] < ncols}
        return result

    def rank(self) -> int:
        """Exact rank by fraction-free-ish Gaussian elimination on sparse rows."""
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (r, c), val in self.entries.items():
            rows.setdefault(r, {})[c] = val
        work = [row for _, row in sorted(rows.items())]
        rank = 0
        while work:
            row = work.pop()
            if not row:
                continue
            pivot_col = min(row)
            pivot_val = row[pivot_col]
            rank += 1
            reduced = []
            for other in work:
                x = other.get(pivot_col)
                if x is not None:
                    factor = x / pivot_val
                    for c, val in row.items():
                        acc = other.get(c, Fraction(0)) - factor * val
                        if acc:
                            other[c] = acc
                        else:
                            other.pop(c, None)
                if other:
                    reduced.append(other)
            work = reduced
        return rank

    def to_coords(self) -> list:
        """Serialize as sorted ``[row, col, "p/q"]`` triples (JSON-friendly)."""
        return [[r, c, frac_str(v)] for (r, c), v in sorted(self.entries.items())]

    def items_sorted(self) -> Iterator[Tuple[Coord, Fraction]]:
        return iter(sorted(self.entries.items()))


def columns_equal(a: SparseOp, b: SparseOp, col: int) -> bool:
    return a.column(col) == b.column(col)
