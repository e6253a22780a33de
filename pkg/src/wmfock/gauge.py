"""Finite gauge-bundle representations over sampled circle points.

The circle is sampled at the K-th roots of unity, kept exact as exponents
modulo K; the bundle Hilbert space is the direct sum of K copies of the
truncated Fock space.  Annihilators act identically in every block, while
the vacuum-projection generator carries the sample phase in block z.

Two implementations of the gauge unitary for a root w are provided:

* ``paper``: positive-degree vectors are scaled by conj(w)**degree inside
  their own block and the vacua are permuted across blocks (z -> conj(w) z);
* ``shift``: every vector is scaled by conj(w)**degree *and* moved to the
  conj(w) z block.

Covariance U b_i U* = w b_i holds exactly for the ``shift`` variant on all
generators.  The ``paper`` variant intertwines the vacuum generator but
mismatches the annihilators exactly on their degree-one-to-vacuum matrix
elements (the image vacuum lands in the shifted block); those deviations
are reported entry by entry rather than repaired silently.

All matrices here have at most one nonzero per row and per column with the
entry a pure phase, so products never require adding distinct phases and
every verdict is exact integer arithmetic on exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .fock import TruncationParams, basis_degrees, column_map

PAPER_UNITARY = "paper"
BLOCK_SHIFT_UNITARY = "shift"
_VARIANTS = (PAPER_UNITARY, BLOCK_SHIFT_UNITARY)


@dataclass(frozen=True)
class CirclePhase:
    """An exact K-th root of unity, stored as an exponent modulo K."""

    order: int
    exponent: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def __mul__(self, other: "CirclePhase") -> "CirclePhase":
        if self.order != other.order:
            raise ValueError("mixed phase orders %d and %d" % (self.order, other.order))
        return CirclePhase(self.order, self.exponent + other.exponent)

    def conjugate(self) -> "CirclePhase":
        return CirclePhase(self.order, -self.exponent)

    def __str__(self) -> str:
        return "w^%d (K=%d)" % (self.exponent, self.order)


class PhaseMatrix:
    """Sparse matrix whose nonzero entries are exact roots of unity."""

    __slots__ = ("dim", "order", "entries")

    def __init__(self, dim: int, order: int,
                 entries: Optional[Dict[Tuple[int, int], int]] = None):
        self.dim = dim
        self.order = order
        self.entries: Dict[Tuple[int, int], int] = {}
        if entries:
            for (r, c), e in entries.items():
                self.entries[r, c] = e % order

    @classmethod
    def identity(cls, dim: int, order: int) -> "PhaseMatrix":
        return cls(dim, order, {(i, i): 0 for i in range(dim)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseMatrix):
            return NotImplemented
        return (self.dim == other.dim and self.order == other.order
                and self.entries == other.entries)

    def __matmul__(self, other: "PhaseMatrix") -> "PhaseMatrix":
        if self.dim != other.dim or self.order != other.order:
            raise ValueError("phase matrix shape/order mismatch")
        by_col: Dict[int, Tuple[int, int]] = {}
        for (r, c), e in self.entries.items():
            if c in by_col:
                raise ArithmeticError("left factor has two entries in one column")
            by_col[c] = (r, e)
        out: Dict[Tuple[int, int], int] = {}
        for (k, c), e2 in other.entries.items():
            hit = by_col.get(k)
            if hit is None:
                continue
            r, e1 = hit
            if (r, c) in out:
                # cannot happen for partial-permutation factors; a sum of two
                # distinct phases is not representable, so fail loudly
                raise ArithmeticError("phase collision at entry (%d, %d)" % (r, c))
            out[r, c] = (e1 + e2) % self.order
        return PhaseMatrix(self.dim, self.order, out)

    def adjoint(self) -> "PhaseMatrix":
        return PhaseMatrix(self.dim, self.order,
                           {(c, r): -e for (r, c), e in self.entries.items()})

    def scaled(self, exponent: int) -> "PhaseMatrix":
        """Multiply every entry by the root with the given exponent."""
        return PhaseMatrix(self.dim, self.order,
                           {coord: e + exponent for coord, e in self.entries.items()})

    def mismatches(self, other: "PhaseMatrix") -> List[Tuple[int, int, Optional[int], Optional[int]]]:
        """Sorted (row, col, got, want) for every differing entry."""
        coords = set(self.entries) | set(other.entries)
        out = []
        for coord in sorted(coords):
            got = self.entries.get(coord)
            want = other.entries.get(coord)
            if got != want:
                out.append((coord[0], coord[1], got, want))
        return out


@dataclass(frozen=True)
class BundleRep:
    """Direct sum of K Fock blocks; block s carries the sample exp(2 pi i s/K)."""

    params: TruncationParams
    roots: int

    def __post_init__(self) -> None:
        if self.roots < 1:
            raise ValueError("need at least one circle sample")

    @property
    def block_size(self) -> int:
        return self.params.basis_size

    @property
    def dim(self) -> int:
        return self.roots * self.block_size

    def position(self, sample: int, basis_pos: int) -> int:
        return sample * self.block_size + basis_pos

    def split(self, position: int) -> Tuple[int, int]:
        return divmod(position, self.block_size)

    def vacuum_positions(self) -> List[int]:
        return [self.position(s, 0) for s in range(self.roots)]


def build_bundle(params: TruncationParams, roots: int) -> BundleRep:
    return BundleRep(params, roots)


@lru_cache(maxsize=None)
def bundle_operator(rep: BundleRep, index: int) -> PhaseMatrix:
    """The generator b_i on the bundle: identical annihilator blocks for
    i >= 1, and the phase-weighted vacuum projection for i = 0."""
    if not 0 <= index <= rep.params.n:
        raise ValueError("index must be in 0..%d" % rep.params.n)
    entries: Dict[Tuple[int, int], int] = {}
    if index == 0:
        for s in range(rep.roots):
            entries[rep.position(s, 0), rep.position(s, 0)] = s
        return PhaseMatrix(rep.dim, rep.roots, entries)
    cmap = column_map(rep.params, index, False)
    for s in range(rep.roots):
        base = s * rep.block_size
        for col, row in enumerate(cmap):
            if row >= 0:
                entries[base + row, base + col] = 0
    return PhaseMatrix(rep.dim, rep.roots, entries)


@dataclass(frozen=True, eq=False)
class GaugeUnitary:
    variant: str
    phase: CirclePhase
    matrix: PhaseMatrix


def gauge_unitary(rep: BundleRep, w: int, variant: str) -> GaugeUnitary:
    """Build the gauge unitary for the root with exponent ``w``.

    Unitarity (U U* = I in exponent arithmetic) is verified at construction.
    """
    if variant not in _VARIANTS:
        raise ValueError("variant must be one of %s" % (_VARIANTS,))
    K = rep.roots
    w = w % K
    degrees = basis_degrees(rep.params)
    entries: Dict[Tuple[int, int], int] = {}
    for s in range(K):
        shifted = (s - w) % K
        for b, d in enumerate(degrees):
            col = rep.position(s, b)
            if variant == BLOCK_SHIFT_UNITARY:
                entries[rep.position(shifted, b), col] = -w * d
            elif d == 0:
                entries[rep.position(shifted, 0), col] = 0
            else:
                entries[col, col] = -w * d
    matrix = PhaseMatrix(rep.dim, K, entries)
    if matrix @ matrix.adjoint() != PhaseMatrix.identity(rep.dim, K):
        raise AssertionError("gauge unitary failed the exact unitarity check")
    return GaugeUnitary(variant, CirclePhase(K, w), matrix)


@dataclass
class CovarianceResult:
    ok: bool
    cases: int
    failures: List[dict]


def check_covariance(rep: BundleRep, index: int, w: int, variant: str) -> CovarianceResult:
    """Compare U b_i U* against w b_i entry by entry, exactly."""
    unitary = gauge_unitary(rep, w, variant)
    beta = bundle_operator(rep, index)
    lhs = unitary.matrix @ beta @ unitary.matrix.adjoint()
    rhs = beta.scaled(w % rep.roots)
    failures = []
    for row, col, got, want in lhs.mismatches(rhs):
        brow, row_pos = rep.split(row)
        bcol, col_pos = rep.split(col)
        failures.append({
            "blockRow": brow, "blockCol": bcol,
            "basisRow": row_pos, "basisCol": col_pos,
            "gotExponent": got, "wantExponent": want,
        })
    return CovarianceResult(ok=not failures, cases=rep.dim, failures=failures)


def check_group_law(rep: BundleRep, variant: str) -> dict:
    """U_w U_w' = U_(w w') for all sampled roots, exactly."""
    cases = 0
    failures = []
    for w1 in range(rep.roots):
        u1 = gauge_unitary(rep, w1, variant)
        for w2 in range(rep.roots):
            u2 = gauge_unitary(rep, w2, variant)
            composed = gauge_unitary(rep, w1 + w2, variant)
            cases += 1
            if u1.matrix @ u2.matrix != composed.matrix:
                failures.append({"w1": w1, "w2": w2})
    return {"cases": cases, "failures": len(failures),
            "first_failure": failures[0] if failures else None}


def vacuum_operator_spectrum(rep: BundleRep) -> dict:
    """Eigenvalues of the vacuum generator, read off its diagonal form.

    The matrix is diagonal in the canonical bundle basis: each sampled root
    appears once (on its block vacuum) and 0 fills the rest.
    """
    beta0 = bundle_operator(rep, 0)
    if any(r != c for (r, c) in beta0.entries):
        raise AssertionError("vacuum generator is not diagonal")
    exponents = sorted(beta0.entries.values())
    return {
        "roots": rep.roots,
        "root_exponents": exponents,
        "zero_multiplicity": rep.dim - len(exponents),
        "distinct_eigenvalues": len(set(exponents)) + (1 if rep.dim > len(exponents) else 0),
    }


def check_quotient_relation(rep: BundleRep) -> dict:
    """The range projection G = b_0 b_0* is a self-adjoint idempotent fixing
    every vacuum, and G - G* G is the zero matrix, exactly."""
    beta0 = bundle_operator(rep, 0)
    proj = beta0 @ beta0.adjoint()
    self_adjoint = proj == proj.adjoint()
    idempotent = (proj @ proj) == proj
    difference = proj.mismatches(proj.adjoint() @ proj)
    fixes_vacua = all(proj.entries.get((pos, pos)) == 0 for pos in rep.vacuum_positions())
    vacuum_columns_clean = all(
        coord[0] == coord[1] or coord[1] not in rep.vacuum_positions()
        for coord in proj.entries)
    ok = self_adjoint and idempotent and not difference and fixes_vacua and vacuum_columns_clean
    return {
        "ok": ok,
        "self_adjoint": self_adjoint,
        "idempotent": idempotent,
        "difference_entries": [list(m) for m in difference],
        "fixes_vacua": fixes_vacua,
    }
