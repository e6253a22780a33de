"""Truncated weakly monotone Fock space and its generator matrices.

The weakly monotone Fock space over an ``n``-dimensional one-particle space
has an orthonormal basis of weakly decreasing simple tensors; those are in
bijection with count vectors mu = (mu_1, ..., mu_n), where mu_j is the
multiplicity of the letter ``e_j``.  The all-zero vector labels the vacuum.

Truncation keeps every state of total degree ``<= max_degree``.  Creators
are cut at the boundary (the would-be degree ``max_degree + 1`` component is
dropped), so a creator matrix is exact on states of degree ``< max_degree``
and annihilators are exact everywhere.  Operator identities are therefore
asserted only on a guard band: basis vectors whose degree leaves room for
the deepest intermediate creation excursion of the words being compared.

Basis order is graded (by total degree), then lexicographic on the reversed
count vector (mu_n, ..., mu_1).  Position 0 is the vacuum and the states of
degree ``<= d`` form a prefix of the enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from .sparse import SparseOp, frac_str

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class TruncationParams:
    """Number of generators and the maximal retained tensor degree."""

    n: int
    max_degree: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need at least two generators, got n=%d" % self.n)
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1, got %d" % self.max_degree)

    @property
    def basis_size(self) -> int:
        return comb(self.max_degree + self.n, self.n)

    def degree_prefix(self, degree: int) -> int:
        """Number of basis states of total degree ``<= degree`` (a prefix)."""
        d = min(degree, self.max_degree)
        if d < 0:
            return 0
        return comb(d + self.n, self.n)


def degree(mu: MultiIndex) -> int:
    return sum(mu)


def top_letter(mu: MultiIndex) -> int:
    """Largest letter present (1-based); 0 for the vacuum."""
    for j in range(len(mu), 0, -1):
        if mu[j - 1]:
            return j
    return 0


def bottom_letter(mu: MultiIndex) -> int:
    """Smallest letter present (1-based); 0 for the vacuum."""
    for j in range(1, len(mu) + 1):
        if mu[j - 1]:
            return j
    return 0


def _compositions(total: int, parts: int) -> Iterator[MultiIndex]:
    # Yields count vectors of fixed total degree, ascending in the
    # lexicographic order of the reversed tuple (mu_n, ..., mu_1).
    if parts == 1:
        yield (total,)
        return
    for top in range(total + 1):
        for rest in _compositions(total - top, parts - 1):
            yield rest + (top,)


@lru_cache(maxsize=None)
def enumerate_basis(params: TruncationParams) -> Tuple[MultiIndex, ...]:
    """All count vectors of degree ``<= max_degree`` in graded order."""
    out: List[MultiIndex] = []
    for d in range(params.max_degree + 1):
        out.extend(_compositions(d, params.n))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(params: TruncationParams) -> Dict[MultiIndex, int]:
    return {mu: i for i, mu in enumerate(enumerate_basis(params))}


@lru_cache(maxsize=None)
def basis_degrees(params: TruncationParams) -> Tuple[int, ...]:
    return tuple(degree(mu) for mu in enumerate_basis(params))


@lru_cache(maxsize=None)
def column_map(params: TruncationParams, index: int, starred: bool) -> Tuple[int, ...]:
    """Generator action as a map basis position -> image position (-1 for zero).

    Every generator sends each basis vector to a single basis vector or to
    zero, so a position map is a faithful matrix representation.
    """
    if starred:
        if not 1 <= index <= params.n:
            raise ValueError("creator index must be in 1..%d, got %d" % (params.n, index))
    else:
        if not 0 <= index <= params.n:
            raise ValueError("annihilator index must be in 0..%d, got %d" % (params.n, index))
    basis = enumerate_basis(params)
    lookup = basis_index(params)
    out = [-1] * len(basis)
    if index == 0:
        out[0] = 0  # vacuum projection
        return tuple(out)
    for pos, mu in enumerate(basis):
        if starred:
            # add e_index on top: legal iff no larger letter is present
            if top_letter(mu) <= index and degree(mu) + 1 <= params.max_degree:
                img = mu[: index - 1] + (mu[index - 1] + 1,) + mu[index:]
                out[pos] = lookup[img]
        else:
            # strip e_index from the top: legal iff it is the top letter
            if mu[index - 1] >= 1 and top_letter(mu) == index:
                img = mu[: index - 1] + (mu[index - 1] - 1,) + mu[index:]
                out[pos] = lookup[img]
    return tuple(out)


def _map_to_op(params: TruncationParams, cmap: Tuple[int, ...]) -> SparseOp:
    dim = params.basis_size
    op = SparseOp(dim)
    op.entries = {(row, col): Fraction(1) for col, row in enumerate(cmap) if row >= 0}
    return op


@lru_cache(maxsize=None)
def annihilator(params: TruncationParams, index: int) -> SparseOp:
    """Matrix of A_i for i >= 1; for i = 0 the rank-one vacuum projection."""
    return _map_to_op(params, column_map(params, index, False))


@lru_cache(maxsize=None)
def creator(params: TruncationParams, index: int) -> SparseOp:
    """Matrix of the creator with test letter ``e_index`` (1-based)."""
    return _map_to_op(params, column_map(params, index, True))


def vacuum_projection(params: TruncationParams) -> SparseOp:
    return annihilator(params, 0)


def generator(params: TruncationParams, index: int, starred: bool) -> SparseOp:
    if starred and index == 0:
        return annihilator(params, 0)  # the vacuum projection is self-adjoint
    return creator(params, index) if starred else annihilator(params, index)


@dataclass(frozen=True, eq=False)
class GuardedIdentity:
    """A claimed operator identity together with its truncation guard.

    ``guard`` is the maximal intermediate creation excursion of the words
    realized by either side; the identity is asserted only on basis vectors
    of degree ``<= max_degree - guard``, where truncated creators act
    exactly like their untruncated counterparts.
    """

    params: TruncationParams
    lhs: SparseOp
    rhs: SparseOp
    guard: int

    def __post_init__(self) -> None:
        if self.lhs.dim != self.rhs.dim:
            raise ValueError("dimension mismatch between sides: %d vs %d"
                             % (self.lhs.dim, self.rhs.dim))
        if self.lhs.dim != self.params.basis_size:
            raise ValueError("operators not built over the given parameters")
        if not 0 <= self.guard <= self.params.max_degree:
            raise ValueError("guard must lie in 0..max_degree")


@dataclass
class CheckResult:
    """Outcome of a guarded identity check.

    ``truncation_artifact`` is set when the identity holds on the guarded
    subspace but fails somewhere in the cut top layers; such a failure is a
    consequence of truncation, not of the identity being false.
    """

    ok: bool
    guard: int
    columns_checked: int
    first_failure: Optional[dict] = None
    truncation_artifact: bool = False


def check_guarded_identity(identity: GuardedIdentity) -> CheckResult:
    """Compare both sides column-by-column on the guarded subspace."""
    params = identity.params
    cutoff = params.degree_prefix(params.max_degree - identity.guard)
    basis = enumerate_basis(params)
    lhs_cols = identity.lhs.columns()
    rhs_cols = identity.rhs.columns()
    first_failure = None
    for col in range(cutoff):
        left = lhs_cols.get(col, {})
        right = rhs_cols.get(col, {})
        if left != right:
            first_failure = _failure_payload(basis, col, left, right)
            break
    ok = first_failure is None
    artifact = False
    if ok:
        for col in range(cutoff, params.basis_size):
            if lhs_cols.get(col, {}) != rhs_cols.get(col, {}):
                artifact = True
                break
    return CheckResult(ok=ok, guard=identity.guard, columns_checked=cutoff,
                       first_failure=first_failure, truncation_artifact=artifact)


def _failure_payload(basis, col: int, left: Dict[int, Fraction], right: Dict[int, Fraction]) -> dict:
    return {
        "basis_position": col,
        "multi_index": list(basis[col]),
        "lhs_column": [[r, frac_str(v)] for r, v in sorted(left.items())],
        "rhs_column": [[r, frac_str(v)] for r, v in sorted(right.items())],
    }
