"""The diagonal subalgebra: conditional expectation and rank-one projections.

The diagonal operators with respect to the canonical truncated basis form a
maximal abelian picture at finite scale; this module provides the two
computable ingredients of that statement:

* the conditional expectation ``E`` extracting the diagonal of an operator,
  together with its symbolic counterpart on normal monomials (a monomial is
  diagonal exactly when its creation and annihilation parts coincide), and
* the combination of diagonal projections ``P_mu`` whose value is the
  rank-one projection onto a single basis state.

Maximality itself is a statement about the untruncated commutant and is not
asserted here; only its finite-rank ingredients are."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from .fock import MultiIndex, TruncationParams, bottom_letter
from .sparse import SparseOp
from .words import NormalForm, NormalMonomial

_ONE = Fraction(1)


@dataclass
class DiagonalOp:
    """A diagonal operator, stored as position -> nonzero rational."""

    dim: int
    diag: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.diag = {pos: val for pos, val in self.diag.items() if val}

    def as_operator(self) -> SparseOp:
        op = SparseOp(self.dim)
        op.entries = {(pos, pos): val for pos, val in self.diag.items()}
        return op

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagonalOp):
            return NotImplemented
        return self.dim == other.dim and self.diag == other.diag


def expectation(op: SparseOp) -> DiagonalOp:
    """Conditional expectation onto the diagonal subalgebra.

    Keeps exactly the diagonal matrix entries; idempotent, unital, linear,
    and positive (diagonal entries of T*T are sums of squares).
    """
    return DiagonalOp(op.dim, op.diagonal())


def expectation_of_monomial(monomial: NormalMonomial) -> NormalForm:
    """Symbolic expectation: a monomial survives iff it is diagonal.

    Off-diagonal monomials have no diagonal matrix entries at all, so their
    expectation vanishes; diagonal ones are fixed points.
    """
    if monomial.is_diagonal:
        return NormalForm.of(monomial)
    return NormalForm.zero()


def expectation_of_form(nf: NormalForm) -> NormalForm:
    return nf.diagonal_part()


def rank_one_projection(mu: MultiIndex, n: int) -> NormalForm:
    """The rank-one projection onto the basis state ``mu`` as a P-combination.

    For ``mu = 0`` this is the vacuum projection ``a0`` itself.  Otherwise,
    with ``k`` the smallest letter present in ``mu``,

        rank_one(mu) = P_mu - sum_{h=1}^{k} P_(mu + e_h).

    The subtracted projections are precisely the subprojections of ``P_mu``
    obtained by deepening the pivot letter or by inserting a letter below
    it; they are mutually orthogonal and exhaust the range of ``P_mu``
    except for the state ``mu``.  Slots above ``k`` must not be subtracted:
    ``P_(mu + e_h)`` with ``h > k`` is not dominated by ``P_mu`` and would
    push the combination below zero.
    """
    mu = tuple(mu)
    if len(mu) != n:
        raise ValueError("multi-index of length %d, expected %d" % (len(mu), n))
    if any(x < 0 for x in mu):
        raise ValueError("multi-index entries must be nonnegative")
    if not any(mu):
        return NormalForm.of(NormalMonomial.vacuum_projection(n))
    pivot = bottom_letter(mu)
    terms: Dict[NormalMonomial, Fraction] = {NormalMonomial.projection(mu): _ONE}
    for h in range(1, pivot + 1):
        bumped = mu[: h - 1] + (mu[h - 1] + 1,) + mu[h:]
        terms[NormalMonomial.projection(bumped)] = -_ONE
    return NormalForm(terms)


def matrix_rank_one(mu: MultiIndex, params: TruncationParams) -> SparseOp:
    """The expected matrix: a single 1 at the basis position of ``mu``."""
    from .fock import basis_index

    pos = basis_index(params)[tuple(mu)]
    return SparseOp.unit(params.basis_size, pos, pos)
