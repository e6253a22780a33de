"""Words in the generators and their normal forms.

A word is a finite sequence of generator symbols ``a0, ..., an`` and starred
symbols ``a1*, ..., an*`` (the leftmost symbol acts last, matching operator
composition; ``a0`` is the vacuum projection and is its own adjoint).  Every
word reduces to a rational-linear combination of *normal monomials*

    a*(nu) [P0] a(mu)

with creation indices non-increasing and annihilation indices non-decreasing
in reading order, and at most one vacuum projection between the blocks.

The reduction applies, to a fixpoint, the rule families

    R1  a_i a_j*  -> 0                      (i != j, both >= 1)
    R2  a_i a_i*  -> a0 + sum_{k<=i} a_k* a_k   (i < n);   a_n a_n* -> I
    R3  a_i* a_j* -> 0                      (i < j)
    R4  a_j a_i   -> 0                      (i < j, both >= 1)
    R5  a0 a0 -> a0;   a_j a0 -> 0;   a0 a_j* -> 0   (j >= 1)

always at the leftmost reducible position, merging duplicate terms after
each step.  Soundness of the whole system is pinned by the matrix oracle:
evaluating the normal form must reproduce the direct product of generator
matrices on the truncation guard band (see :mod:`wmfock.fock`).

This module also hosts the combinatorial order ``nu < mu`` on projection
indices and the induced product rule for the diagonal projections
``P_mu = a*(mu) a(mu)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .fock import MultiIndex, TruncationParams, column_map
from .sparse import SparseOp, frac_str

_ZERO = Fraction(0)
_ONE = Fraction(1)


class WordSyntaxError(ValueError):
    """Malformed word text; carries the character position of the defect."""

    def __init__(self, position: int, message: str):
        super().__init__("position %d: %s" % (position, message))
        self.position = position


class GeneratorIndexError(ValueError):
    """A generator index outside the configured range 0..n."""


@dataclass(frozen=True)
class GeneratorSymbol:
    """One letter of a word: index 0..n, starred for the adjoint."""

    index: int
    starred: bool = False

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("generator index must be nonnegative")
        if self.starred and self.index == 0:
            raise ValueError("a0 is self-adjoint; a0* is not a distinct symbol")

    def __str__(self) -> str:
        return "a%d%s" % (self.index, "*" if self.starred else "")


Word = Tuple[GeneratorSymbol, ...]

_TOKEN = re.compile(r"a(\d+)(\*)?")


def parse_word(text: str, n: int) -> Word:
    """Parse whitespace-separated tokens ``a<digits>[*]`` into a word.

    ``a0*`` is normalized to ``a0`` on the spot (the vacuum projection is
    self-adjoint).  Raises :class:`WordSyntaxError` with the offending
    position, or :class:`GeneratorIndexError` for indices above ``n``.
    """
    symbols: List[GeneratorSymbol] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise WordSyntaxError(pos, "expected a token 'a<digits>' optionally followed by '*'")
        index = int(match.group(1))
        if index > n:
            raise GeneratorIndexError("position %d: index %d out of range 0..%d" % (pos, index, n))
        starred = match.group(2) is not None and index != 0
        symbols.append(GeneratorSymbol(index, starred))
        pos = match.end()
        if pos < len(text) and not text[pos].isspace():
            raise WordSyntaxError(pos, "tokens must be separated by whitespace")
    if not symbols:
        raise WordSyntaxError(0, "empty word")
    return tuple(symbols)


def word_text(word: Iterable[GeneratorSymbol]) -> str:
    return " ".join(str(sym) for sym in word)


def creation_guard(word: Iterable[GeneratorSymbol]) -> int:
    """Deepest intermediate creation excursion when the word acts on a state.

    Scanning right to left (the order of application), creators raise the
    degree by one, annihilators lower it by one, and the vacuum projection
    leaves it unchanged on every state it does not kill.  The guard is the
    maximum of the running offset, floored at zero.
    """
    offset = 0
    best = 0
    for sym in reversed(tuple(word)):
        if sym.starred:
            offset += 1
            if offset > best:
                best = offset
        elif sym.index >= 1:
            offset -= 1
    return best


# ---------------------------------------------------------------------------
# normal monomials and normal forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalMonomial:
    """A monomial a*(creation) [P0] a(annihilation) in count-vector form."""

    creation: MultiIndex
    vacuum: bool
    annihilation: MultiIndex

    def __post_init__(self) -> None:
        if len(self.creation) != len(self.annihilation):
            raise ValueError("creation and annihilation parts must have equal length")
        if any(x < 0 for x in self.creation) or any(x < 0 for x in self.annihilation):
            raise ValueError("count vectors must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.creation)

    @classmethod
    def identity(cls, n: int) -> "NormalMonomial":
        zero = (0,) * n
        return cls(zero, False, zero)

    @classmethod
    def vacuum_projection(cls, n: int) -> "NormalMonomial":
        zero = (0,) * n
        return cls(zero, True, zero)

    @classmethod
    def projection(cls, mu: MultiIndex) -> "NormalMonomial":
        """P_mu = a*(mu) a(mu)."""
        mu = tuple(mu)
        return cls(mu, False, mu)

    @classmethod
    def point_projection(cls, mu: MultiIndex) -> "NormalMonomial":
        """P0_mu = a*(mu) P0 a(mu), the rank-one projection onto the state mu."""
        mu = tuple(mu)
        return cls(mu, True, mu)

    @property
    def is_diagonal(self) -> bool:
        return self.creation == self.annihilation

    def word(self) -> Word:
        out: List[GeneratorSymbol] = []
        for j in range(self.n, 0, -1):
            out.extend(GeneratorSymbol(j, True) for _ in range(self.creation[j - 1]))
        if self.vacuum:
            out.append(GeneratorSymbol(0))
        for j in range(1, self.n + 1):
            out.extend(GeneratorSymbol(j) for _ in range(self.annihilation[j - 1]))
        return tuple(out)

    def codes(self) -> Tuple[int, ...]:
        out: List[int] = []
        for j in range(self.n, 0, -1):
            out.extend((2 * j + 1,) * self.creation[j - 1])
        if self.vacuum:
            out.append(0)
        for j in range(1, self.n + 1):
            out.extend((2 * j,) * self.annihilation[j - 1])
        return tuple(out)

    def sort_key(self):
        return (self.creation, self.vacuum, self.annihilation)

    def render(self) -> str:
        pieces: List[str] = []
        if any(self.creation):
            pieces.append("a*(%s)" % ",".join(str(x) for x in self.creation))
        if self.vacuum:
            pieces.append("P0")
        if any(self.annihilation):
            pieces.append("a(%s)" % ",".join(str(x) for x in self.annihilation))
        return " ".join(pieces) if pieces else "I"


class NormalForm:
    """A finite rational-linear combination of normal monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[NormalMonomial, Fraction]] = None):
        data: Dict[NormalMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if coeff:
                    data[mono] = coeff
        self._terms = data

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls()

    @classmethod
    def of(cls, monomial: NormalMonomial, coeff=1) -> "NormalForm":
        return cls({monomial: Fraction(coeff)})

    def items(self):
        return self._terms.items()

    def terms(self) -> List[Tuple[NormalMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, monomial: NormalMonomial) -> Fraction:
        return self._terms.get(monomial, _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "NormalForm") -> "NormalForm":
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono, _ZERO) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        result = NormalForm()
        result._terms = out
        return result

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        return self + other.scaled(-1)

    def scaled(self, coeff) -> "NormalForm":
        coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        result = NormalForm()
        if coeff:
            result._terms = {m: coeff * c for m, c in self._terms.items()}
        return result

    def diagonal_part(self) -> "NormalForm":
        result = NormalForm()
        result._terms = {m: c for m, c in self._terms.items() if m.is_diagonal}
        return result

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join("%s · %s" % (frac_str(c), m.render()) for m, c in self.terms())

    def __repr__(self) -> str:
        return "NormalForm(%s)" % self.render()


# ---------------------------------------------------------------------------
# the rewriting engine
# ---------------------------------------------------------------------------
#
# Internally a symbol is the integer 2*index + starred; rewriting works on
# tuples of these codes.


def _code(sym: GeneratorSymbol) -> int:
    return (sym.index << 1) | (1 if sym.starred else 0)


def _find_redex(codes: Tuple[int, ...], n: int):
    """Leftmost reducible adjacent pair, as (position, replacement words)."""
    for pos in range(len(codes) - 1):
        a, b = codes[pos], codes[pos + 1]
        ai, astar = a >> 1, a & 1
        bi, bstar = b >> 1, b & 1
        if astar:
            if bstar and ai < bi:
                return pos, ()                                  # R3
            continue
        if ai == 0:
            if b == 0:
                return pos, ((0,),)                             # R5: a0 a0 -> a0
            if bstar:
                return pos, ()                                  # R5: a0 a_j* -> 0
            continue
        if bstar:
            if ai != bi:
                return pos, ()                                  # R1
            if ai == n:
                return pos, ((),)                               # R2, top index
            reps = [(0,)]
            reps.extend((2 * k + 1, 2 * k) for k in range(1, ai + 1))
            return pos, tuple(reps)                             # R2
        if bi == 0:
            return pos, ()                                      # R5: a_j a0 -> 0
        if bi < ai:
            return pos, ()                                      # R4
    return None


def _queue_rewrite(codes: Tuple[int, ...], n: int) -> Dict[Tuple[int, ...], Fraction]:
    """Reduce a code word to normal words, leftmost redex first.

    Terms with identical words are merged after every step; the map returned
    carries only nonzero coefficients.  Termination: each R2 step strictly
    lowers the number of (annihilator, creator) inversions of every produced
    term, and every other rule shortens or kills its term.
    """
    queue: Dict[Tuple[int, ...], Fraction] = {tuple(codes): _ONE}
    normal: Dict[Tuple[int, ...], Fraction] = {}
    while queue:
        word = next(iter(queue))
        coeff = queue.pop(word)
        hit = _find_redex(word, n)
        if hit is None:
            acc = normal.get(word, _ZERO) + coeff
            if acc:
                normal[word] = acc
            else:
                normal.pop(word, None)
            continue
        pos, replacements = hit
        head, tail = word[:pos], word[pos + 2:]
        for rep in replacements:
            new_word = head + rep + tail
            acc = queue.get(new_word, _ZERO) + coeff
            if acc:
                queue[new_word] = acc
            else:
                queue.pop(new_word, None)
    return normal


def _monomial_from_codes(codes: Tuple[int, ...], n: int) -> NormalMonomial:
    creation = [0] * n
    annihilation = [0] * n
    vacuum = False
    i = 0
    last = n + 1
    while i < len(codes) and codes[i] & 1:
        idx = codes[i] >> 1
        if idx > last:
            raise ValueError("creation block not ordered; rewriting left a redex")
        creation[idx - 1] += 1
        last = idx
        i += 1
    if i < len(codes) and codes[i] == 0:
        vacuum = True
        i += 1
    last = 0
    while i < len(codes):
        code = codes[i]
        idx = code >> 1
        if code & 1 or idx == 0 or idx < last:
            raise ValueError("annihilation block not ordered; rewriting left a redex")
        annihilation[idx - 1] += 1
        last = idx
        i += 1
    return NormalMonomial(tuple(creation), vacuum, tuple(annihilation))


@lru_cache(maxsize=None)
def _left_extend(code: int, monomial: NormalMonomial, n: int) -> Tuple[Tuple[NormalMonomial, Fraction], ...]:
    """Normal form of (one symbol) · (one normal monomial)."""
    reduced = _queue_rewrite((code,) + monomial.codes(), n)
    items = [(_monomial_from_codes(w, n), c) for w, c in reduced.items()]
    items.sort(key=lambda kv: kv[0].sort_key())
    return tuple(items)


def _validate_indices(word: Word, n: int) -> None:
    for sym in word:
        if sym.index > n:
            raise GeneratorIndexError("index %d out of range 0..%d" % (sym.index, n))


def rewrite(word: Iterable[GeneratorSymbol], n: int) -> NormalForm:
    """Reduce a word to its normal form.

    The word is absorbed symbol by symbol from the right into an already
    normal combination; each absorption runs the leftmost-redex engine on a
    short word and is memoized, so repeated subwords cost nothing.  The
    result is identical to reducing the whole word in one sweep.
    """
    word = tuple(word)
    _validate_indices(word, n)
    terms: Dict[NormalMonomial, Fraction] = {NormalMonomial.identity(n): _ONE}
    for sym in reversed(word):
        code = _code(sym)
        acc: Dict[NormalMonomial, Fraction] = {}
        for mono, coeff in terms.items():
            for new_mono, factor in _left_extend(code, mono, n):
                val = acc.get(new_mono, _ZERO) + coeff * factor
                if val:
                    acc[new_mono] = val
                else:
                    del acc[new_mono]
        terms = acc
        if not terms:
            break
    return NormalForm(terms)


def rewrite_whole_word(word: Iterable[GeneratorSymbol], n: int) -> NormalForm:
    """One-sweep reduction of the full word (cross-check for :func:`rewrite`)."""
    word = tuple(word)
    _validate_indices(word, n)
    reduced = _queue_rewrite(tuple(_code(sym) for sym in word), n)
    return NormalForm({_monomial_from_codes(w, n): c for w, c in reduced.items()})


# ---------------------------------------------------------------------------
# projection order and products
# ---------------------------------------------------------------------------


class ProductResult(Enum):
    """Outcome of multiplying two diagonal projections P_mu · P_nu."""

    ZERO = "zero"
    LEFT_SURVIVES = "left"
    RIGHT_SURVIVES = "right"


def precedes_pivot(nu: MultiIndex, mu: MultiIndex) -> Optional[int]:
    """The pivot letter witnessing ``nu < mu``, or None.

    ``nu < mu`` holds when some letter k has equal tails above it
    (nu_j = mu_j for j > k), a strict gap at k (nu_k < mu_k), and nothing of
    nu below it (nu_j = 0 for j < k).  Admissible pivots run over the full
    range 1..n; at most one letter can satisfy the conditions, so the
    witness is unique.
    """
    if len(nu) != len(mu):
        raise ValueError("length mismatch: %d vs %d" % (len(nu), len(mu)))
    if tuple(nu) == tuple(mu):
        return None
    n = len(mu)
    for k in range(1, n + 1):
        if (nu[k - 1] < mu[k - 1]
                and all(nu[j] == mu[j] for j in range(k, n))
                and all(nu[j] == 0 for j in range(k - 1))):
            return k
    return None


def precedes(nu: MultiIndex, mu: MultiIndex) -> bool:
    """Strict order on projection indices; false on equal arguments."""
    return precedes_pivot(nu, mu) is not None


def projection_product(mu: MultiIndex, nu: MultiIndex) -> ProductResult:
    """Resolve P_mu · P_nu as P_mu, P_nu, or 0.

    Equal indices and ``nu < mu`` leave the left factor; ``mu < nu`` leaves
    the right factor; incomparable indices annihilate.  This matches the
    exact matrix product on the truncated model whenever both indices fit.
    """
    mu, nu = tuple(mu), tuple(nu)
    if len(mu) != len(nu):
        raise ValueError("length mismatch: %d vs %d" % (len(mu), len(nu)))
    if mu == nu or precedes(nu, mu):
        return ProductResult.LEFT_SURVIVES
    if precedes(mu, nu):
        return ProductResult.RIGHT_SURVIVES
    return ProductResult.ZERO


# ---------------------------------------------------------------------------
# evaluation on the truncated model (the oracle bridge)
# ---------------------------------------------------------------------------


def _compose_codes(codes: Sequence[int], params: TruncationParams) -> Tuple[int, ...]:
    maps = [column_map(params, code >> 1, bool(code & 1) and (code >> 1) > 0)
            for code in codes]
    size = params.basis_size
    out = []
    for col in range(size):
        row = col
        for cmap in reversed(maps):
            row = cmap[row]
            if row < 0:
                break
        out.append(row)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_map(monomial: NormalMonomial, params: TruncationParams) -> Tuple[int, ...]:
    return _compose_codes(monomial.codes(), params)


def _map_to_op(params: TruncationParams, cmap: Tuple[int, ...], coeff: Fraction = _ONE) -> SparseOp:
    op = SparseOp(params.basis_size)
    op.entries = {(row, col): coeff for col, row in enumerate(cmap) if row >= 0}
    return op


def evaluate_monomial(monomial: NormalMonomial, params: TruncationParams) -> SparseOp:
    if monomial.n != params.n:
        raise ValueError("monomial over %d letters, parameters over %d" % (monomial.n, params.n))
    return _map_to_op(params, _monomial_map(monomial, params))


def evaluate(nf: NormalForm, params: TruncationParams) -> SparseOp:
    """Exact matrix of a normal form on the truncated basis."""
    out: Dict[Tuple[int, int], Fraction] = {}
    for monomial, coeff in nf.items():
        if monomial.n != params.n:
            raise ValueError("monomial over %d letters, parameters over %d"
                             % (monomial.n, params.n))
        for col, row in enumerate(_monomial_map(monomial, params)):
            if row < 0:
                continue
            acc = out.get((row, col), _ZERO) + coeff
            if acc:
                out[row, col] = acc
            else:
                del out[row, col]
    op = SparseOp(params.basis_size)
    op.entries = out
    return op


def evaluate_word(word: Iterable[GeneratorSymbol], params: TruncationParams) -> SparseOp:
    """Direct product of the generator matrices of a word.

    This path never touches the rewriting engine; it is the independent
    oracle against which normal forms are checked.
    """
    word = tuple(word)
    _validate_indices(word, params.n)
    return _map_to_op(params, _compose_codes(tuple(_code(s) for s in word), params))


def word_column_map(word: Iterable[GeneratorSymbol], params: TruncationParams) -> Tuple[int, ...]:
    word = tuple(word)
    _validate_indices(word, params.n)
    return _compose_codes(tuple(_code(s) for s in word), params)
