"""Named verification suites with machine-readable verdicts.

Each suite returns ``{"suite", "n", "maxDegree", "checks": [...]}`` where a
check is ``{"name", "cases", "failures", "firstFailure"}`` plus occasional
informational keys.  Every failure carries its first counterexample in
full.  Suites are deterministic: randomized checks draw from a fixed seed,
and all iteration orders are explicit.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import masa
from .fock import (GuardedIdentity, MultiIndex, TruncationParams, basis_degrees,
                   check_guarded_identity, _compositions)
from .sparse import SparseOp, frac_str
from .spectrum import (SpectrumConfig, boundary_points, boundary_convergence_report,
                       interior_points, r_value, verify_multiplicativity)
from .words import (GeneratorSymbol, NormalMonomial, ProductResult, Word,
                    creation_guard, evaluate, evaluate_word, precedes,
                    precedes_pivot, projection_product, rewrite, word_text)
from . import gauge as gauge_mod

RANDOM_SEED = 74207281  # fixed so every run reproduces the same word sample

SUITE_NAMES = ("relations", "ck", "projections", "masa", "spectrum", "gauge")


def _check(name: str, cases: int, failures: int,
           first_failure: Optional[dict] = None, **extra) -> dict:
    out = {"name": name, "cases": cases, "failures": failures,
           "firstFailure": first_failure}
    out.update(extra)
    return out


def _symbols(*specs: Tuple[int, bool]) -> Word:
    return tuple(GeneratorSymbol(i, s) for i, s in specs)


def _word_matrix(params: TruncationParams, word: Word) -> SparseOp:
    return evaluate_word(word, params)


def _guarded_word_check(params: TruncationParams, name: str,
                        lhs_terms: Sequence[Tuple[int, Word]],
                        rhs_terms: Sequence[Tuple[int, Word]]) -> dict:
    """Check sum(lhs) = sum(rhs) on the band guarded by the deepest word."""
    guard = 0
    for _, word in tuple(lhs_terms) + tuple(rhs_terms):
        guard = max(guard, creation_guard(word))
    if guard > params.max_degree:
        # no basis vector leaves room for the excursion; nothing checkable
        return _check(name, 0, 0, guard=guard, truncationArtifact=False,
                      note="guard exceeds max degree; band empty")
    lhs = SparseOp.zero(params.basis_size)
    for coeff, word in lhs_terms:
        lhs = lhs + Fraction(coeff) * _word_matrix(params, word)
    rhs = SparseOp.zero(params.basis_size)
    for coeff, word in rhs_terms:
        rhs = rhs + Fraction(coeff) * _word_matrix(params, word)
    result = check_guarded_identity(GuardedIdentity(params, lhs, rhs, guard))
    return _check(name, result.columns_checked, 0 if result.ok else 1,
                  result.first_failure, guard=result.guard,
                  truncationArtifact=result.truncation_artifact)


def indices_up_to(n: int, cap: int) -> List[MultiIndex]:
    out: List[MultiIndex] = []
    for d in range(cap + 1):
        out.extend(_compositions(d, n))
    return out


# ---------------------------------------------------------------------------
# relations suite
# ---------------------------------------------------------------------------


def relations_suite(n: int, max_degree: int) -> dict:
    params = TruncationParams(n, max_degree)
    checks: List[dict] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            checks.append(_guarded_word_check(
                params, "creator-pair-vanishes-%d-%d" % (i, j),
                [(1, _symbols((i, True), (j, True)))], []))
            checks.append(_guarded_word_check(
                params, "annihilator-pair-vanishes-%d-%d" % (j, i),
                [(1, _symbols((j, False), (i, False)))], []))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                checks.append(_guarded_word_check(
                    params, "mixed-pair-vanishes-%d-%d" % (i, j),
                    [(1, _symbols((i, False), (j, True)))], []))
    checks.append(_guarded_word_check(
        params, "vacuum-projection-definition",
        [(1, _symbols((1, False), (1, True))), (-1, _symbols((1, True), (1, False)))],
        [(1, _symbols((0, False)))]))
    checks.append(_guarded_word_check(
        params, "vacuum-projection-idempotent",
        [(1, _symbols((0, False), (0, False)))],
        [(1, _symbols((0, False)))]))
    vacuum = _word_matrix(params, _symbols((0, False)))
    checks.append(_check("vacuum-projection-selfadjoint", 1,
                         0 if vacuum == vacuum.transpose() else 1))
    checks.append(_check("vacuum-projection-rank-one", 1,
                         0 if vacuum.rank() == 1 else 1))
    for i in range(1, n + 1):
        creator_op = _word_matrix(params, _symbols((i, True)))
        annihilator_op = _word_matrix(params, _symbols((i, False)))
        checks.append(_check("adjoint-is-transpose-%d" % i, 1,
                             0 if creator_op == annihilator_op.transpose() else 1))
    return {"suite": "relations", "n": n, "maxDegree": max_degree, "checks": checks}


# ---------------------------------------------------------------------------
# Cuntz-Krieger suite
# ---------------------------------------------------------------------------


def ck_suite(n: int, max_degree: int) -> dict:
    params = TruncationParams(n, max_degree)
    checks: List[dict] = []
    identity_word_terms = [(1, _symbols((j, True), (j, False))) for j in range(1, n + 1)]
    identity_word_terms.insert(0, (1, _symbols((0, False), (0, False))))
    full = SparseOp.zero(params.basis_size)
    for coeff, word in identity_word_terms:
        full = full + Fraction(coeff) * _word_matrix(params, word)
    checks.append(_check("range-projections-sum-to-identity", params.basis_size,
                         0 if full == SparseOp.identity(params.basis_size) else 1))
    for i in range(1, n + 1):
        checks.append(_guarded_word_check(
            params, "support-projection-decomposition-%d" % i,
            [(1, _symbols((i, False), (i, True)))],
            [(1, _symbols((0, False), (0, False)))]
            + [(1, _symbols((j, True), (j, False))) for j in range(1, i + 1)]))
    range_proj = {}
    for j in range(n + 1):
        if j == 0:
            range_proj[j] = _word_matrix(params, _symbols((0, False)))
        else:
            range_proj[j] = _word_matrix(params, _symbols((j, True), (j, False)))
    ortho_failures = []
    cases = 0
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                cases += 1
                if not (range_proj[i] @ range_proj[j]).is_zero():
                    ortho_failures.append({"i": i, "j": j})
    checks.append(_check("range-projections-orthogonal", cases, len(ortho_failures),
                         ortho_failures[0] if ortho_failures else None))
    # realize the incidence matrix: a_ij = 1 iff Q_i P_j = P_j, 0 iff = 0;
    # the guarded window must hold a degree-1 state to separate the two
    if max_degree < 2:
        checks.append(_check("incidence-matrix-lower-triangular", 0, 0,
                             note="needs max degree >= 2 to separate "
                                  "zero from range projections"))
        return {"suite": "ck", "n": n, "maxDegree": max_degree, "checks": checks}
    cutoff = params.degree_prefix(max_degree - 1)
    support = {}
    support[0] = range_proj[0]
    for i in range(1, n + 1):
        support[i] = _word_matrix(params, _symbols((i, False), (i, True)))
    realized: List[List[int]] = []
    mismatch = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            prod = (support[i] @ range_proj[j]).restrict_columns(cutoff)
            if prod == range_proj[j].restrict_columns(cutoff):
                row.append(1)
            elif prod.is_zero():
                row.append(0)
            else:
                row.append(-1)
            expected = 1 if j <= i else 0
            if row[-1] != expected:
                mismatch.append({"i": i, "j": j, "got": row[-1], "want": expected})
        realized.append(row)
    checks.append(_check("incidence-matrix-lower-triangular", (n + 1) ** 2,
                         len(mismatch), mismatch[0] if mismatch else None,
                         realizedMatrix=realized))
    return {"suite": "ck", "n": n, "maxDegree": max_degree, "checks": checks}


# ---------------------------------------------------------------------------
# projection order suite
# ---------------------------------------------------------------------------


def projections_suite(n: int, max_degree: int = 6, degree_cap: int = 4) -> dict:
    params = TruncationParams(n, max_degree)
    indices = indices_up_to(n, degree_cap)
    matrices = {mu: evaluate_word(NormalMonomial.projection(mu).word(), params)
                for mu in indices}
    cases = 0
    failures: List[dict] = []
    pivots_used = set()
    for mu in indices:
        for nu in indices:
            cases += 1
            symbolic = projection_product(mu, nu)
            prod = matrices[mu] @ matrices[nu]
            if prod.is_zero():
                oracle = ProductResult.ZERO
            elif prod == matrices[mu]:
                oracle = ProductResult.LEFT_SURVIVES
            elif prod == matrices[nu]:
                oracle = ProductResult.RIGHT_SURVIVES
            else:
                oracle = None
            # mu = nu makes both classifications correct; prefer the symbolic one
            if mu == nu and oracle is not None:
                oracle = ProductResult.LEFT_SURVIVES
            if oracle is not symbolic:
                failures.append({"mu": list(mu), "nu": list(nu),
                                 "symbolic": symbolic.value,
                                 "matrix": oracle.value if oracle else "mixed"})
            pivot = precedes_pivot(nu, mu)
            if pivot is not None:
                pivots_used.add(pivot)
    checks = [_check("product-rule-matches-matrix-oracle", cases, len(failures),
                     failures[0] if failures else None)]
    anti_cases = 0
    anti_failures: List[dict] = []
    for mu in indices:
        for nu in indices:
            if mu != nu:
                anti_cases += 1
                if precedes(mu, nu) and precedes(nu, mu):
                    anti_failures.append({"mu": list(mu), "nu": list(nu)})
    checks.append(_check("order-antisymmetric", anti_cases, len(anti_failures),
                         anti_failures[0] if anti_failures else None))
    expected_range = list(range(1, n + 1))
    checks.append(_check("pivot-range", len(pivots_used),
                         0 if sorted(pivots_used) == expected_range else 1,
                         None if sorted(pivots_used) == expected_range
                         else {"pivotsUsed": sorted(pivots_used)},
                         pivotsUsed=sorted(pivots_used),
                         declaredRange=[1, n]))
    return {"suite": "projections", "n": n, "maxDegree": max_degree,
            "degreeCap": degree_cap, "checks": checks}


# ---------------------------------------------------------------------------
# masa suite
# ---------------------------------------------------------------------------


def sample_words(n: int, count: int, max_len: int, seed: int = RANDOM_SEED) -> List[Word]:
    rng = random.Random(seed)
    alphabet: List[GeneratorSymbol] = [GeneratorSymbol(0)]
    for i in range(1, n + 1):
        alphabet.append(GeneratorSymbol(i, False))
        alphabet.append(GeneratorSymbol(i, True))
    words = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        words.append(tuple(rng.choice(alphabet) for _ in range(length)))
    return words


def _diagonal_restricted(op: SparseOp, cutoff: int) -> Dict[int, Fraction]:
    return {p: v for p, v in op.diagonal().items() if p < cutoff}


def masa_suite(n: int, max_degree: int = 6, degree_cap: int = 4,
               rank_cap: int = 5, samples: int = 500,
               sample_len: int = 8, seed: int = RANDOM_SEED) -> dict:
    params = TruncationParams(n, max_degree)
    checks: List[dict] = []

    rank_indices = [mu for mu in indices_up_to(n, min(rank_cap, max_degree - 1))]
    rank_failures: List[dict] = []
    for mu in rank_indices:
        value = evaluate(masa.rank_one_projection(mu, n), params)
        want = masa.matrix_rank_one(mu, params)
        point = evaluate_word(NormalMonomial.point_projection(mu).word(), params)
        if value != want or point != want:
            rank_failures.append({"mu": list(mu)})
    checks.append(_check("rank-one-projections", len(rank_indices),
                         len(rank_failures),
                         rank_failures[0] if rank_failures else None))

    mono_indices = indices_up_to(n, degree_cap)
    mono_cases = 0
    mono_failures: List[dict] = []
    for nu in mono_indices:
        for mu in mono_indices:
            for flag in (False, True):
                mono_cases += 1
                monomial = NormalMonomial(nu, flag, mu)
                guard = max(0, sum(nu) - sum(mu))
                cutoff = params.degree_prefix(max_degree - guard)
                matrix_side = _diagonal_restricted(
                    evaluate_word(monomial.word(), params), cutoff)
                symbolic_side = _diagonal_restricted(
                    evaluate(masa.expectation_of_monomial(monomial), params), cutoff)
                if matrix_side != symbolic_side:
                    mono_failures.append({"nu": list(nu), "mu": list(mu),
                                          "vacuum": flag})
    checks.append(_check("expectation-of-monomials", mono_cases,
                         len(mono_failures),
                         mono_failures[0] if mono_failures else None))

    words = sample_words(n, samples, sample_len, seed)
    word_failures: List[dict] = []
    for word in words:
        guard = creation_guard(word)
        cutoff = params.degree_prefix(max_degree - guard)
        direct = _diagonal_restricted(evaluate_word(word, params), cutoff)
        symbolic = _diagonal_restricted(
            evaluate(rewrite(word, n).diagonal_part(), params), cutoff)
        if direct != symbolic:
            word_failures.append({"word": word_text(word)})
    checks.append(_check("expectation-of-random-words", len(words),
                         len(word_failures),
                         word_failures[0] if word_failures else None))

    positivity_words = sample_words(n, 200, sample_len, seed + 1)
    pos_failures: List[dict] = []
    for word in positivity_words:
        op = evaluate_word(word, params)
        gram = op.transpose() @ op
        if any(v < 0 for v in gram.diagonal().values()):
            pos_failures.append({"word": word_text(word)})
    checks.append(_check("expectation-positive-on-squares", len(positivity_words),
                         len(pos_failures),
                         pos_failures[0] if pos_failures else None))

    ident = SparseOp.identity(params.basis_size)
    unital = masa.expectation(ident).as_operator() == ident
    sample_op = evaluate_word(words[0], params) if words else ident
    idem = masa.expectation(masa.expectation(sample_op).as_operator()) == masa.expectation(sample_op)
    checks.append(_check("expectation-unital-idempotent", 2,
                         (0 if unital else 1) + (0 if idem else 1)))

    comp_failures: List[dict] = []
    comp_cases = 0
    for d in range(max_degree):
        comp_cases += 1
        total = SparseOp.zero(params.basis_size)
        for mu in indices_up_to(n, d):
            total = total + evaluate(masa.rank_one_projection(mu, n), params)
        cutoff = params.degree_prefix(d)
        want = SparseOp(params.basis_size,
                        {(p, p): Fraction(1) for p in range(cutoff)})
        if total != want:
            comp_failures.append({"degree": d})
    checks.append(_check("diagonal-completeness", comp_cases, len(comp_failures),
                         comp_failures[0] if comp_failures else None))
    return {"suite": "masa", "n": n, "maxDegree": max_degree, "checks": checks}


# ---------------------------------------------------------------------------
# rewriter soundness (library-level; exercised by the acceptance tests)
# ---------------------------------------------------------------------------


def soundness_check(words: Iterable[Word], params: TruncationParams) -> dict:
    """evaluate(rewrite(w)) must equal the direct product on the guard band."""
    cases = 0
    failures: List[dict] = []
    for word in words:
        cases += 1
        guard = creation_guard(word)
        cutoff = params.degree_prefix(params.max_degree - guard)
        direct = evaluate_word(word, params).restrict_columns(cutoff)
        reduced = evaluate(rewrite(word, params.n), params).restrict_columns(cutoff)
        if direct != reduced:
            failures.append({"word": word_text(word), "guard": guard})
            if len(failures) >= 5:
                break
    return {"cases": cases, "failures": len(failures),
            "first_failure": failures[0] if failures else None}


def exhaustive_words(n: int, max_len: int) -> Iterable[Word]:
    """Every word of length 1..max_len over the 2n+1 letter alphabet.

    The starred vacuum symbol is not a distinct letter (a0* = a0), so the
    alphabet for n = 2 has the six letters a0 a1 a2 a1* a2* and a0 again
    under its adjoint spelling; enumeration uses the 2n+2 spellings to match
    the full sign/index pattern count, mapping a0* to a0 on the fly.
    """
    spellings: List[GeneratorSymbol] = [GeneratorSymbol(0), GeneratorSymbol(0)]
    for i in range(1, n + 1):
        spellings.append(GeneratorSymbol(i, False))
        spellings.append(GeneratorSymbol(i, True))
    for length in range(1, max_len + 1):
        for combo in cartesian(spellings, repeat=length):
            yield combo


def random_words_soundness(n: int, count: int, max_len: int,
                           max_degree: int, seed: int = RANDOM_SEED) -> dict:
    params = TruncationParams(n, max_degree)
    return soundness_check(sample_words(n, count, max_len, seed), params)


# ---------------------------------------------------------------------------
# spectrum suite
# ---------------------------------------------------------------------------

_NAMED_INTERIOR = {  # (r1, r2) exponent patterns of the worked n=2, c=1/2 display
    (1, 0), (2, 0), (3, 0), (0, 1), (2, 1), (3, 1), (0, 2), (3, 2),
}


def spectrum_suite(n: int, max_degree: int, c: Fraction) -> dict:
    cfg = SpectrumConfig(n, max_degree, c)
    interior = interior_points(cfg)
    boundary = boundary_points(cfg)
    checks: List[dict] = []

    exact_failures: List[dict] = []
    for point in interior:
        mu = point.provenance[0]
        for k in range(1, n + 1):
            r = r_value(mu, k)
            if not (0 <= r <= n * max_degree) or point.coords[k - 1] != 1 - cfg.c ** r \
                    or point.coords[k - 1] == 1:
                exact_failures.append({"mu": list(mu), "k": k})
    checks.append(_check("interior-coordinates-exact", len(interior) * n,
                         len(exact_failures),
                         exact_failures[0] if exact_failures else None))

    if n == 2:
        # independent pattern oracle: second exponent free, first exponent
        # either 0 or strictly larger than the second
        expected = set()
        for r2 in range(max_degree + 1):
            expected.add((Fraction(0), 1 - cfg.c ** r2))
            for r1 in range(r2 + 1, max_degree + 1):
                expected.add((1 - cfg.c ** r1, 1 - cfg.c ** r2))
        got = {point.coords for point in interior}
        ok = got == expected
        checks.append(_check("interior-matches-pattern-oracle", len(expected),
                             0 if ok else 1,
                             None if ok else {"missing": len(expected - got),
                                              "extra": len(got - expected)}))
        if cfg.c == Fraction(1, 2):
            named = [(1 - cfg.c ** r1, 1 - cfg.c ** r2)
                     for (r1, r2) in sorted(_NAMED_INTERIOR)
                     if max(r1, r2) <= max_degree]
            missing = [coords for coords in named if coords not in got]
            checks.append(_check("worked-display-interior-points", len(named),
                                 len(missing),
                                 {"coords": [frac_str(x) for x in missing[0]]}
                                 if missing else None))
            boundary_got = {point.coords for point in boundary}
            named_boundary = [(Fraction(1), Fraction(0)),
                              (Fraction(1), Fraction(1, 2)),
                              (Fraction(1), Fraction(3, 4)),
                              (Fraction(0), Fraction(1)),
                              (Fraction(1), Fraction(1))]
            named_boundary = [bc for bc in named_boundary
                              if bc != (Fraction(1), Fraction(3, 4)) or max_degree >= 2]
            bmissing = [bc for bc in named_boundary if bc not in boundary_got]
            checks.append(_check("worked-display-boundary-points", len(named_boundary),
                                 len(bmissing),
                                 {"coords": [frac_str(x) for x in bmissing[0]]}
                                 if bmissing else None))

    structural_failures: List[dict] = []
    for point in boundary:
        pattern = point.provenance[0]
        k = pattern.pivot
        ok = point.coords[k - 1] == 1
        ok = ok and all(point.coords[j] in (Fraction(0), Fraction(1))
                        for j in range(k - 1))
        ok = ok and all(point.coords[j] != 1 for j in range(k, n))
        if not ok:
            structural_failures.append({"pattern": k})
    checks.append(_check("boundary-point-shape", len(boundary),
                         len(structural_failures),
                         structural_failures[0] if structural_failures else None))

    vertex_failures: List[dict] = []
    boundary_coord_set = {point.coords for point in boundary}
    interior_coord_set = {point.coords for point in interior}
    for bits in cartesian((0, 1), repeat=n):
        vertex = tuple(Fraction(b) for b in bits)
        if any(bits):
            if vertex not in boundary_coord_set:
                vertex_failures.append({"vertex": list(bits), "expected": "boundary"})
        else:
            if vertex not in interior_coord_set or vertex in boundary_coord_set:
                vertex_failures.append({"vertex": list(bits), "expected": "interior"})
    checks.append(_check("vertices-classified", 2 ** n, len(vertex_failures),
                         vertex_failures[0] if vertex_failures else None,
                         note="the all-zero vertex is enumerated as interior only; "
                              "it is isolated at every finite depth even though "
                              "vertices are described as accumulation points"))

    mult = verify_multiplicativity(cfg, min(4, max_degree))
    checks.append(_check("functionals-multiplicative", mult["cases"],
                         mult["failures"], mult["first_failure"],
                         identityZeroProductCaveats=mult["identity_zero_product_caveats"],
                         firstCaveat=mult["first_caveat"]))

    conv = boundary_convergence_report(cfg)
    checks.append(_check("boundary-limits-monotone", conv["cases"],
                         conv["failures"], conv["first_failure"]))
    return {"suite": "spectrum", "n": n, "maxDegree": max_degree,
            "c": frac_str(cfg.c), "checks": checks}


# ---------------------------------------------------------------------------
# gauge suite
# ---------------------------------------------------------------------------


def gauge_suite(n: int, max_degree: int, roots: Optional[Sequence[int]] = None) -> dict:
    if roots is None:
        roots = (1, 2, 4, 8)
    params = TruncationParams(n, max_degree)
    checks: List[dict] = []
    for K in roots:
        rep = gauge_mod.build_bundle(params, K)
        degrees = basis_degrees(params)

        cases = 0
        failures: List[dict] = []
        for i in range(n + 1):
            for w in range(K):
                cases += 1
                verdict = gauge_mod.check_covariance(rep, i, w, gauge_mod.BLOCK_SHIFT_UNITARY)
                if not verdict.ok:
                    failures.append({"i": i, "w": w,
                                     "entries": verdict.failures[:4]})
        checks.append(_check("shift-unitary-covariance-K%d" % K, cases,
                             len(failures), failures[0] if failures else None))

        cases = 0
        vac_failures: List[dict] = []
        for w in range(K):
            cases += 1
            verdict = gauge_mod.check_covariance(rep, 0, w, gauge_mod.PAPER_UNITARY)
            if not verdict.ok:
                vac_failures.append({"w": w, "entries": verdict.failures[:4]})
        checks.append(_check("phase-only-unitary-covariance-vacuum-K%d" % K, cases,
                             len(vac_failures),
                             vac_failures[0] if vac_failures else None))

        deviations = 0
        stray = []
        for i in range(1, n + 1):
            for w in range(K):
                verdict = gauge_mod.check_covariance(rep, i, w, gauge_mod.PAPER_UNITARY)
                for entry in verdict.failures:
                    deviations += 1
                    if not (entry["basisRow"] == 0 and degrees[entry["basisCol"]] == 1):
                        stray.append(entry)
        checks.append(_check("phase-only-unitary-deviations-confined-K%d" % K,
                             max(deviations, 1), len(stray),
                             stray[0] if stray else None,
                             deviations=deviations))

        law = gauge_mod.check_group_law(rep, gauge_mod.BLOCK_SHIFT_UNITARY)
        checks.append(_check("shift-unitary-group-law-K%d" % K, law["cases"],
                             law["failures"], law["first_failure"]))

        spectrum = gauge_mod.vacuum_operator_spectrum(rep)
        spec_ok = (spectrum["root_exponents"] == list(range(K))
                   and spectrum["zero_multiplicity"] == K * (params.basis_size - 1))
        checks.append(_check("vacuum-generator-spectrum-K%d" % K, 1,
                             0 if spec_ok else 1,
                             None if spec_ok else spectrum))

        quotient = gauge_mod.check_quotient_relation(rep)
        checks.append(_check("quotient-relation-K%d" % K, 1,
                             0 if quotient["ok"] else 1,
                             None if quotient["ok"] else quotient))
    return {"suite": "gauge", "n": n, "maxDegree": max_degree,
            "roots": list(roots), "checks": checks}


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def run_suite(name: str, n: int, max_degree: int, c: Fraction,
              roots: Optional[Sequence[int]] = None) -> dict:
    if name == "relations":
        return relations_suite(n, max_degree)
    if name == "ck":
        return ck_suite(n, max_degree)
    if name == "projections":
        return projections_suite(n, max_degree, degree_cap=min(4, max_degree))
    if name == "masa":
        return masa_suite(n, max_degree, degree_cap=min(4, max_degree),
                          rank_cap=min(5, max_degree - 1))
    if name == "spectrum":
        return spectrum_suite(n, max_degree, c)
    if name == "gauge":
        return gauge_suite(n, max_degree, roots)
    raise ValueError("unknown suite %r" % name)


def run_all(n: int, max_degree: int, c: Fraction,
            roots: Optional[Sequence[int]] = None, jobs: int = 1) -> dict:
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_suite, name, n, max_degree, c, roots)
                       for name in SUITE_NAMES]
            reports = [f.result() for f in futures]
    else:
        reports = [run_suite(name, n, max_degree, c, roots) for name in SUITE_NAMES]
    checks: List[dict] = []
    for report in reports:
        for check in report["checks"]:
            entry = dict(check)
            entry["name"] = "%s/%s" % (report["suite"], entry["name"])
            checks.append(entry)
    return {"suite": "all", "n": n, "maxDegree": max_degree, "checks": checks}


def total_failures(report: dict) -> int:
    return sum(check["failures"] for check in report["checks"])
