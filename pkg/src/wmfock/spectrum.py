"""The Gelfand spectrum of the diagonal subalgebra, embedded in the unit cube.

Each projection index ``mu`` defines a multiplicative functional on the
diagonal projections via the order of :func:`wmfock.words.precedes`, and is
identified with the point ``x(mu)`` of ``[0, 1]^n`` whose k-th coordinate is
``1 - c**r_k(mu)`` for a fixed rational ``c`` in (0, 1).  Interior points are
the images of the finitely many indices of degree ``<= max_degree``;
boundary points realize the coordinatewise limits obtained by sending one
slot of the index to infinity, and are enumerated by a pivot letter, a block
of 0/1 bits below it, and a finite tail above it.

Coordinates are exact rationals throughout; the decimal columns of the CSV
dataset are a 15-significant-digit rendering (round half to even) computed
by integer arithmetic, so emitted files are byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .fock import MultiIndex, TruncationParams, _compositions, enumerate_basis
from .sparse import frac_str
from .words import ProductResult, precedes, projection_product

INTERIOR = "interior"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class SpectrumConfig:
    n: int
    max_degree: int
    c: Fraction

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        c = self.c
        if not isinstance(c, Fraction):
            object.__setattr__(self, "c", Fraction(c))
            c = self.c
        if not Fraction(0) < c < Fraction(1):
            raise ValueError("c must lie strictly between 0 and 1")


@dataclass(frozen=True)
class BoundaryPattern:
    """Limit pattern: pivot letter, 0/1 bits below it, finite tail above it."""

    pivot: int
    bits: Tuple[int, ...]
    tail: Tuple[int, ...]

    def index_at(self, p: int) -> MultiIndex:
        """The index with the pivot slot set to ``p`` (the approximating family)."""
        return self.bits + (p,) + self.tail


Provenance = Tuple[object, ...]  # multi-indices (interior) or BoundaryPattern


@dataclass(frozen=True)
class SpectrumPoint:
    coords: Tuple[Fraction, ...]
    kind: str
    provenance: Provenance


def r_value(mu: MultiIndex, k: int) -> int:
    """The exponent r_k: the tail sum mu_k + ... + mu_n, or 0 when mu_k = 0."""
    if not 1 <= k <= len(mu):
        raise ValueError("k must lie in 1..%d, got %d" % (len(mu), k))
    if mu[k - 1] == 0:
        return 0
    return sum(mu[k - 1:])


def embed_coords(mu: MultiIndex, c: Fraction) -> Tuple[Fraction, ...]:
    """The cube point with coordinates 1 - c**r_k(mu), all exact."""
    return tuple(1 - c ** r_value(mu, k) for k in range(1, len(mu) + 1))


def embed(mu: MultiIndex, c: Fraction) -> SpectrumPoint:
    mu = tuple(mu)
    return SpectrumPoint(embed_coords(mu, c), INTERIOR, (mu,))


def _tails(parts: int, cap: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        yield ()
        return
    for d in range(cap + 1):
        yield from _compositions(d, parts)


def boundary_patterns(cfg: SpectrumConfig) -> List[BoundaryPattern]:
    out: List[BoundaryPattern] = []
    for pivot in range(1, cfg.n + 1):
        for bits_value in range(1 << (pivot - 1)):
            bits = tuple((bits_value >> j) & 1 for j in range(pivot - 1))
            for tail in _tails(cfg.n - pivot, cfg.max_degree):
                out.append(BoundaryPattern(pivot, bits, tail))
    return out


def boundary_coords(pattern: BoundaryPattern, cfg: SpectrumConfig) -> Tuple[Fraction, ...]:
    padded = (0,) * pattern.pivot + pattern.tail
    coords = [Fraction(b) for b in pattern.bits]
    coords.append(Fraction(1))
    coords.extend(1 - cfg.c ** r_value(padded, j) for j in range(pattern.pivot + 1, cfg.n + 1))
    return tuple(coords)


def interior_points(cfg: SpectrumConfig) -> List[SpectrumPoint]:
    params = TruncationParams(cfg.n, cfg.max_degree)
    return [embed(mu, cfg.c) for mu in enumerate_basis(params)]


def boundary_points(cfg: SpectrumConfig) -> List[SpectrumPoint]:
    by_coords: Dict[Tuple[Fraction, ...], List[BoundaryPattern]] = {}
    for pattern in boundary_patterns(cfg):
        by_coords.setdefault(boundary_coords(pattern, cfg), []).append(pattern)
    return [SpectrumPoint(coords, BOUNDARY, tuple(patterns))
            for coords, patterns in sorted(by_coords.items())]


def enumerate_spectrum(cfg: SpectrumConfig) -> List[SpectrumPoint]:
    """Interior points in graded index order, then boundary points by coords."""
    return interior_points(cfg) + boundary_points(cfg)


# ---------------------------------------------------------------------------
# multiplicative functionals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FunctionalKey:
    """A multiplicative functional: vacuum, identity, or a point functional."""

    kind: str
    mu: Optional[MultiIndex] = None

    @classmethod
    def vacuum(cls) -> "FunctionalKey":
        return cls("vacuum")

    @classmethod
    def identity(cls) -> "FunctionalKey":
        return cls("identity")

    @classmethod
    def point(cls, mu: MultiIndex) -> "FunctionalKey":
        return cls("point", tuple(mu))

    def render(self) -> str:
        if self.kind == "point":
            return "phi(%s)" % ";".join(str(x) for x in self.mu)
        return "phi_%s" % ("0" if self.kind == "vacuum" else "1")


def functional_apply(key: FunctionalKey, nu: MultiIndex, vacuum_flag: bool = False) -> int:
    """Value of the functional on P_nu (or P0_nu when ``vacuum_flag``).

    Point functionals give P_nu and P0_nu the same value, 1 exactly when
    ``nu`` equals or precedes the key index.  The vacuum functional is 1
    only on the vacuum projection itself; the identity functional is
    constant 1.
    """
    nu = tuple(nu)
    if key.kind == "identity":
        return 1
    if key.kind == "vacuum":
        return 1 if (vacuum_flag and not any(nu)) else 0
    if len(key.mu) != len(nu):
        raise ValueError("length mismatch: %d vs %d" % (len(key.mu), len(nu)))
    return 1 if (nu == key.mu or precedes(nu, key.mu)) else 0


def _indices_up_to(n: int, cap: int) -> List[MultiIndex]:
    out: List[MultiIndex] = []
    for d in range(cap + 1):
        out.extend(_compositions(d, n))
    return out


def verify_multiplicativity(cfg: SpectrumConfig, degree_cap: int) -> dict:
    """Exhaustively check phi(P_nu P_rho) = phi(P_nu) phi(P_rho).

    Products are resolved by :func:`wmfock.words.projection_product`; when a
    product vanishes the functional value of 0 is taken as 0.  The constant
    identity functional then sees 0 != 1 on annihilating pairs; those cases
    are reported separately as caveats, not as failures, because a constant
    functional cannot be multiplicative on a zero product.
    """
    if degree_cap > cfg.max_degree:
        raise ValueError("degree cap exceeds max_degree")
    indices = _indices_up_to(cfg.n, degree_cap)
    keys = [FunctionalKey.vacuum(), FunctionalKey.identity()]
    keys.extend(FunctionalKey.point(mu) for mu in indices)
    cases = 0
    failures: List[dict] = []
    caveats = 0
    first_caveat = None
    for key in keys:
        for nu in indices:
            for rho in indices:
                outcome = projection_product(nu, rho)
                if outcome is ProductResult.ZERO:
                    product_value = 0
                elif outcome is ProductResult.LEFT_SURVIVES:
                    product_value = functional_apply(key, nu)
                else:
                    product_value = functional_apply(key, rho)
                expected = functional_apply(key, nu) * functional_apply(key, rho)
                cases += 1
                if product_value != expected:
                    if key.kind == "identity" and outcome is ProductResult.ZERO:
                        caveats += 1
                        if first_caveat is None:
                            first_caveat = {"nu": list(nu), "rho": list(rho)}
                    else:
                        failures.append({
                            "functional": key.render(),
                            "nu": list(nu), "rho": list(rho),
                            "product": outcome.value,
                            "got": product_value, "want": expected,
                        })
    return {
        "cases": cases,
        "failures": len(failures),
        "first_failure": failures[0] if failures else None,
        "identity_zero_product_caveats": caveats,
        "first_caveat": first_caveat,
    }


def boundary_convergence_report(cfg: SpectrumConfig, p_limit: int = 20) -> dict:
    """Exact check that the approximating families reach their boundary points.

    For every boundary pattern and p = 1..p_limit: coordinates above the
    pivot are already equal to the limit, bits below are constant, and the
    pivot coordinate increases strictly with gap exactly c**(p + tail sum).
    """
    cases = 0
    failures: List[dict] = []
    for pattern in boundary_patterns(cfg):
        target = boundary_coords(pattern, cfg)
        k = pattern.pivot
        tail_sum = sum(pattern.tail)
        previous = None
        for p in range(1, p_limit + 1):
            coords = embed_coords(pattern.index_at(p), cfg.c)
            ok = all(coords[j] == target[j] for j in range(k, cfg.n))
            for j in range(k - 1):
                if pattern.bits[j] == 0:
                    ok = ok and coords[j] == 0
                else:
                    ok = ok and coords[j] < 1
                    if previous is not None:
                        ok = ok and coords[j] > previous[j]
            gap = 1 - coords[k - 1]
            ok = ok and gap == cfg.c ** (p + tail_sum)
            if previous is not None:
                ok = ok and coords[k - 1] > previous[k - 1]
            cases += 1
            if not ok:
                failures.append({"pattern": render_provenance(pattern), "p": p})
            previous = coords
    return {"cases": cases, "failures": len(failures),
            "first_failure": failures[0] if failures else None}


# ---------------------------------------------------------------------------
# dataset emission
# ---------------------------------------------------------------------------


def decimal15(x: Fraction) -> str:
    """15 significant decimal digits, round half to even, no exponent form."""
    x = x if isinstance(x, Fraction) else Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    exp = 0
    while x >= 10:
        x /= 10
        exp += 1
    while x < 1:
        x *= 10
        exp -= 1
    # x in [1, 10); 15 significant digits total
    num, den = x.numerator, x.denominator
    scaled_num = num * 10 ** 14
    q, r = divmod(scaled_num, den)
    double = 2 * r
    if double > den or (double == den and q % 2 == 1):
        q += 1
    if q == 10 ** 15:
        q //= 10
        exp += 1
    digits = str(q)
    if exp >= 0:
        int_part = digits[: exp + 1]
        frac_part = digits[exp + 1:].rstrip("0")
    else:
        int_part = "0"
        frac_part = ("0" * (-exp - 1) + digits).rstrip("0")
    return sign + (int_part + "." + frac_part if frac_part else int_part)


def render_provenance(item) -> str:
    if isinstance(item, BoundaryPattern):
        return "lim(k=%d;eps=(%s);tail=(%s))" % (
            item.pivot,
            ";".join(str(b) for b in item.bits),
            ";".join(str(t) for t in item.tail),
        )
    return "(%s)" % ";".join(str(x) for x in item)


def point_provenance(point: SpectrumPoint) -> str:
    return "|".join(render_provenance(item) for item in point.provenance)


def emit_csv(points: Sequence[SpectrumPoint], n: int) -> str:
    header = ["kind", "provenance"]
    header.extend("x%d" % k for k in range(1, n + 1))
    header.extend("x%d_dec" % k for k in range(1, n + 1))
    lines = [",".join(header)]
    for point in points:
        row = [point.kind, point_provenance(point)]
        row.extend(frac_str(x) for x in point.coords)
        row.extend(decimal15(x) for x in point.coords)
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


_SVG_SIZE = 760
_SVG_MARGIN = 40


def _fmt2(x: Fraction) -> str:
    """Two decimals, round half to even; deterministic pixel coordinates."""
    x = x if isinstance(x, Fraction) else Fraction(x)
    sign = "-" if x < 0 else ""
    q, r = divmod(abs(x).numerator * 100, abs(x).denominator)
    double = 2 * r
    if double > abs(x).denominator or (double == abs(x).denominator and q % 2 == 1):
        q += 1
    return "%s%d.%02d" % (sign, q // 100, q % 100)


def _project(coords: Tuple[Fraction, ...]) -> Tuple[Fraction, Fraction]:
    # n = 2: plain plane; n = 3: cavalier projection, x2 receding at slope 2/5
    if len(coords) == 2:
        return coords[0], coords[1]
    depth = Fraction(2, 5)
    return coords[0] + depth * coords[1], coords[2] + depth * coords[1]


def _pixel(u: Fraction, v: Fraction, scale: Fraction) -> Tuple[Fraction, Fraction]:
    px = _SVG_MARGIN + u * scale
    py = _SVG_SIZE - _SVG_MARGIN - v * scale
    return px, py


def emit_svg(points: Sequence[SpectrumPoint], n: int) -> str:
    """Unit square (n=2) or projected unit cube (n=3) with the point set.

    Interior points are filled dots, boundary points open squares.  Output
    is byte-deterministic for a fixed input order.
    """
    if n not in (2, 3):
        raise ValueError("svg emission supports n = 2 or 3 only; use csv")
    span = Fraction(1) if n == 2 else Fraction(7, 5)
    scale = (_SVG_SIZE - 2 * _SVG_MARGIN) / span
    corners = [(Fraction(x1), Fraction(x2)) for x1 in (0, 1) for x2 in (0, 1)]
    lines: List[str] = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (_SVG_SIZE, _SVG_SIZE, _SVG_SIZE, _SVG_SIZE),
        '<rect width="%d" height="%d" fill="white"/>' % (_SVG_SIZE, _SVG_SIZE),
    ]
    if n == 2:
        edges = [(c1, c2) for c1 in corners for c2 in corners
                 if sum(a != b for a, b in zip(c1, c2)) == 1]
    else:
        cube = [(Fraction(x1), Fraction(x2), Fraction(x3))
                for x1 in (0, 1) for x2 in (0, 1) for x3 in (0, 1)]
        edges = [(c1, c2) for c1 in cube for c2 in cube
                 if sum(a != b for a, b in zip(c1, c2)) == 1]
    seen = set()
    for c1, c2 in edges:
        key = tuple(sorted((c1, c2)))
        if key in seen:
            continue
        seen.add(key)
        x1, y1 = _pixel(*_project(c1), scale)
        x2, y2 = _pixel(*_project(c2), scale)
        lines.append('<line x1="%s" y1="%s" x2="%s" y2="%s" '
                     'stroke="#888888" stroke-width="1"/>'
                     % (_fmt2(x1), _fmt2(y1), _fmt2(x2), _fmt2(y2)))
    for point in points:
        px, py = _pixel(*_project(point.coords), scale)
        title = "%s %s" % (point.kind, point_provenance(point))
        if point.kind == INTERIOR:
            lines.append('<circle cx="%s" cy="%s" r="4" fill="#c0392b">'
                         '<title>%s</title></circle>' % (_fmt2(px), _fmt2(py), title))
        else:
            lines.append('<rect x="%s" y="%s" width="8" height="8" fill="none" '
                         'stroke="#2c3e50" stroke-width="1.5">'
                         '<title>%s</title></rect>'
                         % (_fmt2(px - 4), _fmt2(py - 4), title))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
