"""Spectrum embedding, functionals, enumeration, and dataset emission."""

from fractions import Fraction

import pytest

from wmfock.spectrum import (BOUNDARY, INTERIOR, BoundaryPattern, FunctionalKey,
                             SpectrumConfig, boundary_convergence_report,
                             boundary_patterns, boundary_points, decimal15,
                             embed, embed_coords, emit_csv, emit_svg,
                             enumerate_spectrum, functional_apply,
                             interior_points, r_value, render_provenance,
                             verify_multiplicativity)

HALF = Fraction(1, 2)


def test_r_value_formula():
    assert r_value((1, 1), 1) == 2
    assert r_value((1, 1), 2) == 1
    assert r_value((0, 3), 1) == 0
    assert r_value((0, 0, 0), 2) == 0
    assert r_value((2, 0, 1), 1) == 3
    with pytest.raises(ValueError):
        r_value((1, 1), 3)


def test_embed_examples():
    assert embed_coords((1, 1), HALF) == (Fraction(3, 4), HALF)
    assert embed_coords((0, 0), HALF) == (Fraction(0), Fraction(0))
    assert embed_coords((2, 0), HALF) == (Fraction(3, 4), Fraction(0))
    point = embed((2, 1), HALF)
    assert point.kind == INTERIOR and point.coords == (Fraction(7, 8), HALF)


def test_config_validation():
    with pytest.raises(ValueError):
        SpectrumConfig(2, 3, Fraction(1))
    with pytest.raises(ValueError):
        SpectrumConfig(2, 3, Fraction(0))
    with pytest.raises(ValueError):
        SpectrumConfig(1, 3, HALF)


def test_interior_count_is_stars_and_bars():
    cfg = SpectrumConfig(2, 3, HALF)
    assert len(interior_points(cfg)) == 10  # C(5,2), brute count in test_fock


def test_interior_has_no_coordinate_one():
    cfg = SpectrumConfig(3, 4, Fraction(2, 3))
    for point in interior_points(cfg):
        assert all(x != 1 for x in point.coords)


def test_boundary_enumeration_n2():
    cfg = SpectrumConfig(2, 3, HALF)
    coords = {p.coords for p in boundary_points(cfg)}
    assert (Fraction(1), Fraction(0)) in coords
    assert (Fraction(1), HALF) in coords
    assert (Fraction(0), Fraction(1)) in coords
    assert (Fraction(1), Fraction(1)) in coords
    # pivot-1 tails of degree <= 3, plus the two pivot-2 bit patterns
    assert len(coords) == 6


def test_boundary_shape_invariants():
    cfg = SpectrumConfig(3, 3, HALF)
    for point in boundary_points(cfg):
        pattern = point.provenance[0]
        k = pattern.pivot
        assert point.coords[k - 1] == 1
        assert all(point.coords[j] in (Fraction(0), Fraction(1)) for j in range(k - 1))
        assert all(point.coords[j] < 1 for j in range(k, cfg.n))


def test_enumeration_is_deterministic_and_deduplicated():
    cfg = SpectrumConfig(2, 4, HALF)
    first = enumerate_spectrum(cfg)
    second = enumerate_spectrum(cfg)
    assert [(p.coords, p.kind) for p in first] == [(p.coords, p.kind) for p in second]
    boundary_coords = [p.coords for p in first if p.kind == BOUNDARY]
    assert len(boundary_coords) == len(set(boundary_coords))


def test_functional_values():
    assert functional_apply(FunctionalKey.point((2, 3, 2)), (0, 1, 2)) == 1
    assert functional_apply(FunctionalKey.point((1, 1)), (1, 1)) == 1
    assert functional_apply(FunctionalKey.point((1, 1)), (0, 2)) == 0
    assert functional_apply(FunctionalKey.vacuum(), (1, 0)) == 0
    assert functional_apply(FunctionalKey.vacuum(), (0, 0), vacuum_flag=True) == 1
    assert functional_apply(FunctionalKey.vacuum(), (0, 0), vacuum_flag=False) == 0
    assert functional_apply(FunctionalKey.identity(), (4, 7)) == 1
    with pytest.raises(ValueError):
        functional_apply(FunctionalKey.point((1, 1)), (1, 1, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_multiplicativity_no_failures(n):
    cfg = SpectrumConfig(n, 4, HALF)
    report = verify_multiplicativity(cfg, 4)
    assert report["failures"] == 0
    # the constant-1 functional cannot see zero products; reported separately
    assert report["identity_zero_product_caveats"] > 0


def test_multiplicativity_rejects_high_cap():
    with pytest.raises(ValueError):
        verify_multiplicativity(SpectrumConfig(2, 3, HALF), 4)


@pytest.mark.parametrize("n", [2, 3])
def test_point_functional_agrees_with_product_rule(n):
    from wmfock.suites import indices_up_to
    from wmfock.words import ProductResult, projection_product

    for mu in indices_up_to(n, 4):
        key = FunctionalKey.point(mu)
        for nu in indices_up_to(n, 4):
            survives = projection_product(mu, nu) is ProductResult.LEFT_SURVIVES
            assert functional_apply(key, nu) == (1 if survives else 0)


def test_boundary_convergence_exact():
    cfg = SpectrumConfig(2, 3, Fraction(1, 3))
    report = boundary_convergence_report(cfg, p_limit=12)
    assert report["failures"] == 0
    assert report["cases"] == 12 * len(boundary_patterns(cfg))


def test_decimal_rendering():
    assert decimal15(Fraction(3, 4)) == "0.75"
    assert decimal15(Fraction(1, 2)) == "0.5"
    assert decimal15(Fraction(0)) == "0"
    assert decimal15(Fraction(1)) == "1"
    assert decimal15(Fraction(1, 3)) == "0.333333333333333"
    assert decimal15(Fraction(2, 3)) == "0.666666666666667"
    assert decimal15(Fraction(-1, 8)) == "-0.125"


def test_decimal_round_half_even():
    # 0.1000000000000005 -> ties to even over 15 significant digits
    assert decimal15(Fraction(1000000000000005, 10 ** 16)) == "0.1"
    assert decimal15(Fraction(1000000000000015, 10 ** 16)) == "0.100000000000002"


def test_provenance_rendering():
    assert render_provenance((1, 1)) == "(1;1)"
    assert render_provenance(BoundaryPattern(1, (), (2,))) == "lim(k=1;eps=();tail=(2))"
    assert render_provenance(BoundaryPattern(2, (1,), ())) == "lim(k=2;eps=(1);tail=())"


def test_csv_format():
    cfg = SpectrumConfig(2, 3, HALF)
    text = emit_csv(enumerate_spectrum(cfg), 2)
    lines = text.splitlines()
    assert lines[0] == "kind,provenance,x1,x2,x1_dec,x2_dec"
    assert "interior,(1;1),3/4,1/2,0.75,0.5" in lines
    assert any(line.startswith("boundary,") and ",1/1," in line for line in lines)


def test_csv_empty_is_header_only():
    assert emit_csv([], 2) == "kind,provenance,x1,x2,x1_dec,x2_dec\n"


def test_svg_n2_well_formed_and_deterministic():
    cfg = SpectrumConfig(2, 3, HALF)
    points = enumerate_spectrum(cfg)
    svg = emit_svg(points, 2)
    assert svg == emit_svg(points, 2)
    assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == len(interior_points(cfg))
    assert svg.count("<rect x=") == len(boundary_points(cfg))
    # no interior dot may sit on the top edge (y = 1 maps to pixel 40)
    for line in svg.splitlines():
        if line.startswith("<circle"):
            assert 'cy="40.00"' not in line


def test_svg_n3_projection():
    cfg = SpectrumConfig(3, 2, HALF)
    svg = emit_svg(enumerate_spectrum(cfg), 3)
    assert svg.count("<line") == 12  # projected cube frame


def test_svg_rejects_higher_dimensions():
    with pytest.raises(ValueError):
        emit_svg([], 4)
