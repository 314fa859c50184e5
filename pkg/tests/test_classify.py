"""Curve classification: frozen verdict matrix and structural invariants.

Every frozen row was confirmed by two independent routes before freezing:
the counting route (resultant singular survey + small-circle half-branch
counts) and the branch route (Newton-Puiseux realness), which classify.py
cross-checks internally on every call.
"""

import random
from fractions import Fraction

import pytest

from realcurve.classify import (
    biregular_report,
    central_locus,
    classify_curve,
    has_totally_real_normalization,
    is_normal,
    is_o_integrally_closed,
    real_locus_dimension,
)
from realcurve.curve import Curve, Point
from realcurve.exprparse import parse_poly


def curve_of(src: str) -> Curve:
    return Curve(parse_poly(src))


# (src, n_sing, pairs, n_iso, central, normal, o_closed, trn, xb_x, xb_xp, dim)
FLAG_MATRIX = [
    ("y^2 - x^2*(x - 1)", 1, 0, 1, False, False, False, False, True, False, 1),
    ("y^2 - x^2*(x + 1)", 1, 0, 0, True, False, False, True, True, False, 1),
    ("y^2 - x^3", 1, 0, 0, True, False, False, True, True, False, 1),
    ("(y - x^2)^2 - x^5", 1, 0, 0, True, False, False, True, True, False, 1),
    ("y^2 - x*(x^2 + y^2)", 1, 0, 0, True, False, False, True, True, False, 1),
    ("x^2 + y^2 - 1", 0, 0, 0, True, True, True, True, True, True, 1),
    ("x*y", 1, 0, 0, True, False, False, True, True, False, 1),
    ("x^2 + y^2", 1, 0, 1, False, False, False, False, True, False, 0),
    ("y^2 + (x^2 - 2)^2", 2, 0, 2, False, False, False, False, True, False, 0),
    ("x^2 + y^2 + 1", 0, 0, 0, True, True, True, True, True, True, -1),
    ("y^2 - x*(x^2 + 1)^2", 0, 1, 0, True, False, True, True, False, True, 1),
    ("(y - x^2)*(y + x^2 - 4)", 2, 0, 0, True, False, False, True, True, False, 1),
    ("(x - 1)*(y^2 - x^3)", 3, 0, 0, True, False, False, True, True, False, 1),
]


@pytest.mark.parametrize(
    "src,n_sing,pairs,n_iso,central,normal,o_closed,trn,xb_x,xb_xp,dim",
    FLAG_MATRIX,
    ids=[row[0] for row in FLAG_MATRIX],
)
def test_frozen_flags(src, n_sing, pairs, n_iso, central, normal, o_closed,
                      trn, xb_x, xb_xp, dim):
    rep = classify_curve(curve_of(src))
    assert len(rep.singular_real_points) == n_sing
    assert rep.nonreal_singular_pairs == pairs
    assert len(rep.isolated_real_points) == n_iso
    assert rep.is_central is central
    assert rep.is_normal is normal
    assert rep.o_integrally_closed is o_closed
    assert rep.totally_real_normalization is trn
    assert rep.biregular.xb_equals_x is xb_x
    assert rep.biregular.xb_equals_xprime is xb_xp
    assert rep.real_locus_dimension == dim
    assert not rep.undetermined_singular
    assert not rep.undetermined_centers


def test_singular_point_coordinates():
    rep = classify_curve(curve_of("(x - 1)*(y^2 - x^3)"))
    assert rep.singular_real_points == [Point(0, 0), Point(1, -1), Point(1, 1)]

    rep = classify_curve(curve_of("(y - x^2)*(y + x^2 - 4)"))
    xs = sorted(p.x.approx() for p in rep.singular_real_points)
    assert xs[0] == pytest.approx(-(2 ** 0.5), abs=1e-12)
    assert xs[1] == pytest.approx(2 ** 0.5, abs=1e-12)
    assert all(p.y == 2 for p in rep.singular_real_points)

    rep = classify_curve(curve_of("y^2 + (x^2 - 2)^2"))
    assert rep.isolated_real_points == rep.singular_real_points
    assert all(p.y == 0 for p in rep.isolated_real_points)


def test_pair_minimal_polys():
    rep = classify_curve(curve_of("y^2 - x*(x^2 + 1)^2"))
    assert [str(q) for q in rep.pair_minimal_polys] == ["x^2 + 1"]
    rep = classify_curve(curve_of("y^2 - (x^3 - 2)^2"))
    assert [str(q) for q in rep.pair_minimal_polys] == ["x^3 - 2"]


def test_axes_per_component():
    rep = classify_curve(curve_of("x*y"))
    assert len(rep.per_component) == 2
    for sub in rep.per_component:
        assert sub.is_normal is True
        assert sub.is_central is True
        assert not sub.singular_real_points
    assert rep.is_normal is False
    assert any("union" in w for w in rep.warnings)


def test_line_cusp_per_component():
    rep = classify_curve(curve_of("(x - 1)*(y^2 - x^3)"))
    assert len(rep.per_component) == 2
    normals = sorted(sub.is_normal for sub in rep.per_component)
    assert normals == [False, True]
    assert all(sub.is_central is True for sub in rep.per_component)
    assert rep.o_integrally_closed is False


def test_undetermined_cubic_center():
    # the real crossing sits at x = 2^(1/3): beyond the quadratic tower,
    # and the locus has arcs so no finite-locus certificate applies
    rep = classify_curve(curve_of("y^2 - (x^3 - 2)^2"))
    assert rep.is_central is None
    assert rep.totally_real_normalization is None
    assert len(rep.undetermined_centers) == 1
    assert "degree 3" in rep.undetermined_centers[0][1]
    assert rep.o_integrally_closed is False
    assert rep.is_normal is False
    assert rep.nonreal_singular_pairs == 1
    assert any("undetermined" in w for w in rep.warnings)


def test_finite_locus_decides_quadratic_isolated_points():
    # branch analysis at (±√2, 0) would need a second quadratic extension,
    # but dimension 0 certifies both points isolated anyway
    rep = classify_curve(curve_of("y^2 + (x^2 - 2)^2"))
    assert rep.is_central is False
    assert rep.totally_real_normalization is False
    assert len(rep.isolated_real_points) == 2
    assert not rep.undetermined_centers
    assert any("finite" in w for w in rep.warnings)


def test_locus_size_warnings():
    rep = classify_curve(curve_of("x^2 + y^2 + 1"))
    assert any("empty" in w for w in rep.warnings)
    rep = classify_curve(curve_of("x^2 + y^2"))
    assert any("finite" in w for w in rep.warnings)
    rep = classify_curve(curve_of("x^2 + y^2 - 1"))
    assert not rep.warnings


@pytest.mark.parametrize("src", [row[0] for row in FLAG_MATRIX])
def test_standalone_ops_agree_with_report(src):
    curve = curve_of(src)
    rep = classify_curve(curve, with_components=False)
    cl = central_locus(curve)
    assert cl["is_central"] is rep.is_central
    assert cl["isolated_real_points"] == rep.isolated_real_points
    assert is_normal(curve) is rep.is_normal
    assert is_o_integrally_closed(curve) is rep.o_integrally_closed
    assert has_totally_real_normalization(curve) is rep.totally_real_normalization
    bi = biregular_report(curve)
    assert bi.xb_equals_x is rep.biregular.xb_equals_x
    assert bi.xb_equals_xprime is rep.biregular.xb_equals_xprime
    assert bi.normalized_nonreal_pairs == rep.nonreal_singular_pairs


DIM_TABLE = [
    ("x^2 + y^2", 0),
    ("x^2 + y^2 + 1", -1),
    ("x^2 + y^2 - 1", 1),
    ("x^2 + y^2 - 2", 1),
    ("y^2 + (x^2 - 2)^2", 0),
    ("(x^2 + y^2)*(x^2 + y^2 - 1)", 1),
    ("(x^2 + y^2 + 1)*(x^2 + y^2 - 3)", 1),
    ("y^2 - x^2*(x - 1)", 1),
    ("x*y - 1", 1),
]


@pytest.mark.parametrize("src,dim", DIM_TABLE, ids=[r[0] for r in DIM_TABLE])
def test_real_locus_dimension_frozen(src, dim):
    assert real_locus_dimension(curve_of(src)) == dim


def _assert_chain(rep):
    """Implications every report must satisfy, whatever the curve."""
    if rep.is_central is True:
        assert not rep.isolated_real_points
    if rep.is_central is False:
        assert rep.isolated_real_points or rep.real_locus_dimension == 0
    for p in rep.isolated_real_points:
        assert p in rep.singular_real_points
    if rep.is_normal:
        assert rep.o_integrally_closed
        assert rep.totally_real_normalization is True
        assert rep.biregular.xb_equals_x and rep.biregular.xb_equals_xprime
    assert (rep.biregular.xb_equals_x and rep.biregular.xb_equals_xprime) \
        is rep.is_normal
    assert rep.biregular.xb_equals_x is (rep.nonreal_singular_pairs == 0)
    assert rep.o_integrally_closed is (
        not rep.singular_real_points and not rep.undetermined_singular
    )
    assert rep.biregular.xb_equals_xprime is rep.o_integrally_closed
    if rep.totally_real_normalization is False:
        assert not rep.o_integrally_closed
    if rep.real_locus_dimension == -1:
        assert not rep.singular_real_points
        assert rep.is_central is True
    if rep.real_locus_dimension == 0:
        assert rep.is_central is False
        assert rep.totally_real_normalization is False
        assert rep.isolated_real_points == rep.singular_real_points


@pytest.mark.parametrize("src", [row[0] for row in FLAG_MATRIX])
def test_chain_invariants_on_fixtures(src):
    _assert_chain(classify_curve(curve_of(src)))


def test_flags_invariant_under_shear():
    rng = random.Random(20260816)
    pool = [row[0] for row in FLAG_MATRIX]
    base = {src: classify_curve(curve_of(src), with_components=False)
            for src in pool}
    for _ in range(30):
        src = rng.choice(pool)
        lam = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
        if lam == 0:
            lam = Fraction(1)
        sheared = Curve(parse_poly(src).shear(lam))
        rep = classify_curve(sheared, with_components=False)
        _assert_chain(rep)
        ref = base[src]
        got = (rep.is_central, rep.is_normal, rep.o_integrally_closed,
               rep.totally_real_normalization, rep.biregular.xb_equals_x,
               rep.biregular.xb_equals_xprime, rep.real_locus_dimension,
               len(rep.singular_real_points), len(rep.isolated_real_points),
               rep.nonreal_singular_pairs)
        want = (ref.is_central, ref.is_normal, ref.o_integrally_closed,
                ref.totally_real_normalization, ref.biregular.xb_equals_x,
                ref.biregular.xb_equals_xprime, ref.real_locus_dimension,
                len(ref.singular_real_points), len(ref.isolated_real_points),
                ref.nonreal_singular_pairs)
        assert got == want, f"{src} sheared by {lam}"
