"""Zero-dimensional real solving, singular loci, and half-branch counts."""

from fractions import Fraction

import pytest

from realcurve.curve import Curve, Point
from realcurve.errors import CurveError, PositiveDimensional, UnsupportedCenter
from realcurve.exprparse import parse_poly
from realcurve.polycore import BiPoly, UniPoly, alg_sign
from realcurve.realsolve import (
    admissible_radius,
    count_real_solutions,
    half_branch_count,
    singular_points,
    solve_real_points,
)

from oracles import oracle_circle_crossings


def bp(src):
    return parse_poly(src)


def test_count_real_solutions_basic():
    # circle meets the x-axis twice
    assert count_real_solutions(bp("x^2 + y^2 - 1"), bp("y")) == 2
    # cusp meets the diagonal at (0,0) and (1,1): x^3 = x^2
    assert count_real_solutions(bp("y^2 - x^3"), bp("y - x")) == 2
    # on the line x = 0 the cubic pinches to y^2 = 0
    assert count_real_solutions(bp("y^2 - x^3 + x^2"), bp("x")) == 1
    # vertical fiber holding two stacked points
    assert count_real_solutions(bp("y^2 - x"), bp("x - 1")) == 2
    # four symmetric intersections
    assert count_real_solutions(bp("x^2 + y^2 - 2"), bp("x^2 - y^2")) == 4


def test_count_real_solutions_empty():
    assert count_real_solutions(bp("x^2 + y^2 + 1"), bp("y - x")) == 0
    assert count_real_solutions(bp("x^2 + y^2 - 1"), bp("x - 5")) == 0


def test_count_rejects_positive_dimensional():
    with pytest.raises(PositiveDimensional):
        count_real_solutions(bp("x*y"), bp("x"))
    with pytest.raises(PositiveDimensional):
        count_real_solutions(bp("x - x"), bp("y"))


def test_solve_circle_axis():
    pts = solve_real_points(bp("x^2 + y^2 - 1"), bp("y"))
    assert pts == [Point(-1, 0), Point(1, 0)]
    assert all(p.rational_coords() is not None for p in pts)


def test_solve_diagonal_irrational():
    pts = solve_real_points(bp("x^2 + y^2 - 5"), bp("y - x"))
    assert len(pts) == 2
    half_ten = UniPoly("x", (-5, 0, 2))  # 2t^2 - 5 annihilates both coords
    for p in pts:
        assert alg_sign(half_ten, p.x) == 0
        assert p.x == p.y
    ax, bx = (p.approx() for p in pts)
    assert abs(ax[0] + 1.5811388300841898) < 1e-9
    assert abs(bx[0] - 1.5811388300841898) < 1e-9


def test_solve_stacked_fiber_recovers_rational_x():
    # solutions (2, +-sqrt 2) sit on one vertical line; any admissible shear
    # moves them onto irrational fibers, and the unshear must return x = 2
    pts = solve_real_points(bp("x - y^2"), bp("x - 2"))
    assert len(pts) == 2
    root_two = UniPoly("x", (-2, 0, 1))
    for p in pts:
        assert p.x == Fraction(2)
        assert alg_sign(root_two, p.y) == 0
    assert pts[0].y < 0 < pts[1].y


def test_solve_matches_count():
    systems = [
        ("x^2 + y^2 - 1", "y"),
        ("x^2 + y^2 - 1", "x - y"),
        ("y^2 - x^3", "y - x"),
        ("x^2 + y^2 - 5", "y - x"),
        ("y - x^2", "y + x^2 - 4"),
        ("x^2 + y^2 - 2", "x^2 - y^2"),
        ("x*y - 1", "y - x"),
        ("y^2 - x", "x - 1"),
    ]
    for fs, gs in systems:
        f, g = bp(fs), bp(gs)
        assert count_real_solutions(f, g) == len(solve_real_points(f, g)), (fs, gs)


FIXTURE_SINGULAR = [
    # curve, real singular points, conjugate pair count
    ("y^2 - x^3 + x^2", [Point(0, 0)], 0),
    ("y^2 - x^3 - x^2", [Point(0, 0)], 0),
    ("y^2 - x^3", [Point(0, 0)], 0),
    ("x^2 + y^2 - 1", [], 0),
    ("x*y", [Point(0, 0)], 0),
    ("y^2 - x^3 - x*y^2", [Point(0, 0)], 0),
    ("x^2 + y^2", [Point(0, 0)], 0),
]


def test_singular_points_fixtures():
    for src, real, pairs in FIXTURE_SINGULAR:
        rep = singular_points(Curve(bp(src)))
        assert rep["real_points"] == real, src
        assert rep["nonreal_pair_count"] == pairs, src
        assert rep["unsupported"] == [], src


def test_singular_points_conjugate_pair():
    # y^2 = (x^2+1)^2 x is smooth over the reals but has a singular
    # conjugate pair at x = +-i
    rep = singular_points(Curve(bp("y^2 - (x^2 + 1)^2 * x")))
    assert rep["real_points"] == []
    assert rep["nonreal_pair_count"] == 1
    assert rep["unsupported"] == []
    expected = UniPoly("x", (1, 0, 1))
    assert any(q == expected for q in rep["nonreal_pair_data"])


def test_singular_points_irrational_nodes():
    # two parabolas crossing at (+-sqrt 2, 2)
    rep = singular_points(Curve(bp("(y - x^2) * (y + x^2 - 4)")))
    pts = rep["real_points"]
    assert len(pts) == 2
    assert rep["nonreal_pair_count"] == 0
    root_two = UniPoly("x", (-2, 0, 1))
    for p in pts:
        assert alg_sign(root_two, p.x) == 0
        assert p.y == Fraction(2)
    assert pts[0].x < 0 < pts[1].x


HALF_BRANCH_CASES = [
    # curve, center, expected half-branch count
    ("y^2 - x^3 + x^2", (0, 0), 0),  # isolated point
    ("y^2 - x^3 - x^2", (0, 0), 4),  # node
    ("y^2 - x^3", (0, 0), 2),  # cusp
    ("x^2 + y^2 - 1", (1, 0), 2),  # smooth point
    ("x*y", (0, 0), 4),  # two lines
    ("y^2 - x^3 - x*y^2", (0, 0), 2),  # singular but not isolated
    ("x^2 + y^2", (0, 0), 0),  # whole curve is the point
]


def test_half_branch_count_fixtures():
    for src, (a, b), expected in HALF_BRANCH_CASES:
        curve = Curve(bp(src))
        p = Point(a, b)
        assert half_branch_count(curve, p) == expected, src


def test_half_branch_count_matches_float_oracle():
    for src, (a, b), expected in HALF_BRANCH_CASES:
        curve = Curve(bp(src))
        eps = admissible_radius(curve, Point(a, b))
        if eps == 0:
            continue
        got = oracle_circle_crossings(curve.f.terms, a, b, eps)
        assert got == expected, src


def test_half_branch_count_radius_stable():
    for src, center, expected in [
        ("y^2 - x^3 - x^2", (0, 0), 4),
        ("y^2 - x^3", (0, 0), 2),
    ]:
        curve = Curve(bp(src))
        p = Point(*center)
        eps = admissible_radius(curve, p)
        assert eps > 0
        assert half_branch_count(curve, p, eps) == expected
        assert half_branch_count(curve, p, eps / 2) == expected


def test_half_branch_count_errors():
    circle = Curve(bp("x^2 + y^2 - 1"))
    with pytest.raises(CurveError):
        half_branch_count(circle, Point(2, 0))
    on_big = Curve(bp("x^2 + y^2 - 5"))
    irr = solve_real_points(bp("x^2 + y^2 - 5"), bp("y - x"))[0]
    with pytest.raises(UnsupportedCenter):
        half_branch_count(on_big, irr)


def test_admissible_radius_clears_nearby_features():
    # second branch of the node passes within distance 1 of (1, 0)... the
    # returned radius must stay below every crossing with the other features
    curve = Curve(bp("x^2 + y^2 - 1"))
    eps = admissible_radius(curve, Point(1, 0))
    assert 0 < eps < 2
    union = Curve(bp("(x^2 + y^2 - 1) * (x - 2)"))
    eps2 = admissible_radius(union, Point(1, 0))
    assert 0 < eps2 <= Fraction(1, 2)
    assert half_branch_count(union, Point(1, 0)) == 2
