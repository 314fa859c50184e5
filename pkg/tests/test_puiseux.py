"""Branch expansions: parametrizations, realness, valuations, limits."""

import math
from fractions import Fraction

import pytest

from oracles import binomial_series_coeff
from realcurve.curve import Curve, Point
from realcurve.errors import CurveError, PrecisionExhausted, UnsupportedExtension
from realcurve.exprparse import parse_poly
from realcurve.polycore import QuadExtElt, UniPoly, isolate_real_roots
from realcurve.puiseux import (
    TSeries,
    branch_limit,
    branch_valuation,
    branches_at,
    conjugate_pairs,
    real_branches,
    values_equal,
)
from realcurve.realsolve import half_branch_count

bp = parse_poly
ORIGIN = Point(0, 0)


def curve(src):
    return Curve(bp(src))


def ycoeffs(branch, n):
    return [branch.y_coeff(k) for k in range(n)]


def test_tseries_window_rules():
    a = TSeries((1, 1), 5)
    b = TSeries((1, -1), 3)
    p = a * b
    assert p.prec == 3
    assert p.coeffs == (1, 0, -1)
    assert (a + b).prec == 3
    assert a.shift_up(2).prec == 7
    assert a.shift_up(2).coeffs == (0, 0, 1, 1)
    assert (a**2).coeffs == (1, 2, 1)
    assert TSeries((0, 0, 7), 4).order() == 2
    assert TSeries.zero(4).order() is None


def test_cusp_single_real_branch():
    b, = branches_at(curve("y^2 - x^3"), ORIGIN)
    assert b.kind == "Real" and b.places == 1
    assert b.e == 2 and b.x_coeff == 1
    assert b.x_series(4).coeffs == (0, 0, 1)
    # y = t^3 exactly
    assert ycoeffs(b, 9) == [0, 0, 0, 1, 0, 0, 0, 0, 0]


def test_cusp_opening_left_is_real():
    b, = branches_at(curve("y^2 + x^3"), ORIGIN)
    assert b.kind == "Real"
    assert b.e == 2 and b.x_coeff == -1
    assert ycoeffs(b, 6) == [0, 0, 0, 1, 0, 0]


def test_node_two_real_branches_binomial_series():
    bs = branches_at(curve("y^2 - x^3 - x^2"), ORIGIN)
    assert len(bs) == 2
    assert all(b.kind == "Real" and b.e == 1 for b in bs)
    assert {b.y_coeff(1) for b in bs} == {Fraction(1), Fraction(-1)}
    # y = +- t*sqrt(1+t)
    half = Fraction(1, 2)
    for b in bs:
        s = b.y_coeff(1)
        for k in range(1, 10):
            assert b.y_coeff(k) == s * binomial_series_coeff(half, k - 1)


def test_isolated_point_is_one_conjugate_pair():
    bs = branches_at(curve("y^2 - x^3 + x^2"), ORIGIN)
    assert len(bs) == 1
    b = bs[0]
    assert b.kind == "ComplexConjugatePair" and b.places == 2
    assert b.e == 1 and b.field_disc == -4
    assert b.y_coeff(1) == QuadExtElt(-4, 0, Fraction(1, 2))
    assert real_branches(bs) == [] and conjugate_pairs(bs) == [b]


def test_grospoint_single_ramified_real_branch():
    b, = branches_at(curve("y^2 - x^3 - x*y^2"), ORIGIN)
    assert b.kind == "Real" and b.e == 2 and b.x_coeff == 1
    assert ycoeffs(b, 8) == [0, 0, 0, 1, 0, Fraction(1, 2), 0, Fraction(3, 8)]
    # y = t^3 / sqrt(1 - t^2)
    mhalf = Fraction(-1, 2)
    for k in range(4):
        assert b.y_coeff(2 * k + 3) == binomial_series_coeff(mhalf, k) * (-1) ** k


def test_smooth_vertical_tangent_exact_series():
    b, = branches_at(curve("y^2 - x^5 - 2*x^3 - x"), ORIGIN)
    assert b.kind == "Real" and b.e == 2 and b.x_coeff == 1
    # y = t + t^5 exactly
    assert ycoeffs(b, 10) == [0, 1, 0, 0, 0, 1, 0, 0, 0, 0]


def test_circle_east_point():
    b, = branches_at(curve("x^2 + y^2 - 1"), Point(1, 0))
    assert b.kind == "Real" and b.e == 2 and b.x_coeff == -2
    assert b.x_series(3).coeffs == (1, 0, -2)
    half = Fraction(1, 2)
    for k in range(4):
        assert b.y_coeff(2 * k + 1) == -2 * binomial_series_coeff(half, k) * (-1) ** k
        assert b.y_coeff(2 * k) == 0


def test_axes_vertical_plus_horizontal():
    bs = branches_at(curve("x*y"), ORIGIN)
    assert len(bs) == 2
    vert = [b for b in bs if b.is_vertical]
    horiz = [b for b in bs if not b.is_vertical]
    assert len(vert) == len(horiz) == 1
    assert vert[0].e == 0 and vert[0].x_coeff == 0
    assert vert[0].x_series(4).coeffs == ()
    assert vert[0].y_series(4).coeffs == (0, 1)
    assert horiz[0].e == 1 and ycoeffs(horiz[0], 6) == [0] * 6


def test_line_times_cusp_curve_at_smooth_crossing():
    bs = branches_at(curve("(x - 1)*(y^2 - x^3)"), Point(1, 1))
    assert len(bs) == 2
    vert = next(b for b in bs if b.is_vertical)
    smooth = next(b for b in bs if not b.is_vertical)
    assert vert.x_series(3).coeffs == (1,)
    assert vert.y_series(3).coeffs == (1, 1)
    assert smooth.e == 1 and smooth.y_coeff(1) == Fraction(3, 2)


def test_quadratic_center_two_real_branches():
    c = curve("(y - x^2)*(y + x^2 - 4)")
    root2 = next(a for a in isolate_real_roots(UniPoly("x", (-2, 0, 1))) if a.sign() > 0)
    bs = branches_at(c, Point(root2, Fraction(2)))
    assert len(bs) == 2
    assert all(b.kind == "Real" and b.e == 1 and b.field_disc == 8 for b in bs)
    up = next(b for b in bs if b.y_coeff(1) == QuadExtElt(8, 0, 1))
    down = next(b for b in bs if b.y_coeff(1) == QuadExtElt(8, 0, -1))
    assert up.y_coeff(2) == 1 and down.y_coeff(2) == -1


def test_coordinates_in_different_fields_rejected():
    c = curve("(x^2 - 2)*(y^2 - 3)")
    root2 = next(a for a in isolate_real_roots(UniPoly("x", (-2, 0, 1))) if a.sign() > 0)
    root3 = next(a for a in isolate_real_roots(UniPoly("y", (-3, 0, 1))) if a.sign() > 0)
    with pytest.raises(UnsupportedExtension):
        branches_at(c, Point(root2, root3))


def test_cubic_edge_polynomial_rejected():
    with pytest.raises(UnsupportedExtension):
        branches_at(curve("y^3 - 2*x^3"), ORIGIN)


def test_point_off_curve_rejected():
    with pytest.raises(CurveError):
        branches_at(curve("y^2 - x^3"), Point(5, 5))


DUAL_ROUTE = [
    ("y^2 - x^3", ORIGIN),
    ("y^2 - x^3 - x^2", ORIGIN),
    ("y^2 - x^3 + x^2", ORIGIN),
    ("y^2 - x^3 - x*y^2", ORIGIN),
    ("y^2 - x^5 - 2*x^3 - x", ORIGIN),
    ("x^2 + y^2 - 1", Point(1, 0)),
    ("x*y", ORIGIN),
    ("x^2 + y^2", ORIGIN),
]


@pytest.mark.parametrize("src,pt", DUAL_ROUTE)
def test_real_places_match_half_branch_count(src, pt):
    c = curve(src)
    n_real = sum(b.places for b in real_branches(branches_at(c, pt)))
    assert half_branch_count(c, pt) == 2 * n_real


def test_valuations_on_cusp():
    b, = branches_at(curve("y^2 - x^3"), ORIGIN)
    assert branch_valuation(b, bp("y")) == 3
    assert branch_valuation(b, bp("x")) == 2
    assert branch_valuation(b, bp("y"), bp("x")) == 1
    assert branch_valuation(b, bp("y^2 - x^3")) == math.inf
    assert branch_limit(b, bp("y"), bp("x")) == ("finite", 0)
    assert branch_limit(b, bp("y^2"), bp("x^3")) == ("finite", 1)
    with pytest.raises(CurveError):
        branch_limit(b, bp("x"), bp("y^2 - x^3"))


def test_node_limits_differ_across_branches():
    bs = branches_at(curve("y^2 - x^3 - x^2"), ORIGIN)
    limits = {branch_limit(b, bp("y"), bp("x")) for b in bs}
    assert limits == {("finite", Fraction(1)), ("finite", Fraction(-1))}
    vals = [branch_valuation(b, bp("y"), bp("x")) for b in bs]
    assert vals == [0, 0]


def test_negative_valuation_at_isolated_point():
    b, = branches_at(curve("y^2 - x^3 + x^2"), ORIGIN)
    assert branch_valuation(b, bp("x^2"), bp("x^2 + y^2")) == -1
    assert branch_limit(b, bp("x^2"), bp("x^2 + y^2")) == ("infinite", None)


def test_vanishing_detection_on_product_curve():
    bs = branches_at(curve("(x - 1)*(y^2 - x^3)"), Point(1, 1))
    vert = next(b for b in bs if b.is_vertical)
    smooth = next(b for b in bs if not b.is_vertical)
    assert branch_valuation(vert, bp("x - 1")) == math.inf
    assert branch_valuation(vert, bp("y - 1")) == 1
    assert branch_valuation(smooth, bp("y^2 - x^3")) == math.inf
    assert branch_valuation(smooth, bp("x - 1")) == 1


def test_precision_cap_and_override(monkeypatch):
    b, = branches_at(curve("y^2 - x^3"), ORIGIN)
    num = bp("y^2 - x^3 + x^40")
    with pytest.raises(PrecisionExhausted):
        branch_valuation(b, num)
    monkeypatch.setenv("REALCURVE_NMAX", "256")
    assert branch_valuation(b, num) == 80


def test_values_equal_across_square_root_forms():
    assert values_equal(QuadExtElt(8, 0, 1), QuadExtElt(2, 0, 2))
    assert not values_equal(QuadExtElt(8, 0, 1), QuadExtElt(2, 0, -2))
    assert values_equal(QuadExtElt(8, 3, 0), Fraction(3))
    assert not values_equal(QuadExtElt(8, 0, 1), Fraction(3))
    assert values_equal(QuadExtElt(12, 1, 1), QuadExtElt(3, 1, 2))


def test_branch_order_deterministic():
    c = curve("y^2 - x^3 - x^2")
    first = [b.describe() for b in branches_at(c, ORIGIN)]
    second = [b.describe() for b in branches_at(c, ORIGIN)]
    assert first == second
