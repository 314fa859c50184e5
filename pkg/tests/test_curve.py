from fractions import Fraction

import pytest

from realcurve.curve import Curve, Point, split_components, unipoly_sqrt
from realcurve.errors import CurveError
from realcurve.exprparse import parse_poly
from realcurve.polycore import UniPoly, algebraic_from_poly_interval


def up(*coeffs, var="x"):
    return UniPoly(var, coeffs)


def test_unipoly_sqrt():
    assert unipoly_sqrt(up(1, 2, 1)) == up(1, 1)
    assert unipoly_sqrt(up(0, 0, 4)) == up(0, 2)
    assert unipoly_sqrt(up(1, 0, 1)) is None
    assert unipoly_sqrt(up(0, 1, 0, 1) * up(0, 1, 0, 1)) == up(0, 1, 0, 1)
    assert unipoly_sqrt(up(0, 0, Fraction(1, 4))) == up(0, Fraction(1, 2))
    assert unipoly_sqrt(up(0, 0, 0, 1)) is None  # odd degree
    assert unipoly_sqrt(up(0, 0, 2)) is None  # lc not a square
    assert unipoly_sqrt(up(Fraction(9, 4))) == up(Fraction(3, 2))


def test_point_basics():
    p = Point(Fraction(1, 2), -3)
    assert p.is_rational
    assert p.rational_coords() == (Fraction(1, 2), Fraction(-3))
    assert Point(0, 0) == Point(Fraction(0), Fraction(0))
    assert Point(0, 0) < Point(0, 1) < Point(1, -5)
    assert "1/2" in repr(p)

    sqrt2 = algebraic_from_poly_interval(up(-2, 0, 1), 1, 2)
    q = Point(sqrt2, Fraction(0))
    assert not q.is_rational
    assert q.rational_coords() is None
    ax, ay = q.approx()
    assert abs(ax - 2**0.5) < 1e-9 and ay == 0.0
    assert Point(1, 0) < q < Point(2, 0)


def test_curve_rejects_bad_input():
    with pytest.raises(CurveError):
        Curve(parse_poly("(y - x)^2"))
    with pytest.raises(CurveError):
        Curve(parse_poly("5"))
    with pytest.raises(CurveError):
        Curve(parse_poly("x*y"), components=[parse_poly("x")])
    with pytest.raises(CurveError):
        Curve(
            parse_poly("x*y"),
            components=[parse_poly("x"), parse_poly("x")],
        )
    with pytest.raises(CurveError):
        # solvers need the canonical variable pair
        Curve(parse_poly("y^2 - x^3").swap())


def comps(src):
    cs, flags, warns = split_components(parse_poly(src))
    return [str(c) for c in cs], flags, warns


def test_split_components_certified_cases():
    cs, flags, _ = comps("x*y")
    assert cs == ["x", "y"]
    assert flags == [True, True]

    cs, flags, _ = comps("y^2 - x^2")
    assert sorted(cs) == ["x + y", "x - y"]
    assert flags == [True, True]

    cs, flags, _ = comps("x^2*y^2 - 1")
    assert sorted(cs) == ["x*y + 1", "x*y - 1"]
    assert flags == [True, True]

    # univariate content splits off and factors
    cs, flags, _ = comps("(x^2 - 1)*(y^2 - x^3)")
    assert sorted(cs) == ["x + 1", "x - 1", "x^3 - y^2"]
    assert flags == [True, True, True]


def test_split_components_irreducible_fixtures():
    for src in [
        "y^2 - x^2*(x-1)",
        "y^2 - (x^2+1)^2*x",
        "y^2 - x^2*(x+1)",
        "y^2 - x^3",
        "x^2 + y^2 - 1",
        "y^2 - x*(x^2+y^2)",
    ]:
        cs, flags, warns = comps(src)
        assert len(cs) == 1, src
        assert flags == [True], src
        assert warns == [], src


def test_split_components_unproven_degree():
    # reducible but beyond the certified splitters: stays whole, flagged
    cs, flags, warns = comps("(x^2 + y^2 - 1)*(y - x^2)")
    assert len(cs) == 1
    assert flags == [False]
    assert len(warns) == 1 and "assume irreducibility" in warns[0]


def test_curve_fields_and_shear():
    circle = Curve(parse_poly("x^2 + y^2 - 1"))
    assert circle.shear_lambda == 0
    assert not circle.is_reducible

    cusp = Curve(parse_poly("y^2 - x^3"))
    assert cusp.shear_lambda != 0
    sheared = cusp.sheared()
    # monic in y after shear: leading y-coefficient is a nonzero constant
    assert sheared.deg_y == 3
    assert sheared.leading_y_coeff().degree == 0

    axes = Curve(parse_poly("x*y"))
    assert axes.is_reducible
    assert [str(c) for c in axes.components] == ["x", "y"]
    sub = axes.component_curve(0)
    assert str(sub.f) == "x"

    # user-supplied components are accepted and verified
    given = Curve(
        parse_poly("x*y"),
        components=[parse_poly("y"), parse_poly("x")],
    )
    assert len(given.components) == 2


def test_curve_normalizes_to_integer_primitive():
    c = Curve(parse_poly("1/2*y^2 - 1/2*x^3"))
    assert str(c.f) == "x^3 - y^2"
    assert c.f.terms == {(3, 0): 1, (0, 2): -1}
