"""Rational function memberships: frozen verdicts for the worked example
pairs, exact witness re-verification, and the ring-chain properties
(coherence, normalization comparison, shear invariance, annihilation).
"""

import json
import random
from fractions import Fraction

import pytest

from realcurve.classify import has_totally_real_normalization
from realcurve.curve import Curve
from realcurve.errors import RatFuncError
from realcurve.exprparse import parse_poly
from realcurve.polycore import bipoly_divides
from realcurve.ratfunc import (
    MembershipVerdict,
    RatFuncOnCurve,
    characteristic_poly,
    equals_in_k,
    extends_continuously_to_cent,
    function_report,
    is_in_o_x_closure,
    is_in_o_xprime,
    is_in_pol_xb,
    is_integral_over_pol,
    regularity_on_x,
    verify_integral_dependence,
)
from realcurve.realsolve import count_real_solutions

NODE = "y^2 - x^2*(x + 1)"
CUSP = "y^2 - x^3"
CUBIC_ISO = "y^2 - x^2*(x - 1)"
C2 = "y^2 - x*(x^2 + 1)^2"
CIRCLE = "x^2 + y^2 - 1"
AXES = "x*y"


def curve_of(src):
    return Curve(parse_poly(src))


def rf(curve, num, den=None):
    return RatFuncOnCurve(
        curve,
        parse_poly(num) if isinstance(num, str) else num,
        parse_poly(den) if isinstance(den, str) else den,
    )


# --- construction ---


def test_construction_reduces_and_normalizes():
    c = curve_of(CIRCLE)
    r = rf(c, "x^2*y + x*y", "2*x*y")
    assert str(r.numerator) == "1/2*x + 1/2"
    assert str(r.denominator) == "1"
    z = rf(c, "0", "x + 5")
    assert z.numerator.is_zero()
    assert z.denominator.total_degree == 0


def test_construction_rejects_bad_denominators():
    c = curve_of(CIRCLE)
    with pytest.raises(RatFuncError):
        rf(c, "1", "0")
    with pytest.raises(RatFuncError):
        rf(c, "1", CIRCLE)
    axes = curve_of(AXES)
    with pytest.raises(RatFuncError):
        rf(axes, "1", "x")


def test_verdict_invariants():
    with pytest.raises(ValueError):
        MembershipVerdict("yes")
    with pytest.raises(ValueError):
        MembershipVerdict("no")
    with pytest.raises(ValueError):
        MembershipVerdict("unknown")
    with pytest.raises(ValueError):
        MembershipVerdict("maybe", witness=1)
    assert bool(MembershipVerdict.yes({"w": 1}))
    assert not bool(MembershipVerdict.no({"c": 1}))
    assert not bool(MembershipVerdict.unknown({"b": 1}))


# --- characteristic polynomial ---

CHARPOLY_TABLE = [
    # curve, num, den, ascending coefficient tuples of the monic charpoly
    (NODE, "y", "x", [(-1, -1), (), (1,)]),
    (CUSP, "y", "x", [(0, -1), (), (1,)]),
    (C2, "y", "1 + x^2", [(0, -1), (), (1,)]),
]


@pytest.mark.parametrize("src,num,den,coeffs", CHARPOLY_TABLE)
def test_charpoly_frozen(src, num, den, coeffs):
    c = curve_of(src)
    cp = characteristic_poly(c, rf(c, num, den))
    polys = cp.polynomial_coeffs()
    assert polys is not None
    assert [p.coeffs for p in polys] == [tuple(map(Fraction, t)) for t in coeffs]
    assert cp.annihilates()


def test_charpoly_node_text():
    c = curve_of(NODE)
    assert characteristic_poly(c, rf(c, "y", "x")).as_text() == "T^2 + (-x - 1)"


def test_charpoly_nonpolynomial_on_circle():
    c = curve_of(CIRCLE)
    cp = characteristic_poly(c, rf(c, "1", "2 + x"))
    assert cp.degree == 2
    assert cp.polynomial_coeffs() is None
    assert not cp.is_polynomial
    assert cp.annihilates()


def test_charpoly_y_free_function():
    # y-free functions go through the zero-degree eliminant power path
    c = curve_of(CIRCLE)
    cp = characteristic_poly(c, rf(c, "x", None))
    assert cp.degree == 2
    assert cp.polynomial_coeffs() is not None
    assert cp.annihilates()


# --- integrality ---


def test_integral_frozen_verdicts():
    node = curve_of(NODE)
    assert is_integral_over_pol(node, rf(node, "y", "x")).status == "yes"
    c2 = curve_of(C2)
    assert is_integral_over_pol(c2, rf(c2, "y", "1 + x^2")).status == "yes"
    circ = curve_of(CIRCLE)
    v = is_integral_over_pol(circ, rf(circ, "1", "2 + x"))
    assert v.status == "no"
    assert "nonpolynomial_coefficient" in v.certificate
    cubic = curve_of(CUBIC_ISO)
    assert is_integral_over_pol(cubic, rf(cubic, "1", "x")).status == "no"


def test_integral_per_component_on_axes():
    axes = curve_of(AXES)
    v = is_integral_over_pol(axes, rf(axes, "x", None))
    assert v.status == "yes"
    assert len(v.witness["integral_equations"]) == 2


# --- regularity on the real points ---


def test_regularity_fast_path_witness():
    c2 = curve_of(C2)
    v = regularity_on_x(c2, rf(c2, "y", "1 + x^2"))
    assert v.status == "yes"
    assert v.witness["denominator"] == "x^2 + 1"


def test_regularity_search_recovers_good_denominator():
    # same element of K(X) presented with a denominator that vanishes at
    # the real ramification point; the search must re-present it
    c2 = curve_of(C2)
    r = rf(c2, "x^3 + x", "y")
    assert equals_in_k(c2, r, rf(c2, "y", "1 + x^2"))
    v = regularity_on_x(c2, r)
    assert v.status == "yes"
    sp = parse_poly(v.witness["numerator"])
    qp = parse_poly(v.witness["denominator"])
    # re-verify the witness independently of the search
    assert bipoly_divides(c2.f, qp * r.numerator - sp * r.denominator)
    assert count_real_solutions(c2.f, qp) == 0


def test_regularity_search_finds_polynomial_form():
    circ = curve_of(CIRCLE)
    v = regularity_on_x(circ, rf(circ, "y^2", "1 - x"))
    assert v.status == "yes"
    assert v.witness == {
        "numerator": "x + 1",
        "denominator": "1",
        "reason": "the denominator has no real zeros on the curve",
    }


def test_regularity_no_by_distinct_limits():
    node = curve_of(NODE)
    v = regularity_on_x(node, rf(node, "y", "x"))
    assert v.status == "no"
    assert v.certificate["kind"] == "distinct_limits"
    assert v.certificate["limits"] == ["-1", "1"]


def test_regularity_no_by_negative_valuation():
    cubic = curve_of(CUBIC_ISO)
    v = regularity_on_x(cubic, rf(cubic, "x^2", "x^2 + y^2"))
    assert v.status == "no"
    assert v.certificate["kind"] == "negative_valuation"
    assert v.certificate["valuation"] == -1


def test_regularity_unknown_on_cusp_gap():
    # y/x on the cusp lies in the local ring gap the toolkit does not
    # decide; the honest answer is unknown at the default bound
    cusp = curve_of(CUSP)
    v = regularity_on_x(cusp, rf(cusp, "y", "x"))
    assert v.status == "unknown"
    assert v.bound_used["degree_bound"] == 6
    v2 = regularity_on_x(cusp, rf(cusp, "y", "x"), degree_bound=9)
    assert v2.status == "unknown"
    assert v2.bound_used["degree_bound"] == 9


def test_regularity_unknown_when_branches_unsupported():
    # the isolated points sit at x = ±sqrt(2); their branches need a
    # second quadratic extension, so no certificate can be formed
    c = curve_of("y^2 + (x^2 - 2)^2")
    v = regularity_on_x(c, rf(c, "1", "x^2 - 2"))
    assert v.status == "unknown"
    assert v.bound_used["unresolved"]


# --- normalization rings ---


def test_xprime_vs_closure_on_cubic():
    cubic = curve_of(CUBIC_ISO)
    r = rf(cubic, "x^2", "x^2 + y^2")
    assert is_in_o_xprime(cubic, r).status == "yes"
    v = is_in_o_x_closure(cubic, r)
    assert v.status == "no"
    assert v.certificate["at"]["valuation"] == -1


def test_node_function_in_closure():
    node = curve_of(NODE)
    r = rf(node, "y", "x")
    assert is_in_o_x_closure(node, r).status == "yes"
    assert is_in_o_xprime(node, r).status == "yes"


def test_closure_no_on_reducible_curve():
    axes = curve_of(AXES)
    r = rf(axes, "1", "x + y - 1")
    v = is_in_o_x_closure(axes, r)
    assert v.status == "no"
    assert v.certificate["kind"] == "negative_valuation"


# --- continuous extension to the central locus ---


def test_extends_no_on_node_with_limit_table():
    node = curve_of(NODE)
    v = extends_continuously_to_cent(node, rf(node, "y", "x"))
    assert v.status == "no"
    assert v.certificate["kind"] == "distinct_limits"
    assert v.certificate["limit_table"] == [
        {"point": "Point(0, 0)", "limits": ["-1", "1"]}
    ]


def test_extends_yes_on_cusp_with_limit_zero():
    cusp = curve_of(CUSP)
    v = extends_continuously_to_cent(cusp, rf(cusp, "y", "x"))
    assert v.status == "yes"
    assert v.witness["limit_table"] == [{"point": "Point(0, 0)", "limits": ["0"]}]


def test_extends_skips_isolated_points():
    # Z(x) meets the curve only at the isolated origin, which lies
    # outside the central locus; 1/x extends vacuously
    cubic = curve_of(CUBIC_ISO)
    v = extends_continuously_to_cent(cubic, rf(cubic, "1", "x"))
    assert v.status == "yes"
    assert v.witness["limit_table"] == []


def test_extends_trivial_for_polynomials():
    node = curve_of(NODE)
    v = extends_continuously_to_cent(node, rf(node, "-(x + 1)", None))
    assert v.status == "yes"
    assert v.witness["limit_table"] == []


# --- combined membership ---


def test_pol_xb_verdicts():
    c2 = curve_of(C2)
    assert is_in_pol_xb(c2, rf(c2, "y", "1 + x^2")).status == "yes"
    node = curve_of(NODE)
    v = is_in_pol_xb(node, rf(node, "y", "x"))
    assert v.status == "no"
    assert v.certificate["failed"] == "regularity on the real points"
    circ = curve_of(CIRCLE)
    v2 = is_in_pol_xb(circ, rf(circ, "1", "2 + x"))
    assert v2.status == "no"
    assert v2.certificate["failed"] == "integrality over the polynomial ring"
    cusp = curve_of(CUSP)
    v3 = is_in_pol_xb(cusp, rf(cusp, "y", "x"))
    assert v3.status == "unknown"
    assert "regular" in v3.bound_used


# --- function field identities ---


def test_equals_in_k():
    cubic = curve_of(CUBIC_ISO)
    assert equals_in_k(cubic, rf(cubic, "x^2", "x^2 + y^2"), rf(cubic, "1", "x"))
    circ = curve_of(CIRCLE)
    assert equals_in_k(circ, rf(circ, "y", "1 + x"), rf(circ, "1 - x", "y"))
    assert not equals_in_k(circ, rf(circ, "x", None), rf(circ, "y", None))


def test_verify_integral_dependence_frozen():
    node = curve_of(NODE)
    assert verify_integral_dependence(
        node, rf(node, "y", "x"), [parse_poly("-(x + 1)"), 0]
    )
    cusp = curve_of(CUSP)
    assert verify_integral_dependence(cusp, rf(cusp, "y", "x"), [parse_poly("-x"), 0])
    c2 = curve_of(C2)
    assert verify_integral_dependence(
        c2, rf(c2, "y", "1 + x^2"), [parse_poly("-x"), 0]
    )
    cubic = curve_of(CUBIC_ISO)
    assert verify_integral_dependence(
        cubic, rf(cubic, "1", "x"), [rf(cubic, "-1", "x")]
    )


def test_verify_integral_dependence_rejects():
    node = curve_of(NODE)
    r = rf(node, "y", "x")
    v = verify_integral_dependence(node, r, [parse_poly("x"), 0])
    assert v.status == "no"
    assert "does not hold" in v.certificate["reason"]
    # relation T^2 - (y/x) T = 0 holds but its coefficient has no limit
    # at the origin, so it cannot exhibit integrality over SR
    v2 = verify_integral_dependence(node, r, [0, rf(node, "-y", "x")])
    assert v2.status == "no"
    assert v2.certificate["coefficient_index"] == 1
    with pytest.raises(RatFuncError):
        verify_integral_dependence(node, r, [])


# --- chain and normalization-comparison properties ---

FIXTURES = [NODE, CUSP, CUBIC_ISO, C2, CIRCLE, AXES]
PROBES = [
    ("y", "x"),
    ("x", None),
    ("x^2", "x^2 + y^2"),
    ("1", "x"),
    ("y", "2 + x^2"),
    ("1 - x", "2 + y^2"),
]

_ORDER = {"no": 0, "unknown": 1, "yes": 2}


def _probe_matrix(src):
    c = curve_of(src)
    out = []
    for num, den in PROBES:
        try:
            out.append(rf(c, num, den))
        except RatFuncError:
            continue
    return c, out


@pytest.mark.parametrize("src", FIXTURES)
def test_chain_coherence_matrix(src):
    c, probes = _probe_matrix(src)
    for r in probes:
        reg = regularity_on_x(c, r).status
        clo = is_in_o_x_closure(c, r).status
        xpr = is_in_o_xprime(c, r).status
        intg = is_integral_over_pol(c, r).status
        # definite memberships respect O(X) inside O(X)' inside O(X'),
        # and integral functions land in O(X)'
        assert not (reg == "yes" and clo == "no")
        assert not (clo == "yes" and xpr == "no")
        assert not (intg == "yes" and clo == "no")


@pytest.mark.parametrize("src", FIXTURES)
def test_normalization_comparison(src):
    # when the normalization is totally real the two rings agree on
    # every probe; the cubic with an isolated point splits them
    c, probes = _probe_matrix(src)
    trn = has_totally_real_normalization(c)
    if trn:
        for r in probes:
            a = is_in_o_xprime(c, r).status
            b = is_in_o_x_closure(c, r).status
            if "unknown" not in (a, b):
                assert a == b


def test_normalization_comparison_witness():
    cubic = curve_of(CUBIC_ISO)
    assert has_totally_real_normalization(cubic) is False
    r = rf(cubic, "1", "x")
    assert is_in_o_xprime(cubic, r).status == "yes"
    assert is_in_o_x_closure(cubic, r).status == "no"


@pytest.mark.parametrize("src", FIXTURES)
def test_charpoly_annihilates_everywhere(src):
    c, probes = _probe_matrix(src)
    for r in probes:
        assert characteristic_poly(c, r).annihilates()


def test_integral_shear_invariance():
    rng = random.Random(20260816)
    cases = [
        (NODE, "y", "x", "yes"),
        (CUSP, "y", "x", "yes"),
        (C2, "y", "1 + x^2", "yes"),
        (CIRCLE, "1", "2 + x", "no"),
        (CUBIC_ISO, "1", "x", "no"),
    ]
    for src, num, den, want in cases:
        base = parse_poly(src)
        p = parse_poly(num)
        q = parse_poly(den)
        for _ in range(10):
            lam = Fraction(rng.randint(-3, 3))
            c = Curve(base.shear(lam))
            r = RatFuncOnCurve(c, p.shear(lam), q.shear(lam))
            assert is_integral_over_pol(c, r).status == want, (src, lam)


def test_dependence_exhibits_xprime_membership():
    # provided dependence relations pass exactly for functions that are
    # regular at the real places of the normalization
    table = [
        (NODE, ("y", "x"), [parse_poly("-(x + 1)"), 0]),
        (CUSP, ("y", "x"), [parse_poly("-x"), 0]),
        (C2, ("y", "1 + x^2"), [parse_poly("-x"), 0]),
        (CUBIC_ISO, ("1", "x"), None),  # filled below: -1/x
        (CIRCLE, ("1", "2 + x"), None),  # filled below: -1/(2+x)
    ]
    for src, (num, den), coeffs in table:
        c = curve_of(src)
        r = rf(c, num, den)
        if coeffs is None:
            coeffs = [RatFuncOnCurve(c, parse_poly("-1"), r.denominator)]
        assert is_in_o_xprime(c, r).status == "yes"
        assert verify_integral_dependence(c, r, coeffs).status == "yes"


# --- aggregate report ---


def test_function_report_shape():
    node = curve_of(NODE)
    rep = function_report(node, rf(node, "y", "x"))
    assert rep.degree_bound == 6
    assert rep.integral_over_pol.status == "yes"
    assert rep.regular_on_x.status == "no"
    assert rep.in_o_x_closure.status == "yes"
    assert rep.in_pol_xb.status == "no"
    assert rep.extends_to_cent.status == "no"
    assert rep.limit_table == [{"point": "Point(0, 0)", "limits": ["-1", "1"]}]
    payload = rep.as_dict()
    json.dumps(payload)
    assert payload["characteristic_poly"] == "T^2 + (-x - 1)"


def test_function_report_all_yes():
    c2 = curve_of(C2)
    rep = function_report(c2, rf(c2, "y", "1 + x^2"))
    for name in (
        "integral_over_pol",
        "regular_on_x",
        "in_o_xprime",
        "in_o_x_closure",
        "in_pol_xb",
        "extends_to_cent",
    ):
        assert getattr(rep, name).status == "yes", name


def test_limit_tables_singletons_when_extension_exists():
    pairs = [
        (CUSP, ("y", "x")),
        (C2, ("y", "1 + x^2")),
        (CIRCLE, ("y^2", "1 - x")),
    ]
    for src, (num, den) in pairs:
        c = curve_of(src)
        v = extends_continuously_to_cent(c, rf(c, num, den))
        assert v.status == "yes"
        for row in v.witness["limit_table"]:
            assert len(row["limits"]) == 1
