"""Exact decision toolkit for real plane algebraic curves."""

from .classify import (
    biregular_report,
    central_locus,
    classify_curve,
    has_totally_real_normalization,
    is_normal,
    is_o_integrally_closed,
    real_locus_dimension,
)
from .curve import Curve, Point
from .errors import (
    CurveError,
    ManifestError,
    ParseError,
    PrecisionExhausted,
    RatFuncError,
    RealCurveError,
    UnsupportedCenter,
    UnsupportedExtension,
)
from .exprparse import parse_poly
from .polycore import BiPoly, UniPoly
from .ratfunc import (
    FunctionReport,
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
from .svgplot import render_svg

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Curve",
    "CurveError",
    "FunctionReport",
    "ManifestError",
    "MembershipVerdict",
    "ParseError",
    "Point",
    "PrecisionExhausted",
    "RatFuncError",
    "RatFuncOnCurve",
    "RealCurveError",
    "UniPoly",
    "UnsupportedCenter",
    "UnsupportedExtension",
    "biregular_report",
    "central_locus",
    "characteristic_poly",
    "classify_curve",
    "equals_in_k",
    "extends_continuously_to_cent",
    "function_report",
    "has_totally_real_normalization",
    "is_in_o_x_closure",
    "is_in_o_xprime",
    "is_in_pol_xb",
    "is_integral_over_pol",
    "is_normal",
    "is_o_integrally_closed",
    "parse_poly",
    "real_locus_dimension",
    "regularity_on_x",
    "render_svg",
    "verify_integral_dependence",
]
