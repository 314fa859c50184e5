"""Curve-level classification.

Decides, with exact certificates: which real points of the curve are
isolated (the central locus is the curve minus those), whether the
complexified curve is smooth (the polynomial ring is integrally
closed), whether real singular points exist (integral closedness of
the ring of functions regular at every real point), whether every
local branch at a real singular point is real (totally real
normalization), and the shape of the partial normalization that
resolves exactly the non-real singularities while fixing every real
point.

Verdicts are three-valued: True, False, or None for undecided.  The
counting verdicts (normality, integral closedness, the partial
normalization flags) are always decided exactly; only branch-level
flags degrade to None, when a point's coordinates or branch data
exceed the supported field tower.

Two independent routes certify isolatedness at each supported point:
small-circle intersection counting and branch realness.  When both are
available they are cross-checked and a disagreement raises instead of
reporting either answer.
"""

from fractions import Fraction

from .curve import Curve, Point
from .errors import CurveError, UnsupportedCenter, UnsupportedExtension
from .polycore import (
    BiPoly,
    isolate_real_roots,
    resultant,
    squarefree_part_uni,
    sturm_count,
)
from .puiseux import branches_at, conjugate_pairs, real_branches
from .realsolve import count_real_solutions, half_branch_count, singular_points


class BiregularReport:
    """How the partial normalization X^b differs from X and from X'.

    X^b resolves exactly the non-real singular points of the
    complexified curve and is an isomorphism over every real point.
    """

    __slots__ = (
        "untouched_real_singular",
        "normalized_nonreal_pairs",
        "pair_minimal_polys",
        "xb_equals_x",
        "xb_equals_xprime",
    )

    def __init__(self, real_sing, pair_count, pair_polys):
        self.untouched_real_singular = list(real_sing)
        self.normalized_nonreal_pairs = pair_count
        self.pair_minimal_polys = list(pair_polys)
        self.xb_equals_x = pair_count == 0
        self.xb_equals_xprime = not real_sing

    def __repr__(self):
        return (
            f"BiregularReport(xb_equals_x={self.xb_equals_x}, "
            f"xb_equals_xprime={self.xb_equals_xprime})"
        )


class CurveReport:
    """Full classification of one curve; see the module docstring."""

    __slots__ = (
        "curve",
        "singular_real_points",
        "nonreal_singular_pairs",
        "pair_minimal_polys",
        "undetermined_singular",
        "isolated_real_points",
        "undetermined_centers",
        "is_central",
        "is_normal",
        "o_integrally_closed",
        "totally_real_normalization",
        "biregular",
        "real_locus_dimension",
        "per_component",
        "warnings",
    )

    def __repr__(self):
        flags = ", ".join(
            f"{k}={getattr(self, k)}"
            for k in (
                "is_central",
                "is_normal",
                "o_integrally_closed",
                "totally_real_normalization",
            )
        )
        return f"CurveReport({self.curve!r}, {flags})"


def _rational_between(lo_root, hi_root) -> Fraction:
    """A rational strictly between two isolated algebraic numbers."""
    while not lo_root.interval[1] < hi_root.interval[0]:
        lo_root.refine()
        hi_root.refine()
    return (lo_root.interval[1] + hi_root.interval[0]) / 2


def real_locus_dimension(curve: Curve) -> int:
    """Exact dimension of the real zero set: -1 empty, 0 finite, 1 arcs.

    After the monic shear the fiber over x = a is a monic polynomial, so
    the number of its real roots is constant between real roots of the
    y-discriminant; sampling one rational per gap finds every arc, and
    real points over the discriminant roots themselves are counted as an
    exact zero-dimensional system.
    """
    f2 = curve.sheared()
    yvar = f2.vars[1]
    disc = resultant(f2, f2.derivative(yvar), yvar).as_unipoly(f2.vars[0])
    if disc.is_zero():
        raise CurveError("internal error: discriminant of a squarefree curve")
    roots = isolate_real_roots(squarefree_part_uni(disc))
    samples = []
    if not roots:
        samples.append(Fraction(0))
    else:
        # interval ends may sit exactly on a rational root; step off them
        samples.append(roots[0].interval[0] - 1)
        for a, b in zip(roots, roots[1:]):
            samples.append(_rational_between(a, b))
        samples.append(roots[-1].interval[1] + 1)
    for a in samples:
        if sturm_count(f2.eval_x(a)) > 0:
            return 1
    if not roots:
        return -1
    disc_bi = BiPoly.from_unipoly(squarefree_part_uni(disc), f2.vars, 0)
    return 0 if count_real_solutions(f2, disc_bi) > 0 else -1


def _point_analysis(curve: Curve, p: Point):
    """(half_branch_count, branches, note) at one real point; branch data
    is None with an explanatory note when the field tower is exceeded,
    and the two routes are cross-checked when both are available."""
    branches = None
    note = None
    try:
        branches = branches_at(curve, p)
    except (UnsupportedExtension, UnsupportedCenter) as exc:
        note = str(exc)
    hb = None
    if p.rational_coords() is not None:
        hb = half_branch_count(curve, p)
    elif branches is not None:
        hb = 2 * sum(b.places for b in real_branches(branches))
    if hb is not None and branches is not None:
        from_branches = 2 * sum(b.places for b in real_branches(branches))
        if hb != from_branches:
            raise CurveError(
                f"internal error: {hb} half-branches by circle counting but "
                f"{from_branches} by branch realness at {p!r}"
            )
    return hb, branches, note


def _singular_survey(curve: Curve):
    sing = singular_points(curve)
    analyses = [(p, *_point_analysis(curve, p)) for p in sing["real_points"]]
    return sing, analyses


def _central_flags(sing, analyses):
    isolated = [p for (p, hb, _, _) in analyses if hb == 0]
    undetermined = [(p, note) for (p, hb, _, note) in analyses if hb is None]
    if isolated:
        central = False
    elif undetermined or sing["unsupported"]:
        central = None
    else:
        central = True
    return isolated, undetermined, central


def _trn_flag(sing, analyses):
    undecided = bool(sing["unsupported"])
    for _, _, branches, _ in analyses:
        if branches is None:
            undecided = True
        elif conjugate_pairs(branches):
            return False
    return None if undecided else True


def _finite_locus_override(dim, sing, analyses, isolated, undetermined, central, trn):
    """Upgrade verdicts using an exact zero-dimensionality certificate.

    A finite real locus means every real point is isolated (a point with a
    real half-branch lies on an arc), so undetermined centers are in fact
    isolated and every branch at a real singular point is non-real.
    """
    if dim != 0:
        return isolated, undetermined, central, trn
    for p, hb, _, _ in analyses:
        if hb not in (0, None):
            raise CurveError(
                f"internal error: real half-branches at {p!r} on a curve "
                "with finite real locus"
            )
    if not analyses and not sing["unsupported"]:
        raise CurveError(
            "internal error: finite real locus with no singular real points"
        )
    return [p for (p, _, _, _) in analyses], [], False, False


def central_locus(curve: Curve) -> dict:
    """Isolated real points and centrality.

    The central locus is the curve minus the returned isolated points
    (real singular points with no real half-branch).  Points whose
    analysis exceeds the supported fields are listed as undetermined and
    leave is_central at None unless an isolated point was already found.
    """
    sing, analyses = _singular_survey(curve)
    isolated, undetermined, central = _central_flags(sing, analyses)
    if undetermined or sing["unsupported"]:
        isolated, undetermined, central, _ = _finite_locus_override(
            real_locus_dimension(curve), sing, analyses,
            isolated, undetermined, central, None,
        )
    return {
        "isolated_real_points": isolated,
        "undetermined": undetermined + [("box", b) for b in sing["unsupported"]],
        "is_central": central,
    }


def is_normal(curve: Curve) -> bool:
    """True iff the complexified curve is smooth (no singular points at
    all), which for curves is integral closedness of the coordinate ring."""
    sing = singular_points(curve)
    return (
        not sing["real_points"]
        and not sing["unsupported"]
        and sing["nonreal_pair_count"] == 0
    )


def is_o_integrally_closed(curve: Curve) -> bool:
    """True iff the curve has no real singular point; non-real singular
    pairs do not matter.  This decides integral closedness of the ring of
    rational functions regular at every real point."""
    sing = singular_points(curve)
    return not sing["real_points"] and not sing["unsupported"]


def has_totally_real_normalization(curve: Curve):
    """True iff every branch at every real singular point is real, i.e.
    the normalization introduces no non-real points over real ones.
    None when some real singular point could not be branch-analyzed and
    the real locus is not certifiably finite (a finite locus forces every
    branch at a real point to be non-real)."""
    sing, analyses = _singular_survey(curve)
    trn = _trn_flag(sing, analyses)
    if trn is None:
        _, _, _, trn = _finite_locus_override(
            real_locus_dimension(curve), sing, analyses, [], [], None, trn
        )
    return trn


def biregular_report(curve: Curve) -> BiregularReport:
    """Shape of the partial normalization X^b: it resolves exactly the
    non-real singular pairs and fixes every real point, so X^b = X iff
    there are no such pairs and X^b = X' iff no real singular points."""
    sing = singular_points(curve)
    real_sing = list(sing["real_points"]) + list(sing["unsupported"])
    return BiregularReport(
        real_sing, sing["nonreal_pair_count"], sing["nonreal_pair_data"]
    )


def classify_curve(curve: Curve, with_components: bool = True) -> CurveReport:
    """Run the whole classification once and assemble a CurveReport."""
    sing, analyses = _singular_survey(curve)
    rep = CurveReport()
    rep.curve = curve
    rep.singular_real_points = list(sing["real_points"])
    rep.nonreal_singular_pairs = sing["nonreal_pair_count"]
    rep.pair_minimal_polys = list(sing["nonreal_pair_data"])
    rep.undetermined_singular = list(sing["unsupported"])
    rep.isolated_real_points, rep.undetermined_centers, rep.is_central = (
        _central_flags(sing, analyses)
    )
    rep.is_normal = (
        not sing["real_points"]
        and not sing["unsupported"]
        and sing["nonreal_pair_count"] == 0
    )
    rep.o_integrally_closed = not sing["real_points"] and not sing["unsupported"]
    rep.totally_real_normalization = _trn_flag(sing, analyses)
    real_sing = list(sing["real_points"]) + list(sing["unsupported"])
    rep.biregular = BiregularReport(
        real_sing, sing["nonreal_pair_count"], sing["nonreal_pair_data"]
    )
    rep.real_locus_dimension = real_locus_dimension(curve)
    (
        rep.isolated_real_points,
        rep.undetermined_centers,
        rep.is_central,
        rep.totally_real_normalization,
    ) = _finite_locus_override(
        rep.real_locus_dimension,
        sing,
        analyses,
        rep.isolated_real_points,
        rep.undetermined_centers,
        rep.is_central,
        rep.totally_real_normalization,
    )

    warnings = list(curve.warnings)
    if curve.is_reducible:
        warnings.append(
            "reducible curve: the central locus is taken as the union of "
            "the components' central loci"
        )
    if rep.real_locus_dimension < 0:
        warnings.append(
            "the real locus is empty: realness-based classifications are "
            "vacuous and the underlying theory does not apply"
        )
    elif rep.real_locus_dimension == 0:
        warnings.append(
            "the real locus is finite: every real point is isolated and "
            "the underlying theory's density hypothesis fails"
        )
    if sing["unsupported"]:
        warnings.append(
            f"{len(sing['unsupported'])} real singular point(s) have "
            "coordinates beyond the supported fields; branch-level flags "
            "are degraded to unknown"
        )
    for p, note in rep.undetermined_centers:
        warnings.append(f"point {p!r} undetermined: {note}")

    rep.per_component = []
    if with_components and curve.is_reducible:
        rep.per_component = [
            classify_curve(curve.component_curve(i), with_components=False)
            for i in range(len(curve.components))
        ]
    rep.warnings = warnings

    # consistency of the assembled report
    if rep.is_central is True and rep.isolated_real_points:
        raise CurveError("internal error: central flag contradicts point list")
    if rep.is_normal:
        if not rep.o_integrally_closed or rep.totally_real_normalization is False:
            raise CurveError("internal error: normality implication violated")
    return rep
