"""Membership engine for rational functions on a real plane curve.

Places a rational function r = p/q relative to the curve's function
rings, with exact certificates throughout:

  * integrality over the polynomial ring, via the characteristic
    polynomial Res_y(f, T*q - p) made monic (decided exactly);
  * regularity on the curve's real points: a representation with a
    denominator that has no real zeros on the curve (bounded-degree
    witness search), or a branch-level impossibility certificate;
  * regularity at the real places of the normalized curve, in two
    flavors: real branches only, or every branch centered at a real
    point;
  * membership in the pullback ring of the partial normalization that
    resolves exactly the non-real singularities (integral and regular);
  * continuous extension to the central locus, with the finite table of
    branch limits per point;
  * verification of a supplied monic integral dependence relation whose
    coefficients extend continuously to the central locus.

Verdicts are three-valued.  A "no" is only ever returned with a
machine-checkable certificate (a branch with negative valuation, a pair
of distinct limits, a non-polynomial characteristic coefficient) and
never because a bounded search came up empty; exhausted searches return
"unknown" with the bounds that were used.
"""

import random
from fractions import Fraction

from .curve import Curve
from .errors import (
    CurveError,
    PrecisionExhausted,
    RatFuncError,
    UnsupportedCenter,
    UnsupportedExtension,
)
from .polycore import (
    BiPoly,
    UniPoly,
    bipoly_divexact,
    bipoly_divides,
    bipoly_gcd,
    charpoly_resultant,
    poly_gcd,
)
from .puiseux import (
    INF,
    branch_limit,
    branch_valuation,
    branches_at,
    value_str,
    values_equal,
)
from .realsolve import count_real_solutions, solve_real_points

_SEARCH_SEED = 0x5EED
_CANDIDATE_CAP = 16


def default_degree_bound(curve: Curve) -> int:
    return 2 * curve.f.total_degree


def _coerce_poly(curve: Curve, g) -> BiPoly:
    if isinstance(g, BiPoly):
        if g.vars != curve.f.vars:
            raise RatFuncError(
                f"variables {g.vars!r} do not match the curve's {curve.f.vars!r}"
            )
        return g
    if isinstance(g, (int, Fraction)):
        return BiPoly.const(Fraction(g), curve.f.vars)
    raise RatFuncError(f"cannot interpret {g!r} as a polynomial on the curve")


class RatFuncOnCurve:
    """A rational function p/q viewed as an element of the curve's total
    ring of fractions: q must not vanish on any component of the curve.

    The stored pair is reduced by its polynomial gcd and scaled so the
    denominator has leading coefficient 1 (deterministic reports).
    """

    __slots__ = ("curve", "numerator", "denominator")

    def __init__(self, curve: Curve, numerator, denominator=None):
        if not isinstance(curve, Curve):
            raise RatFuncError("first argument must be a Curve")
        num = _coerce_poly(curve, numerator)
        den = (
            BiPoly.const(Fraction(1), curve.f.vars)
            if denominator is None
            else _coerce_poly(curve, denominator)
        )
        if den.is_zero():
            raise RatFuncError("denominator is the zero polynomial")
        if bipoly_gcd(curve.f, den).total_degree > 0:
            raise RatFuncError("denominator vanishes on a component of the curve")
        if num.is_zero():
            den = BiPoly.const(Fraction(1), curve.f.vars)
        else:
            g = bipoly_gcd(num, den)
            if g.total_degree > 0:
                num = bipoly_divexact(num, g)
                den = bipoly_divexact(den, g)
        _, lead = den.lead_term()
        if lead != 1:
            inv = Fraction(1) / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.curve = curve
        self.numerator = num
        self.denominator = den

    def is_polynomial_form(self) -> bool:
        return self.denominator.total_degree == 0

    def __repr__(self):
        if self.denominator == BiPoly.const(Fraction(1), self.curve.f.vars):
            return f"({self.numerator})"
        return f"({self.numerator})/({self.denominator})"


class MembershipVerdict:
    """Three-valued answer: "yes" carries a machine-checkable witness,
    "no" a machine-checkable certificate, "unknown" the exhausted bounds.

    Truthiness is "status == yes", so verdicts double as flags.
    """

    __slots__ = ("status", "witness", "certificate", "bound_used")

    def __init__(self, status, witness=None, certificate=None, bound_used=None):
        if status not in ("yes", "no", "unknown"):
            raise ValueError(f"bad verdict status {status!r}")
        if status == "yes" and witness is None:
            raise ValueError("a yes verdict requires a witness")
        if status == "no" and certificate is None:
            raise ValueError("a no verdict requires a certificate")
        if status == "unknown" and bound_used is None:
            raise ValueError("an unknown verdict must record its bounds")
        self.status = status
        self.witness = witness
        self.certificate = certificate
        self.bound_used = bound_used

    @classmethod
    def yes(cls, witness):
        return cls("yes", witness=witness)

    @classmethod
    def no(cls, certificate):
        return cls("no", certificate=certificate)

    @classmethod
    def unknown(cls, bound_used):
        return cls("unknown", bound_used=bound_used)

    def __bool__(self):
        return self.status == "yes"

    def as_dict(self) -> dict:
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.bound_used is not None:
            out["bound_used"] = self.bound_used
        return out

    def __repr__(self):
        return f"MembershipVerdict({self.status})"


# --- characteristic polynomial and integrality ---


def _monic_coeff_pairs(tcols):
    """(numerator, denominator) per ascending T-power, denominator monic."""
    lead = tcols[-1]
    pairs = []
    for c in tcols[:-1]:
        if c.is_zero():
            pairs.append((c, UniPoly.const(c.var, Fraction(1))))
            continue
        g = poly_gcd(c, lead)
        num = c.divexact(g)
        den = lead.divexact(g)
        scale = Fraction(1) / den.lc()
        pairs.append((num.scale(scale), den.scale(scale)))
    one = UniPoly.const(lead.var, Fraction(1))
    pairs.append((one, one))
    return pairs


class CharacteristicPoly:
    """Monic annihilating polynomial of r over the rational functions in x,
    computed on the sheared (monic in y) model of one defining polynomial.

    raw_coeffs are the unnormalized resultant coefficients; coeffs are the
    monic (numerator, denominator) pairs.  All coefficients polynomial in
    x certifies integrality over the polynomial ring, exactly.
    """

    __slots__ = ("raw_coeffs", "coeffs", "degree", "sheared_by", "_model")

    def __init__(self, f2: BiPoly, p2: BiPoly, q2: BiPoly, lam: Fraction):
        M = charpoly_resultant(f2, p2, q2)
        tcols = M.y_coeffs()
        if not tcols or tcols[-1].is_zero():
            raise CurveError("internal error: vanishing resultant leading term")
        self.raw_coeffs = tcols
        self.coeffs = _monic_coeff_pairs(tcols)
        self.degree = len(tcols) - 1
        self.sheared_by = lam
        self._model = (f2, p2, q2)

    def polynomial_coeffs(self):
        """Ascending coefficient list as polynomials in x, or None if some
        monic coefficient is a proper rational function."""
        out = []
        for num, den in self.coeffs:
            if den.degree > 0:
                return None
            out.append(num.scale(Fraction(1) / den.lc()))
        return out

    @property
    def is_polynomial(self) -> bool:
        return self.polynomial_coeffs() is not None

    def coeff_text(self, k: int) -> str:
        num, den = self.coeffs[k]
        if den.degree == 0:
            return str(num.scale(Fraction(1) / den.lc()))
        return f"({num})/({den})"

    def as_text(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            num, _ = self.coeffs[k]
            if num.is_zero():
                continue
            if k == self.degree:
                parts.append("T" if k == 1 else f"T^{k}")
                continue
            coeff = self.coeff_text(k)
            if k == 0:
                parts.append(f"({coeff})")
            elif k == 1:
                parts.append(f"({coeff})*T")
            else:
                parts.append(f"({coeff})*T^{k}")
        return " + ".join(parts)

    def annihilates(self) -> bool:
        """Exact check that the polynomial kills r on the model curve,
        after clearing denominators."""
        f2, p2, q2 = self._model
        acc = BiPoly.zero(f2.vars)
        for k, c in enumerate(self.raw_coeffs):
            term = BiPoly.from_unipoly(c, f2.vars, 0) * p2**k * q2 ** (self.degree - k)
            acc = acc + term
        return bipoly_divides(f2, acc)

    def __repr__(self):
        return f"CharacteristicPoly({self.as_text()})"


def _eliminant_shear(curve: Curve) -> Fraction:
    """Shear making the defining polynomial monic in y: zero when the
    leading y-coefficient is already constant (so reports keep the
    caller's coordinates), the curve's separating shear otherwise."""
    f = curve.f
    if f.deg_y >= 1 and f.leading_y_coeff().degree == 0:
        return Fraction(0)
    return curve.shear_lambda


def characteristic_poly(curve: Curve, r: RatFuncOnCurve) -> CharacteristicPoly:
    """Monic annihilating polynomial of r over the whole curve, in the
    rational functions of x; on a reducible curve it is the product over
    the components."""
    _check_pair(curve, r)
    lam = _eliminant_shear(curve)
    f2 = curve.f.shear(lam) if lam else curve.f
    p2 = r.numerator.shear(lam) if lam else r.numerator
    q2 = r.denominator.shear(lam) if lam else r.denominator
    return CharacteristicPoly(f2, p2, q2, lam)


def is_integral_over_pol(curve: Curve, r: RatFuncOnCurve) -> MembershipVerdict:
    """Integrality over the polynomial ring of the curve, decided exactly:
    on every component the monic characteristic polynomial must have all
    coefficients polynomial in x (on the sheared, monic-in-y model)."""
    _check_pair(curve, r)
    lam = _eliminant_shear(curve)
    p2 = r.numerator.shear(lam) if lam else r.numerator
    q2 = r.denominator.shear(lam) if lam else r.denominator
    equations = []
    for comp in curve.components:
        c2 = comp.shear(lam) if lam else comp
        cp = CharacteristicPoly(c2, p2, q2, lam)
        poly = cp.polynomial_coeffs()
        if poly is None:
            bad = next(k for k, (_, den) in enumerate(cp.coeffs) if den.degree > 0)
            return MembershipVerdict.no(
                {
                    "component": str(comp),
                    "characteristic": cp.as_text(),
                    "nonpolynomial_coefficient": cp.coeff_text(bad),
                    "t_power": bad,
                }
            )
        equations.append(
            {"component": str(comp), "integral_equation": cp.as_text()}
        )
    return MembershipVerdict.yes({"integral_equations": equations})


# --- branch scans over the indeterminacy points ---


def _check_pair(curve: Curve, r: RatFuncOnCurve):
    if r.curve.f != curve.f:
        raise RatFuncError("the function was built on a different curve")


def _point_tag(p) -> str:
    return repr(p)


def _scan_indeterminacy(curve: Curve, r: RatFuncOnCurve):
    """Branch valuations (all branches) and limits (real branches) of r at
    every real point of the curve where the reduced denominator vanishes.
    Entries carry a reason string instead of data when a point or branch
    is beyond the supported fields or the precision ceiling."""
    if r.denominator.total_degree == 0:
        return []
    recs = []
    for pt in solve_real_points(curve.f, r.denominator):
        rec = {"point": pt, "note": None, "real": [], "pairs": []}
        try:
            branches = branches_at(curve, pt)
        except (UnsupportedCenter, UnsupportedExtension) as exc:
            rec["note"] = str(exc)
            recs.append(rec)
            continue
        for b in branches:
            entry = {"branch": b, "valuation": None, "limit": None, "reason": None}
            try:
                entry["valuation"] = branch_valuation(
                    b, r.numerator, r.denominator
                )
                if b.kind == "Real":
                    entry["limit"] = branch_limit(b, r.numerator, r.denominator)
            except PrecisionExhausted as exc:
                entry["reason"] = str(exc)
            (rec["real"] if b.kind == "Real" else rec["pairs"]).append(entry)
        recs.append(rec)
    return recs


def _fmt_val(v):
    return "infinity" if v == INF else int(v)


def _valuation_verdict(recs, kinds, ring_note):
    negatives = []
    unknowns = []
    table = []
    for rec in recs:
        if rec["note"] is not None:
            unknowns.append({"point": _point_tag(rec["point"]), "reason": rec["note"]})
            continue
        for key in kinds:
            for e in rec[key]:
                if e["reason"] is not None:
                    unknowns.append(
                        {"point": _point_tag(rec["point"]), "reason": e["reason"]}
                    )
                    continue
                v = e["valuation"]
                row = {
                    "point": _point_tag(rec["point"]),
                    "branch": e["branch"].describe(3),
                    "valuation": _fmt_val(v),
                }
                table.append(row)
                if v < 0:
                    negatives.append(row)
    if negatives:
        return MembershipVerdict.no(
            {"kind": "negative_valuation", "at": negatives[0], "ring": ring_note}
        )
    if unknowns:
        return MembershipVerdict.unknown({"unresolved": unknowns})
    return MembershipVerdict.yes(
        {"checked_valuations": table, "ring": ring_note}
    )


def is_in_o_xprime(curve: Curve, r: RatFuncOnCurve) -> MembershipVerdict:
    """Regularity at every real place of the normalized curve: the
    valuation must be nonnegative on every REAL branch at every real point
    where the reduced denominator meets the curve."""
    _check_pair(curve, r)
    recs = _scan_indeterminacy(curve, r)
    return _valuation_verdict(
        recs, ("real",), "real places of the normalization"
    )


def is_in_o_x_closure(curve: Curve, r: RatFuncOnCurve) -> MembershipVerdict:
    """Membership in the integral closure of the ring of functions regular
    at real points: the valuation must be nonnegative on EVERY branch
    (real or conjugate pair) centered at a real point of the curve."""
    _check_pair(curve, r)
    recs = _scan_indeterminacy(curve, r)
    return _valuation_verdict(
        recs, ("real", "pairs"), "all places over real points"
    )


def extends_continuously_to_cent(curve: Curve, r: RatFuncOnCurve) -> MembershipVerdict:
    """Continuous extension to the central locus: at every non-isolated
    real point where the reduced denominator vanishes, every real branch
    must have nonnegative valuation and all their limits must agree.
    Isolated real points lie outside the central locus and are skipped.
    The verdict payload always carries the limit table (finite per point).
    """
    _check_pair(curve, r)
    recs = _scan_indeterminacy(curve, r)
    table = []
    unknowns = []
    certificate = None
    for rec in recs:
        if rec["note"] is not None:
            unknowns.append({"point": _point_tag(rec["point"]), "reason": rec["note"]})
            continue
        if not rec["real"]:
            continue  # isolated point: outside the central locus
        limits = []
        for e in rec["real"]:
            if e["reason"] is not None:
                unknowns.append(
                    {"point": _point_tag(rec["point"]), "reason": e["reason"]}
                )
                continue
            if e["valuation"] < 0:
                certificate = certificate or {
                    "kind": "negative_valuation",
                    "point": _point_tag(rec["point"]),
                    "branch": e["branch"].describe(3),
                    "valuation": _fmt_val(e["valuation"]),
                }
                limits.append("infinity")
                continue
            kind, value = e["limit"]
            limits.append(value if kind == "finite" else "infinity")
        finite = [v for v in limits if not isinstance(v, str)]
        for v in finite[1:]:
            if not values_equal(finite[0], v):
                certificate = certificate or {
                    "kind": "distinct_limits",
                    "point": _point_tag(rec["point"]),
                    "limits": sorted(
                        {value_str(x) for x in finite}
                    ),
                }
                break
        shown = sorted(
            {value_str(v) if not isinstance(v, str) else v for v in limits}
        )
        table.append({"point": _point_tag(rec["point"]), "limits": shown})
    if certificate is not None:
        certificate["limit_table"] = table
        return MembershipVerdict.no(certificate)
    if unknowns:
        return MembershipVerdict.unknown(
            {"unresolved": unknowns, "limit_table": table}
        )
    return MembershipVerdict.yes({"limit_table": table})


# --- regularity on the curve's real points ---


def _reduce_mod_monic(g: BiPoly, f2: BiPoly) -> BiPoly:
    """Canonical representative of g modulo f2 with y-degree below that of
    f2; f2 must have a constant leading y-coefficient."""
    n = f2.deg_y
    fcols = f2.y_coeffs()
    top = fcols[-1]
    if top.degree != 0:
        raise CurveError("internal error: reduction needs a monic-in-y model")
    inv = Fraction(1) / top.lc()
    cols = g.y_coeffs()
    for j in range(len(cols) - 1, n - 1, -1):
        u = cols[j]
        if u.is_zero():
            continue
        fac = u.scale(inv)
        for k in range(n + 1):
            cols[j - n + k] = cols[j - n + k] - fac * fcols[k]
    return BiPoly.from_y_coeffs(g.vars, cols[:n])


def _nullspace(rows, ncols):
    """Basis of the right nullspace of a Fraction matrix given as rows."""
    mat = [list(row) for row in rows if any(row)]
    pivots = {}
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [c * inv for c in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[rank])]
        pivots[col] = rank
        rank += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for col, row in pivots.items():
            vec[col] = -mat[row][fc]
        basis.append(vec)
    return basis


def _regular_witness_search(curve: Curve, r: RatFuncOnCurve, bound: int):
    """Look for (s, q') with q'*p = s*q modulo f and q' without real zeros
    on the curve; returns the unsheared pair or None.  Soundness does not
    depend on the search space: every candidate is verified exactly."""
    lam = _eliminant_shear(curve)
    f2 = curve.f.shear(lam) if lam else curve.f
    p2 = r.numerator.shear(lam) if lam else r.numerator
    q2 = r.denominator.shear(lam) if lam else r.denominator
    n = f2.deg_y
    qmon = [
        (i, j)
        for j in range(min(n, bound + 1))
        for i in range(bound - j + 1)
    ]
    rvecs = []
    max_x = 0
    for m in qmon:
        red = _reduce_mod_monic(BiPoly(f2.vars, {m: Fraction(1)}) * p2, f2)
        rvecs.append(red.terms)
        if red.terms:
            max_x = max(max_x, max(i for i, _ in red.terms))
    smon = [(i, j) for j in range(n) for i in range(max_x + 1)]
    svecs = []
    for m in smon:
        red = _reduce_mod_monic(BiPoly(f2.vars, {m: Fraction(1)}) * q2, f2)
        svecs.append(red.terms)
    keys = sorted({k for v in rvecs + svecs for k in v})
    key_index = {k: i for i, k in enumerate(keys)}
    ncols = len(qmon) + len(smon)
    rows = [[Fraction(0)] * ncols for _ in keys]
    for col, terms in enumerate(rvecs):
        for k, c in terms.items():
            rows[key_index[k]][col] = c
    for col, terms in enumerate(svecs):
        for k, c in terms.items():
            rows[key_index[k]][len(qmon) + col] = -c
    basis = _nullspace(rows, ncols)
    if not basis:
        return None
    candidates = list(basis)
    acc = None
    for vec in basis:
        acc = vec if acc is None else [a + b for a, b in zip(acc, vec)]
        candidates.append(list(acc))
    rng = random.Random(_SEARCH_SEED)
    for _ in range(8):
        combo = [Fraction(0)] * ncols
        for vec in basis:
            w = rng.randint(-2, 3)
            if w:
                combo = [a + w * b for a, b in zip(combo, vec)]
        candidates.append(combo)

    def simplicity(vec):
        support = [qmon[k] for k in range(len(qmon)) if vec[k]]
        if not support:
            return (len(qmon) + 1, 0)
        return (max(i + j for i, j in support), len(support))

    candidates.sort(key=simplicity)
    checked = 0
    seen = set()
    for vec in candidates:
        qp_terms = {
            m: vec[k] for k, m in enumerate(qmon) if vec[k]
        }
        if not qp_terms:
            continue
        sig = tuple(sorted(qp_terms.items()))
        if sig in seen:
            continue
        seen.add(sig)
        if checked >= _CANDIDATE_CAP:
            break
        checked += 1
        qp2 = BiPoly(f2.vars, qp_terms)
        sp2 = BiPoly(
            f2.vars,
            {
                m: vec[len(qmon) + k]
                for k, m in enumerate(smon)
                if vec[len(qmon) + k]
            },
        )
        qp = qp2.shear(-lam) if lam else qp2
        sp = sp2.shear(-lam) if lam else sp2
        if not bipoly_divides(
            curve.f, qp * r.numerator - sp * r.denominator
        ):
            continue
        if bipoly_gcd(curve.f, qp).total_degree > 0:
            continue
        if qp.total_degree > 0 and count_real_solutions(curve.f, qp) > 0:
            continue
        _, lead = qp.lead_term()
        inv = Fraction(1) / lead
        return sp.scale(inv), qp.scale(inv)
    return None


def regularity_on_x(
    curve: Curve, r: RatFuncOnCurve, degree_bound: int = None
) -> MembershipVerdict:
    """Is r a regular function on the real points of the curve?

    Yes needs a representation s/q' with q' free of real zeros on the
    curve (the given denominator is tried first, then a bounded linear
    search).  No needs a certificate: a branch with negative valuation at
    a real point, or two real branches with distinct limits.  Anything
    else is unknown at the recorded degree bound.
    """
    _check_pair(curve, r)
    bound = default_degree_bound(curve) if degree_bound is None else degree_bound
    q = r.denominator
    if q.total_degree == 0 or count_real_solutions(curve.f, q) == 0:
        return MembershipVerdict.yes(
            {
                "numerator": str(r.numerator),
                "denominator": str(q),
                "reason": "the denominator has no real zeros on the curve",
            }
        )
    recs = _scan_indeterminacy(curve, r)
    unknowns = []
    for rec in recs:
        if rec["note"] is not None:
            unknowns.append({"point": _point_tag(rec["point"]), "reason": rec["note"]})
            continue
        finite_limits = []
        for e in rec["real"] + rec["pairs"]:
            if e["reason"] is not None:
                unknowns.append(
                    {"point": _point_tag(rec["point"]), "reason": e["reason"]}
                )
                continue
            if e["valuation"] < 0:
                return MembershipVerdict.no(
                    {
                        "kind": "negative_valuation",
                        "point": _point_tag(rec["point"]),
                        "branch": e["branch"].describe(3),
                        "valuation": _fmt_val(e["valuation"]),
                    }
                )
            if e["limit"] is not None and e["limit"][0] == "finite":
                finite_limits.append((e["branch"], e["limit"][1]))
        for b, v in finite_limits[1:]:
            if not values_equal(finite_limits[0][1], v):
                return MembershipVerdict.no(
                    {
                        "kind": "distinct_limits",
                        "point": _point_tag(rec["point"]),
                        "limits": sorted(
                            {value_str(x) for _, x in finite_limits}
                        ),
                    }
                )
    found = _regular_witness_search(curve, r, bound)
    if found is not None:
        sp, qp = found
        return MembershipVerdict.yes(
            {
                "numerator": str(sp),
                "denominator": str(qp),
                "reason": "the denominator has no real zeros on the curve",
            }
        )
    payload = {"degree_bound": bound}
    if unknowns:
        payload["unresolved"] = unknowns
    return MembershipVerdict.unknown(payload)


def is_in_pol_xb(
    curve: Curve, r: RatFuncOnCurve, degree_bound: int = None
) -> MembershipVerdict:
    """Membership in the pullback of the partial normalization that
    resolves exactly the non-real singularities: integral over the
    polynomial ring AND regular on the curve's real points."""
    integral = is_integral_over_pol(curve, r)
    regular = regularity_on_x(curve, r, degree_bound)
    if integral.status == "no":
        return MembershipVerdict.no(
            {"failed": "integrality over the polynomial ring",
             "certificate": integral.certificate}
        )
    if regular.status == "no":
        return MembershipVerdict.no(
            {"failed": "regularity on the real points",
             "certificate": regular.certificate}
        )
    if integral.status == "yes" and regular.status == "yes":
        return MembershipVerdict.yes(
            {"integral": integral.witness, "regular": regular.witness}
        )
    bounds = {}
    for part, v in (("integral", integral), ("regular", regular)):
        if v.status == "unknown":
            bounds[part] = v.bound_used
    return MembershipVerdict.unknown(bounds)


# --- identities in the function field and dependence relations ---


def equals_in_k(curve: Curve, a: RatFuncOnCurve, b: RatFuncOnCurve) -> bool:
    """Exact equality in the total ring of fractions of the curve, by
    cross multiplication and divisibility by the defining polynomial."""
    _check_pair(curve, a)
    _check_pair(curve, b)
    cross = a.numerator * b.denominator - b.numerator * a.denominator
    return cross.is_zero() or bipoly_divides(curve.f, cross)


def verify_integral_dependence(
    curve: Curve, r: RatFuncOnCurve, coeffs
) -> MembershipVerdict:
    """Check a supplied monic dependence T^d + c_{d-1} T^{d-1} + ... + c_0
    (coeffs listed ascending, c_0 first): the relation must vanish
    identically on the curve AND every coefficient must extend
    continuously to the central locus, exhibiting r as integral over the
    ring of such functions."""
    _check_pair(curve, r)
    if not coeffs:
        raise RatFuncError("a dependence relation needs at least one coefficient")
    cs = [
        c if isinstance(c, RatFuncOnCurve) else RatFuncOnCurve(curve, _coerce_poly(curve, c))
        for c in coeffs
    ]
    for c in cs:
        _check_pair(curve, c)
    d = len(cs)
    p, q = r.numerator, r.denominator
    big = BiPoly.const(Fraction(1), curve.f.vars)
    for c in cs:
        big = big * c.denominator
    acc = p**d * big
    for i, c in enumerate(cs):
        cofactor = bipoly_divexact(big, c.denominator)
        acc = acc + c.numerator * cofactor * p**i * q ** (d - i)
    holds = acc.is_zero() or bipoly_divides(curve.f, acc)
    if not holds:
        return MembershipVerdict.no(
            {"reason": "the monic relation does not hold on the curve"}
        )
    extensions = []
    for i, c in enumerate(cs):
        v = extends_continuously_to_cent(curve, c)
        if v.status == "no":
            return MembershipVerdict.no(
                {
                    "reason": "a coefficient does not extend continuously "
                    "to the central locus",
                    "coefficient_index": i,
                    "certificate": v.certificate,
                }
            )
        extensions.append(v)
    pending = [
        {"coefficient_index": i, "bound_used": v.bound_used}
        for i, v in enumerate(extensions)
        if v.status == "unknown"
    ]
    if pending:
        return MembershipVerdict.unknown({"coefficients": pending})
    return MembershipVerdict.yes(
        {
            "relation_degree": d,
            "coefficients": [repr(c) for c in cs],
            "coefficient_limit_tables": [v.witness["limit_table"] for v in extensions],
        }
    )


# --- aggregate report ---


class FunctionReport:
    """All membership verdicts for one function on one curve, plus the
    limit table at the central points met by the denominator."""

    __slots__ = (
        "function",
        "characteristic",
        "integral_over_pol",
        "regular_on_x",
        "in_o_xprime",
        "in_o_x_closure",
        "in_pol_xb",
        "extends_to_cent",
        "limit_table",
        "degree_bound",
    )

    def as_dict(self) -> dict:
        return {
            "function": repr(self.function),
            "characteristic_poly": self.characteristic.as_text(),
            "integral_over_pol": self.integral_over_pol.as_dict(),
            "regular_on_x": self.regular_on_x.as_dict(),
            "in_o_xprime": self.in_o_xprime.as_dict(),
            "in_o_x_closure": self.in_o_x_closure.as_dict(),
            "in_pol_xb": self.in_pol_xb.as_dict(),
            "extends_to_cent": self.extends_to_cent.as_dict(),
            "limit_table": self.limit_table,
            "degree_bound": self.degree_bound,
        }


def function_report(
    curve: Curve, r: RatFuncOnCurve, degree_bound: int = None
) -> FunctionReport:
    """Run every membership decision once and cross-check the chain:
    regular implies closure-membership implies real-place membership, and
    integral implies closure-membership; a definite contradiction raises."""
    rep = FunctionReport()
    rep.function = r
    rep.degree_bound = (
        default_degree_bound(curve) if degree_bound is None else degree_bound
    )
    rep.characteristic = characteristic_poly(curve, r)
    rep.integral_over_pol = is_integral_over_pol(curve, r)
    rep.regular_on_x = regularity_on_x(curve, r, rep.degree_bound)
    rep.in_o_xprime = is_in_o_xprime(curve, r)
    rep.in_o_x_closure = is_in_o_x_closure(curve, r)
    rep.in_pol_xb = is_in_pol_xb(curve, r, rep.degree_bound)
    rep.extends_to_cent = extends_continuously_to_cent(curve, r)
    payload = (
        rep.extends_to_cent.witness
        or rep.extends_to_cent.certificate
        or rep.extends_to_cent.bound_used
    )
    rep.limit_table = payload.get("limit_table", [])
    for first, second in (
        ("regular_on_x", "in_o_x_closure"),
        ("in_o_x_closure", "in_o_xprime"),
        ("integral_over_pol", "in_o_x_closure"),
    ):
        a = getattr(rep, first)
        b = getattr(rep, second)
        if a.status == "yes" and b.status == "no":
            raise CurveError(
                f"internal error: {first} = yes contradicts {second} = no"
            )
    return rep
