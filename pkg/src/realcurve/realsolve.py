"""Exact zero-dimensional real solving on plane curves.

All routines follow the same triangular pattern: shear until the inputs
are monic in y, eliminate y by a resultant, and analyze each x-fiber by a
gcd over Q(alpha) with dynamic modulus splitting.  Counting never needs
the fibers to be simple; coordinate extraction retries shears until every
irrational fiber carries a single solution, which makes both coordinates
polynomial expressions in one algebraic number.
"""

from fractions import Fraction
from math import isqrt

from .curve import Curve, Point
from .errors import CurveError, PositiveDimensional, UnsupportedCenter
from .polycore import (
    BiPoly,
    ModCtx,
    SplitRequest,
    UniPoly,
    alg_sign,
    algebraic_image,
    bipoly_divexact,
    bipoly_gcd,
    coordinate_minpoly,
    isolate_real_roots,
    poly_gcd,
    primitive_integer,
    resultant,
    squarefree_part_uni,
    sturm_count,
)


def _shear_values(limit: int = 40):
    # 0, 1, -1, 2, -2, ...; limit must exceed the degree so an admissible
    # value (a non-root of the top form) is always reached
    yield Fraction(0)
    for k in range(1, limit):
        yield Fraction((k + 1) // 2 * (1 if k % 2 else -1))


def _lift_fiber(cols, ctx: ModCtx) -> UniPoly:
    """y-polynomial with coefficients reduced into Q[t]/(m)."""
    return UniPoly("y", [ctx.elt(c.with_var(ctx.m.var)) for c in cols])


def _on_fiber(cols_list, alpha, action):
    """Run action on the lifted fiber polynomials over Q(alpha).

    SplitRequests from zero divisors shrink the working modulus to the
    factor that still has alpha as a root, then retry; each retry strictly
    drops the modulus degree, so the loop terminates.
    """
    m = alpha.minimal_poly
    while True:
        ctx = ModCtx(m, alpha)
        try:
            return action([_lift_fiber(cols, ctx) for cols in cols_list])
        except SplitRequest as s:
            fac = s.factor.with_var(m.var)
            if alg_sign(fac, alpha) == 0:
                m = fac
            else:
                m = m.monic().divexact(fac)


def _validate_pair(f: BiPoly, g: BiPoly):
    if f.is_zero() or g.is_zero():
        raise PositiveDimensional("zero polynomial has no finite zero set")
    if f.total_degree >= 1 and g.total_degree >= 1:
        if bipoly_gcd(f, g).total_degree != 0:
            raise PositiveDimensional("the inputs share a component")


def _resultant_in_x(f2: BiPoly, g2: BiPoly) -> UniPoly:
    r = resultant(f2, g2, "y").as_unipoly(f2.vars[0])
    if r.is_zero():
        raise PositiveDimensional("vanishing resultant despite coprime inputs")
    return primitive_integer(squarefree_part_uni(r))


def count_real_solutions(f: BiPoly, g: BiPoly) -> int:
    """Number of distinct real common solutions of f = g = 0.

    The system must be zero-dimensional over C; a shared component raises
    PositiveDimensional.  Fibers over irrational x run in Q(alpha) with
    exact Sturm counts, so multiple solutions per x-coordinate are fine.
    """
    _validate_pair(f, g)
    if f.total_degree == 0 or g.total_degree == 0:
        return 0
    prod = f * g
    lam = next(
        v
        for v in _shear_values(prod.total_degree + 2)
        if prod.top_form_at(v) != 0
    )
    f2 = f.shear(lam) if lam else f
    g2 = g.shear(lam) if lam else g
    rred = _resultant_in_x(f2, g2)
    fcols, gcols = f2.y_coeffs(), g2.y_coeffs()
    total = 0
    for alpha in isolate_real_roots(rred):
        if alpha.is_rational:
            a = alpha.rational_value
            h = poly_gcd(f2.eval_x(a), g2.eval_x(a))
            if h.degree >= 1:
                total += sturm_count(h)
            continue

        def count(lifted):
            h = poly_gcd(lifted[0], lifted[1])
            if h.degree < 1:
                return 0
            return sturm_count(h)

        total += _on_fiber([fcols, gcols], alpha, count)
    return total


class _NotSeparated(Exception):
    pass


def _linear_fiber_expr(lifted_pair):
    """Monic gcd of a lifted fiber, demanding a single distinct root.

    Returns the root -c0 as a rational-coefficient expression in the
    modulus generator; raises _NotSeparated when the fiber holds several
    distinct solutions.
    """
    h = poly_gcd(lifted_pair[0], lifted_pair[1])
    hs = squarefree_part_uni(h)
    if hs.degree != 1:
        raise _NotSeparated
    return (-hs[0]).rep


def solve_real_points(f: BiPoly, g: BiPoly, max_shears: int = 24):
    """All real solutions of the zero-dimensional system f = g = 0.

    Points over rational x-fibers are read off directly; irrational fibers
    need the shear to separate x-coordinates so that y becomes a
    polynomial expression in the fiber's algebraic number.
    """
    _validate_pair(f, g)
    if f.total_degree == 0 or g.total_degree == 0:
        return []
    prod = f * g
    tried = 0
    for lam in _shear_values(prod.total_degree + 2 + max_shears):
        if prod.top_form_at(lam) == 0:
            continue
        tried += 1
        if tried > max_shears:
            break
        try:
            return sorted(_solve_with_shear(f, g, lam))
        except _NotSeparated:
            continue
    raise CurveError("no separating shear found for coordinate extraction")


def _solve_with_shear(f, g, lam):
    f2 = f.shear(lam) if lam else f
    g2 = g.shear(lam) if lam else g
    rred = _resultant_in_x(f2, g2)
    fcols, gcols = f2.y_coeffs(), g2.y_coeffs()
    pts = []
    for alpha in isolate_real_roots(rred):
        if alpha.is_rational:
            a = alpha.rational_value
            h = squarefree_part_uni(poly_gcd(f2.eval_x(a), g2.eval_x(a)))
            if h.degree < 1:
                continue
            for beta in isolate_real_roots(h):
                if beta.is_rational:
                    b = beta.rational_value
                    pts.append(Point(a + lam * b, b, cert=("fiber", a)))
                else:
                    yv = beta
                    xv = a if lam == 0 else algebraic_image(
                        beta, UniPoly(beta.minimal_poly.var, (a, lam))
                    )
                    pts.append(Point(xv, yv, cert=("fiber", a)))
            continue
        u = _on_fiber([fcols, gcols], alpha, _linear_fiber_expr)
        tvar = u.var
        yv = algebraic_image(alpha, u)
        xexpr = UniPoly.ident(tvar) + u.scale(lam)
        xv = algebraic_image(alpha, xexpr)
        pts.append(Point(xv, yv, cert=("fiber", str(alpha.minimal_poly))))
    return pts


def singular_points(curve: Curve) -> dict:
    """Real singular points of the complex curve, plus conjugate-pair data.

    Solves {f = f_x = f_y = 0} fiberwise.  The count of non-real singular
    points is exact: per branch modulus the fiber degree is uniform, so
    complex points are deg(m) each and real ones are counted by isolated
    real roots.  Component intersections satisfy the gradient system
    automatically and need no separate pass.
    """
    f = curve.f
    first = None
    tried = 0
    for lam in _shear_values(f.total_degree + 26):
        if f.top_form_at(lam) == 0:
            continue
        tried += 1
        if tried > 24:
            break
        res = _singular_with_shear(f, lam)
        if first is None:
            first = res
        if res.get("complete"):
            return _finish_singular(res)
    # no separating shear found: report what the first admissible one saw
    return _finish_singular(first, exhausted=True)


def _singular_with_shear(f: BiPoly, lam):
    empty = {"complete": True, "real": [], "pairs": 0, "pair_polys": [], "boxes": []}
    f2 = f.shear(lam) if lam else f
    fx = f2.derivative("x")
    fy = f2.derivative("y")
    if fx.is_zero() or fx.total_degree == 0:
        # f_x identically zero means parallel horizontal lines; a nonzero
        # constant f_x never vanishes: either way the gradient system is empty
        return empty
    r2 = resultant(f2, fy, "y").as_unipoly(f2.vars[0])
    r1 = resultant(f2, fx, "y").as_unipoly(f2.vars[0])
    w = r2 if r1.is_zero() else poly_gcd(r1, r2)
    wred = primitive_integer(squarefree_part_uni(w))
    if wred.degree < 1:
        return empty

    cols3 = [f2.y_coeffs(), fx.y_coeffs(), fy.y_coeffs()]
    queue = [wred.monic()]
    real_pts = []
    pairs = 0
    pair_polys = []
    boxes = []
    complete = True
    while queue:
        m = queue.pop()
        ctx = ModCtx(m)
        try:
            lifted = [_lift_fiber(c, ctx) for c in cols3]
            h = poly_gcd(poly_gcd(lifted[0], lifted[1]), lifted[2])
            hs = squarefree_part_uni(h)
        except SplitRequest as s:
            fac = s.factor.with_var(m.var)
            queue.append(fac)
            queue.append(m.divexact(fac))
            continue
        d = hs.degree
        if d == 0:
            continue
        roots = isolate_real_roots(m)
        if d > 1:
            complete = False
            for alpha in roots:
                boxes.append(alpha.interval)
            # counting still works at this shear; extraction does not
            pairs += (m.degree * d - _real_count_on_branch(cols3, roots)) // 2
            continue
        u = (-hs[0]).rep
        tvar = u.var
        xexpr = UniPoly.ident(tvar) + u.scale(lam)
        for alpha in roots:
            yv = algebraic_image(alpha, u)
            xv = algebraic_image(alpha, xexpr)
            real_pts.append(Point(xv, yv, cert=("singular", str(m))))
        nonreal = m.degree - len(roots)
        if nonreal:
            pairs += nonreal // 2
            orig_x = primitive_integer(
                squarefree_part_uni(
                    coordinate_minpoly(m.with_var("t"), xexpr.with_var("t"), "x")
                )
            )
            pair_polys.append(orig_x)
    return {
        "complete": complete,
        "real": real_pts,
        "pairs": pairs,
        "pair_polys": pair_polys,
        "boxes": boxes,
    }


def _real_count_on_branch(cols3, roots) -> int:
    total = 0
    for alpha in roots:

        def count(lifted):
            h = poly_gcd(poly_gcd(lifted[0], lifted[1]), lifted[2])
            if h.degree < 1:
                return 0
            return sturm_count(h)

        total += _on_fiber(cols3, alpha, count)
    return total


def _finish_singular(res, exhausted: bool = False) -> dict:
    out = {
        "real_points": sorted(res["real"]),
        "nonreal_pair_count": res["pairs"],
        "nonreal_pair_data": res["pair_polys"],
        "unsupported": res["boxes"] if exhausted else [],
    }
    return out


# --- half-branch counting by the small-circle method ---


def _sqrt_lower(q: Fraction) -> Fraction:
    """A positive rational lower bound for sqrt(q), q > 0."""
    k = 0
    while q * 4**k < 4:
        k += 1
    scaled = q * 4**k
    r = isqrt(scaled.numerator // scaled.denominator)
    return Fraction(r, 2**k)


def _coord_interval(c):
    if isinstance(c, Fraction):
        return c, c
    return c.interval


def _refine_coord(c):
    if not isinstance(c, Fraction):
        c.refine()


def _square_interval(lo, hi):
    if lo >= 0:
        return lo * lo, hi * hi
    if hi <= 0:
        return hi * hi, lo * lo
    return Fraction(0), max(lo * lo, hi * hi)


def _dist2_lower(center, pt: Point) -> Fraction:
    """A positive rational lower bound on |pt - center|^2 (pt != center)."""
    a, b = center
    while True:
        xlo, xhi = _coord_interval(pt.x)
        ylo, yhi = _coord_interval(pt.y)
        sxlo, _ = _square_interval(xlo - a, xhi - a)
        sylo, _ = _square_interval(ylo - b, yhi - b)
        if sxlo + sylo > 0:
            return sxlo + sylo
        _refine_coord(pt.x)
        _refine_coord(pt.y)


def _circle_setup(curve: Curve, p: Point):
    """(center, non-radial part f0, tangency locus h); h is None when every
    component is a circle centered at p (then p is an isolated point)."""
    rc = p.rational_coords()
    if rc is None:
        raise UnsupportedCenter("circle method needs a rational center")
    a, b = rc
    f = curve.f
    if f.eval(a, b) != 0:
        raise CurveError("the point is not on the curve")
    vp = f.vars
    xma = BiPoly(vp, {(1, 0): Fraction(1), (0, 0): -a})
    ymb = BiPoly(vp, {(0, 1): Fraction(1), (0, 0): -b})
    h = f.derivative("x") * ymb - f.derivative("y") * xma
    if h.is_zero():
        return (a, b), None, None
    radial = bipoly_gcd(f, h)
    f0 = bipoly_divexact(f, radial) if radial.total_degree > 0 else f
    return (a, b), f0, (h, radial)


def admissible_radius(curve: Curve, p: Point) -> Fraction:
    """A certified radius below every feature of the curve around p.

    Tangency condition: h = f_x*(y-b) - f_y*(x-a) vanishes where a circle
    about p is tangent to the curve (and at every singular point).  The
    radius stays under min(1, half the distance to the nearest {f, h}
    solution other than p), with concentric-circle components handled by
    their radii since h vanishes on them identically.  A zero return means
    p is an isolated radial center and no circle is needed.
    """
    (a, b), f0, extra = _circle_setup(curve, p)
    if f0 is None:
        return Fraction(0)
    h, radial = extra
    bound = Fraction(1)
    if radial.total_degree > 0:
        w = radial.shift(a, b).eval_y(Fraction(0))
        for rho in isolate_real_roots(w):
            while True:
                lo, hi = rho.interval
                if lo > 0:
                    bound = min(bound, lo)
                    break
                if hi <= 0:
                    break
                rho.refine()
    if f0.total_degree > 0:
        center = Point(a, b)
        for s in solve_real_points(f0, h):
            if s == center:
                continue
            bound = min(bound, _sqrt_lower(_dist2_lower((a, b), s)))
    return bound / 2


def half_branch_count(curve: Curve, p: Point, eps: Fraction = None) -> int:
    """Number of real local half-branches of the curve at a rational point.

    Counts transversal intersections with a certified small circle; the
    result is independent of the radius once it is admissible.  eps
    overrides the radius (for stability checks); it must be admissible.
    """
    if eps is None:
        eps = admissible_radius(curve, p)
    if eps == 0:
        return 0
    (a, b), f0, _ = _circle_setup(curve, p)
    if f0 is None or f0.total_degree == 0:
        return 0
    circle = BiPoly(
        f0.vars,
        {
            (2, 0): Fraction(1),
            (0, 2): Fraction(1),
            (1, 0): -2 * a,
            (0, 1): -2 * b,
            (0, 0): a * a + b * b - eps * eps,
        },
    )
    return count_real_solutions(f0, circle)
