"""Local branch expansions of a plane curve at one of its points.

Every place through the point is produced in rational parametric form

    x = x0 + c * t**e,    y = y0 + b1*t + b2*t**2 + ...

with e >= 1 and all constants in Q or in one quadratic extension
Q(sqrt(d)).  Keeping the x-part a monomial makes sidedness exact: for
even e the sign of c tells which side of x0 the place occupies, and a
real place never needs complex constants.  A system whose constants
land in an imaginary quadratic field stands for two complex-conjugate
places and is emitted once with places = 2.  Vertical line components
get a degenerate parameter (x constant, y = y0 + t).

Series are truncated but regenerable: valuation queries extend the
precision adaptively up to a cap (REALCURVE_NMAX, default 64) and raise
PrecisionExhausted beyond it, unless divisibility by the branch's
component certifies an infinite order first.
"""

import math
import os
from fractions import Fraction

from .curve import Curve, Point
from .errors import CurveError, PrecisionExhausted, UnsupportedExtension
from .polycore import (
    BiPoly,
    QuadExtElt,
    UniPoly,
    bipoly_gcd,
    fmt_q,
    rational_roots,
    rational_sqrt,
    squarefree_part_uni,
)

INF = math.inf


def _nmax() -> int:
    try:
        return max(8, int(os.environ.get("REALCURVE_NMAX", "64")))
    except ValueError:
        return 64


def _kpow(c, n: int):
    out = Fraction(1)
    for _ in range(n):
        out = out * c
    return out


def _conj_c(c):
    return c.conj() if isinstance(c, QuadExtElt) else c


def _binom_row(n: int):
    return [math.comb(n, k) for k in range(n + 1)]


def _quadext_sqrt(val, d: Fraction):
    """A square root of val inside Q(sqrt(d)), or None if there is none."""
    if isinstance(val, QuadExtElt) and val.v == 0:
        val = val.u
    if isinstance(val, QuadExtElt):
        s = rational_sqrt(val.u * val.u - val.v * val.v * d)
        if s is None:
            return None
        for big in ((val.u + s) / 2, (val.u - s) / 2):
            u = rational_sqrt(big) if big >= 0 else None
            if u:
                v = val.v / (2 * u)
                if u * u + v * v * d == val.u and 2 * u * v == val.v:
                    return QuadExtElt(d, u, v)
        return None
    r = rational_sqrt(val)
    if r is not None:
        return r
    r = rational_sqrt(val / d)
    if r is not None:
        return QuadExtElt(d, 0, r)
    return None


class TSeries:
    """Power series in one parameter, known modulo t**prec.

    Coefficients live in any exact field whose elements combine with
    Fractions; trailing zeros are trimmed but the validity window is
    tracked by prec.  Multiplication keeps the minimum window, which is
    sound (every cross term below it is fully determined).
    """

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec: int):
        if prec < 1:
            raise ValueError("series precision must be positive")
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if len(cs) > prec:
            del cs[prec:]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.prec = prec

    @classmethod
    def zero(cls, prec: int) -> "TSeries":
        return cls((), prec)

    @classmethod
    def const(cls, c, prec: int) -> "TSeries":
        return cls((c,), prec)

    @classmethod
    def monomial(cls, c, k: int, prec: int) -> "TSeries":
        if k >= prec:
            return cls((), prec)
        return cls((Fraction(0),) * k + (c,), prec)

    def __getitem__(self, k: int):
        if k >= self.prec:
            raise ValueError("coefficient index beyond the known precision")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def order(self):
        """Index of the first nonzero known coefficient, or None."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero_known(self) -> bool:
        return not self.coeffs

    def truncate(self, prec: int) -> "TSeries":
        if prec >= self.prec:
            return self
        return TSeries(self.coeffs[:prec], prec)

    def lift(self, prec: int) -> "TSeries":
        """Reinterpret as exact up to a higher precision.

        Only valid when the series is known to be the polynomial given by
        its coefficients (Newton iterates are; generic series are not).
        """
        if prec <= self.prec:
            return self
        return TSeries(self.coeffs, prec)

    def __add__(self, other: "TSeries") -> "TSeries":
        p = min(self.prec, other.prec)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(min(n, p)):
            a = self.coeffs[k] if k < len(self.coeffs) else Fraction(0)
            b = other.coeffs[k] if k < len(other.coeffs) else Fraction(0)
            out.append(a + b)
        return TSeries(out, p)

    def __neg__(self) -> "TSeries":
        return TSeries(tuple(-c for c in self.coeffs), self.prec)

    def __sub__(self, other: "TSeries") -> "TSeries":
        return self + (-other)

    def __mul__(self, other: "TSeries") -> "TSeries":
        p = min(self.prec, other.prec)
        if not self.coeffs or not other.coeffs:
            return TSeries((), p)
        n = min(p, len(self.coeffs) + len(other.coeffs) - 1)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a or i >= n:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
        return TSeries(out, p)

    def __pow__(self, n: int) -> "TSeries":
        out = TSeries.const(Fraction(1), self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def scale(self, c) -> "TSeries":
        return TSeries(tuple(c * v for v in self.coeffs), self.prec)

    def shift_up(self, k: int) -> "TSeries":
        """Multiply by t**k; the validity window moves up with it."""
        if k == 0:
            return self
        return TSeries((Fraction(0),) * k + self.coeffs, self.prec + k)

    def __repr__(self):
        return f"TSeries({list(self.coeffs)!r}, prec={self.prec})"


def _series_inv(s: TSeries, prec: int) -> TSeries:
    c0 = s[0]
    if not c0:
        raise ArithmeticError("series has no inverse: zero constant term")
    inv0 = c0.inverse() if isinstance(c0, QuadExtElt) else 1 / c0
    out = TSeries.const(inv0, 1)
    p = 1
    while p < prec:
        p = min(2 * p, prec)
        w = out.lift(p)
        two = TSeries.const(Fraction(2), p)
        out = (w * (two - s.truncate(p) * w)).truncate(p)
    return out


def _eval_terms(terms, xs: TSeries, ys: TSeries) -> TSeries:
    """Evaluate a coefficient dict {(i, j): c} at a series point."""
    prec = min(xs.prec, ys.prec)
    by_j = {}
    for (i, j), c in terms.items():
        by_j.setdefault(j, {})[i] = c
    if not by_j:
        return TSeries.zero(prec)

    def xpoly(row):
        top = max(row)
        acc = TSeries.const(row[top], prec)
        for i in range(top - 1, -1, -1):
            acc = acc * xs
            if i in row:
                acc = acc + TSeries.const(row[i], prec)
        return acc

    js = sorted(by_j, reverse=True)
    acc = xpoly(by_j[js[0]])
    prev = js[0]
    for j in js[1:]:
        acc = acc * ys ** (prev - j) + xpoly(by_j[j])
        prev = j
    if prev:
        acc = acc * ys**prev
    return acc


def _regular_root(terms, prec: int) -> TSeries:
    """The unique series y(t) with y(0) = 0 solving G(t, y(t)) = 0.

    G must vanish at the origin with a nonzero linear y-coefficient;
    Newton iteration doubles the correct window each round.
    """
    if not terms.get((0, 1)):
        raise CurveError("internal error: non-regular leaf equation")
    dterms = {(i, j - 1): j * c for (i, j), c in terms.items() if j >= 1}
    y = TSeries.zero(1)
    p = 1
    while p < prec:
        p = min(2 * p, prec)
        t = TSeries.monomial(Fraction(1), 1, p)
        w = y.lift(p)
        g = _eval_terms(terms, t, w)
        dg = _eval_terms(dterms, t, w)
        y = (w - g * _series_inv(dg, p)).truncate(p)
    return y


# --- Newton polygon machinery ---


def _lower_edges(terms):
    """Edges of the lower-left Newton hull, from (0, n0) down to (i*, 0)."""
    pts = list(terms)
    cur = (0, min(j for i, j in pts if i == 0))
    edges = []
    while cur[1] > 0:
        best = None
        bg = None
        for (i, j) in pts:
            if i > cur[0] and j < cur[1]:
                g = Fraction(i - cur[0], cur[1] - j)
                if best is None or g < bg or (g == bg and i > best[0]):
                    best, bg = (i, j), g
        edges.append((cur, best))
        cur = best
    return edges


def _factor_edge_q(coeffs):
    """Split an edge polynomial over Q into rational roots with multiplicity
    plus at most one irreducible quadratic power; anything richer raises."""
    p = UniPoly("w", coeffs)
    roots = []
    for r in rational_roots(p):
        lin = UniPoly("w", (-r, Fraction(1)))
        mult = 0
        while True:
            q, rem = p.pdiv(lin)
            if not rem.is_zero():
                break
            p = q
            mult += 1
        roots.append((r, mult))
    if p.degree <= 0:
        return roots, None
    sf = squarefree_part_uni(p)
    if sf.degree != 2 or p.degree % 2:
        raise UnsupportedExtension(
            "edge polynomial needs a field extension beyond one square root"
        )
    mult = p.degree // 2
    if p.monic() != sf.monic() ** mult:
        raise UnsupportedExtension(
            "edge polynomial splits into several irrational factors"
        )
    a, b, c = sf[2], sf[1], sf[0]
    return roots, ((a, b, c), mult)


def _factor_edge_quad(coeffs, d: Fraction):
    """Roots with multiplicity of an edge polynomial over Q(sqrt(d));
    only degrees one and two stay inside the extension budget."""
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    deg = len(cs) - 1
    if deg == 1:
        c0, c1 = cs
        inv = c1.inverse() if isinstance(c1, QuadExtElt) else 1 / c1
        return [((-c0) * inv, 1)]
    if deg == 2:
        a, b, c = cs[2], cs[1], cs[0]
        disc = b * b - 4 * a * c
        inv2a = (2 * a).inverse() if isinstance(a, QuadExtElt) else 1 / (2 * a)
        if not disc:
            return [((-b) * inv2a, 2)]
        s = _quadext_sqrt(disc, d)
        if s is None:
            raise UnsupportedExtension(
                "a second quadratic extension would be needed"
            )
        return [(((-b) + s) * inv2a, 1), (((-b) - s) * inv2a, 1)]
    raise UnsupportedExtension(
        f"degree {deg} edge polynomial over a quadratic field"
    )


def _substitute(terms, q: int, m: int, lam, cfac):
    """G(lam * x**q, cfac * x**m * (1 + y)), divided by its lowest x power."""
    low = min(q * i + m * j for (i, j) in terms)
    out = {}
    for (i, j), c in terms.items():
        base = c * _kpow(lam, i) * _kpow(cfac, j)
        xexp = q * i + m * j - low
        for jj, bc in enumerate(_binom_row(j)):
            key = (xexp, jj)
            s = out.get(key, Fraction(0)) + base * bc
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


class _Leaf:
    """A resolved system: substitution tower plus a regular tail equation."""

    __slots__ = ("tower", "terms", "ext")

    def __init__(self, tower, terms, ext):
        self.tower = tuple(tower)
        self.terms = terms
        self.ext = ext

    def conjugate(self) -> "_Leaf":
        tower = tuple(
            (q, m, _conj_c(lam), _conj_c(cf)) for (q, m, lam, cf) in self.tower
        )
        terms = {k: _conj_c(c) for k, c in self.terms.items()}
        return _Leaf(tower, terms, self.ext)

    def x_part(self):
        """(c, e) of the exact monomial x-offset."""
        c, e = Fraction(1), 1
        for (q, m, lam, cfac) in reversed(self.tower):
            c = lam * _kpow(c, q)
            e = e * q
        return c, e

    def offset_series(self, prec: int) -> TSeries:
        ys = _regular_root(self.terms, prec)
        c, e = Fraction(1), 1
        for (q, m, lam, cfac) in reversed(self.tower):
            one_plus = TSeries.const(Fraction(1), ys.prec) + ys
            ys = one_plus.scale(cfac * _kpow(c, m)).shift_up(e * m)
            c = lam * _kpow(c, q)
            e = e * q
        return ys


def _bezout_uv(q: int, m: int):
    """u, v >= 0 with u*q - v*m == 1 (q, m coprime)."""
    if m == 1:
        return 1, q - 1
    u = pow(q, -1, m)
    return u, (u * q - 1) // m


def _expand(terms, ext, tower, leaves, depth: int):
    """Collect leaf systems for every branch of G through the origin.

    terms is a dict over Q (ext None) or Q(sqrt(ext)); preconditions:
    G(0, 0) = 0 and X does not divide G.
    """
    if depth > 256:
        raise CurveError("branch expansion recursion did not terminate")
    if all(j >= 1 for (_, j) in terms):
        # exact horizontal place y = 0
        leaves.append(_Leaf(tower, {(0, 1): Fraction(1)}, ext))
        terms = {(i, j - 1): c for (i, j), c in terms.items()}
        if terms.get((0, 0)):
            return
    n0 = min((j for (i, j) in terms if i == 0), default=None)
    if n0 is None:
        raise CurveError("internal error: vertical factor inside expansion")
    if n0 == 1:
        leaves.append(_Leaf(tower, terms, ext))
        return
    for (pa, pb) in _lower_edges(terms):
        di, dj = pb[0] - pa[0], pa[1] - pb[1]
        g = math.gcd(di, dj)
        q, m = dj // g, di // g
        coeffs = [
            terms.get((pb[0] - k * m, pb[1] + k * q), Fraction(0))
            for k in range(g + 1)
        ]
        found = []
        if ext is None:
            roots, quad = _factor_edge_q(coeffs)
            for r, mult in roots:
                found.append((r, mult, None))
            if quad is not None:
                (a, b, c), mult = quad
                d = b * b - 4 * a * c
                xi = QuadExtElt(d, (-b) / (2 * a), abs(1 / (2 * a)))
                found.append((xi, mult, d))
        else:
            for r, mult in _factor_edge_quad(coeffs, ext):
                found.append((r, mult, ext))
        for xi, mult, ext2 in found:
            u, v = _bezout_uv(q, m)
            lam = _kpow(xi, v)
            cfac = _kpow(xi, u)
            sub = _substitute(terms, q, m, lam, cfac)
            if sub.get((0, 0)):
                raise CurveError("internal error: edge root did not cancel")
            level = tower + ((q, m, lam, cfac),)
            if mult == 1:
                leaves.append(_Leaf(level, sub, ext2))
            else:
                _expand(sub, ext2, level, leaves, depth + 1)


# --- branches at a point ---


class Branch:
    """One place of the curve at a point, or a conjugate pair of places.

    x_series/y_series give the parametrization, regenerable to any
    precision; e and x_coeff describe the exact monomial x-part.  kind is
    "Real" or "ComplexConjugatePair"; places counts the places of the
    complex curve the object stands for.  A vertical line component gives
    e == 0 with x constant and y = y0 + t.
    """

    __slots__ = (
        "point",
        "component",
        "kind",
        "places",
        "e",
        "x_coeff",
        "field_disc",
        "_center",
        "_leaf",
        "_cache",
    )

    def __init__(self, point, component, kind, places, center, leaf, field_disc):
        self.point = point
        self.component = component
        self.kind = kind
        self.places = places
        self._center = center
        self._leaf = leaf
        self.field_disc = field_disc
        self._cache = None
        if leaf is None:
            self.e = 0
            self.x_coeff = Fraction(0)
        else:
            self.x_coeff, self.e = leaf.x_part()

    @property
    def is_vertical(self) -> bool:
        return self._leaf is None

    def x_series(self, prec: int = 8) -> TSeries:
        x0 = self._center[0]
        if self._leaf is None:
            return TSeries.const(x0, prec)
        coeffs = [x0] + [Fraction(0)] * (self.e - 1) + [self.x_coeff]
        return TSeries(coeffs, max(prec, self.e + 1))

    def y_series(self, prec: int = 8) -> TSeries:
        y0 = self._center[1]
        if self._leaf is None:
            return TSeries((y0, Fraction(1)), max(prec, 2))
        off = self._offset(prec)
        return TSeries.const(y0, off.prec) + off

    def _offset(self, prec: int) -> TSeries:
        if self._cache is None or self._cache.prec < prec:
            self._cache = self._leaf.offset_series(prec)
        return self._cache

    def y_coeff(self, k: int):
        """Coefficient of t**k in the y-parametrization."""
        return self.y_series(k + 1)[k]

    def describe(self, terms: int = 6) -> str:
        x0, y0 = self._center
        if self._leaf is None:
            return f"x = {_fmt_c(x0)}, y = {_fmt_c(y0)} + t (vertical)"
        xs = f"x = {_fmt_c(x0)} + {_fmt_c(self.x_coeff)}*t^{self.e}"
        ys = self.y_series(terms + 1)
        chunks = []
        for k in range(ys.prec):
            c = ys[k]
            if c:
                chunks.append(f"{_fmt_c(c)}*t^{k}" if k else _fmt_c(c))
        body = " + ".join(chunks) if chunks else "0"
        return f"{xs}, y = {body} + O(t^{ys.prec}) [{self.kind}]"

    def __repr__(self):
        return f"Branch({self.describe(4)})"


def _fmt_c(c) -> str:
    if isinstance(c, QuadExtElt):
        return f"({c})"
    return fmt_q(c)


def _point_field(point: Point):
    """Center coordinates as exact field elements: (x0, y0, d or None)."""
    rc = point.rational_coords()
    if rc is not None:
        return rc[0], rc[1], None
    parts = []
    for c in (point.x, point.y):
        if isinstance(c, Fraction):
            parts.append((None, c, None))
            continue
        mp = c.minimal_poly
        if mp.degree != 2:
            raise UnsupportedExtension(
                f"point coordinate of algebraic degree {mp.degree}"
            )
        a2, a1 = mp[2], mp[1]
        disc = a1 * a1 - 4 * a2 * mp[0]
        u = -a1 / (2 * a2)
        vmag = abs(Fraction(1, 2) / a2)
        parts.append((disc, u, vmag if c > u else -vmag))
    d = next(dp for dp, _, _ in parts if dp is not None)
    coords = []
    for dp, u, v in parts:
        if dp is None:
            coords.append(QuadExtElt(d, u, 0))
            continue
        if dp != d:
            s = rational_sqrt(d * dp)
            if s is None:
                raise UnsupportedExtension(
                    "coordinates lie in different quadratic fields"
                )
            v = v * s / d
        coords.append(QuadExtElt(d, u, v))
    return coords[0], coords[1], d


def _shift_terms(f: BiPoly, a, b):
    out = {}
    for (i, j), c in f.terms.items():
        rowi = _binom_row(i)
        rowj = _binom_row(j)
        for ii in range(i + 1):
            ca = c * rowi[ii] * _kpow(a, i - ii)
            if not ca:
                continue
            for jj in range(j + 1):
                v = ca * rowj[jj] * _kpow(b, j - jj)
                key = (ii, jj)
                s = out.get(key, Fraction(0)) + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


def branches_at(curve: Curve, point: Point):
    """All places of the curve centered at a real point of it.

    Each real place is one Branch; each complex-conjugate pair is one
    Branch with places = 2.  UnsupportedExtension signals constants
    beyond one quadratic extension of Q.  The list covers every
    component through the point and is deterministically ordered.
    """
    x0, y0, base_d = _point_field(point)
    out = []
    on_curve = False
    for comp in curve.components:
        if comp.eval(x0, y0):
            continue
        on_curve = True
        center = (x0, y0)
        terms = _shift_terms(comp, x0, y0)
        if all(i >= 1 for (i, _) in terms):
            out.append(Branch(point, comp, "Real", 1, center, None, base_d))
            terms = {(i - 1, j): c for (i, j), c in terms.items()}
        if terms.get((0, 0)):
            continue
        n0 = min(j for (i, j) in terms if i == 0)
        leaves = []
        _expand(terms, base_d, (), leaves, 0)
        weight = 0
        for leaf in leaves:
            _, e = leaf.x_part()
            if base_d is not None or leaf.ext is None:
                out.append(
                    Branch(point, comp, "Real", 1, center, leaf, base_d or leaf.ext)
                )
                weight += e
            elif leaf.ext > 0:
                out.append(Branch(point, comp, "Real", 1, center, leaf, leaf.ext))
                out.append(
                    Branch(point, comp, "Real", 1, center, leaf.conjugate(), leaf.ext)
                )
                weight += 2 * e
            else:
                out.append(
                    Branch(
                        point, comp, "ComplexConjugatePair", 2, center, leaf, leaf.ext
                    )
                )
                weight += 2 * e
        if weight != n0:
            raise CurveError(
                "internal error: branch count mismatch "
                f"({weight} parameter degrees for local degree {n0})"
            )
    if not on_curve:
        raise CurveError("the point is not on the curve")
    out.sort(key=_branch_key)
    return out


def _branch_key(b: Branch):
    lead = ""
    if not b.is_vertical:
        ys = b.y_series(6)
        k = ys.order()
        lead = f"{k}:{ys[k]}" if k is not None else "z"
    return (
        b.kind != "Real",
        b.e,
        str(b.x_coeff),
        lead,
        str(b.component),
    )


def puiseux_branches(curve: Curve, point: Point, truncation: int = None):
    """branches_at plus an optional series warm-up to a requested window.

    Precision is otherwise raised adaptively per query, so truncation only
    pre-renders the parametrizations (useful for reports).
    """
    branches = branches_at(curve, point)
    if truncation is not None and truncation > 0:
        for b in branches:
            b.y_series(truncation)
    return branches


def real_branches(branches):
    return [b for b in branches if b.kind == "Real"]


def conjugate_pairs(branches):
    return [b for b in branches if b.kind == "ComplexConjugatePair"]


# --- valuations and limits along a branch ---


def _divides_component(comp: BiPoly, p: BiPoly) -> bool:
    if p.is_zero():
        return True
    g = bipoly_gcd(comp, p)
    return g.total_degree == comp.total_degree


def _series_lead(branch: Branch, p: BiPoly):
    """(order, leading coefficient) of p along the branch, or (INF, None)
    when p vanishes on the branch identically.

    Identical vanishing is decided rigorously: along a vertical branch the
    composition is an exact polynomial, and otherwise the order of a
    nonvanishing p is at most deg(component) * deg(p) (the local
    intersection number is bounded by the global one), so an all-zero
    window past that bound certifies infinity.
    """
    if _divides_component(branch.component, p):
        return INF, None
    if branch.is_vertical:
        n = p.deg_y + 2
        s = _eval_terms(p.terms, branch.x_series(n), branch.y_series(n))
        k = s.order()
        return (k, s[k]) if k is not None else (INF, None)
    bound = branch.component.total_degree * p.total_degree + 1
    n = 8
    while True:
        s = _eval_terms(p.terms, branch.x_series(n), branch.y_series(n))
        k = s.order()
        if k is not None:
            return k, s[k]
        if n >= bound:
            return INF, None
        if n >= _nmax():
            raise PrecisionExhausted(
                f"no nonzero series coefficient up to t**{n}; raise "
                "REALCURVE_NMAX if the order really is this large"
            )
        n = min(2 * n, _nmax())


def branch_valuation(branch: Branch, num: BiPoly, den: BiPoly = None):
    """Order of vanishing of num/den along the branch, in the local
    parameter t (math.inf when num vanishes on the whole component)."""
    vn, _ = _series_lead(branch, num)
    if den is None:
        return vn
    vd, _ = _series_lead(branch, den)
    if vd == INF:
        raise CurveError("denominator vanishes on a component through the point")
    return vn - vd


def branch_limit(branch: Branch, num: BiPoly, den: BiPoly = None):
    """Limit of num/den along the branch as t -> 0.

    Returns ("finite", value) with an exact Fraction or QuadExtElt value,
    or ("infinite", None).  The limit is the same along both real
    half-branches of a real place.
    """
    vn, cn = _series_lead(branch, num)
    if den is None:
        vd, cd = 0, Fraction(1)
    else:
        vd, cd = _series_lead(branch, den)
    if vd == INF:
        raise CurveError("denominator vanishes on a component through the point")
    if vn == INF:
        return "finite", Fraction(0)
    if vn < vd:
        return "infinite", None
    if vn > vd:
        return "finite", Fraction(0)
    inv = cd.inverse() if isinstance(cd, QuadExtElt) else 1 / cd
    return "finite", canonical_value(cn * inv)


def canonical_value(v):
    """Normalize a field value: rational QuadExtElt collapses to Fraction."""
    if isinstance(v, QuadExtElt) and v.v == 0:
        return v.u
    return v


def values_equal(a, b) -> bool:
    """Exact equality of values possibly given over different square roots."""
    a, b = canonical_value(a), canonical_value(b)
    aq, bq = isinstance(a, QuadExtElt), isinstance(b, QuadExtElt)
    if aq != bq:
        return False
    if not aq:
        return a == b
    return (
        a.u == b.u
        and a.v * a.v * a.d == b.v * b.v * b.d
        and (a.v > 0) == (b.v > 0)
        and (a.d > 0) == (b.d > 0)
    )


def value_str(v) -> str:
    return str(v) if isinstance(v, QuadExtElt) else fmt_q(v)
