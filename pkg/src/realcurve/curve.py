"""Plane curve container: squarefree validation, components, shear choice.

A Curve wraps a squarefree integer-primitive BiPoly together with a
decomposition into pairwise coprime components.  Splitting is exact where
we can prove it (univariate contents, factors of degree <= 1 in one
variable, quadratics whose discriminant is a polynomial square); anything
deeper is kept whole and its irreducibility is flagged as assumed, with a
cheap randomized specialization check that can only warn, never reject.
"""

import random
from fractions import Fraction

from .errors import CurveError
from .polycore import (
    BiPoly,
    RealAlgebraic,
    UniPoly,
    bipoly_divexact,
    bipoly_gcd,
    bipoly_is_squarefree,
    fmt_q,
    rational_roots,
    rational_sqrt,
    squarefree_part_uni,
)


def unipoly_sqrt(p: UniPoly):
    """Exact square root in Q[x], or None if p is not a perfect square."""
    if p.is_zero():
        return UniPoly.zero(p.var)
    if p.degree % 2:
        return None
    h = p.degree // 2
    top = rational_sqrt(p.lc())
    if top is None:
        return None
    s = [Fraction(0)] * (h + 1)
    s[h] = top
    for j in range(2 * h - 1, h - 1, -1):
        i = j - h
        acc = Fraction(0)
        for a in range(i + 1, h):
            b = j - a
            if i < b < h:
                acc += s[a] * s[b]
        s[i] = (p[j] - acc) / (2 * top)
    cand = UniPoly(p.var, s)
    if cand * cand == p:
        return cand
    return None


class Point:
    """A real point of the plane with exact coordinates.

    Coordinates are Fraction or RealAlgebraic; realness is built into the
    representation.  cert records how the point was produced (free-form,
    used only for reporting).
    """

    __slots__ = ("x", "y", "cert")

    def __init__(self, x, y, cert=None):
        self.x = Fraction(x) if isinstance(x, int) else x
        self.y = Fraction(y) if isinstance(y, int) else y
        self.cert = cert

    @property
    def is_rational(self) -> bool:
        return self.rational_coords() is not None

    def rational_coords(self):
        """(Fraction, Fraction) if both coordinates are rational, else None."""
        out = []
        for c in (self.x, self.y):
            if isinstance(c, Fraction):
                out.append(c)
            elif c.try_rational():
                out.append(c.rational_value)
            else:
                return None
        return tuple(out)

    def approx(self):
        def one(c):
            return float(c) if isinstance(c, Fraction) else c.approx()

        return (one(self.x), one(self.y))

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __lt__(self, other):
        if self.x == other.x:
            return self.y < other.y
        return self.x < other.x

    def __hash__(self):
        # hash on the coarse float approximation; equality stays exact
        ax, ay = self.approx()
        return hash((round(ax, 6), round(ay, 6)))

    def __repr__(self):
        def one(c):
            if isinstance(c, Fraction):
                return fmt_q(c)
            return f"~{c.approx():.6g}"

        return f"Point({one(self.x)}, {one(self.y)})"


def _as_bipoly_x(up: UniPoly, vars_pair) -> BiPoly:
    return BiPoly(vars_pair, {(i, 0): c for i, c in up.monomials().items()})


def _as_bipoly_y(up: UniPoly, vars_pair) -> BiPoly:
    return BiPoly(vars_pair, {(0, j): c for j, c in up.monomials().items()})


def _split_univariate(c: UniPoly):
    """Split a squarefree univariate into certified irreducible pieces.

    Returns [(factor, asserted)]: linear factors from rational roots are
    proven irreducible, as is any rootless remainder of degree 2 or 3.
    """
    out = []
    rest = c
    for r in rational_roots(c):
        lin = UniPoly(c.var, (-r, Fraction(1)))
        rest = rest.divexact(lin)
        out.append((lin, True))
    if rest.degree >= 1:
        out.append((rest, rest.degree <= 3))
    return out


def _quadratic_split(g: BiPoly):
    """Split a y-primitive, y-degree-2 BiPoly, or prove it irreducible.

    Returns (factors, certified): factors is None when g does not split;
    certified is True when non-splitting is a proof of irreducibility
    (discriminant not a polynomial square is exact).
    """
    cols = g.y_coeffs()
    a, b, c = cols[2], cols[1], cols[0]
    disc = b * b - a * c.scale(4)
    s = unipoly_sqrt(disc)
    if s is None:
        return None, True
    two_a = a.scale(2)
    f1 = BiPoly.from_y_coeffs(g.vars, [b - s, two_a])
    f2 = BiPoly.from_y_coeffs(g.vars, [b + s, two_a])
    from .polycore import _primitive_part_y

    f1, _ = _primitive_part_y(f1)
    f2, _ = _primitive_part_y(f2)
    f1 = f1.integer_primitive()
    f2 = f2.integer_primitive()
    check = bipoly_divexact(f1 * f2, g)
    if check.total_degree != 0:
        raise CurveError("internal quadratic split inconsistency")
    return [f1, f2], True


def _restrict_line(g: BiPoly, a1, a2, u1, u2) -> UniPoly:
    """g evaluated along the parametrized line (a1 + u1 t, a2 + u2 t)."""
    t = UniPoly.ident("t")
    X = t.scale(Fraction(u1)) + UniPoly.const("t", Fraction(a1))
    Y = t.scale(Fraction(u2)) + UniPoly.const("t", Fraction(a2))
    acc = UniPoly.zero("t")
    xpow = {0: UniPoly.const("t", Fraction(1))}
    ypow = {0: UniPoly.const("t", Fraction(1))}

    def power(cache, base, k):
        if k not in cache:
            cache[k] = power(cache, base, k - 1) * base
        return cache[k]

    for (i, j), cf in g.terms.items():
        acc = acc + (power(xpow, X, i) * power(ypow, Y, j)).scale(cf)
    return acc


def _reducibility_evidence(g: BiPoly, rng: random.Random) -> bool:
    """Randomized sanity check: does g look reducible on random lines?

    Specializes g along several random rational lines; if every squarefree
    full-degree specialization has a rational root, a degree-1-in-some-
    direction factor is likely.  Evidence only, never a proof.
    """
    d = g.total_degree
    if d < 2:
        return False
    hits = 0
    samples = 0
    attempts = 0
    while samples < 5 and attempts < 40:
        attempts += 1
        a1, a2 = rng.randint(-9, 9), rng.randint(-9, 9)
        u1, u2 = rng.randint(1, 7), rng.randint(-7, 7)
        r = _restrict_line(g, a1, a2, u1, u2)
        if r.degree != d:
            continue
        if squarefree_part_uni(r).degree != r.degree:
            continue
        samples += 1
        if rational_roots(r):
            hits += 1
    return samples >= 3 and hits == samples


def split_components(f: BiPoly, rng=None):
    """Decompose a squarefree BiPoly into pairwise coprime components.

    Returns (components, asserted_flags, warnings).  Flags are True only
    when irreducibility over Q is actually proven.
    """
    if rng is None:
        rng = random.Random(0xC0FFEE)
    vars_pair = f.vars
    work = [f.integer_primitive()]
    found = []  # (BiPoly, asserted)
    warnings = []
    while work:
        g = work.pop()
        if g.total_degree == 0:
            continue
        dy, dx = g.deg_y, g.deg_x
        if dy == 0:
            for fac, ok in _split_univariate(g.y_coeffs()[0]):
                found.append((_as_bipoly_x(fac, vars_pair).integer_primitive(), ok))
            continue
        if dx == 0:
            up = g.swap().y_coeffs()[0]
            for fac, ok in _split_univariate(up):
                found.append((_as_bipoly_y(fac, vars_pair).integer_primitive(), ok))
            continue
        from .polycore import _primitive_part_y

        prim, cont = _primitive_part_y(g)
        if cont.degree > 0:
            work.append(_as_bipoly_x(cont, vars_pair))
            work.append(prim)
            continue
        prim_x, cont_y = _primitive_part_y(g.swap())
        if cont_y.degree > 0:
            work.append(_as_bipoly_y(cont_y, vars_pair))
            work.append(prim_x.swap())
            continue
        # now primitive in both variables, positive degree in both
        if dy == 1 or dx == 1:
            found.append((g, True))
            continue
        if dy == 2:
            facs, certified = _quadratic_split(g)
            if facs:
                work.extend(facs)
                continue
            found.append((g, certified))
            continue
        if dx == 2:
            facs, certified = _quadratic_split(g.swap())
            if facs:
                work.extend(fac.swap() for fac in facs)
                continue
            found.append((g, certified))
            continue
        found.append((g, False))

    comps, asserted = [], []
    for g, ok in sorted(found, key=lambda t: (t[0].total_degree, str(t[0]))):
        comps.append(g)
        asserted.append(ok)
        if not ok:
            note = f"component {g} is not certified irreducible"
            if _reducibility_evidence(g, rng):
                note += " and random line sections suggest it may factor"
            warnings.append(note + "; componentwise conclusions assume irreducibility")
    return comps, asserted, warnings


class Curve:
    """A squarefree real plane curve Z(f) with its component decomposition.

    components multiply to f up to a nonzero rational constant and are
    pairwise coprime (both facts are verified exactly).  shear_lambda is a
    rational lambda with f(x + lambda*y, y) monic in y after scaling; it is
    shared by every component since top forms multiply.
    """

    def __init__(self, f: BiPoly, components=None, assume_irreducible=None):
        if not isinstance(f, BiPoly):
            raise CurveError("curve input must be a BiPoly")
        # the solvers eliminate the second variable by name
        if f.vars != ("x", "y"):
            raise CurveError("curve polynomial must use the variable pair (x, y)")
        if f.is_zero() or f.total_degree == 0:
            raise CurveError("curve polynomial must have positive degree")
        for c in f.terms.values():
            if not isinstance(c, Fraction):
                raise CurveError("curve coefficients must be rational")
        f = f.integer_primitive()
        if not bipoly_is_squarefree(f):
            raise CurveError(
                "curve polynomial is not squarefree; pass its squarefree part"
            )
        self.f = f
        self.warnings: list = []

        if components is not None:
            comps = [c.integer_primitive() for c in components]
            prod = BiPoly.const(Fraction(1), f.vars)
            for c in comps:
                if c.total_degree == 0:
                    raise CurveError("constant component")
                prod = prod * c
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    if bipoly_gcd(comps[i], comps[j]).total_degree != 0:
                        raise CurveError("components are not pairwise coprime")
            try:
                ratio = bipoly_divexact(prod, f)
            except ArithmeticError:
                raise CurveError("component product does not equal the curve")
            if ratio.total_degree != 0:
                raise CurveError("component product does not equal the curve")
            if assume_irreducible is None:
                flags = [True] * len(comps)
            elif isinstance(assume_irreducible, bool):
                flags = [assume_irreducible] * len(comps)
            else:
                flags = [bool(b) for b in assume_irreducible]
                if len(flags) != len(comps):
                    raise CurveError("one irreducibility flag per component")
            rng = random.Random(0xC0FFEE)
            for c, ok in zip(comps, flags):
                if ok and c.total_degree >= 3 and _reducibility_evidence(c, rng):
                    self.warnings.append(
                        f"component {c} was asserted irreducible but random "
                        "line sections suggest it may factor"
                    )
            self.components = comps
            self.irreducible_asserted = flags
        else:
            comps, flags, warns = split_components(f)
            self.components = comps
            self.irreducible_asserted = flags
            self.warnings.extend(warns)

        self.shear_lambda = self._pick_shear()

    def _pick_shear(self) -> Fraction:
        lam = Fraction(0)
        k = 1
        while self.f.top_form_at(lam) == 0:
            lam = Fraction((k + 1) // 2 * (1 if k % 2 else -1))
            k += 1
        return lam

    def sheared(self, g: BiPoly = None) -> BiPoly:
        """g (default f) with the recorded shear applied: monic-in-y shape."""
        if g is None:
            g = self.f
        if self.shear_lambda:
            g = g.shear(self.shear_lambda)
        return g

    @property
    def is_reducible(self) -> bool:
        return len(self.components) > 1

    def component_curve(self, i: int) -> "Curve":
        c = self.components[i]
        sub = Curve(
            c, components=[c], assume_irreducible=[self.irreducible_asserted[i]]
        )
        return sub

    def evaluate(self, x, y):
        return self.f.eval(x, y)

    def __repr__(self):
        return f"Curve({self.f})"
