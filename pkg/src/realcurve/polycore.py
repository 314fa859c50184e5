"""Exact arithmetic kernel.

Univariate and bivariate polynomials with exact coefficients, Sturm
sequences, real root isolation, Sylvester resultants, and real algebraic
numbers with certified sign evaluation.  Rational coefficients are stdlib
Fractions; the same polynomial classes also carry elements of the two small
coefficient domains used elsewhere (quadratic extensions of Q and residue
rings Q[t]/(m)), since only ring and field operations are ever used.

Floats never enter a decision; they appear only in display helpers.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

_INF = math.inf


def rat(value) -> Fraction:
    """Coerce an int, string, or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def fmt_q(q: Fraction) -> str:
    """Canonical rational rendering: integers bare, otherwise 'p/q'."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign_of(value) -> int:
    """Exact sign (-1, 0, 1) of a rational or of a domain element."""
    if isinstance(value, (int, Fraction)):
        return (value > 0) - (value < 0)
    return value.sign()


def _inv(value):
    if isinstance(value, Fraction):
        if not value:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(value.denominator, value.numerator)
    if isinstance(value, int):
        return Fraction(1, value)
    return value.inverse()


def rational_sqrt(q: Fraction):
    """Exact square root of a rational, or None if q is not a perfect square."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class SplitRequest(Exception):
    """Raised when residue-ring arithmetic discovers a factor of the modulus.

    Carries a proper monic factor; the caller splits the modulus and reruns
    the computation on each factor.  Control flow, not an error condition.
    """

    def __init__(self, factor):
        super().__init__(f"modulus splits off factor {factor}")
        self.factor = factor


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Univariate polynomial, dense ascending coefficient tuple.

    The zero polynomial has degree -1.  Binary operations require matching
    variable tags.  Coefficients may live in any exact domain whose elements
    combine with Fractions (Fractions themselves by default).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def from_map(cls, var: str, mapping) -> "UniPoly":
        if not mapping:
            return cls(var, ())
        if min(mapping) < 0:
            raise ValueError("negative exponent in polynomial")
        top = max(mapping)
        cs = [Fraction(0)] * (top + 1)
        for k, v in mapping.items():
            cs[k] = cs[k] + v
        return cls(var, cs)

    @classmethod
    def const(cls, var: str, value) -> "UniPoly":
        return cls(var, (value,))

    @classmethod
    def ident(cls, var: str) -> "UniPoly":
        return cls(var, (Fraction(0), Fraction(1)))

    @classmethod
    def zero(cls, var: str) -> "UniPoly":
        return cls(var, ())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def monomials(self) -> dict:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def _check(self, other: "UniPoly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.var == other.var
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] = cs[k] + c
        return UniPoly(self.var, cs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.var, out)

    def scale(self, c) -> "UniPoly":
        if not c:
            return UniPoly.zero(self.var)
        return UniPoly(self.var, tuple(a * c for a in self.coeffs))

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if not self.coeffs or k == 0:
            return self
        return UniPoly(self.var, (Fraction(0),) * k + self.coeffs)

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly.const(self.var, Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def pdiv(self, other: "UniPoly"):
        """Division with remainder: returns (quotient, remainder).

        The divisor's leading coefficient must be invertible in the domain;
        inverting a residue-ring zero divisor raises SplitRequest.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return UniPoly.zero(self.var), self
        inv_lc = _inv(other.lc())
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quot = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[other.degree + k]
            if not top:
                continue
            c = top * inv_lc
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[j + k] = rem[j + k] - c * b
        return UniPoly(self.var, quot), UniPoly(self.var, rem[: other.degree])

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.pdiv(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        if other.degree < self.degree:
            return False
        return other.pdiv(self)[1].is_zero()

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, tuple(c * k for k, c in enumerate(self.coeffs))[1:])

    def eval(self, value):
        """Horner evaluation; value may be any element the coefficients combine with."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction):
        """Exact range enclosure of self over [lo, hi] by interval Horner."""
        if not self.coeffs:
            return Fraction(0), Fraction(0)
        alo = ahi = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(cands) + c, max(cands) + c
        return alo, ahi

    def compose_linear(self, a, b) -> "UniPoly":
        """self(a*var + b)."""
        lin = UniPoly(self.var, (b, a))
        acc = UniPoly.zero(self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly.const(self.var, c)
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner)."""
        acc = UniPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(inner.var, c)
        return acc

    def map(self, fn) -> "UniPoly":
        return UniPoly(self.var, tuple(fn(c) for c in self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(_inv(self.lc()))

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(var, self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if not c:
                continue
            body = _monomial_str(c, ((self.var, k),))
            if not chunks:
                chunks.append(body)
            elif body.startswith("-"):
                chunks.append(" - " + body[1:])
            else:
                chunks.append(" + " + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"UniPoly({self.var!r}, {self!s})"


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        return fmt_q(c)
    return str(c)


def _monomial_str(c, var_exps) -> str:
    factors = []
    for var, k in var_exps:
        if k == 0:
            continue
        factors.append(var if k == 1 else f"{var}^{k}")
    cs = _coeff_str(c)
    if not factors:
        return cs
    if cs == "1":
        return "*".join(factors)
    if cs == "-1":
        return "-" + "*".join(factors)
    if not isinstance(c, Fraction):
        cs = f"({cs})"
    return cs + "*" + "*".join(factors)


def all_rational(p: UniPoly) -> bool:
    return all(isinstance(c, Fraction) for c in p.coeffs)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor over a coefficient field."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a.pdiv(b)[1]
    if a.is_zero():
        return a
    return a.monic()


def poly_ext_gcd(a: UniPoly, b: UniPoly):
    """Extended Euclid: (g, u, v) with u*a + v*b = g and g monic (or zero)."""
    a._check(b)
    zero, one = UniPoly.zero(a.var), UniPoly.const(a.var, Fraction(1))
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = r0.pdiv(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    c = _inv(r0.lc())
    return r0.scale(c), u0.scale(c), v0.scale(c)


def primitive_integer(p: UniPoly) -> UniPoly:
    """Integer-coefficient primitive form with positive leading coefficient."""
    if p.is_zero():
        return p
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    nums = [int(c * den) for c in p.coeffs]
    g = 0
    for n in nums:
        g = math.gcd(g, n)
    if nums[-1] < 0:
        g = -g
    return UniPoly(p.var, tuple(Fraction(n // g) for n in nums))


def squarefree_part_uni(p: UniPoly) -> UniPoly:
    """Product of linear factors over the distinct roots, up to a constant.

    Rational input is normalized to primitive integer form with positive
    leading coefficient; other exact domains get the monic quotient.
    """
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    rational = all_rational(p)
    if p.degree == 0:
        return UniPoly.const(p.var, Fraction(1)) if rational else p.monic()
    g = poly_gcd(p, p.derivative())
    q = p if g.degree == 0 else p.divexact(g)
    return primitive_integer(q) if rational else q.monic()


def yun_decomposition(p: UniPoly):
    """Yun squarefree decomposition: list of (primitive factor, multiplicity)."""
    if p.is_zero() or p.degree == 0:
        return []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(primitive_integer(p), 1)]
    out = []
    w = p.divexact(g)
    y = p.derivative().divexact(g)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        fac = poly_gcd(w, z)
        if fac.degree > 0:
            out.append((primitive_integer(fac), i))
            w = w.divexact(fac)
            y = z.divexact(fac)
        else:
            y = z
        i += 1
    return out


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """A rational B with every real root of p strictly inside (-B, B)."""
    if p.degree < 1:
        return Fraction(1)
    lc = abs(p.lc())
    m = max(abs(c) for c in p.coeffs[:-1])
    return Fraction(2) + m / lc


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(q: UniPoly):
    """Signed-remainder chain of q; rational chains are rescaled to primitive
    integer form (sign-preserving) to tame coefficient growth.

    Over a residue ring every leading coefficient met along the way is
    forced invertible, so a chain that comes back specializes to the true
    chain at the context's designated root (SplitRequest otherwise).
    """
    rational = all_rational(q)
    chain = [q, q.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2].pdiv(chain[-1])[1]
        if r.is_zero():
            break
        neg = -r
        if rational:
            prim = primitive_integer(neg)
            if sign_of(prim.lc()) != sign_of(neg.lc()):
                prim = prim.scale(Fraction(-1))
            neg = prim
        chain.append(neg)
    if not rational:
        for p in chain:
            if not p.is_zero():
                _inv(p.lc())
    return chain


def _variations(signs) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _chain_signs_at(chain, x):
    if x == -_INF:
        return [sign_of(p.lc()) * (-1 if p.degree % 2 else 1) for p in chain if not p.is_zero()]
    if x == _INF:
        return [sign_of(p.lc()) for p in chain if not p.is_zero()]
    return [sign_of(p.eval(x)) for p in chain if not p.is_zero()]


def _endpoint_is_root(q: UniPoly, x0) -> bool:
    """Is x0 a root of q, in the sense of the coefficient domain?

    For residue-ring coefficients the question is asked at the designated
    root: a value vanishing there without being the zero element is a zero
    divisor, and the modulus is split rather than guessed about.
    """
    v = q.eval(x0)
    if isinstance(v, Fraction):
        return not v
    if not v:
        return True
    if v.sign() == 0:
        raise SplitRequest(poly_gcd(v.rep, v.ctx.m))
    return False


def sturm_count(p: UniPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    None (or +-inf) endpoints denote the infinite interval.  A degenerate
    interval lo == hi counts the single point.  Exact for any nonzero p:
    the count runs on the squarefree part, and an endpoint that happens to
    be a root is deflated exactly.  Residue-ring coefficients count roots
    of the specialization at the context's designated real root.
    """
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    lo = -_INF if lo is None else lo
    hi = _INF if hi is None else hi
    if lo != -_INF and not isinstance(lo, (int, Fraction)):
        raise TypeError("lo must be rational or None/-inf")
    if hi != _INF and not isinstance(hi, (int, Fraction)):
        raise TypeError("hi must be rational or None/+inf")
    if lo != -_INF and hi != _INF and lo > hi:
        raise ValueError("empty interval: lo > hi")
    q = squarefree_part_uni(p)
    if q.degree < 1:
        return 0
    if lo != -_INF and lo == hi:
        return 1 if _endpoint_is_root(q, hi) else 0
    extra = 0
    x = UniPoly.ident(q.var)
    if hi != _INF and _endpoint_is_root(q, hi):
        extra = 1
        q = q.divexact(x - UniPoly.const(q.var, Fraction(hi)))
    if lo != -_INF and q.degree > 0 and _endpoint_is_root(q, lo):
        q = q.divexact(x - UniPoly.const(q.var, Fraction(lo)))
    if q.degree < 1:
        return extra
    chain = sturm_chain(q)
    va = _variations(_chain_signs_at(chain, lo))
    vb = _variations(_chain_signs_at(chain, hi))
    return va - vb + extra


# ---------------------------------------------------------------------------
# simplest rationals (for detecting rational roots from isolating intervals)


def simplest_rational_between(lo, hi) -> Fraction:
    """A minimal-denominator rational in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    return _simplest_open(lo, hi)


def _simplest_open(a: Fraction, b: Fraction) -> Fraction:
    fa = math.floor(a)
    if fa + 1 < b:
        return Fraction(fa + 1)
    if a == fa:
        # interval (fa, b) inside one unit: take fa + 1/n, smallest workable n
        n = math.floor(1 / (b - fa)) + 1
        return fa + Fraction(1, n)
    # continued-fraction descent
    return fa + 1 / _simplest_open(1 / (b - fa), 1 / (a - fa))


# ---------------------------------------------------------------------------
# real algebraic numbers


class RealAlgebraic:
    """A real algebraic number: squarefree defining polynomial plus an
    isolating interval containing exactly that one real root.

    Proper intervals (lo < hi) never have roots at their endpoints; detected
    rational values use lo == hi.  The interval refines in place (a
    transparent cache); the represented number never changes.
    """

    __slots__ = ("minimal_poly", "_lo", "_hi")

    def __init__(self, minimal_poly: UniPoly, lo, hi, _trusted: bool = False):
        self.minimal_poly = minimal_poly
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        if not _trusted:
            if self._lo == self._hi:
                if minimal_poly.eval(self._lo):
                    raise ValueError("point interval is not a root")
            else:
                if not minimal_poly.eval(self._lo) or not minimal_poly.eval(self._hi):
                    raise ValueError("interval endpoint is a root")
                if sturm_count(minimal_poly, self._lo, self._hi) != 1:
                    raise ValueError("interval does not isolate one root")

    @classmethod
    def from_rational(cls, q) -> "RealAlgebraic":
        q = rat(q)
        mp = primitive_integer(UniPoly("x", (-q, Fraction(1))))
        return cls(mp, q, q, _trusted=True)

    @property
    def interval(self):
        return self._lo, self._hi

    @property
    def is_rational(self) -> bool:
        return self._lo == self._hi

    @property
    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not detected rational")
        return self._lo

    def width(self) -> Fraction:
        return self._hi - self._lo

    def refine(self):
        """One exact bisection step (no-op on rational points)."""
        if self.is_rational:
            return
        m = self.minimal_poly
        mid = (self._lo + self._hi) / 2
        v = m.eval(mid)
        if not v:
            self._lo = self._hi = mid
        elif sign_of(v) == sign_of(m.eval(self._lo)):
            self._lo = mid
        else:
            self._hi = mid

    def refine_below(self, width):
        while not self.is_rational and self.width() > width:
            self.refine()

    def try_rational(self, max_steps: int = 80) -> bool:
        """Attempt to detect a rational value; True on success.

        Tests the minimal-denominator rational of the current interval each
        round, refining in between.  A rational root with denominator q is
        certain to be found once the interval is narrower than 1/q**2, so
        max_steps bounds the detectable denominators, never correctness.
        """
        for _ in range(max_steps):
            if self.is_rational:
                return True
            cand = simplest_rational_between(self._lo, self._hi)
            if not self.minimal_poly.eval(cand):
                self._lo = self._hi = cand
                return True
            self.refine()
        return self.is_rational

    def approx(self, bits: int = 48) -> float:
        self.refine_below(Fraction(1, 2**bits))
        return float((self._lo + self._hi) / 2)

    def sign(self) -> int:
        if self.is_rational:
            return sign_of(self._lo)
        if self._lo < 0 <= self._hi and not self.minimal_poly.eval(Fraction(0)):
            self._lo = self._hi = Fraction(0)
            return 0
        while True:
            if self._lo >= 0:
                return 1
            if self._hi <= 0:
                return -1
            self.refine()

    def equals(self, other: "RealAlgebraic") -> bool:
        if self.is_rational and other.is_rational:
            return self.rational_value == other.rational_value
        if self.is_rational:
            v = self.rational_value
            if other.minimal_poly.eval(v):
                return False
            lo, hi = other.interval
            return lo < v <= hi
        if other.is_rational:
            return other.equals(self)
        lo = max(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if lo >= hi:
            # overlap at most an endpoint, and proper endpoints are non-roots
            return False
        g = poly_gcd(self.minimal_poly, other.minimal_poly.with_var(self.minimal_poly.var))
        if g.degree < 1:
            return False
        # a root of g in the overlap is a root of both defining polynomials
        # inside both isolating intervals, hence is both numbers at once
        return sturm_count(g, lo, hi) >= 1

    def _cmp(self, other: "RealAlgebraic") -> int:
        if self.equals(other):
            return 0
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            self.refine()
            other.refine()

    def __eq__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __lt__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = _as_alg(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) >= 0

    def __str__(self):
        if self.is_rational:
            return fmt_q(self.rational_value)
        return f"root of {self.minimal_poly} in ({fmt_q(self._lo)}, {fmt_q(self._hi)}]"

    def __repr__(self):
        return f"RealAlgebraic({self!s})"


def _as_alg(value):
    if isinstance(value, RealAlgebraic):
        return value
    if isinstance(value, (int, Fraction)):
        return RealAlgebraic.from_rational(value)
    return None


def algebraic_from_poly_interval(p: UniPoly, lo, hi) -> RealAlgebraic:
    """Build a RealAlgebraic from any nonzero p isolating one root in (lo, hi].

    Normalizes to the squarefree primitive defining polynomial, moves the
    lower endpoint off roots, and detects small rational values.
    """
    q = squarefree_part_uni(p)
    lo, hi = Fraction(lo), Fraction(hi)
    if sturm_count(q, lo, hi) != 1:
        raise ValueError("interval does not isolate a single root")
    if not q.eval(hi):
        # the counted root is hi itself
        alpha = RealAlgebraic(q, hi, hi, _trusted=True)
        alpha.try_rational()
        return alpha
    while not q.eval(lo):
        step = hi - lo
        while True:
            step = step / 2
            cand = lo + step
            if q.eval(cand) and sturm_count(q, cand, hi) == 1:
                lo = cand
                break
    alpha = RealAlgebraic(q, lo, hi, _trusted=True)
    alpha.try_rational()
    return alpha


def isolate_real_roots(p: UniPoly):
    """Isolating data for every distinct real root of p, increasing order.

    Rational roots are detected exactly when their denominator fits the
    refinement budget; an undetected one is still correctly isolated, only
    reported with a proper interval instead of a point.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    q = squarefree_part_uni(p)
    if q.degree < 1:
        return []
    out = []
    bound = cauchy_root_bound(q)
    # invariant: neither endpoint of a queued interval is a root of its poly
    work = [(q, -bound, bound)]
    while work:
        g, a, b = work.pop()
        n = sturm_count(g, a, b)
        if n == 0:
            continue
        if n == 1:
            if g.degree == 1:
                out.append(RealAlgebraic.from_rational(-g[0] / g[1]))
            else:
                alpha = RealAlgebraic(primitive_integer(g), a, b, _trusted=True)
                alpha.try_rational()
                out.append(alpha)
            continue
        mid = (a + b) / 2
        if not g.eval(mid):
            out.append(RealAlgebraic.from_rational(mid))
            g = g.divexact(UniPoly.ident(g.var) - UniPoly.const(g.var, mid))
        work.append((g, a, mid))
        work.append((g, mid, b))
    out.sort(key=lambda r: r.interval)
    return out


def rational_roots(p: UniPoly):
    """All rational roots of a nonzero rational polynomial, ascending.

    Exact: the refinement budget is derived from the leading coefficient of
    the primitive squarefree part, which bounds every root's denominator.
    """
    q = squarefree_part_uni(p)
    out = []
    k = 0
    while k <= q.degree and not q[k]:
        k += 1
    if k > 0:
        out.append(Fraction(0))
        q = UniPoly(q.var, q.coeffs[k:])
    if q.degree >= 1:
        an = abs(q.lc().numerator)
        bound = cauchy_root_bound(q)
        budget = 2 * an.bit_length() + (math.ceil(bound) + 1).bit_length() + 8
        for alpha in isolate_real_roots(q):
            if alpha.is_rational or alpha.try_rational(budget):
                out.append(alpha.rational_value)
    out.sort()
    return out


def alg_sign(p: UniPoly, alpha: RealAlgebraic) -> int:
    """Exact sign of p evaluated at the real algebraic number alpha."""
    if alpha.is_rational:
        return sign_of(p.eval(alpha.rational_value))
    m = alpha.minimal_poly.with_var(p.var)
    r = p.pdiv(m)[1]
    if r.is_zero():
        return 0
    g = poly_gcd(r, m)
    lo, hi = alpha.interval
    if g.degree >= 1 and sturm_count(g, lo, hi) >= 1:
        return 0
    while True:
        lo, hi = alpha.interval
        elo, ehi = r.eval_interval(lo, hi)
        if elo > 0:
            return 1
        if ehi < 0:
            return -1
        alpha.refine()


def algebraic_image(alpha: RealAlgebraic, expr: UniPoly):
    """The exact value expr(alpha) as a Fraction or RealAlgebraic.

    A vanishing polynomial for the image comes from coordinate_minpoly;
    rational values are recognized exactly (the candidate roots are
    enumerable), irrational ones get a certified isolating interval.
    """
    if alpha.is_rational:
        return expr.eval(alpha.rational_value)
    if expr.degree <= 0:
        return expr[0] if expr.coeffs else Fraction(0)
    m = alpha.minimal_poly.with_var(expr.var)
    outvar = "x" if m.var != "x" else "_im"
    mp = primitive_integer(squarefree_part_uni(coordinate_minpoly(m, expr, outvar)))
    for r in rational_roots(mp):
        if alg_sign(expr - UniPoly.const(expr.var, r), alpha) == 0:
            return r
    # the value is irrational: shrink until the enclosure isolates it
    while True:
        lo, hi = alpha.interval
        elo, ehi = expr.eval_interval(lo, hi)
        if mp.eval(elo) and mp.eval(ehi) and sturm_count(mp, elo, ehi) == 1:
            return RealAlgebraic(mp, elo, ehi, _trusted=True)
        alpha.refine()


# ---------------------------------------------------------------------------
# quadratic extension elements


class QuadExtElt:
    """u + v*sqrt(d) with rational u, v and a fixed non-square rational d.

    For d > 0 the symbol denotes the positive square root, so elements have
    exact signs; for d < 0 the element is complex and sign queries are
    rejected.  Mixed arithmetic with Fractions and ints is supported.
    """

    __slots__ = ("d", "u", "v")

    def __init__(self, d, u, v):
        self.d = rat(d)
        self.u = rat(u)
        self.v = rat(v)
        if self.d == 0 or rational_sqrt(self.d) is not None:
            raise ValueError("d must be a non-square rational")

    def _lift(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExtElt(self.d, other, 0)
        if isinstance(other, QuadExtElt):
            if other.d != self.d:
                raise ValueError("mixed quadratic extensions")
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExtElt(self.d, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElt(self.d, -self.u, -self.v)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExtElt(self.d, self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExtElt(
            self.d, self.u * o.u + self.v * o.v * self.d, self.u * o.v + self.v * o.u
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExtElt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return QuadExtElt(self.d, self.u / n, -self.v / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        if isinstance(other, QuadExtElt):
            return self.d == other.d and self.u == other.u and self.v == other.v
        return NotImplemented

    __hash__ = None

    def conj(self) -> "QuadExtElt":
        return QuadExtElt(self.d, self.u, -self.v)

    def norm(self) -> Fraction:
        return self.u * self.u - self.v * self.v * self.d

    def is_rational_elt(self) -> bool:
        return self.v == 0

    def rational_value(self) -> Fraction:
        if self.v != 0:
            raise ValueError("not rational")
        return self.u

    def sign(self) -> int:
        if self.d < 0:
            raise ValueError("sign of a non-real element")
        if self.v == 0:
            return sign_of(self.u)
        if self.u == 0:
            return sign_of(self.v)
        su, sv = sign_of(self.u), sign_of(self.v)
        if su == sv:
            return su
        # d non-square forbids u**2 == v**2 * d, so the comparison decides
        return su if self.u * self.u > self.v * self.v * self.d else sv

    def approx(self):
        r = math.sqrt(abs(self.d))
        if self.d > 0:
            return float(self.u) + float(self.v) * r
        return complex(float(self.u), float(self.v) * r)

    def __str__(self):
        if self.v == 0:
            return fmt_q(self.u)
        root = f"sqrt({fmt_q(self.d)})"
        if self.v == 1:
            vpart = root
        elif self.v == -1:
            vpart = f"-{root}"
        else:
            vpart = f"{fmt_q(self.v)}*{root}"
        if self.u == 0:
            return vpart
        if vpart.startswith("-"):
            return f"{fmt_q(self.u)} - {vpart[1:]}"
        return f"{fmt_q(self.u)} + {vpart}"

    def __repr__(self):
        return f"QuadExtElt({self!s})"


def quad_sqrt_in_field(value: Fraction, d):
    """Square root of a rational inside Q (d is None) or Q(sqrt(d)); None if
    the field has none.  Works for negative d as well: value/d being a
    rational square puts sqrt(value) = sqrt(value/d)*sqrt(d) in the field.
    """
    r = rational_sqrt(value)
    if r is not None:
        return r
    if d is None:
        return None
    s = rational_sqrt(value / d)
    if s is not None:
        return QuadExtElt(d, 0, s)
    return None


# ---------------------------------------------------------------------------
# residue ring Q[t]/(m) with dynamic splitting


class ModCtx:
    """Arithmetic context Q[t]/(m); alpha optionally designates a real root
    of m, making elements sign-queryable (exactly, via alg_sign)."""

    __slots__ = ("m", "alpha")

    def __init__(self, m: UniPoly, alpha: "RealAlgebraic | None" = None):
        if m.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.m = m.monic()
        self.alpha = alpha

    def elt(self, rep: UniPoly) -> "ModElt":
        return ModElt(self, rep.pdiv(self.m)[1])

    def const(self, value) -> "ModElt":
        return ModElt(self, UniPoly.const(self.m.var, value))

    def gen(self) -> "ModElt":
        return self.elt(UniPoly.ident(self.m.var))

    def __repr__(self):
        return f"ModCtx({self.m!s})"


class ModElt:
    """Element of Q[t]/(m).  Inverting a zero divisor raises SplitRequest."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: ModCtx, rep: UniPoly):
        self.ctx = ctx
        self.rep = rep

    def _lift(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        if isinstance(other, ModElt):
            if other.ctx is not self.ctx and other.ctx.m != self.ctx.m:
                raise ValueError("mixed residue contexts")
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModElt(self.ctx, self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self):
        return ModElt(self.ctx, -self.rep)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModElt(self.ctx, self.rep - o.rep)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.ctx.elt(self.rep * o.rep)

    __rmul__ = __mul__

    def inverse(self) -> "ModElt":
        g, u, _ = poly_ext_gcd(self.rep, self.ctx.m)
        if g.is_zero() or g.degree == self.ctx.m.degree:
            raise ZeroDivisionError("inverse of zero in residue ring")
        if g.degree == 0:
            return self.ctx.elt(u.scale(_inv(g.lc())))
        raise SplitRequest(g)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return not self.rep.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    __hash__ = None

    def sign(self) -> int:
        if self.ctx.alpha is None:
            raise ValueError("sign query in a rootless residue context")
        return alg_sign(self.rep, self.ctx.alpha)

    def __str__(self):
        return f"[{self.rep}]"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Sparse bivariate polynomial: dict (i, j) -> coefficient, no zeros stored."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars_pair, terms):
        self.vars = tuple(vars_pair)
        if len(self.vars) != 2 or self.vars[0] == self.vars[1]:
            raise ValueError("BiPoly needs two distinct variables")
        tt = {}
        for (i, j), c in terms.items():
            if isinstance(c, int):
                c = Fraction(c)
            if c:
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                tt[(int(i), int(j))] = c
        self.terms = tt

    @classmethod
    def zero(cls, vars_pair=("x", "y")) -> "BiPoly":
        return cls(vars_pair, {})

    @classmethod
    def const(cls, value, vars_pair=("x", "y")) -> "BiPoly":
        return cls(vars_pair, {(0, 0): value})

    @classmethod
    def var(cls, name, vars_pair=("x", "y")) -> "BiPoly":
        if name == vars_pair[0]:
            return cls(vars_pair, {(1, 0): Fraction(1)})
        if name == vars_pair[1]:
            return cls(vars_pair, {(0, 1): Fraction(1)})
        raise ValueError(f"unknown variable {name!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars!r} vs {other.vars!r}")

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.vars == other.vars and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        tt = dict(self.terms)
        for k, c in other.terms.items():
            s = tt.get(k, Fraction(0)) + c
            if s:
                tt[k] = s
            else:
                tt.pop(k, None)
        return BiPoly(self.vars, tt)

    def __neg__(self):
        return BiPoly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, Fraction(0)) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiPoly(self.vars, out)

    def scale(self, c) -> "BiPoly":
        if not c:
            return BiPoly.zero(self.vars)
        return BiPoly(self.vars, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = BiPoly.const(Fraction(1), self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def derivative(self, var: str) -> "BiPoly":
        if var not in self.vars:
            raise ValueError(f"unknown variable {var!r}")
        out = {}
        for (i, j), c in self.terms.items():
            if var == self.vars[0] and i:
                out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + c * i
            elif var == self.vars[1] and j:
                out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + c * j
        return BiPoly(self.vars, out)

    def eval(self, vx, vy):
        """Evaluate at a pair of ring elements (Horner in the second variable)."""
        cols = self.y_coeffs()
        if not cols:
            return Fraction(0)
        acc = cols[-1].eval(vx)
        for up in reversed(cols[:-1]):
            acc = acc * vy + up.eval(vx)
        return acc

    def eval_y(self, value) -> UniPoly:
        """Substitute the second variable, leaving a UniPoly in the first."""
        cols = self.y_coeffs()
        if not cols:
            return UniPoly.zero(self.vars[0])
        acc = cols[-1]
        for up in reversed(cols[:-1]):
            acc = acc.scale(value) + up
        return acc

    def eval_x(self, value) -> UniPoly:
        """Substitute the first variable, leaving a UniPoly in the second."""
        return self.swap().eval_y(value)

    def y_coeffs(self):
        """Dense list of UniPoly-in-x coefficients, ascending in the y-degree."""
        if not self.terms:
            return []
        out = [dict() for _ in range(self.deg_y + 1)]
        for (i, j), c in self.terms.items():
            out[j][i] = c
        return [UniPoly.from_map(self.vars[0], m) for m in out]

    @classmethod
    def from_y_coeffs(cls, vars_pair, cols) -> "BiPoly":
        terms = {}
        for j, up in enumerate(cols):
            for i, c in up.monomials().items():
                terms[(i, j)] = c
        return cls(vars_pair, terms)

    def leading_y_coeff(self) -> UniPoly:
        cols = self.y_coeffs()
        if not cols:
            return UniPoly.zero(self.vars[0])
        return cols[-1]

    def swap(self) -> "BiPoly":
        return BiPoly((self.vars[1], self.vars[0]), {(j, i): c for (i, j), c in self.terms.items()})

    def shear(self, lam) -> "BiPoly":
        """Substitute x -> x + lam*y (exact rational lam)."""
        lam = rat(lam)
        if not lam:
            return self
        out = {}
        for (i, j), c in self.terms.items():
            binom = 1
            lam_pow = Fraction(1)
            # (x + lam*y)**i expanded from the x**i end
            for k in range(i, -1, -1):
                key = (k, j + i - k)
                s = out.get(key, Fraction(0)) + c * binom * lam_pow
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
                if k:
                    binom = binom * k // (i - k + 1)
                    lam_pow = lam_pow * lam
        return BiPoly(self.vars, out)

    def shift(self, a, b) -> "BiPoly":
        """Substitute x -> x + a, y -> y + b (a, b in any coefficient domain)."""
        p = self
        if a:
            cols = [c.compose_linear(Fraction(1), a) for c in p.y_coeffs()]
            p = BiPoly.from_y_coeffs(p.vars, cols)
        if b:
            sw = p.swap()
            rows = [c.compose_linear(Fraction(1), b) for c in sw.y_coeffs()]
            p = BiPoly.from_y_coeffs(sw.vars, rows).swap()
        return p

    def top_form_at(self, lam) -> Fraction:
        """The total-degree form evaluated at (lam, 1): the would-be leading
        y-coefficient constant after the shear x -> x + lam*y."""
        n = self.total_degree
        acc = Fraction(0)
        lam = rat(lam)
        for (i, j), c in self.terms.items():
            if i + j == n:
                acc += c * lam**i
        return acc

    def as_unipoly(self, var: str) -> UniPoly:
        if var == self.vars[0]:
            if any(j for (_, j) in self.terms):
                raise ValueError("polynomial involves the other variable")
            return UniPoly.from_map(var, {i: c for (i, _), c in self.terms.items()})
        if var == self.vars[1]:
            if any(i for (i, _) in self.terms):
                raise ValueError("polynomial involves the other variable")
            return UniPoly.from_map(var, {j: c for (_, j), c in self.terms.items()})
        raise ValueError(f"unknown variable {var!r}")

    @classmethod
    def from_unipoly(cls, p: UniPoly, vars_pair, which: int = 0) -> "BiPoly":
        terms = {}
        for k, c in p.monomials().items():
            terms[(k, 0) if which == 0 else (0, k)] = c
        return cls(vars_pair, terms)

    def map_coeffs(self, fn) -> "BiPoly":
        return BiPoly(self.vars, {k: fn(c) for k, c in self.terms.items()})

    def integer_primitive(self) -> "BiPoly":
        """Integer-coefficient primitive form, leading grlex coefficient positive."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = {k: int(c * den) for k, c in self.terms.items()}
        g = 0
        for n in nums.values():
            g = math.gcd(g, n)
        if nums[max(nums, key=_grlex_key)] < 0:
            g = -g
        return BiPoly(self.vars, {k: Fraction(n // g) for k, n in nums.items()})

    def lead_term(self):
        if not self.terms:
            raise ValueError("zero polynomial")
        k = max(self.terms, key=_grlex_key)
        return k, self.terms[k]

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for k in sorted(self.terms, key=_grlex_key, reverse=True):
            i, j = k
            body = _monomial_str(self.terms[k], ((self.vars[0], i), (self.vars[1], j)))
            if not chunks:
                chunks.append(body)
            elif body.startswith("-"):
                chunks.append(" - " + body[1:])
            else:
                chunks.append(" + " + body)
        return "".join(chunks)

    def __repr__(self):
        return f"BiPoly({self!s})"


def _grlex_key(k):
    return (k[0] + k[1], k[0])


def bipoly_divexact(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact division of bivariate polynomials (ArithmeticError if inexact)."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return a
    quot = {}
    rem = BiPoly(a.vars, dict(a.terms))
    (bi, bj), bc = b.lead_term()
    while rem.terms:
        (ri, rj), rc = rem.lead_term()
        qi, qj = ri - bi, rj - bj
        if qi < 0 or qj < 0:
            raise ArithmeticError("bivariate division was not exact")
        c = rc * _inv(bc)
        quot[(qi, qj)] = c
        rem = rem - BiPoly(a.vars, {(qi, qj): c}) * b
    return BiPoly(a.vars, quot)


def bipoly_divides(b: BiPoly, a: BiPoly) -> bool:
    """True iff b divides a exactly in Q[x, y]."""
    if b.is_zero():
        return a.is_zero()
    if a.is_zero():
        return True
    try:
        bipoly_divexact(a, b)
        return True
    except ArithmeticError:
        return False


def _content_x(cols) -> UniPoly:
    """Monic gcd of a list of UniPoly coefficients, ignoring zero entries."""
    g = None
    for up in cols:
        if up.is_zero():
            continue
        g = up.monic() if g is None else poly_gcd(g, up)
        if g.degree == 0:
            return g
    if g is None:
        raise ValueError("content of the zero polynomial")
    return g


def _primitive_part_y(p: BiPoly):
    """(primitive part, content): strip the UniPoly-in-x content of p."""
    cols = p.y_coeffs()
    cont = _content_x(cols)
    if cont.degree == 0:
        return p, cont
    newcols = [c.divexact(cont) if not c.is_zero() else c for c in cols]
    return BiPoly.from_y_coeffs(p.vars, newcols), cont


def _pseudo_rem_y(a: BiPoly, b: BiPoly) -> BiPoly:
    """A pseudo-remainder of a by b in y: some lc(b)**k * a mod b, exact."""
    db = b.deg_y
    bcols = b.y_coeffs()
    blc = bcols[-1]
    r = a
    while not r.is_zero() and r.deg_y >= db:
        rcols = r.y_coeffs()
        d = r.deg_y
        rlc = rcols[-1]
        new = [c * blc for c in rcols[:-1]]
        for j in range(db):
            idx = j + d - db
            new[idx] = new[idx] - rlc * bcols[j]
        r = BiPoly.from_y_coeffs(a.vars, new)
    return r


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Gcd over Q[x, y] via a primitive pseudo-remainder sequence in y.

    The result is integer-primitive with positive leading grlex coefficient;
    coprime inputs yield the constant 1.
    """
    f._check(g)
    if f.is_zero():
        return g.integer_primitive()
    if g.is_zero():
        return f.integer_primitive()
    if f.deg_y == 0 and g.deg_y == 0:
        a = f.as_unipoly(f.vars[0])
        b = g.as_unipoly(g.vars[0])
        return BiPoly.from_unipoly(primitive_integer(poly_gcd(a, b)), f.vars, 0)
    if f.deg_y == 0:
        cont = _content_x(g.y_coeffs())
        a = f.as_unipoly(f.vars[0])
        return BiPoly.from_unipoly(primitive_integer(poly_gcd(a, cont)), f.vars, 0)
    if g.deg_y == 0:
        return bipoly_gcd(g, f)

    fp, fc = _primitive_part_y(f)
    gp, gc = _primitive_part_y(g)
    cont_gcd = poly_gcd(fc, gc)

    a, b = (fp, gp) if fp.deg_y >= gp.deg_y else (gp, fp)
    while not b.is_zero() and b.deg_y > 0:
        r = _pseudo_rem_y(a, b)
        if r.is_zero():
            a, b = b, BiPoly.zero(f.vars)
            break
        r, _ = _primitive_part_y(r)
        a, b = b, r
    cont_poly = BiPoly.from_unipoly(primitive_integer(cont_gcd), f.vars, 0)
    if not b.is_zero():
        # the primitive sequence bottomed out at y-degree 0: primitive gcd is 1
        return cont_poly.integer_primitive()
    prim, _ = _primitive_part_y(a)
    return (prim * cont_poly).integer_primitive()


def _repeated_factor_gcd(f: BiPoly) -> BiPoly:
    """gcd(f, f_x, f_y): the product of repeated factors (constant iff none)."""
    fx = f.derivative(f.vars[0])
    fy = f.derivative(f.vars[1])
    if fx.is_zero() and fy.is_zero():
        return BiPoly.const(Fraction(1), f.vars)
    if fx.is_zero():
        return bipoly_gcd(f, fy)
    g = bipoly_gcd(f, fx)
    if g.total_degree > 0 and not fy.is_zero():
        g = bipoly_gcd(g, fy)
    return g


def bipoly_is_squarefree(f: BiPoly) -> bool:
    if f.is_zero():
        return False
    if f.total_degree == 0:
        return True
    return _repeated_factor_gcd(f).total_degree <= 0


def bipoly_squarefree_part(f: BiPoly) -> BiPoly:
    """Product of the distinct irreducible factors of a nonzero f."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if f.total_degree == 0:
        return BiPoly.const(Fraction(1), f.vars)
    g = _repeated_factor_gcd(f)
    if g.total_degree <= 0:
        return f.integer_primitive()
    return bipoly_divexact(f, g).integer_primitive()


def squarefree_part(p):
    """Squarefree part of a univariate or bivariate polynomial."""
    if isinstance(p, UniPoly):
        return squarefree_part_uni(p)
    if isinstance(p, BiPoly):
        return bipoly_squarefree_part(p)
    raise TypeError("expected UniPoly or BiPoly")


# ---------------------------------------------------------------------------
# determinants and resultants


def _bareiss_det(matrix) -> BiPoly:
    """Fraction-free determinant of a square matrix of BiPoly entries."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    vars_pair = matrix[0][0].vars
    m = [row[:] for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot is None:
                return BiPoly.zero(vars_pair)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else bipoly_divexact(num, prev)
            m[i][k] = BiPoly.zero(vars_pair)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det.scale(Fraction(-1)) if sign < 0 else det


def _sylvester_matrix(fc, gc, vars_pair):
    """Sylvester matrix (f's coefficient rows first) from ascending
    coefficient lists; entries are BiPoly."""
    n = len(fc) - 1
    m = len(gc) - 1
    size = n + m
    zero = BiPoly.zero(vars_pair)
    fdesc = list(reversed(fc))
    gdesc = list(reversed(gc))
    rows = []
    for k in range(m):
        rows.append([zero] * k + fdesc + [zero] * (size - n - 1 - k))
    for k in range(n):
        rows.append([zero] * k + gdesc + [zero] * (size - m - 1 - k))
    return rows


def resultant(f: BiPoly, g: BiPoly, var: str = "y") -> BiPoly:
    """Resultant eliminating var: the Sylvester determinant, f's rows first."""
    if var == f.vars[0]:
        return resultant(f.swap(), g.swap(), var).swap()
    if var != f.vars[1]:
        raise ValueError(f"unknown variable {var!r}")
    f._check(g)
    vars_pair = f.vars
    if f.is_zero() or g.is_zero():
        return BiPoly.zero(vars_pair)
    n, m = f.deg_y, g.deg_y
    if n == 0 and m == 0:
        return BiPoly.const(Fraction(1), vars_pair)
    if n == 0:
        return f**m
    if m == 0:
        return g**n
    fc = [BiPoly.from_unipoly(c, vars_pair, 0) for c in f.y_coeffs()]
    gc = [BiPoly.from_unipoly(c, vars_pair, 0) for c in g.y_coeffs()]
    return _bareiss_det(_sylvester_matrix(fc, gc, vars_pair))


def resultant_unipoly(a: UniPoly, b: UniPoly) -> Fraction:
    """Resultant of two univariate polynomials in the same variable."""
    a._check(b)
    vp = ("_aux", a.var)
    fa = BiPoly(vp, {(0, k): c for k, c in a.monomials().items()})
    fb = BiPoly(vp, {(0, k): c for k, c in b.monomials().items()})
    r = resultant(fa, fb, a.var)
    return r.terms.get((0, 0), Fraction(0))


def charpoly_resultant(f: BiPoly, p: BiPoly, q: BiPoly) -> BiPoly:
    """Res_y(f, T*q - p) as a BiPoly in (x, T).

    f, p, q share variables (x, y); f must have positive y-degree.
    """
    p._check(f)
    q._check(f)
    vars_xt = (f.vars[0], "T")
    fc = [BiPoly.from_unipoly(c, vars_xt, 0) for c in f.y_coeffs()]
    pcols = p.y_coeffs()
    qcols = q.y_coeffs()
    gc = []
    for j in range(max(len(pcols), len(qcols))):
        entry = {}
        if j < len(pcols):
            for i, c in pcols[j].monomials().items():
                entry[(i, 0)] = entry.get((i, 0), Fraction(0)) - c
        if j < len(qcols):
            for i, c in qcols[j].monomials().items():
                entry[(i, 1)] = entry.get((i, 1), Fraction(0)) + c
        gc.append(BiPoly(vars_xt, entry))
    while gc and gc[-1].is_zero():
        gc.pop()
    if not gc:
        raise ValueError("T*q - p vanished identically")
    n = len(fc) - 1
    m = len(gc) - 1
    if n <= 0:
        raise ValueError("first argument must have positive y-degree")
    if m == 0:
        return gc[0] ** n
    return _bareiss_det(_sylvester_matrix(fc, gc, vars_xt))


def coordinate_minpoly(m: UniPoly, r: UniPoly, outvar: str = "x") -> UniPoly:
    """Res_t(m(t), v - r(t)) as a UniPoly in v: a vanishing polynomial for
    r(alpha) over every root alpha of m."""
    if m.var != r.var:
        r = r.with_var(m.var)
    vp = (outvar, m.var)
    A = BiPoly(vp, {(0, k): c for k, c in m.monomials().items()})
    B = BiPoly(vp, {(1, 0): Fraction(1)}) - BiPoly(vp, {(0, k): c for k, c in r.monomials().items()})
    return resultant(A, B, m.var).as_unipoly(outvar)
