"""Exact coefficients: Laurent polynomials in q and rational functions in q.

``LaurentPoly`` is a small pure-Python dict wrapper used in the hot loops
(Kazhdan-Lusztig tables, W-graph actions).  ``RatFunc`` is an element of
the fraction field Q(q), stored as a reduced pair of integer polynomials
backed by FLINT's ``fmpz_poly``.

Both types are immutable by convention and hashable.  The bar involution
``q -> q^{-1}`` is available on both as ``.bar()``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

from flint import fmpz_poly

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "PoleError",
    "q",
    "qinv",
    "is_laurent",
    "is_in_qZq",
    "is_in_qinvZqinv",
    "format_terms",
]


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def format_terms(terms):
    """Render ``[(exp, coeff), ...]`` in monomial style, e.g. ``q^{-1}+q^{-3}``.

    Terms are printed with the highest exponent first.
    """
    if not terms:
        return "0"
    out = []
    for k, c in sorted(terms, key=lambda t: -t[0]):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            mono = str(a)
        else:
            var = "q" if k == 1 else "q^{%d}" % k if (k < 0 or k > 9) else "q^%d" % k
            mono = var if a == 1 else "%d%s" % (a, var)
        out.append((sign, mono))
    s = "".join(sg + m for sg, m in out)
    return s[1:] if s[0] == "+" else s


class LaurentPoly:
    """Element of Z[q, q^{-1}] as a sparse exponent -> coefficient map."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms=None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, dict):
            self._t = {k: c for k, c in terms.items() if c}
        else:
            t = {}
            for k, c in terms:
                t[k] = t.get(k, 0) + c
            self._t = {k: c for k, c in t.items() if c}
        self._h = None

    @classmethod
    def _raw(cls, d):
        # d must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._t = d
        obj._h = None
        return obj

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw({k: c} if c else {})

    @classmethod
    def const(cls, c):
        return cls._raw({0: c} if c else {})

    # -- inspection -------------------------------------------------------
    def items(self):
        """Terms as (exponent, coefficient) pairs, exponents increasing."""
        return sorted(self._t.items())

    def coeff(self, k):
        return self._t.get(k, 0)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def min_degree(self):
        return min(self._t) if self._t else None

    def max_degree(self):
        return max(self._t) if self._t else None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, Integral):
                other = LaurentPoly.const(int(other))
            else:
                return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        d = dict(a)
        for k, c in b.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                del d[k]
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, Integral):
            other = LaurentPoly.const(int(other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            c0 = int(other)
            if not c0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: c * c0 for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(b) == 1:
            (kb, cb), = b.items()
            return LaurentPoly._raw({k + kb: c * cb for k, c in a.items()})
        if len(a) == 1:
            (ka, ca), = a.items()
            return LaurentPoly._raw({k + ka: c * ca for k, c in b.items()})
        d = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                d[k] = d.get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if len(self._t) == 1:
                (k, c), = self._t.items()
                if c in (1, -1):
                    return LaurentPoly._raw({k * e: c ** (-e)})
            raise ValueError("only units of Z[q,q^-1] have negative powers")
        r = LaurentPoly.const(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def shift(self, k):
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def bar(self):
        """The involution q -> q^{-1}."""
        return LaurentPoly._raw({-k: c for k, c in self._t.items()})

    def eval(self, point):
        x = Fraction(point)
        if x == 0 and any(k < 0 for k in self._t):
            raise PoleError("Laurent polynomial has a pole at q = 0")
        return sum((c * x ** k for k, c in self._t.items()), Fraction(0))

    def subs_q2(self):
        """Substitute q -> q^2 (used to turn classical polynomials into p's)."""
        return LaurentPoly._raw({2 * k: c for k, c in self._t.items()})

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, Integral):
            return self._t == ({0: int(other)} if other else {})
        if isinstance(other, RatFunc):
            return other == RatFunc.from_laurent(self)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- conversion -------------------------------------------------------
    def to_json(self):
        return [[k, c] for k, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls([(int(k), int(c)) for k, c in data])

    def to_ratfunc(self):
        return RatFunc.from_laurent(self)

    def __str__(self):
        return format_terms(self.items())

    def __repr__(self):
        return "LaurentPoly(%s)" % self


def _poly_from_terms(terms):
    """fmpz_poly from nonnegative (exp, coeff) pairs."""
    if not terms:
        return fmpz_poly()
    top = max(k for k, _ in terms)
    cs = [0] * (top + 1)
    for k, c in terms:
        cs[k] += c
    return fmpz_poly(cs)


def _poly_terms(p):
    return [(k, int(c)) for k, c in enumerate(p.coeffs()) if c != 0]


def _valuation(p):
    for k, c in enumerate(p.coeffs()):
        if c != 0:
            return k
    return None


class RatFunc:
    """Element of Q(q) stored as ``num/den`` with integer polynomials.

    Canonical form: ``gcd(num, den) = 1`` in Z[q] (so the integer contents
    are coprime too) and ``den`` has positive leading coefficient.  Two
    RatFuncs are equal exactly when their stored pairs agree.
    """

    __slots__ = ("num", "den", "_h")

    def __init__(self, num=0, den=1, _canonical=False):
        if not isinstance(num, fmpz_poly):
            num = fmpz_poly([int(num)]) if num else fmpz_poly()
        if not isinstance(den, fmpz_poly):
            den = fmpz_poly([int(den)])
        if den == 0:
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not _canonical:
            if num == 0:
                den = fmpz_poly([1])
            else:
                g = num.gcd(den)
                if g != 1:
                    num = num // g
                    den = den // g
                if den.coeffs()[-1] < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den
        self._h = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_laurent(cls, lp):
        if isinstance(lp, RatFunc):
            return lp
        if isinstance(lp, Integral):
            return cls(int(lp))
        items = lp.items()
        if not items:
            return cls(0)
        lo = items[0][0]
        if lo >= 0:
            return cls(_poly_from_terms(items), fmpz_poly([1]), _canonical=True)
        num = _poly_from_terms([(k - lo, c) for k, c in items])
        den = _poly_from_terms([(-lo, 1)])
        # num has nonzero constant term, so it is coprime to q^{-lo}
        return cls(num, den, _canonical=True)

    @classmethod
    def from_fraction(cls, x):
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls.from_laurent(x)
        if isinstance(x, Integral):
            return cls(int(x))
        if isinstance(x, Rational):
            return cls.from_fraction(x)
        raise TypeError("cannot coerce %r to RatFunc" % (x,))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num == 0:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return RatFunc(1) / (self ** (-e))
        return RatFunc(self.num ** e, self.den ** e)

    def bar(self):
        """Substitute q -> q^{-1} and re-canonicalize."""
        if self.num == 0:
            return self
        dn, dd = self.num.degree(), self.den.degree()
        rn = fmpz_poly(list(reversed(self.num.coeffs())))
        rd = fmpz_poly(list(reversed(self.den.coeffs())))
        # num(1/q)/den(1/q) = q^{dd-dn} rn/rd
        if dd >= dn:
            rn = rn * fmpz_poly([0] * (dd - dn) + [1])
        else:
            rd = rd * fmpz_poly([0] * (dn - dd) + [1])
        return RatFunc(rn, rd)

    def eval(self, point):
        x = Fraction(point)
        d = _eval_poly(self.den, x)
        if d == 0:
            raise PoleError("pole at q = %s" % x)
        return _eval_poly(self.num, x) / d

    # -- predicates -------------------------------------------------------
    def is_zero(self):
        return self.num == 0

    def __bool__(self):
        return self.num != 0

    def is_laurent(self):
        cs = self.den.coeffs()
        return cs[-1] == 1 and all(c == 0 for c in cs[:-1])

    def to_laurent(self):
        if not self.is_laurent():
            raise ValueError("%s is not a Laurent polynomial" % self)
        shift = self.den.degree()
        return LaurentPoly([(k - shift, c) for k, c in _poly_terms(self.num)])

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._h is None:
            self._h = hash((tuple(int(c) for c in self.num.coeffs()),
                            tuple(int(c) for c in self.den.coeffs())))
        return self._h

    # -- conversion -------------------------------------------------------
    def to_json(self):
        return {"num": [[k, c] for k, c in _poly_terms(self.num)],
                "den": [[k, c] for k, c in _poly_terms(self.den)]}

    @classmethod
    def from_json(cls, data):
        return cls(_poly_from_terms([(int(k), int(c)) for k, c in data["num"]]),
                   _poly_from_terms([(int(k), int(c)) for k, c in data["den"]]))

    def __str__(self):
        if self.is_laurent():
            return str(self.to_laurent())
        return "(%s)/(%s)" % (format_terms(_poly_terms(self.num)),
                              format_terms(_poly_terms(self.den)))

    def __repr__(self):
        return "RatFunc(%s)" % self


def _eval_poly(p, x):
    acc = Fraction(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c)
    return acc


q = RatFunc.from_laurent(LaurentPoly.monomial(1))
qinv = RatFunc.from_laurent(LaurentPoly.monomial(-1))


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    x = RatFunc.coerce(x)
    return x.to_laurent() if x.is_laurent() else None


def is_laurent(x):
    """True when ``x`` lies in Z[q, q^{-1}]."""
    return _as_laurent(x) is not None


def is_in_qZq(x):
    """True when ``x`` lies in qZ[q] (zero included)."""
    lp = _as_laurent(x)
    return lp is not None and all(k >= 1 for k in lp._t)


def is_in_qinvZqinv(x):
    """True when ``x`` lies in q^{-1}Z[q^{-1}] (zero included)."""
    lp = _as_laurent(x)
    return lp is not None and all(k <= -1 for k in lp._t)
