"""
Exact arithmetic foundation.

Rationals are :class:`flint.fmpq` values.  :class:`Poly` is a dense univariate
polynomial over the rationals (a thin immutable wrapper around
``flint.fmpq_poly``), :class:`QPoly` is the same thing over the field Q(q) of
rational functions in a symbolic parameter ``q``, and :class:`RatFun` is a
reduced fraction of two polynomials of either kind.

:func:`nullspace` computes exact right kernels by fraction-free elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from flint import fmpq, fmpq_poly, fmpz

from .errors import OreDomainError

#: degree of the zero polynomial
DEG_ZERO = -math.inf

_SCALARS = (int, fmpz, fmpq)


def QQ(x):
    """Convert ``x`` to an exact rational (``fmpq``).

    Accepts ints, ``fmpq``/``fmpz``, :class:`fractions.Fraction`, strings such
    as ``"-7/3"`` and anything with integral ``numerator``/``denominator``.
    Floats are refused.
    """
    if type(x) is fmpq:
        return x
    if isinstance(x, (int, fmpz)):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            a, b = s.split("/", 1)
            d = int(b)
            if d == 0:
                raise ZeroDivisionError("zero denominator in %r" % x)
            return fmpq(int(a), d)
        return fmpq(int(s))
    if isinstance(x, float):
        raise TypeError("floating point values are not exact: %r" % (x,))
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return fmpq(int(x.numerator), int(x.denominator))
    raise TypeError("cannot convert %r to a rational" % (x,))


def is_scalar(x):
    return isinstance(x, _SCALARS) or isinstance(x, Fraction)


def format_rational(c):
    c = QQ(c)
    if c.q == 1:
        return str(c.p)
    return "%s/%s" % (c.p, c.q)


# --------------------------------------------------------------------------
# polynomials over Q
# --------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``Poly([c0, c1, c2])`` is ``c0 + c1*x + c2*x^2``.  Instances are
    immutable and hashable.  The variable name only matters for printing.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, fmpq_poly):
            self._p = coeffs
        elif isinstance(coeffs, Poly):
            self._p = coeffs._p
        elif is_scalar(coeffs):
            self._p = fmpq_poly([QQ(coeffs)])
        else:
            self._p = fmpq_poly([QQ(c) for c in coeffs])

    @classmethod
    def _wrap(cls, p):
        obj = object.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def gen(cls):
        return cls._wrap(fmpq_poly([0, 1]))

    @classmethod
    def one(cls):
        return cls._wrap(fmpq_poly([1]))

    @classmethod
    def zero(cls):
        return cls._wrap(fmpq_poly([]))

    def constant(self, c):
        """A constant of this polynomial's ring."""
        return Poly._wrap(fmpq_poly([QQ(c)]))

    # -- inspection -------------------------------------------------------

    def coeffs(self):
        return self._p.coeffs()

    def __getitem__(self, i):
        if i < 0:
            return fmpq(0)
        return self._p[i]

    def degree(self):
        d = self._p.degree()
        return DEG_ZERO if d < 0 else d

    def valuation(self):
        if not self._p:
            return math.inf
        for i, c in enumerate(self._p.coeffs()):
            if c:
                return i

    def lc(self):
        if not self._p:
            return fmpq(0)
        return self._p[self._p.degree()]

    def is_zero(self):
        return not self._p

    def is_constant(self):
        return self._p.degree() <= 0

    def __bool__(self):
        return bool(self._p)

    def __len__(self):
        return self._p.degree() + 1

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other._p
        if isinstance(other, _SCALARS):
            return other
        if isinstance(other, Fraction):
            return QQ(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(o - self._p)

    def __neg__(self):
        return Poly._wrap(-self._p)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self._p * o)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        return Poly._wrap(self._p ** e)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.is_constant():
                other = other.lc()
            else:
                return NotImplemented
        if not isinstance(other, _SCALARS) and not isinstance(other, Fraction):
            return NotImplemented
        c = QQ(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return Poly._wrap(self._p / c)

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, fmpq_poly):
            return self._p == o
        return self._p.degree() <= 0 and self[0] == o

    def __hash__(self):
        if self._p.degree() <= 0:
            return hash(self[0])
        return hash(tuple(self._p.coeffs()))

    # -- substitution -----------------------------------------------------

    def __call__(self, v):
        if isinstance(v, Poly):
            return Poly._wrap(self._p(v._p))
        if isinstance(v, _SCALARS) or isinstance(v, Fraction):
            return self._p(QQ(v))
        # generic Horner (rational functions, series, q-constants ...)
        cs = self._p.coeffs()
        if not cs:
            return 0 * v
        acc = 0 * v + cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * v + c
        return acc

    def shift(self, a=1):
        """``p(x + a)``."""
        return Poly._wrap(self._p(fmpq_poly([QQ(a), 1])))

    def scale(self, a):
        """``p(a*x)``."""
        a = QQ(a)
        cs = self._p.coeffs()
        out = []
        f = fmpq(1)
        for c in cs:
            out.append(c * f)
            f *= a
        return Poly._wrap(fmpq_poly(out))

    def derivative(self):
        return Poly._wrap(self._p.derivative())

    def monic(self):
        if not self._p:
            return self
        return Poly._wrap(self._p / self.lc())

    def gcd(self, other):
        return poly_gcd(self, other)

    def mul_xpow(self, k):
        return Poly._wrap(self._p.left_shift(k)) if k >= 0 else Poly._wrap(self._p.right_shift(-k))

    def content(self):
        """Rational ``c`` with ``self/c`` integral, primitive, positive leading coefficient."""
        if not self._p:
            return fmpq(0)
        num = self._p.numer()
        c = fmpq(num.content(), self._p.denom())
        return -c if self.lc() < 0 else c

    def primitive(self):
        if not self._p:
            return self
        return Poly._wrap(self._p / self.content())

    def denominator(self):
        """Least common denominator of the coefficients (an int)."""
        return int(self._p.denom())

    def integer_coeffs(self):
        """Coefficients as Python ints; requires integral coefficients."""
        if self._p.denom() != 1:
            raise ValueError("polynomial has non-integral coefficients")
        return [int(c) for c in self._p.numer().coeffs()]

    def factor(self):
        """Irreducible factorization: ``(constant, [(monic factor, multiplicity), ...])``."""
        if not self._p:
            raise OreDomainError("cannot factor the zero polynomial")
        c, fs = self._p.factor()
        out = []
        for f, m in fs:
            out.append((Poly._wrap(f / f[f.degree()]), m))
            c *= f[f.degree()] ** m
        return c, out

    def integer_roots(self):
        """Sorted list of the distinct integer roots."""
        if not self._p:
            raise OreDomainError("the zero polynomial has every root")
        if self._p.degree() <= 0:
            return []
        roots = []
        _, fs = self.factor()
        for f, _m in fs:
            if f.degree() == 1:
                r = -f[0]
                if r.q == 1:
                    roots.append(int(r.p))
        return sorted(roots)

    def truncate(self, n):
        return Poly._wrap(self._p.truncate(n)) if n > 0 else Poly.zero()

    # -- printing ---------------------------------------------------------

    def to_str(self, var="x"):
        return format_poly(self.coeffs(), var, format_rational)

    def __str__(self):
        return self.to_str("x")

    def __repr__(self):
        return "Poly(%s)" % self.to_str("x")


def poly_divrem(a, b):
    """Quotient and remainder of ``a`` by ``b`` (same polynomial kind).

    Raises :class:`OreDomainError` when ``b`` is zero.
    """
    if not b:
        raise OreDomainError("polynomial division by zero")
    if isinstance(a, Poly) and isinstance(b, Poly):
        q, r = divmod(a._p, b._p)
        return Poly._wrap(q), Poly._wrap(r)
    return _generic_divrem(a, b)


def poly_gcd(a, b):
    """Monic greatest common divisor; ``poly_gcd(0, 0) == 0``."""
    if isinstance(a, Poly) and isinstance(b, Poly):
        if not a._p and not b._p:
            return a
        return Poly._wrap(a._p.gcd(b._p))
    return _generic_gcd(a, b)


def poly_lcm(a, b):
    if not a or not b:
        return a * 0
    return (a * b // poly_gcd(a, b)).monic()


def format_poly(coeffs, var, fmt_const):
    """``5*x^2+3*x-7`` style rendering, highest power first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
        neg, body = _split_sign(c, fmt_const)
        if mono:
            if body == "1":
                term = mono
            else:
                term = "%s*%s" % (body, mono)
        else:
            term = body
        if not parts:
            parts.append("-" + term if neg else term)
        else:
            parts.append(("-" if neg else "+") + term)
    return "".join(parts) if parts else "0"


def _split_sign(c, fmt_const):
    if is_scalar(c):
        c = QQ(c)
        if c < 0:
            return True, fmt_const(-c)
        return False, fmt_const(c)
    s = fmt_const(c)
    if s.startswith("-") and _is_atom(s[1:]):
        return True, s[1:]
    if not _is_atom(s):
        s = "(%s)" % s
    return False, s


def _is_atom(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0:
            return False
    return True


# --------------------------------------------------------------------------
# polynomials over Q(q)
# --------------------------------------------------------------------------


class QPoly:
    """Dense univariate polynomial whose coefficients live in Q(q).

    Coefficients are :class:`RatFun` values in ``q`` (or rationals).  Only
    the operations needed by q-shift and q-derivation algebras are provided.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, QPoly):
            self.c = coeffs.c
            return
        if is_scalar(coeffs) or isinstance(coeffs, RatFun):
            coeffs = [coeffs]
        cs = [qconst(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def _wrap(cls, cs):
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        obj.c = tuple(cs)
        return obj

    @classmethod
    def gen(cls):
        return cls._wrap([qconst(0), qconst(1)])

    @classmethod
    def one(cls):
        return cls._wrap([qconst(1)])

    @classmethod
    def zero(cls):
        return cls._wrap([])

    def constant(self, c):
        return QPoly._wrap([qconst(c)])

    def coeffs(self):
        return list(self.c)

    def __getitem__(self, i):
        if 0 <= i < len(self.c):
            return self.c[i]
        return qconst(0)

    def degree(self):
        return len(self.c) - 1 if self.c else DEG_ZERO

    def lc(self):
        return self.c[-1] if self.c else qconst(0)

    def is_zero(self):
        return not self.c

    def is_constant(self):
        return len(self.c) <= 1

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if is_scalar(other) or (isinstance(other, RatFun) and isinstance(other.num, Poly)):
            return QPoly._wrap([qconst(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        n = max(len(a), len(b))
        return QPoly._wrap([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly._wrap([-c for c in self.c])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if not a or not b:
            return QPoly.zero()
        out = [qconst(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return QPoly._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = QPoly.one()
        for _ in range(e):
            r = r * self
        return r

    def __truediv__(self, other):
        if isinstance(other, QPoly):
            if other.is_constant() and other:
                other = other.lc()
            else:
                return NotImplemented
        c = qconst(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return QPoly._wrap([x / c for x in self.c])

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self[0])
        return hash(self.c)

    def __call__(self, v):
        if not self.c:
            return 0 * v
        acc = 0 * v + self.c[-1]
        for c in reversed(self.c[:-1]):
            acc = acc * v + c
        return acc

    def shift(self, a=1):
        return self(QPoly._wrap([qconst(a), qconst(1)]))

    def scale(self, a):
        a = qconst(a)
        out, f = [], qconst(1)
        for c in self.c:
            out.append(c * f)
            f = f * a
        return QPoly._wrap(out)

    def derivative(self):
        return QPoly._wrap([c * i for i, c in enumerate(self.c)][1:])

    def monic(self):
        if not self.c:
            return self
        return self / self.lc()

    def gcd(self, other):
        return poly_gcd(self, other)

    def mul_xpow(self, k):
        if k >= 0:
            return QPoly._wrap([qconst(0)] * k + list(self.c))
        return QPoly._wrap(self.c[-k:])

    def to_str(self, var="x"):
        return format_poly(self.c, var, _format_qconst)

    def __str__(self):
        return self.to_str("x")

    def __repr__(self):
        return "QPoly(%s)" % self.to_str("x")


def _generic_divrem(a, b):
    a_c = list(a.coeffs())
    bc = b.coeffs()
    db = len(bc) - 1
    inv = 1 / bc[-1]
    quo = [0] * max(len(a_c) - db, 0)
    for k in range(len(a_c) - 1, db - 1, -1):
        t = a_c[k] * inv
        if not t:
            continue
        quo[k - db] = t
        for j in range(db + 1):
            a_c[k - db + j] = a_c[k - db + j] - t * bc[j]
    cls = type(a)
    return cls._wrap([qconst(c) for c in quo]), cls._wrap([qconst(c) for c in a_c[:db]])


def _generic_gcd(a, b):
    while b:
        a, b = b, _generic_divrem(a, b)[1]
    return a.monic()


def qconst(c):
    """Coerce into Q(q): a rational function in ``q`` with rational coefficients."""
    if isinstance(c, RatFun):
        return c
    if isinstance(c, Poly):
        return RatFun(c)
    return RatFun._raw(Poly(QQ(c)), Poly.one())


def q_symbol():
    """The transcendental parameter ``q`` as an element of Q(q)."""
    return RatFun(Poly.gen())


def _format_qconst(c):
    return c.to_str("q")


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------


class RatFun:
    """Reduced fraction ``num/den`` of two polynomials with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFun) and den is None:
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, (Poly, QPoly)):
            num = (den.constant(num) if den is not None and isinstance(den, (Poly, QPoly))
                   else Poly(num))
        if den is None:
            den = num.one() if hasattr(num, "one") else Poly.one()
        elif not isinstance(den, (Poly, QPoly)):
            den = num.constant(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_parts(cls, num, den):
        return cls(num, den)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (Poly, QPoly)):
            return RatFun._raw(other, other.one())
        if is_scalar(other):
            return RatFun._raw(self.num.constant(QQ(other)), self.den.one())
        return None

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return self.den.degree() == 0

    def is_constant(self):
        return self.den.degree() == 0 and self.num.degree() <= 0

    def degree(self):
        return max(self.num.degree(), self.den.degree())

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree() == 0:
            return RatFun._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        d1 = self.den // g
        d2 = o.den // g
        return RatFun(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFun._raw(self.num * 0, self.den.one())
        if self.den.degree() == 0 and o.den.degree() == 0:
            return RatFun._raw(self.num * o.num, self.den.one())
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        lc = d.lc()
        return RatFun._raw(n / lc, d / lc)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num.lc()
        return RatFun._raw(self.den / lc, self.num / lc)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun._raw(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, QPoly)) or is_scalar(other):
            return self.den.degree() == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.degree() == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __call__(self, v):
        d = self.den(v)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(v) / d

    def shift(self, a=1):
        return RatFun._raw(self.num.shift(a), self.den.shift(a)) if self.den.degree() <= 0 \
            else RatFun(self.num.shift(a), self.den.shift(a))

    def scale(self, a):
        return RatFun(self.num.scale(a), self.den.scale(a))

    def compose(self, g):
        """``self(g(x))`` for a polynomial or rational function ``g``."""
        if isinstance(g, (Poly, QPoly)):
            return RatFun(self.num(g), self.den(g))
        return self.num(g) / self.den(g)

    def derivative(self):
        if self.den.degree() == 0:
            return RatFun._raw(self.num.derivative(), self.den)
        return RatFun(self.num.derivative() * self.den - self.num * self.den.derivative(),
                      self.den * self.den)

    def to_str(self, var="x"):
        if self.den.degree() == 0:
            return self.num.to_str(var)
        n = self.num.to_str(var)
        d = self.den.to_str(var)
        if not _is_atom(n):
            n = "(%s)" % n
        if not _is_atom(d) or "*" in d or "/" in d:
            d = "(%s)" % d
        return "%s/%s" % (n, d)

    def __str__(self):
        return self.to_str("x")

    def __repr__(self):
        return "RatFun(%s)" % self.to_str("x")


def _reduce(num, den):
    if not num:
        return num * 0, den.one()
    if den.degree() > 0:
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = num // g
            den = den // g
    lc = den.lc()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def to_ratfun(a):
    if isinstance(a, RatFun):
        return a
    if isinstance(a, (Poly, QPoly)):
        return RatFun._raw(a, a.one())
    return RatFun(a)


def common_denominator(elems):
    """Monic lcm of the denominators of a list of base-ring elements."""
    den = None
    for a in elems:
        if isinstance(a, RatFun):
            d = a.den
        else:
            continue
        den = d if den is None else poly_lcm(den, d)
    return den


# --------------------------------------------------------------------------
# exact linear algebra
# --------------------------------------------------------------------------


def _integer_rows(M):
    rows = []
    for row in M:
        row = [QQ(v) for v in row]
        den = 1
        for v in row:
            den = math.lcm(den, int(v.q))
        rows.append([(v * den).p for v in row])
    return rows


def _bits(v):
    return abs(int(v)).bit_length()


def fraction_free_rref(rows, ncols):
    """Fraction-free Gauss-Jordan elimination on integer ``rows`` (in place).

    Returns ``(pivots, det)`` where ``pivots`` lists ``(row, col)`` pairs; on
    return every pivot entry equals ``det`` and the pivot columns are zero
    elsewhere.  Pivot choice: leftmost column with a nonzero entry, then the
    entry of smallest bit size.
    """
    prev = fmpz(1)
    r = 0
    pivots = []
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                b = _bits(v)
                if best is None or b < best[0]:
                    best = (b, i)
                    if b <= 1:
                        break
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        piv = prow[c]
        for k in range(nrows):
            if k == r:
                continue
            row = rows[k]
            f = row[c]
            if f:
                rows[k] = [(piv * row[j] - f * prow[j]) // prev for j in range(ncols)]
            elif piv != prev:
                rows[k] = [(piv * v) // prev for v in row]
        pivots.append((r, c))
        prev = piv
        r += 1
    return pivots, prev


def nullspace(M, ncols=None):
    """Basis of the right nullspace of a matrix of rationals.

    Each basis vector is returned as a list of Python ints with content 1 and
    a positive first nonzero entry.  An empty list means full column
    rank.  Rows are cleared of denominators and reduced by fraction-free
    elimination, so no rational pivoting happens.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    rows = _integer_rows(M)
    pivots, det = fraction_free_rref(rows, ncols)
    pivot_cols = {c: r for r, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [fmpz(0)] * ncols
        v[f] = det
        for c, r in pivot_cols.items():
            v[c] = -rows[r][f]
        g = reduce(math.gcd, (int(x) for x in v), 0)
        if next(x for x in v if x) < 0:
            g = -g
        basis.append([int(x) // g for x in v])
    return basis


def rank(M, ncols=None):
    if ncols is None:
        ncols = len(M[0]) if M else 0
    rows = _integer_rows(M)
    pivots, _ = fraction_free_rref(rows, ncols)
    return len(pivots)


def ratfun_nullspace(cols):
    """Right nullspace over K = Q(x) of the matrix whose columns are ``cols``.

    ``cols`` is a list of equally long lists of base-field elements.  Returns
    a list of coefficient vectors (lists of :class:`RatFun`).
    """
    n = len(cols)
    m = len(cols[0]) if cols else 0
    rows = [[to_ratfun(cols[j][i]) for j in range(n)] for i in range(m)]
    piv = []
    r = 0
    for c in range(n):
        p = None
        for i in range(r, m):
            if rows[i][c]:
                if p is None or rows[i][c].degree() < rows[p][c].degree():
                    p = i
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    basis = []
    for f in range(n):
        if f in piv:
            continue
        v = [to_ratfun(0) for _ in range(n)]
        v[f] = to_ratfun(1)
        for k, c in enumerate(piv):
            v[c] = -rows[k][f]
        basis.append(v)
    return basis
