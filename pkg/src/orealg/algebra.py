"""
Univariate Ore algebras and their elements.

An Ore algebra ``R[X; sigma, delta]`` is described by :class:`OreAlgebra`: the
name of the base variable, the name of the generator, the kind of the
generator and the images of the base variable under ``sigma`` and ``delta``.
Elements are :class:`OrePoly` instances, dense in the generator, lowest power
first, with coefficients from the base ring (polynomials or rational
functions).  Multiplication uses the commutation rule
``X*a = sigma(a)*X + delta(a)``.

>>> A = make_algebra("x", "Dx")
>>> Dx, x = A.gen(), A.x
>>> print(Dx * x)
x*Dx + 1
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field, replace

from flint import fmpq

from .arith import (
    QQ,
    Poly,
    QPoly,
    RatFun,
    is_scalar,
    poly_lcm,
    q_symbol,
    qconst,
    to_ratfun,
)
from .errors import ConversionError, InsufficientDataError, InvalidAlgebraError, OreDomainError, UnsupportedError
from .series import Series

#: order of the zero operator
ORDER_ZERO = -math.inf


class Kind(enum.Enum):
    D = "D"  # derivation d/dx
    S = "S"  # shift x -> x+1
    T = "T"  # Euler derivation x d/dx
    F = "F"  # forward difference
    Q = "Q"  # q-shift x -> q x
    J = "J"  # q-derivation (Jackson)
    CUSTOM = "CUSTOM"


class Domain(enum.Enum):
    POLY = "poly"
    RATFUN = "ratfun"


_PREFIXES = {"D": Kind.D, "S": Kind.S, "T": Kind.T, "Θ": Kind.T, "F": Kind.F,
             "Δ": Kind.F, "Q": Kind.Q, "J": Kind.J}


@dataclass(frozen=True)
class OreAlgebra:
    """Descriptor of a univariate Ore algebra over Q[x] or Q(x).

    Use :func:`make_algebra` rather than the constructor.
    """

    base_var: str
    gen_name: str
    kind: Kind
    sigma_image: RatFun
    delta_image: RatFun
    q: object = None
    coeff_domain: Domain = Domain.POLY
    _poly_cls: type = field(default=Poly, compare=False, repr=False)

    # -- base ring --------------------------------------------------------

    @property
    def symbolic_q(self):
        return self._poly_cls is QPoly

    @property
    def is_poly_domain(self):
        return self.coeff_domain is Domain.POLY

    def constant(self, c):
        return qconst(c) if self.symbolic_q else QQ(c)

    @property
    def x(self):
        """The base variable as a base-ring element."""
        return self.base(self._poly_cls.gen())

    def base(self, c):
        """Coerce ``c`` into this algebra's base ring."""
        P = self._poly_cls
        if P is QPoly and isinstance(c, RatFun) and isinstance(c.num, Poly):
            # a RatFun over Q is read as a constant of Q(q)
            c = QPoly._wrap([c])
        if isinstance(c, RatFun):
            num, den = self._to_polycls(c.num), self._to_polycls(c.den)
            if self.is_poly_domain:
                if den.degree() > 0:
                    raise ConversionError("%s is not a polynomial" % c.to_str(self.base_var))
                return num / den.lc()
            return RatFun(num, den)
        if isinstance(c, (Poly, QPoly)):
            p = self._to_polycls(c)
        elif is_scalar(c):
            p = P.one() * self.constant(c) if P is QPoly else Poly(QQ(c))
        else:
            raise ConversionError("cannot coerce %r into the base ring" % (c,))
        if self.is_poly_domain:
            return p
        return RatFun._raw(p, p.one())

    def _to_polycls(self, p):
        if isinstance(p, self._poly_cls):
            return p
        if self._poly_cls is QPoly:
            return QPoly([qconst(c) for c in p.coeffs()])
        # QPoly -> Poly only when every coefficient is a rational constant
        out = []
        for c in p.coeffs():
            if isinstance(c, RatFun):
                if not c.is_constant():
                    raise ConversionError("coefficient %s involves q" % c.to_str("q"))
                c = c.num[0]
            out.append(c)
        return Poly(out)

    # -- sigma and delta --------------------------------------------------

    def sigma(self, p):
        """Apply the endomorphism sigma to a base-ring element."""
        k = self.kind
        if k in (Kind.D, Kind.T):
            return p
        if isinstance(p, RatFun):
            if k in (Kind.S, Kind.F):
                return p.shift(1)
            return RatFun(self.sigma(p.num), self.sigma(p.den)) if p.den.degree() > 0 else \
                RatFun._raw(self.sigma(p.num), p.den)
        if k in (Kind.S, Kind.F):
            return p.shift(1)
        if k in (Kind.Q, Kind.J):
            return p.scale(self.q)
        img = self.sigma_image
        if img.is_polynomial():
            return p(self._to_polycls(img.num))
        return to_ratfun(p).compose(RatFun(self._to_polycls(img.num), self._to_polycls(img.den)))

    def delta(self, p):
        """Apply the sigma-derivation delta to a base-ring element."""
        k = self.kind
        if k in (Kind.S, Kind.Q):
            return p * 0
        if k is Kind.D:
            return p.derivative()
        if k is Kind.T:
            return p.derivative() * self._x_like(p)
        if k is Kind.F:
            return self.sigma(p) - p
        if k is Kind.J:
            if isinstance(p, RatFun):
                return (self.sigma(p) - p) / ((self.constant(self.q) - 1) * self._x_like(p))
            q = self.constant(self.q)
            out, qi, acc = [], self.constant(1), self.constant(0)
            for c in p.coeffs():
                out.append(c * acc)
                acc = acc + qi
                qi = qi * q
            return type(p)(out[1:]) if isinstance(p, Poly) else QPoly._wrap(out[1:])
        # custom
        d_img = self.base_of(self.delta_image, p)
        s_img = self.base_of(self.sigma_image, p)
        x = self._x_like(p)
        if s_img == x:
            return d_img * p.derivative()
        diff = self.sigma(p) - p
        if isinstance(diff, (Poly, QPoly)) and isinstance(s_img, (Poly, QPoly)) \
                and isinstance(d_img, (Poly, QPoly)):
            return d_img * (diff // (s_img - x))
        return to_ratfun(d_img) * to_ratfun(diff) / to_ratfun(s_img - x)

    def base_of(self, r, like):
        """``r`` (a RatFun image) in the same representation family as ``like``."""
        if r.is_polynomial() and not isinstance(like, RatFun):
            return self._to_polycls(r.num)
        return RatFun(self._to_polycls(r.num), self._to_polycls(r.den))

    def _x_like(self, p):
        x = self._poly_cls.gen()
        return to_ratfun(x) if isinstance(p, RatFun) else x

    # -- elements ---------------------------------------------------------

    def gen(self):
        return OrePoly(self, [0, 1])

    def one(self):
        return OrePoly(self, [1])

    def zero(self):
        return OrePoly(self, [])

    def __call__(self, data):
        """Build an element from a coefficient list, a string, a base element or an operator."""
        if isinstance(data, OrePoly):
            return convert(data, self)
        if isinstance(data, str):
            from .grammar import parse
            return parse(data, self)
        if isinstance(data, (list, tuple)):
            return OrePoly(self, data)
        return OrePoly(self, [data])

    def with_domain(self, domain):
        domain = Domain(domain)
        if domain is self.coeff_domain:
            return self
        if domain is Domain.POLY and not (self.sigma_image.is_polynomial() and self.delta_image.is_polynomial()):
            raise InvalidAlgebraError("sigma/delta images are not polynomial")
        return replace(self, coeff_domain=domain)

    def ratfun_algebra(self):
        return self.with_domain(Domain.RATFUN)

    def poly_algebra(self):
        return self.with_domain(Domain.POLY)

    def renamed(self, base_var, gen_name):
        return replace(self, base_var=base_var, gen_name=gen_name)

    def signature(self):
        return (self.base_var, self.gen_name, self.kind, self.sigma_image, self.delta_image, self.q)

    def compatible(self, other):
        return self.signature() == other.signature()

    def __str__(self):
        ring = "Q[%s]" % self.base_var if self.is_poly_domain else "Q(%s)" % self.base_var
        if self.symbolic_q:
            ring = ring.replace("Q", "Q(q)", 1)
        return "Univariate Ore algebra in %s over %s (kind %s)" % (self.gen_name, ring, self.kind.value)


_IMAGES = {
    Kind.D: (lambda x, q: x, lambda x, q: 1),
    Kind.S: (lambda x, q: x + 1, lambda x, q: 0),
    Kind.T: (lambda x, q: x, lambda x, q: x),
    Kind.F: (lambda x, q: x + 1, lambda x, q: 1),
    Kind.Q: (lambda x, q: x * q, lambda x, q: 0),
    Kind.J: (lambda x, q: x * q, lambda x, q: 1),
}


def make_algebra(base_var="x", gen_name=None, kind=None, q=None, sigma=None, delta=None,
                 coeff_domain="poly"):
    """Create an :class:`OreAlgebra`.

    Parameters
    ----------
    base_var : str
        Name of the base variable, e.g. ``"x"`` or ``"n"``.
    gen_name : str
        Name of the generator.  When ``kind`` is omitted it is inferred from
        the first letter (``D``, ``S``, ``T``, ``F``, ``Q``, ``J``) followed by
        the base variable, as in ``"Dx"`` or ``"Sn"``.
    kind : Kind or str, optional
    q : rational or ``"q"``, optional
        Required for the q-shift and q-derivation; ``"q"`` makes ``q`` a
        transcendental parameter so that the constants become Q(q).
    sigma, delta : optional
        Images of the base variable for ``kind="CUSTOM"``.
    coeff_domain : ``"poly"`` or ``"ratfun"``
    """
    if gen_name is None:
        gen_name = "D" + base_var
    if kind is None:
        prefix, rest = gen_name[:1], gen_name[1:]
        if prefix not in _PREFIXES or rest != base_var:
            raise InvalidAlgebraError(
                "cannot infer the kind of generator %r over %r; pass kind=..." % (gen_name, base_var))
        kind = _PREFIXES[prefix]
    kind = Kind(kind) if not isinstance(kind, Kind) else kind
    domain = Domain(coeff_domain) if not isinstance(coeff_domain, Domain) else coeff_domain
    if not base_var.isidentifier() or not gen_name.isidentifier() or base_var == gen_name:
        raise InvalidAlgebraError("invalid variable names %r, %r" % (base_var, gen_name))
    if "q" in (base_var, gen_name):
        raise InvalidAlgebraError("the name q is reserved for the q parameter")

    poly_cls = Poly
    qval = None
    if q is not None:
        if isinstance(q, str) and q.strip() == "q":
            poly_cls = QPoly
            qval = q_symbol()
        elif isinstance(q, RatFun):
            if q.is_constant():
                qval = q.num[0]
            else:
                poly_cls = QPoly
                qval = q
        else:
            qval = QQ(q)
    if kind in (Kind.Q, Kind.J):
        if qval is None:
            raise InvalidAlgebraError("the %s kind needs a value or symbol for q" % kind.value)
        if not isinstance(qval, RatFun) and qval in (0, 1):
            raise InvalidAlgebraError("q must differ from 0 and 1")

    if kind is Kind.CUSTOM:
        if sigma is None or delta is None:
            raise InvalidAlgebraError("custom algebras need both sigma and delta images")
        s_img, d_img = _image(sigma, poly_cls), _image(delta, poly_cls)
    else:
        x = poly_cls.gen()
        qq = qval if qval is not None else 1
        s_fun, d_fun = _IMAGES[kind]
        s_img = _image(s_fun(x, qq), poly_cls)
        d_img = _image(d_fun(x, qq), poly_cls)
    if s_img.degree() <= 0:
        raise InvalidAlgebraError("sigma must not map the base variable to a constant")
    if domain is Domain.POLY and not (s_img.is_polynomial() and d_img.is_polynomial()):
        raise InvalidAlgebraError("polynomial coefficient domain needs polynomial sigma/delta images")
    return OreAlgebra(base_var, gen_name, kind, s_img, d_img, qval, domain, poly_cls)


def _image(v, poly_cls):
    if isinstance(v, RatFun):
        return v
    if isinstance(v, (Poly, QPoly)):
        return RatFun._raw(v, v.one())
    if isinstance(v, str):
        raise InvalidAlgebraError("pass sigma/delta as polynomials, not strings")
    if poly_cls is QPoly:
        p = QPoly._wrap([qconst(v)])
        return RatFun._raw(p, QPoly.one())
    return RatFun(Poly(QQ(v)))


# --------------------------------------------------------------------------
# operators
# --------------------------------------------------------------------------


class OrePoly:
    """Element ``sum(c[i] * X^i)`` of an Ore algebra.

    Construct through the algebra: ``A([c0, c1, ...])``, ``A("Dx^2 - x")`` or
    by arithmetic on ``A.gen()``.  Coefficients are stored lowest power first
    with the highest one nonzero.
    """

    __slots__ = ("parent", "_c")

    def __init__(self, algebra, coeffs=(), _trusted=False):
        self.parent = algebra
        if _trusted:
            cs = list(coeffs)
        else:
            cs = [algebra.base(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._c = tuple(cs)

    # -- inspection -------------------------------------------------------

    def coefficients(self):
        return list(self._c)

    def __getitem__(self, i):
        if 0 <= i < len(self._c):
            return self._c[i]
        return self.parent.base(0)

    def __len__(self):
        return len(self._c)

    def order(self):
        return len(self._c) - 1 if self._c else ORDER_ZERO

    def degree(self):
        """Maximal degree of the coefficients (numerator and denominator)."""
        if not self._c:
            return -math.inf
        return max(c.degree() for c in self._c if c)

    def leading_coefficient(self):
        return self._c[-1] if self._c else self.parent.base(0)

    lc = leading_coefficient

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_polynomial(self):
        return all(not isinstance(c, RatFun) or c.is_polynomial() for c in self._c)

    # -- arithmetic -------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, OrePoly):
            A, B = self.parent, other.parent
            if A == B:
                return self, other
            if not A.compatible(B):
                raise ConversionError("operators live in incompatible algebras: %s and %s" % (A, B))
            R = A.ratfun_algebra()
            return convert(self, R), convert(other, R)
        if isinstance(other, RatFun) and self.parent.is_poly_domain and not other.is_polynomial():
            R = self.parent.ratfun_algebra()
            return convert(self, R), OrePoly(R, [other])
        try:
            return self, OrePoly(self.parent, [other])
        except ConversionError:
            raise
        except TypeError:
            return None, None

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        n = max(len(a._c), len(b._c))
        z = a.parent.base(0)
        return OrePoly(a.parent, [(a._c[i] if i < len(a._c) else z) + (b._c[i] if i < len(b._c) else z)
                                  for i in range(n)], _trusted=True)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return OrePoly(self.parent, [-c for c in self._c], _trusted=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return _ore_mul(a, b)

    def __rmul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return _ore_mul(b, a)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise OreDomainError("operators can only be raised to nonnegative integer powers")
        result = self.parent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def left_scale(self, c):
        """``c * self`` for a base-ring element ``c`` (coefficientwise)."""
        A = self.parent
        if isinstance(c, RatFun) and A.is_poly_domain and not c.is_polynomial():
            A = A.ratfun_algebra()
            return OrePoly(A, [A.base(c) * A.base(a) for a in self._c], _trusted=True)
        c = A.base(c)
        return OrePoly(A, [c * a for a in self._c], _trusted=True)

    def __eq__(self, other):
        if isinstance(other, OrePoly):
            if not self.parent.compatible(other.parent):
                return False
            return len(self._c) == len(other._c) and all(a == b for a, b in zip(self._c, other._c))
        try:
            o = OrePoly(self.parent, [other])
        except (ConversionError, TypeError):
            return NotImplemented
        return self == o

    def __hash__(self):
        return hash((self.parent.signature(), self._c))

    # -- action -----------------------------------------------------------

    def __call__(self, f):
        return apply(self, f)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        from .grammar import format_operator
        return format_operator(self)

    def __repr__(self):
        return "<%s: %s>" % (self.parent.gen_name, self)

    # -- conveniences delegating to the other modules ----------------------

    def quo_rem(self, other):
        from .euclid import quo_rem
        return quo_rem(self, other)

    def gcrd(self, other, prs="improved"):
        from .euclid import gcrd
        return gcrd(self, other, prs=prs)

    def xgcrd(self, other, prs="improved"):
        from .euclid import xgcrd
        return xgcrd(self, other, prs=prs)

    def lclm(self, other):
        from .euclid import lclm
        return lclm(self, other)

    def xlclm(self, other):
        from .euclid import xlclm
        return xlclm(self, other)

    def normalize(self):
        from .euclid import normalize
        return normalize(self)

    def symmetric_product(self, other):
        from .closures import symmetric_product
        return symmetric_product(self, other)

    def symmetric_power(self, n):
        from .closures import symmetric_power
        return symmetric_power(self, n)

    def annihilator_of_associate(self, M):
        from .closures import annihilator_of_associate
        return annihilator_of_associate(self, M)

    def annihilator_of_polynomial(self, p):
        from .closures import annihilator_of_polynomial
        return annihilator_of_polynomial(self, p)

    def to_S(self, algebra=None):
        from .transforms import to_S
        return to_S(self, algebra)

    def to_D(self, algebra=None):
        from .transforms import to_D
        return to_D(self, algebra)

    def to_F(self, algebra=None):
        from .transforms import to_F
        return to_F(self, algebra)

    def to_T(self, algebra=None):
        from .transforms import to_T
        return to_T(self, algebra)

    def annihilator_of_integral(self):
        from .transforms import annihilator_of_integral
        return annihilator_of_integral(self)

    def annihilator_of_sum(self):
        from .transforms import annihilator_of_sum
        return annihilator_of_sum(self)

    def annihilator_of_composition(self, *args):
        from .transforms import annihilator_of_composition
        return annihilator_of_composition(self, *args)

    def annihilator_of_interlacing(self, *others):
        from .transforms import annihilator_of_interlacing
        return annihilator_of_interlacing(self, *others)

    def polynomial_solutions(self, rhs=()):
        from .solvers import polynomial_solutions
        return polynomial_solutions(self, rhs)

    def rational_solutions(self, rhs=()):
        from .solvers import rational_solutions
        return rational_solutions(self, rhs)

    def power_series_solutions(self, n):
        from .solvers import power_series_solutions
        return power_series_solutions(self, n)

    def to_list(self, initial, n):
        from .sequences import to_list
        return to_list(self, initial, n)

    def forward_matrix_bsplit(self, n):
        from .sequences import forward_matrix_bsplit
        return forward_matrix_bsplit(self, n)


def _x_times(A, cs):
    """Coefficients of ``X * sum(cs[j] X^j)``."""
    k = A.kind
    if not cs:
        return []
    out = [None] * (len(cs) + 1)
    zero = cs[0] * 0
    out[0] = zero
    if k in (Kind.D, Kind.T):
        # sigma = id
        for j, b in enumerate(cs):
            out[j + 1] = b
        for j, b in enumerate(cs):
            if b:
                out[j] = out[j] + A.delta(b)
        return out
    for j, b in enumerate(cs):
        out[j + 1] = A.sigma(b) if b else b
    if k not in (Kind.S, Kind.Q):
        for j, b in enumerate(cs):
            if b:
                out[j] = out[j] + A.delta(b)
    return out


def _ore_mul(L, M):
    A = L.parent
    if not L._c or not M._c:
        return A.zero()
    out = [None] * (len(L._c) + len(M._c) - 1)
    cur = list(M._c)
    for i, a in enumerate(L._c):
        if i:
            cur = _x_times(A, cur)
        if not a:
            continue
        for j, b in enumerate(cur):
            if not b:
                continue
            t = a * b
            out[j] = t if out[j] is None else out[j] + t
    z = A.base(0)
    return OrePoly(A, [z if c is None else c for c in out], _trusted=True)


def ore_mul(L, M):
    """Product ``L*M`` (operands are converted to a common algebra first)."""
    return L * M


def ore_add(L, M):
    return L + M


# --------------------------------------------------------------------------
# conversion, construction
# --------------------------------------------------------------------------


def convert(L, A):
    """View ``L`` as an element of the algebra ``A``.

    Raises :class:`ConversionError` when the kinds, variables or q differ,
    or when a coefficient is not a polynomial and ``A`` has polynomial
    coefficients.
    """
    if L.parent == A:
        return L
    if not L.parent.compatible(A):
        raise ConversionError("cannot convert from %s to %s" % (L.parent, A))
    return OrePoly(A, [A.base(c) for c in L._c], _trusted=True)


def from_coeff_list(cs, A):
    return OrePoly(A, cs)


def random_operator(A, order, degree, seed=None, bound=9):
    """Random operator of exactly the given order.

    Coefficients are polynomials of degree at most ``degree`` whose integer
    coefficients are drawn uniformly from ``[-bound, bound]`` by
    ``random.Random(seed)``; the leading coefficient is redrawn until nonzero.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def draw():
        return Poly([rng.randint(-bound, bound) for _ in range(degree + 1)])

    cs = [draw() for _ in range(order)]
    lead = draw()
    while not lead:
        lead = draw()
    cs.append(lead)
    return OrePoly(A, cs)


# --------------------------------------------------------------------------
# action
# --------------------------------------------------------------------------


def apply(L, f):
    """Let the operator ``L`` act on ``f``.

    ``f`` may be a polynomial, rational function or rational constant (all
    kinds except custom ones), a :class:`~orealg.series.Series` (derivation
    kinds D and T) or a finite sequence given as a list (shift kinds S and F).
    For a sequence of length N and an operator of order r the result lists
    the N - r values at n = 0, ..., N - r - 1.
    """
    A = L.parent
    if A.kind is Kind.CUSTOM:
        raise UnsupportedError("custom algebras have no built-in action")
    if isinstance(f, (list, tuple)):
        return _apply_sequence(L, f)
    if isinstance(f, Series):
        if A.kind not in (Kind.D, Kind.T):
            raise UnsupportedError("series arguments need a D or T algebra")
        return _apply_series(L, f)
    if is_scalar(f) or isinstance(f, (Poly, QPoly, RatFun)):
        return _apply_function(L, f)
    raise UnsupportedError("cannot apply an operator to %r" % (f,))


def _act(A, f):
    if A.kind in (Kind.S, Kind.Q):
        return A.sigma(f)
    return A.delta(f)


def _apply_function(L, f):
    A = L.parent
    if is_scalar(f):
        f = A._poly_cls.one() * A.constant(f) if A.symbolic_q else Poly(QQ(f))
    elif isinstance(f, RatFun):
        f = RatFun(A._to_polycls(f.num), A._to_polycls(f.den))
    else:
        f = A._to_polycls(f)
    acc = f * 0
    g = f
    for i, a in enumerate(L._c):
        if i:
            g = _act(A, g)
        if a:
            acc = acc + _base_mul(a, g)
    if isinstance(acc, RatFun) and acc.is_polynomial():
        return acc.num
    return acc


def _base_mul(a, g):
    if isinstance(a, RatFun) and not isinstance(g, RatFun):
        return a * to_ratfun(g)
    return a * g


def _apply_series(L, f):
    A = L.parent
    x = Poly.gen()
    acc = None
    g = f
    for i, a in enumerate(L._c):
        if i:
            g = g.derivative()
            if A.kind is Kind.T:
                g = g * x
        if not a:
            continue
        t = g * a
        acc = t if acc is None else acc + t
    if acc is None:
        return Series([], max(f.prec - max(L.order(), 0), 0))
    return acc.truncate(f.prec - max(L.order(), 0))


def _apply_sequence(L, seq):
    A = L.parent
    if A.kind not in (Kind.S, Kind.F):
        raise UnsupportedError("sequence arguments need an S or F algebra")
    seq = [QQ(v) for v in seq]
    r = max(L.order(), 0)
    if len(seq) < r:
        raise InsufficientDataError("sequence of length %d is shorter than the order %d" % (len(seq), r))
    n_out = len(seq) - r
    streams = [seq]
    for _ in range(r):
        s = streams[-1]
        if A.kind is Kind.S:
            streams.append(s[1:])
        else:
            streams.append([s[k + 1] - s[k] for k in range(len(s) - 1)])
    out = []
    for n in range(n_out):
        v = fmpq(0)
        for i, a in enumerate(L._c):
            if a:
                try:
                    v += a(n) * streams[i][n]
                except ZeroDivisionError:
                    raise OreDomainError("coefficient %s has a pole at %s = %d"
                                         % (a.to_str(A.base_var), A.base_var, n)) from None
        out.append(v)
    return out


def common_left_denominator(L):
    """Monic lcm of the coefficient denominators of ``L`` (a polynomial)."""
    den = None
    for c in L._c:
        if isinstance(c, RatFun):
            den = c.den if den is None else poly_lcm(den, c.den)
    return den


def _element(A, p):
    if isinstance(p, RatFun):
        return RatFun(A._to_polycls(p.num), A._to_polycls(p.den))
    if isinstance(p, (Poly, QPoly)):
        return A._to_polycls(p)
    return A._poly_cls.one() * A.constant(p)


def sigma_apply(A, p):
    """``sigma(p)`` for a constant, polynomial or rational function ``p``."""
    return A.sigma(_element(A, p))


def delta_apply(A, p):
    """``delta(p)`` for a constant, polynomial or rational function ``p``."""
    return A.delta(_element(A, p))
