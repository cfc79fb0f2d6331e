"""
Rewrites between related algebras and solution-preserving constructions.

``to_S`` / ``to_D`` move between a differential operator and the recurrence
of the Taylor coefficients of its power-series solutions.  ``to_F`` and
``to_T`` rewrite in the forward difference and the Euler derivative.  The
remaining functions build annihilators of integrals, partial sums,
compositions and interlaced sequences.
"""

from __future__ import annotations

import math
from fractions import Fraction

from flint import fmpq

from .algebra import Kind, OrePoly, make_algebra
from .arith import QQ, Poly, RatFun, to_ratfun
from .closures import _minimal_annihilator, _Space
from .errors import ConversionError, OreDomainError, UnsupportedError
from .euclid import _rational_content, lclm, normalize


def _need(L, *kinds):
    if L.parent.kind not in kinds:
        raise UnsupportedError("expected an operator of kind %s, got %s"
                               % ("/".join(k.value for k in kinds), L.parent.kind.value))


def _poly_coeffs(L):
    """Coefficients of ``u*L`` as polynomials, with only denominators and integer content removed."""
    cs = L.coefficients()
    den = Poly.one()
    for c in cs:
        if isinstance(c, RatFun) and c.den.degree() > 0:
            den = den * c.den // den.gcd(c.den)
    out = []
    for c in cs:
        if isinstance(c, RatFun):
            out.append(c.num * (den // c.den))
        else:
            out.append(c * den)
    return out


def _integer_normal(polys):
    """Divide by the rational content and make the leading coefficient positive."""
    k = _rational_content(polys)
    if polys[-1].lc() < 0:
        k = -k
    return [p / k for p in polys]


def _default_algebra(kind, var):
    return make_algebra(var, kind.value + var, kind)


def _trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _rising(p, i):
    """``p (p+1) ... (p+i-1)`` for a polynomial ``p``."""
    out = Poly.one()
    for k in range(i):
        out = out * (p + k)
    return out


# --------------------------------------------------------------------------
# D <-> S
# --------------------------------------------------------------------------


def to_S(L, algebra=None):
    """Recurrence for the Taylor coefficients of the power-series solutions of ``L``.

    The term ``x^j D^i`` acts on ``sum(a_n x^n)`` by sending the coefficient
    of ``x^m`` to ``(m-j+1)...(m-j+i) a_{m+i-j}``.  The result holds for all
    ``n >= 0``; only its integer content is removed, because cancelling a
    polynomial factor would change the recurrence at the roots of that factor.

    >>> from orealg import make_algebra
    >>> A = make_algebra("x", "Dx")
    >>> print(to_S(A("Dx^2 + 2*x*Dx")))
    (n^2+3*n+2)*Sn^2 + 2*n
    """
    _need(L, Kind.D)
    if not L:
        raise OreDomainError("to_S of the zero operator")
    S = algebra if algebra is not None else _default_algebra(Kind.S, "k" if L.parent.base_var == "n" else "n")
    if S.kind is not Kind.S:
        raise ConversionError("to_S needs a shift algebra as target")
    polys = _poly_coeffs(L)
    n = Poly.gen()
    terms = {}
    for i, c in enumerate(polys):
        for j, cj in enumerate(c.coeffs()):
            if cj:
                terms.setdefault(i - j, []).append((i, j, cj))
    s = max(0, -min(terms))
    out = [Poly.zero()] * (max(terms) + s + 1)
    for shift, items in terms.items():
        acc = Poly.zero()
        for i, j, cj in items:
            acc = acc + _rising(n + (s - j + 1), i) * cj
        out[shift + s] = out[shift + s] + acc
    out = _trim(out)
    if not out:
        raise OreDomainError("to_S produced the zero recurrence")
    return OrePoly(S.poly_algebra(), _integer_normal(out), _trusted=True)


def _theta_poly(D, p, shift):
    """``p(theta - shift)`` as an element of the D-algebra, theta = x*D."""
    theta = D([0, Poly.gen()]) - shift
    acc = D.zero()
    for c in reversed(p.coeffs()):
        acc = acc * theta + c
    return acc


def to_D(L, algebra=None):
    """Differential operator for ``sum(a_n x^n)`` when ``L`` annihilates ``(a_n)``.

    With ``L = sum(p_i(n) S^i)`` of order r the series ``f`` satisfies
    ``sum(x^(r-i) p_i(theta-i)) f = P`` where ``P`` is a polynomial that
    depends linearly on the first r terms.  The result is that operator
    multiplied on the left by an annihilator of all possible ``P``.
    """
    _need(L, Kind.S)
    if not L:
        raise OreDomainError("to_D of the zero operator")
    D = algebra if algebra is not None else _default_algebra(Kind.D, "x" if L.parent.base_var != "x" else "t")
    if D.kind is not Kind.D:
        raise ConversionError("to_D needs a differential algebra as target")
    D = D.poly_algebra()
    p = _poly_coeffs(L)
    r = len(p) - 1
    x = Poly.gen()
    main = D.zero()
    for i, pi in enumerate(p):
        if pi:
            main = main + (x ** (r - i)) * _theta_poly(D, pi, i)
    # polynomials P_k multiplying the unknown initial value a_k
    inhom = []
    for k in range(r):
        P = Poly.zero()
        for i in range(k + 1, r + 1):
            P = P + (x ** (r - i + k)) * p[i](k - i)
        if P:
            inhom.append(P)
    basis = _span_basis(inhom)
    if basis:
        M = None
        for P in basis:
            ann = D([-P.derivative(), P])
            M = ann if M is None else lclm(M, ann)
        main = M * main
    return normalize(main)


def _span_basis(polys):
    """Echelon basis of the Q-span of a list of polynomials."""
    rows = []
    for p in polys:
        for piv, b in rows:
            c = p[piv]
            if c:
                p = p - b * c
        if p:
            d = int(p.degree())
            p = p / p.lc()
            rows = [(pv, b - p * b[d]) if b[d] else (pv, b) for pv, b in rows]
            rows.append((d, p))
    return [b for _, b in rows]


# --------------------------------------------------------------------------
# S <-> F, D <-> T
# --------------------------------------------------------------------------


def to_F(L, algebra=None):
    """Rewrite in the forward difference ``F = S - 1`` (differential input goes through :func:`to_S`)."""
    _need(L, Kind.S, Kind.D)
    if L.parent.kind is Kind.D:
        L = to_S(L)
    A = L.parent
    F = algebra if algebra is not None else make_algebra(A.base_var, "F" + A.base_var, Kind.F,
                                                         coeff_domain=A.coeff_domain)
    if F.kind is not Kind.F:
        raise ConversionError("to_F needs a forward-difference algebra as target")
    shift = F.gen() + 1
    acc = F.zero()
    for c in reversed(L.coefficients()):
        acc = acc * shift + F([c])
    return acc


def from_F(L, algebra=None):
    """Inverse of :func:`to_F`: substitute ``F = S - 1``."""
    _need(L, Kind.F)
    A = L.parent
    S = algebra if algebra is not None else make_algebra(A.base_var, "S" + A.base_var, Kind.S,
                                                         coeff_domain=A.coeff_domain)
    if S.kind is not Kind.S:
        raise ConversionError("from_F needs a shift algebra as target")
    diff = S.gen() - 1
    acc = S.zero()
    for c in reversed(L.coefficients()):
        acc = acc * diff + S([c])
    return acc


def to_T(L, algebra=None):
    """Rewrite in the Euler derivative ``T = x*D``.

    ``L`` is first multiplied on the left by the least power ``x^k`` for
    which every term ``x^j D^i`` has ``j >= i``; then ``x^i D^i`` becomes
    ``T (T-1) ... (T-i+1)``.

    >>> from orealg import make_algebra
    >>> print(to_T(make_algebra("x", "Dx")("x*Dx - 5")))
    Tx - 5
    """
    _need(L, Kind.D)
    A = L.parent
    T = algebra if algebra is not None else make_algebra(A.base_var, "T" + A.base_var, Kind.T)
    if T.kind is not Kind.T:
        raise ConversionError("to_T needs an Euler algebra as target")
    T = T.poly_algebra()
    polys = _poly_coeffs(L)
    k = 0
    for i, c in enumerate(polys):
        if c:
            k = max(k, i - int(c.valuation()))
    t = T.gen()
    acc = T.zero()
    falling = T.one()
    for i, c in enumerate(polys):
        if i:
            falling = falling * (t - (i - 1))
        if c:
            acc = acc + falling.left_scale(c.mul_xpow(k - i))
    return acc


def from_T(L, algebra=None):
    """Inverse of :func:`to_T`: substitute ``T = x*D``."""
    _need(L, Kind.T)
    A = L.parent
    D = algebra if algebra is not None else make_algebra(A.base_var, "D" + A.base_var, Kind.D,
                                                         coeff_domain=A.coeff_domain)
    theta = D([0, D.x])
    acc = D.zero()
    for c in reversed(L.coefficients()):
        acc = acc * theta + D([c])
    return acc


# --------------------------------------------------------------------------
# integrals, sums
# --------------------------------------------------------------------------


def annihilator_of_integral(L):
    """``normalize(L*D)``: annihilates every antiderivative of every solution of ``L``."""
    _need(L, Kind.D)
    return normalize(L * L.parent.gen())


def annihilator_of_sum(L):
    """Annihilator of the partial sums ``sum(f(k), k=0..n)`` of the solutions of ``L``.

    >>> from orealg import make_algebra
    >>> A = make_algebra("n", "Sn")
    >>> print(annihilator_of_sum(A("(n+1)*Sn - 1")))
    (n+2)*Sn^2 + (-n-3)*Sn + 1
    """
    _need(L, Kind.S)
    A = L.parent
    shifted = OrePoly(A, [A.sigma(c) for c in L.coefficients()], _trusted=True)
    return normalize(shifted * (A.gen() - 1))


# --------------------------------------------------------------------------
# composition and interlacing
# --------------------------------------------------------------------------


def annihilator_of_composition_d(L, a):
    """Annihilator of ``f(a(x))`` for a rational function ``a`` and ``L(f) = 0``.

    >>> from orealg import make_algebra
    >>> A = make_algebra("x", "Dx")
    >>> print(annihilator_of_composition_d(A("Dx - 1"), "-x^2"))
    Dx + 2*x
    """
    _need(L, Kind.D)
    A = L.parent
    if isinstance(a, str):
        a = A.ratfun_algebra()(a)
        if a.order() > 0:
            raise OreDomainError("the inner function must not involve %s" % A.gen_name)
        a = a[0]
    a = to_ratfun(A.base(a) if not isinstance(a, RatFun) else a)
    if a.is_constant():
        raise OreDomainError("composition with a constant")
    K = A.ratfun_algebra()
    composed = OrePoly(K, [to_ratfun(c).compose(a) for c in L.coefficients()], _trusted=True)
    sp = _Space([composed], chain=a.derivative())
    return _minimal_annihilator(sp, sp.var(0, 0), A)


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    q = QQ(v)
    return Fraction(int(q.p), int(q.q))


def annihilator_of_composition_s(L, u, v=0):
    """Annihilator of ``f(floor(u*n + v))`` for rationals ``u > 0`` and ``v``.

    For integer ``u`` the shifts by ``u`` are reduced through ``L``; for a
    fraction ``u = p/q`` the q residue classes are treated separately and
    interlaced.
    """
    _need(L, Kind.S)
    u, v = _as_fraction(u), _as_fraction(v)
    if u <= 0:
        raise OreDomainError("composition needs u > 0")
    if u.denominator == 1:
        return _composition_int(L, u.numerator, math.floor(v))
    p, q = u.numerator, u.denominator
    streams = [_composition_int(L, p, math.floor(Fraction(p * j, q) + v)) for j in range(q)]
    return annihilator_of_interlacing(*streams)


def _composition_int(L, u, v):
    A = L.parent
    sp = _Space([L])
    combo = _minimal_annihilator(sp, sp.var(0, 0), None, step=u)
    # coefficients live in K(m) with m = u*n + v
    sub = to_ratfun(Poly([v, u]))
    K = A.ratfun_algebra()
    return normalize(OrePoly(K, [c.compose(sub) for c in combo], _trusted=True))


def annihilator_of_composition(L, *args):
    """Dispatch on the kind: ``(L, a)`` for D, ``(L, u, v)`` for S."""
    if L.parent.kind is Kind.D:
        return annihilator_of_composition_d(L, *args)
    return annihilator_of_composition_s(L, *args)


def annihilator_of_interlacing(*ops):
    """Annihilator of ``h`` with ``h(k*n + i) = f_i(n)``, where ``L_i(f_i) = 0``.

    Each stream is annihilated (with zeros elsewhere) by
    ``sum(p_j((N - i)/k) * S^(k*j))``; the LCLM of these kills ``h``.
    """
    if len(ops) < 2:
        raise OreDomainError("interlacing needs at least two operators")
    A = ops[0].parent
    for L in ops:
        _need(L, Kind.S)
        if not A.compatible(L.parent):
            raise ConversionError("operators live in incompatible algebras")
    k = len(ops)
    M = None
    for i, L in enumerate(ops):
        sub = Poly([fmpq(-i, k), fmpq(1, k)])
        cs = [A.base(0)] * (k * L.order() + 1)
        for j, c in enumerate(L.coefficients()):
            cs[k * j] = c(sub) if not isinstance(c, RatFun) else c.compose(to_ratfun(sub))
        Mi = A.ratfun_algebra()(cs)
        M = Mi if M is None else lclm(M, Mi)
    return normalize(M)
