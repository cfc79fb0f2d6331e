"""
Left Euclidean structure: division with remainder, GCRD, LCLM, normalization.

All divisions are right divisions taken over the rational function field
K(x), so results may have rational coefficients even for polynomial input.
Remainder sequences are run on polynomial-coefficient operators and their
growth is controlled by one of the ``prs`` strategies:

``classic``
    primitive PRS, each remainder is divided by its content;
``monic``
    every remainder is made monic over K(x);
``subresultant``
    each remainder is divided by the multiplier used in the previous step
    when that division is exact, otherwise by its content;
``improved``
    accepted for compatibility, same as ``subresultant``.

Whatever the strategy, the GCRD is returned normalized, so all four agree.
"""

from __future__ import annotations

import enum
import math
from functools import reduce

from flint import fmpq

from .algebra import OrePoly, _x_times, convert
from .arith import Poly, QPoly, RatFun, poly_gcd, poly_lcm, to_ratfun
from .errors import OreDomainError


class PrsStrategy(enum.Enum):
    CLASSIC = "classic"
    MONIC = "monic"
    SUBRESULTANT = "subresultant"
    IMPROVED = "improved"


def _strategy(prs):
    if isinstance(prs, PrsStrategy):
        s = prs
    else:
        try:
            s = PrsStrategy(str(prs).lower())
        except ValueError:
            raise OreDomainError("unknown prs strategy %r" % (prs,)) from None
    return PrsStrategy.SUBRESULTANT if s is PrsStrategy.IMPROVED else s


# --------------------------------------------------------------------------
# normalization
# --------------------------------------------------------------------------


def _normal_form(L):
    """``(u*L, u)`` with ``u*L`` normalized and ``u`` a nonzero RatFun."""
    A = L.parent
    cs = L.coefficients()
    target = A.poly_algebra() if A.sigma_image.is_polynomial() and A.delta_image.is_polynomial() else A
    P = A._poly_cls
    if not cs:
        return OrePoly(target, [], _trusted=True), to_ratfun(P.one())
    den = None
    for c in cs:
        if isinstance(c, RatFun) and c.den.degree() > 0:
            den = c.den if den is None else poly_lcm(den, c.den)
    if den is None:
        den = P.one()
    polys = []
    for c in cs:
        if isinstance(c, RatFun):
            polys.append(c.num * (den // c.den))
        else:
            polys.append(c * den)
    g = reduce(poly_gcd, polys, P.zero())
    if g.degree() > 0:
        polys = [p // g for p in polys]
    u = RatFun(den, g)
    if P is QPoly:
        lead = polys[-1].lc()
        inv = 1 / lead
        polys = [p * inv for p in polys]
        u = u * RatFun._raw(QPoly._wrap([inv]), QPoly.one())
    else:
        k = _rational_content(polys)
        if polys[-1].lc() < 0:
            k = -k
        if k != 1:
            inv = 1 / k
            polys = [p * inv for p in polys]
            u = u * inv
    if target.is_poly_domain:
        return OrePoly(target, polys, _trusted=True), u
    return OrePoly(target, [to_ratfun(p) for p in polys], _trusted=True), u


def _rational_content(polys):
    num, den = 0, 1
    for p in polys:
        for c in p.coeffs():
            if c:
                num = math.gcd(num, int(c.p))
                den = math.lcm(den, int(c.q))
    return fmpq(num, den)


def normalize(L):
    """Canonical left associate of ``L``.

    The result has polynomial, jointly content-free coefficients and its
    leading coefficient has a positive leading constant (or leading
    q-coefficient 1 over Q(q)).

    >>> from orealg import make_algebra
    >>> A = make_algebra("x", "Dx")
    >>> print(normalize(A("(2*x+2)*Dx + 2")))
    (x+1)*Dx + 1
    """
    return _normal_form(L)[0]


def _primitive(L):
    """``L`` divided by the gcd of its coefficients (polynomial and integer)."""
    cs = L.coefficients()
    g = reduce(poly_gcd, cs, L.parent._poly_cls.zero())
    if isinstance(g, Poly):
        k = _rational_content([p // g for p in cs]) if g.degree() > 0 else _rational_content(cs)
        g = g * k
    if g == 1:
        return L, g
    return OrePoly(L.parent, [c // g if g.degree() > 0 else c / g.lc() for c in cs], _trusted=True), g


# --------------------------------------------------------------------------
# division
# --------------------------------------------------------------------------


def _lower(L, like):
    """Return ``L`` in the polynomial algebra of ``like`` when its coefficients allow it."""
    if like.is_poly_domain and L.is_polynomial():
        return convert(L, like)
    return L


def _shifts(B, count):
    """``[B, X*B, X^2*B, ...]`` as coefficient lists."""
    A = B.parent
    out = [B.coefficients()]
    for _ in range(count):
        out.append(_x_times(A, out[-1]))
    return out


def quo_rem(A, B):
    """Left quotient and remainder: ``A = Q*B + R`` with ``order(R) < order(B)``.

    >>> from orealg import make_algebra
    >>> S = make_algebra("n", "Sn")
    >>> q, r = quo_rem(S("Sn^2 - Sn - 1"), S("Sn - 1"))
    >>> print(q, "|", r)
    Sn | -1
    """
    A, B = A._pair(B)
    if not B:
        raise OreDomainError("division by the zero operator")
    K = A.parent.ratfun_algebra()
    a, b = convert(A, K), convert(B, K)
    rb = b.order()
    ra = a.order()
    if not a or ra < rb:
        return _lower(K.zero(), A.parent), A
    XB = _shifts(b, ra - rb)
    R = list(a.coefficients())
    Q = [K.base(0)] * (ra - rb + 1)
    for k in range(ra, rb - 1, -1):
        c = R[k]
        if not c:
            continue
        j = k - rb
        t = c / XB[j][-1]
        Q[j] = t
        for i, v in enumerate(XB[j]):
            if v:
                R[i] = R[i] - t * v
    Qo = OrePoly(K, Q, _trusted=True)
    Ro = OrePoly(K, R[:rb], _trusted=True)
    return _lower(Qo, A.parent), _lower(Ro, A.parent)


def _prem(R, B, track):
    """Polynomial pseudo-remainder.

    Returns ``(rem, m, Q)`` with ``m*R - Q*B = rem`` (``Q`` only when ``track``).
    ``m`` is a base-ring polynomial.
    """
    P = R.parent
    rb = B.order()
    ra = R.order()
    one = P._poly_cls.one()
    if ra < rb:
        return R, one, (P.zero() if track else None)
    XB = _shifts(B, ra - rb)
    cs = R.coefficients()
    m = one
    Q = [P._poly_cls.zero()] * (ra - rb + 1) if track else None
    for k in range(ra, rb - 1, -1):
        la = cs[k]
        if not la:
            continue
        j = k - rb
        lb = XB[j][-1]
        g = poly_gcd(la, lb)
        fa, fb = (la // g, lb // g) if g.degree() > 0 else (la, lb)
        if fb != 1:
            cs = [c * fb for c in cs]
            m = m * fb
            if track:
                Q = [c * fb for c in Q]
        for i, v in enumerate(XB[j]):
            if v:
                cs[i] = cs[i] - fa * v
        if track:
            Q[j] = Q[j] + fa
    rem = OrePoly(P, cs[:rb], _trusted=True)
    return rem, m, (OrePoly(P, Q, _trusted=True) if track else None)


def _prs_usable(A):
    return A.sigma_image.is_polynomial() and A.delta_image.is_polynomial()


def _remainder_sequence(A, B, strategy, track_s=False, track_t=False):
    """Run the remainder sequence of ``A`` and ``B`` down to a zero remainder.

    Yields nothing; returns ``(last, S, T, S_next, T_next)`` where
    ``last = S*A + T*B`` is the last nonzero remainder and
    ``S_next*A + T_next*B = 0``.  Cofactors are RatFun operators (``None``
    when not tracked).
    """
    K = A.parent.ratfun_algebra()
    track = track_s or track_t
    use_poly = strategy is not PrsStrategy.MONIC and _prs_usable(A.parent)
    if use_poly:
        r0, u0 = _normal_form(A)
        r1, u1 = _normal_form(B) if B else (B, None)
    else:
        r0, u0 = convert(A, K), to_ratfun(A.parent._poly_cls.one())
        r1, u1 = convert(B, K), to_ratfun(A.parent._poly_cls.one())
    s0 = K([u0]) if track_s else None
    t0 = K.zero() if track_t else None
    s1 = K.zero() if track_s else None
    t1 = K([u1]) if (track_t and B) else (K.zero() if track_t else None)
    beta = None
    while r1:
        if use_poly:
            rem, m, Q = _prem(r0, r1, track)
            c = None
            if rem:
                if strategy is PrsStrategy.SUBRESULTANT and beta is not None and beta.degree() > 0:
                    cs = rem.coefficients()
                    qs = [divmod(v, beta) for v in cs]
                    if all(not r for _, r in qs):
                        rem = OrePoly(rem.parent, [q for q, _ in qs], _trusted=True)
                        c = beta
                rem, g = _primitive(rem)
                c = g if c is None else c * g
            beta = m
            if track:
                mq = K([m])
                Qk = convert(Q, K) if Q is not None else None
                cinv = to_ratfun(c).inverse() if c is not None else None
        else:
            Qk, rem = quo_rem(r0, r1)
            Qk = convert(Qk, K)
            rem = convert(rem, K)
            c = None
            if rem:
                lc = rem.leading_coefficient()
                rem = rem.left_scale(to_ratfun(lc).inverse())
                c = lc
            mq = K.one()
            if track:
                cinv = to_ratfun(c).inverse() if c is not None else None
        if track:
            def step(x0, x1):
                v = mq * x0 - Qk * x1
                return v.left_scale(cinv) if cinv is not None else v
            s2 = step(s0, s1) if track_s else None
            t2 = step(t0, t1) if track_t else None
            s0, s1 = s1, s2
            t0, t1 = t1, t2
        r0, r1 = r1, rem
    return r0, s0, t0, s1, t1


def _swap_needed(A, B):
    return B and (not A or A.order() < B.order())


def gcrd(A, B, prs="improved"):
    """Greatest common right divisor, normalized.

    ``prs`` selects the remainder sequence (see module docstring); the
    result does not depend on it.
    """
    A, B = A._pair(B)
    if not A and not B:
        raise OreDomainError("gcrd(0, 0) is undefined")
    s = _strategy(prs)
    if _swap_needed(A, B):
        A, B = B, A
    last = _remainder_sequence(A, B, s)[0]
    return normalize(last)


def xgcrd(A, B, prs="improved"):
    """``(G, S, T)`` with ``G = gcrd(A, B)`` and ``S*A + T*B = G`` over K(x)."""
    A, B = A._pair(B)
    if not A and not B:
        raise OreDomainError("gcrd(0, 0) is undefined")
    s = _strategy(prs)
    swapped = _swap_needed(A, B)
    if swapped:
        A, B = B, A
    last, S, T, _, _ = _remainder_sequence(A, B, s, True, True)
    G, u = _normal_form(last)
    S = S.left_scale(u)
    T = T.left_scale(u)
    if swapped:
        S, T = T, S
    return G, _lower(S, A.parent), _lower(T, A.parent)


def lclm(A, B):
    """Least common left multiple, normalized."""
    return xlclm(A, B, _cofactors=False)[0]


def xlclm(A, B, _cofactors=True):
    """``(L, U, V)`` with ``L = lclm(A, B) = U*A = V*B``."""
    A, B = A._pair(B)
    if not A or not B:
        raise OreDomainError("lclm with a zero operand")
    swapped = _swap_needed(A, B)
    if swapped:
        A, B = B, A
    _, _, _, S, T = _remainder_sequence(A, B, PrsStrategy.SUBRESULTANT, True, _cofactors)
    L, u = _normal_form(S * A)
    if not _cofactors:
        return L, None, None
    U = S.left_scale(u)
    V = -T.left_scale(u)
    if swapped:
        U, V = V, U
    return L, _lower(U, A.parent), _lower(V, A.parent)
