"""
Polynomial, rational and power-series solutions of D- and S-kind operators.

Inhomogeneous calls take a list ``rhs = [f_1, ..., f_m]`` and return a basis
of all pairs ``(g, c)`` with ``L(g) = c_1 f_1 + ... + c_m f_m``.  Homogeneous
calls return the same shape with an empty ``c``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from flint import fmpq

from .algebra import Kind, OrePoly, apply
from .arith import QQ, Poly, RatFun, nullspace, poly_gcd, poly_lcm, to_ratfun
from .errors import OreDomainError, UnsupportedError
from .series import Series


class Solution(NamedTuple):
    """``L(g) = sum(c[i] * rhs[i])``."""

    g: object
    c: tuple


def _check(L):
    if L.parent.kind not in (Kind.D, Kind.S):
        raise UnsupportedError("solvers need a D or S algebra, not %s" % L.parent.kind.value)
    if L.parent.symbolic_q:
        raise UnsupportedError("solvers do not handle symbolic q")


def _cleared(L, rhs):
    """Polynomial operator ``P`` and polynomial right-hand sides with the same solutions."""
    A = L.parent
    rhs = [to_ratfun(A.base(f) if not isinstance(f, RatFun) else f) for f in rhs]
    cs = [to_ratfun(c) for c in L.coefficients()]
    den = Poly.one()
    for c in cs + rhs:
        if c.den.degree() > 0:
            den = poly_lcm(den, c.den)
    P = [c.num * (den // c.den) for c in cs]
    fs = [f.num * (den // f.den) for f in rhs]
    return P, fs


def _images(A, P, k):
    """``P(x^k)`` for a polynomial-coefficient operator given as a list."""
    op = OrePoly(A.poly_algebra(), P, _trusted=True)
    return apply(op, Poly.gen() ** k)


def _degree_bound(A, P, fs):
    """Largest possible degree of a polynomial solution of ``P(g) = sum c_i f_i``."""
    if A.kind is Kind.S:
        # rewrite in F = S - 1, where F^i lowers degrees by i like D^i
        from .transforms import to_F
        op = to_F(OrePoly(A.poly_algebra(), P, _trusted=True))
        P = op.coefficients()
    b = max(c.degree() - i for i, c in enumerate(P) if c)
    # I(d) = sum over extremal i of lc(a_i) * d (d-1) ... (d-i+1)
    d = Poly.gen()
    ind = Poly.zero()
    for i, c in enumerate(P):
        if c and c.degree() - i == b:
            ff = Poly.one()
            for k in range(i):
                ff = ff * (d - k)
            ind = ind + ff * c.lc()
    roots = [r for r in ind.integer_roots() if r >= 0]
    bound = max(roots) if roots else -1
    rdeg = max((f.degree() for f in fs if f), default=-math.inf)
    if rdeg != -math.inf:
        bound = max(bound, int(rdeg - b))
    return bound


def _rref(rows):
    """Reduced row echelon form over Q of a list of rational rows (nonzero rows only)."""
    rows = [[QQ(v) for v in r] for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    for row in rows[:r]:
        out.append(row)
    return out


def polynomial_solutions(L, rhs=()):
    """Basis of the polynomial solutions ``(g, c)`` of ``L(g) = sum(c_i * rhs_i)``.

    Sorted by ascending degree of ``g`` (``g = 0`` first); each ``g`` is
    monic unless it is zero.

    >>> from orealg import make_algebra
    >>> A = make_algebra("x", "Dx")
    >>> [str(s.g) for s in polynomial_solutions(A("x*Dx - 3"))]
    ['x^3']
    """
    _check(L)
    rhs = list(rhs)
    if not L and not rhs:
        raise OreDomainError("every polynomial solves the zero operator")
    A = L.parent
    P, fs = _cleared(L, rhs)
    if not L:
        bound = -1
    else:
        bound = _degree_bound(A, P, fs)
    cols = [_images(A, P, k) for k in range(bound, -1, -1)] + [-f for f in fs]
    if not cols:
        return []
    height = max((int(c.degree()) + 1 for c in cols if c), default=0)
    M = [[c[i] for c in cols] for i in range(height)] if height else [[0] * len(cols)]
    basis = nullspace(M, len(cols))
    if not basis:
        return []
    sols = []
    for row in _rref(basis):
        g = Poly(list(reversed(row[:bound + 1]))) if bound >= 0 else Poly.zero()
        sols.append(Solution(g, tuple(row[bound + 1:])))
    sols.sort(key=lambda s: (s.g.degree() if s.g else -math.inf, s.c))
    return sols


# --------------------------------------------------------------------------
# rational solutions
# --------------------------------------------------------------------------


def _local_exponents(P, p):
    """Integer roots of the indicial polynomial of ``sum P[i] D^i`` at the roots of ``p``."""
    vals = []
    units = []
    for c in P:
        if not c:
            vals.append(None)
            units.append(None)
            continue
        v = 0
        while True:
            q, r = divmod(c, p)
            if r:
                break
            c = q
            v += 1
        vals.append(v)
        units.append(c % p)
    w = min(v - i for i, v in enumerate(vals) if v is not None)
    dp = p.derivative() % p
    s = Poly.gen()
    # I(s) = sum u_i(alpha) p'(alpha)^i s(s-1)...(s-i+1), a polynomial in s over Q[alpha]
    parts = {}
    for i, v in enumerate(vals):
        if v is None or v - i != w:
            continue
        u = (units[i] * dp ** i) % p
        ff = Poly.one()
        for k in range(i):
            ff = ff * (s - k)
        for j, cj in enumerate(u.coeffs()):
            if cj:
                parts[j] = parts.get(j, Poly.zero()) + ff * cj
    roots = None
    for comp in parts.values():
        if not comp:
            continue
        rs = set(comp.integer_roots()) if comp.degree() > 0 else set()
        roots = rs if roots is None else roots & rs
    return sorted(roots or [])


def _denominator_d(P):
    lead = P[-1]
    if lead.degree() <= 0:
        return Poly.one()
    U = Poly.one()
    for f, _m in lead.factor()[1]:
        ex = _local_exponents(P, f)
        neg = [-e for e in ex if e < 0]
        if neg:
            U = U * f ** max(neg)
    return U


def _dispersion_pairs(a, b):
    """Nonnegative integers h with deg gcd(a(n), b(n+h)) > 0."""
    hs = set()
    fa = a.factor()[1] if a.degree() > 0 else []
    fb = b.factor()[1] if b.degree() > 0 else []
    for f, _ in fa:
        for g, _ in fb:
            k = int(f.degree())
            if k != g.degree():
                continue
            h = (f[k - 1] - g[k - 1]) / k
            if h >= 0 and h.q == 1 and g.shift(int(h)) == f:
                hs.add(int(h))
    return hs


def _denominator_s(P):
    r = len(P) - 1
    a = P[0]
    b = P[-1].shift(-r)
    if not a or a.degree() <= 0 or b.degree() <= 0:
        return Poly.one()
    hs = _dispersion_pairs(a, b)
    if not hs:
        return Poly.one()
    U = Poly.one()
    for i in range(max(hs), -1, -1):
        d = poly_gcd(a, b.shift(i))
        if d.degree() <= 0:
            continue
        a = a // d
        b = b // d.shift(-i)
        for j in range(i + 1):
            U = U * d.shift(-j)
    return U


def rational_solutions(L, rhs=()):
    """Basis of the rational solutions ``(g, c)`` of ``L(g) = sum(c_i * rhs_i)``.

    A universal denominator ``U`` is computed first (local indicial
    exponents at the factors of the leading coefficient for D, Abramov's
    dispersion bound for S); the numerators are then the polynomial
    solutions of ``L*(1/U)``.
    """
    _check(L)
    rhs = list(rhs)
    if not L and not rhs:
        raise OreDomainError("every rational function solves the zero operator")
    A = L.parent
    P, fs = _cleared(L, rhs)
    if not L:
        return polynomial_solutions(L, rhs)
    U = _denominator_d(P) if A.kind is Kind.D else _denominator_s(P)
    if U.degree() <= 0:
        sols = polynomial_solutions(A.poly_algebra()(P), fs)
    else:
        K = A.ratfun_algebra()
        op = K(P) * K([RatFun(Poly.one(), U)])
        sols = polynomial_solutions(op, fs)
        sols = [Solution(RatFun(s.g, U) if s.g else RatFun(Poly.zero()), s.c) for s in sols]
        sols.sort(key=lambda s: (s.g.degree() if s.g else -math.inf, s.c))
    return [Solution(s.g if not (isinstance(s.g, RatFun) and s.g.is_polynomial()) else s.g.num, s.c)
            for s in sols]


# --------------------------------------------------------------------------
# power series
# --------------------------------------------------------------------------


def power_series_solutions(L, n):
    """Power-series solutions at the origin, each exact modulo ``x^n``.

    Solutions are found by unrolling the coefficient recurrence with a free
    parameter at every index where its leading coefficient vanishes.  The
    basis is in reduced echelon form: ascending valuation, leading term 1.
    Logarithmic and non-integer-exponent solutions are not found.

    >>> from orealg import make_algebra
    >>> A = make_algebra("x", "Dx")
    >>> [str(s) for s in power_series_solutions(A("Dx - 1"), 4)]
    ['1 + x + 1/2*x^2 + 1/6*x^3 + O(x^4)']
    """
    _check(L)
    if L.parent.kind is not Kind.D:
        raise UnsupportedError("power series solutions need a D algebra")
    if not isinstance(n, int) or n <= 0:
        raise OreDomainError("the truncation order must be positive")
    if not L:
        raise OreDomainError("every series solves the zero operator")
    P, _ = _cleared(L, [])
    # Q_delta(m): coefficient of a_{m+delta} in the equation for x^m
    qs = {}
    m_ = Poly.gen()
    for i, c in enumerate(P):
        for j, cj in enumerate(c.coeffs()):
            if not cj:
                continue
            rf = Poly.one()
            for k in range(i):
                rf = rf * (m_ + (k - j + 1))
            qs[i - j] = qs.get(i - j, Poly.zero()) + rf * cj
    qs = {d: q for d, q in qs.items() if q}
    if not qs:
        return []
    top = max(qs)
    lead = qs[top]
    roots = [r for r in lead.integer_roots() if r >= 0]
    last = max(n - 1 - top, max(roots) if roots else -1)
    # a_k as vectors over the free parameters
    coeffs = {}
    nparams = 0

    def fresh():
        nonlocal nparams
        nparams += 1
        return {nparams - 1: fmpq(1)}

    for k in range(max(top, 0)):
        coeffs[k] = fresh()
    constraints = []
    for m in range(0, last + 1):
        acc = {}
        for d, q in qs.items():
            if d == top:
                continue
            idx = m + d
            if idx < 0:
                continue
            val = q(m)
            if not val:
                continue
            for p, v in coeffs.get(idx, {}).items():
                acc[p] = acc.get(p, fmpq(0)) + val * v
        lv = lead(m)
        target = m + top
        if target < 0:
            constraints.append(acc)
            continue
        if lv:
            inv = -1 / lv
            coeffs[target] = {p: v * inv for p, v in acc.items() if v}
        else:
            coeffs[target] = fresh()
            constraints.append(acc)
    for k in range(n):
        coeffs.setdefault(k, {})
    if nparams == 0:
        return []
    M = [[row.get(p, 0) for p in range(nparams)] for row in constraints if any(row.values())]
    if M:
        kernel = nullspace(M, nparams)
    else:
        kernel = [[1 if i == j else 0 for i in range(nparams)] for j in range(nparams)]
    rows = []
    for vec in kernel:
        rows.append([sum((coeffs[k].get(p, 0) * vec[p] for p in coeffs[k]), fmpq(0)) for k in range(n)])
    rows = [r for r in _rref(rows) if any(r)] if rows else []
    return [Series(r, n) for r in rows]
