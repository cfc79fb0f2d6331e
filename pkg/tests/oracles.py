"""
Independent oracles.

Nothing here calls into the arithmetic of ``orealg``: operators are read off
as plain coefficient lists and evaluated with sympy, Fraction or mpmath.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

X, N = sp.symbols("x n")


def rat(c):
    return sp.Rational(int(c.p), int(c.q))


def poly_expr(p, var=X):
    return sum((rat(c) * var ** i for i, c in enumerate(p.coeffs())), sp.Integer(0))


def coeff_expr(c, var=X):
    """A Poly or RatFun coefficient as a sympy expression."""
    if hasattr(c, "num"):
        return poly_expr(c.num, var) / poly_expr(c.den, var)
    if hasattr(c, "coeffs"):
        return poly_expr(c, var)
    return sp.Rational(int(c.p), int(c.q))


def op_coeffs(L, var=X):
    return [coeff_expr(c, var) for c in L.coefficients()]


def apply_d(L, f):
    """sum c_i(x) * f^(i)(x) for a sympy expression f."""
    return sp.simplify(sum(c * sp.diff(f, X, i) for i, c in enumerate(op_coeffs(L))))


def apply_s(L, seq):
    """Termwise action of a shift operator over ``n`` on a list of Fractions."""
    cs = [sp.lambdify(N, c, "sympy") for c in op_coeffs(L, N)]
    r = len(cs) - 1
    out = []
    for n in range(len(seq) - r):
        out.append(sum(Fraction(str(sp.nsimplify(c(n)))) * seq[n + i] for i, c in enumerate(cs)))
    return out


def series_coeffs(expr, n):
    s = sp.series(expr, X, 0, n).removeO()
    return [sp.Rational(s.coeff(X, k)) for k in range(n)]


def fibonacci(n):
    a, b = 0, 1
    out = []
    for _ in range(n):
        out.append(a)
        a, b = b, a + b
    return out


def partial_sums_inverse_factorial(n):
    out, s, f = [], Fraction(0), 1
    for k in range(n):
        if k:
            f *= k
        s += Fraction(1, f)
        out.append(s)
    return out


def e_digits(digits):
    """``digits`` decimals of e as a string ``2.718...`` from mpmath."""
    import mpmath
    with mpmath.workdps(digits + 30):
        s = mpmath.nstr(mpmath.e, digits + 20, strip_zeros=False)
    return s[:digits + 2]


def rank(rows):
    return sp.Matrix(rows).rank() if rows else 0
