"""
Terms of P-recursive sequences.

:func:`to_list` unrolls a recurrence step by step.
:func:`forward_matrix_bsplit` jumps ahead ``n`` steps at once by
multiplying the companion matrices ``A(0), ..., A(n-1)`` in a balanced
product tree over the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from flint import fmpq, fmpz, fmpz_mat

from .algebra import Kind
from .arith import QQ, RatFun
from .errors import InsufficientDataError, OreDomainError, SingularIndexError, UnsupportedError


def _integer_recurrence(L):
    """Coefficients of a positive multiple of ``L`` as lists of Python ints."""
    A = L.parent
    if A.kind is Kind.F:
        from .transforms import from_F
        L = from_F(L)
    elif A.kind is not Kind.S:
        raise UnsupportedError("term computation needs a shift (or difference) algebra")
    if A.symbolic_q:
        raise UnsupportedError("term computation needs rational coefficients")
    cs = L.coefficients()
    if not cs:
        raise OreDomainError("the zero operator does not determine a sequence")
    den = 1
    polys = []
    for c in cs:
        if isinstance(c, RatFun):
            if c.den.degree() > 0:
                raise OreDomainError("clear the denominators of the coefficients first")
            c = c.num / c.den.lc()
        polys.append(c)
    for p in polys:
        den = math.lcm(den, p.denominator())
    return [(p * den).integer_coeffs() if p else [] for p in polys]


def _horner(cs, n):
    acc = 0
    for c in reversed(cs):
        acc = acc * n + c
    return acc


def to_list(L, initial, n):
    """First ``n`` terms of the solution of ``L`` that starts with ``initial``.

    Raises :class:`SingularIndexError` when the leading coefficient vanishes
    at a step that is needed.

    >>> from orealg import make_algebra
    >>> A = make_algebra("n", "Sn")
    >>> to_list(A("Sn^2 - Sn - 1"), [0, 1], 7)
    [0, 1, 1, 2, 3, 5, 8]
    """
    rec = _integer_recurrence(L)
    r = len(rec) - 1
    vals = [QQ(v) for v in initial]
    if n <= len(vals):
        return vals[:n]
    if len(vals) < r:
        raise InsufficientDataError("%d initial values given, order is %d" % (len(vals), r))
    if r == 0:
        raise OreDomainError("an operator of order 0 does not determine further terms")
    lead = rec[-1]
    start = len(vals) - r
    # the window is kept as integer numerators over one common denominator
    den = fmpz(1)
    for v in vals[start:]:
        den = den.lcm(v.q)
    win = [v.p * (den // v.q) for v in vals[start:]]
    for k in range(start, n - r):
        d = _horner(lead, k)
        if not d:
            raise SingularIndexError(k)
        s = fmpz(0)
        for i in range(r):
            if rec[i]:
                s += _horner(rec[i], k) * win[i]
        den *= d
        win = [u * d for u in win[1:]] + [-s]
        vals.append(fmpq(-s, den))
    return vals


@dataclass(frozen=True)
class BsplitResult:
    """``P/Q`` maps ``(c_0, ..., c_{r-1})`` to ``(c_n, ..., c_{n+r-1})``."""

    P: tuple
    Q: int

    def apply(self, initial):
        init = [QQ(v) for v in initial]
        return [sum((fmpq(a) * b for a, b in zip(row, init)), fmpq(0)) / self.Q for row in self.P]


def _companion(rec, k):
    r = len(rec) - 1
    d = _horner(rec[-1], k)
    if not d:
        raise SingularIndexError(k)
    M = fmpz_mat(r, r)
    for i in range(r - 1):
        M[i, i + 1] = d
    for j in range(r):
        M[r - 1, j] = -_horner(rec[j], k) if rec[j] else 0
    return M, fmpz(d)


def _product(rec, lo, hi):
    """``(A(hi-1) ... A(lo), q(hi-1) ... q(lo))``."""
    if hi - lo == 1:
        return _companion(rec, lo)
    mid = (lo + hi) // 2
    P1, Q1 = _product(rec, lo, mid)
    P2, Q2 = _product(rec, mid, hi)
    return P2 * P1, Q2 * Q1


def forward_matrix_bsplit(L, n):
    """Exact matrix ``P`` and denominator ``Q`` advancing the recurrence ``n`` steps.

    >>> from orealg import make_algebra
    >>> A = make_algebra("n", "Sn")
    >>> res = forward_matrix_bsplit(A("Sn^2 - Sn - 1"), 10)
    >>> res.apply([0, 1])
    [55, 89]
    """
    if not isinstance(n, int) or n < 0:
        raise OreDomainError("n must be a nonnegative integer")
    rec = _integer_recurrence(L)
    r = len(rec) - 1
    if r == 0:
        raise OreDomainError("an operator of order 0 has no companion matrix")
    if n == 0:
        return BsplitResult(tuple(tuple(int(i == j) for j in range(r)) for i in range(r)), 1)
    P, Q = _product(rec, 0, n)
    g = Q
    for i in range(r):
        for j in range(r):
            g = g.gcd(P[i, j])
    if Q < 0:
        g = -g
    rows = tuple(tuple(int(P[i, j] / g) for j in range(r)) for i in range(r))
    return BsplitResult(rows, int(Q / g))


def decimal_digits(value, digits):
    """Correctly rounded decimal expansion of a rational with ``digits`` decimals."""
    value = QQ(value)
    scaled = value * fmpz(10) ** digits + fmpq(1, 2)
    k = int(scaled.floor())
    sign = "-" if k < 0 else ""
    k = abs(k)
    s = str(k).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return "%s%s.%s" % (sign, s[:-digits], s[-digits:])
