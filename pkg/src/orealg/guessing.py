"""
Guessing recurrences and differential equations from finitely many terms.

For an order ``r`` and degree ``d`` the unknowns are the ``(r+1)(d+1)``
coefficients ``c_ij`` of ``sum c_ij n^j Sn^i`` (or ``x^j Dx^i``).  Each usable
term of the data contributes one linear equation.  The point ``(r, d)`` is
admissible when ``(r+1)(d+2) + ensure <= N``, which leaves at least
``ensure + 1`` more equations than unknowns.

:func:`guess` walks a path of points.  A point only needs a rank test, done
modulo a word-size prime.  After the first success it looks for the smallest
order that still has a solution (with the largest degree the data allows),
then for the smallest degree at that order, and only then solves exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from flint import fmpq_mat, fmpz, fmpz_mat, nmod_mat

from .algebra import Kind, OreAlgebra, OrePoly, make_algebra
from .arith import QQ, Poly
from .errors import InsufficientDataError, NoRelationError, OreDomainError, UnsupportedError
from .euclid import normalize

INF = math.inf

# 2^62 - 57; a rank drop modulo this prime is only ever a hint
_PRIME = 4611686018427387847


@dataclass(frozen=True)
class GuessOptions:
    """Search controls.  ``None`` bounds mean unbounded; ``cut=None`` means infinity."""

    path: tuple | None = None
    min_order: int = 0
    max_order: int | None = None
    min_degree: int = 0
    max_degree: int | None = None
    ensure: int = 0
    cut: int | None = None

    def __post_init__(self):
        for name in ("min_order", "min_degree", "ensure"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise OreDomainError("%s must be a nonnegative integer" % name)
        for name in ("max_order", "max_degree", "cut"):
            v = getattr(self, name)
            if v is not None and (not isinstance(v, int) or v < 0):
                raise OreDomainError("%s must be a nonnegative integer or None" % name)
        if self.cut is not None and self.ensure > self.cut:
            raise OreDomainError("need 0 <= ensure <= cut")
        if self.path is not None:
            object.__setattr__(self, "path", tuple((int(r), int(d)) for r, d in self.path))

    def admits(self, r, d):
        if r < self.min_order or (self.max_order is not None and r > self.max_order):
            return False
        if d < self.min_degree or (self.max_degree is not None and d > self.max_degree):
            return False
        return True


@dataclass(frozen=True)
class GuessReport:
    operator: OrePoly
    point: tuple      # the path point that first succeeded
    order: int
    degree: int
    terms_used: int
    margin: int       # equations minus unknowns at the returned (order, degree)


# --------------------------------------------------------------------------
# linear systems
# --------------------------------------------------------------------------


def _algebra(kind):
    if isinstance(kind, OreAlgebra):
        if kind.kind not in (Kind.S, Kind.D) or kind.symbolic_q:
            raise UnsupportedError("guessing supports S and D algebras over Q")
        return kind.poly_algebra()
    k = kind if isinstance(kind, Kind) else Kind(str(kind).upper())
    if k is Kind.S:
        return make_algebra("n", "Sn")
    if k is Kind.D:
        return make_algebra("x", "Dx")
    raise UnsupportedError("guessing supports kinds S and D, not %s" % k.value)


def _integer_data(data):
    vals = [QQ(v) for v in data]
    den = fmpz(1)
    for v in vals:
        den = den.lcm(v.q)
    return [int(v.p * (den // v.q)) for v in vals]


def _rows(ints, kind, r, d, nterms):
    """Equations for the unknowns ``c_ij`` (column ``i*(d+1) + j``)."""
    rows = []
    if kind is Kind.S:
        for n in range(nterms - r):
            pw = [n ** j for j in range(d + 1)]
            row = []
            for i in range(r + 1):
                a = ints[n + i]
                row.extend(a * p for p in pw)
            rows.append(row)
    else:
        # coefficient of x^m in x^j Dx^i f is a_{m-j+i} (m-j+1)...(m-j+i)
        for m in range(nterms - r):
            row = []
            for i in range(r + 1):
                for j in range(d + 1):
                    k = m - j
                    if k < 0:
                        row.append(0)
                    else:
                        row.append(ints[k + i] * math.perm(k + i, i))
            rows.append(row)
    return rows


def _has_kernel_mod_p(rows, ncols):
    if len(rows) < ncols:
        return True
    M = nmod_mat([[v % _PRIME for v in row] for row in rows], _PRIME)
    return M.rank() < ncols


def _exact_kernel(rows, ncols):
    """Reduced echelon basis of the rational kernel, as primitive integer vectors."""
    X, nullity = fmpz_mat(rows).nullspace()
    if not nullity:
        return []
    basis = fmpq_mat(fmpz_mat([[X[i, j] for i in range(ncols)] for j in range(nullity)])).rref()[0]
    out = []
    for k in range(nullity):
        v = [basis[k, j] for j in range(ncols)]
        den = 1
        for c in v:
            den = math.lcm(den, int(c.q))
        iv = [int(c.p) * (den // int(c.q)) for c in v]
        g = math.gcd(*iv)
        out.append([c // g for c in iv])
    return out


def _operator(A, vec, r, d):
    cs = [Poly(vec[i * (d + 1):(i + 1) * (d + 1)]) for i in range(r + 1)]
    return OrePoly(A, cs)


def _terms_for(N, r, d, cut):
    need = (r + 1) * (d + 2)
    return N if cut is None else min(N, need + cut)


def _check_point(N, r, d, ensure):
    if r < 0 or d < 0:
        raise OreDomainError("order and degree must be nonnegative")
    if (r + 1) * (d + 2) + ensure > N:
        raise InsufficientDataError(
            "point (%d, %d) needs %d terms, %d given" % (r, d, (r + 1) * (d + 2) + ensure, N))


def guess_raw(data, kind, r, d, ensure=0, cut=None):
    """All operators of order ``<= r`` and degree ``<= d`` fitting the data.

    Returns a basis of the solution space of the linear system (possibly
    empty).  Raises :class:`InsufficientDataError` when ``(r+1)(d+2) +
    ensure > len(data)``.

    >>> print(guess_raw([0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55], "S", 2, 0)[0])
    Sn^2 - Sn - 1
    """
    if cut is not None and ensure > cut:
        raise OreDomainError("need 0 <= ensure <= cut")
    A = _algebra(kind)
    N = len(data)
    _check_point(N, r, d, ensure)
    ints = _integer_data(data)
    rows = _rows(ints, A.kind, r, d, _terms_for(N, r, d, cut))
    ops = []
    for vec in _exact_kernel(rows, (r + 1) * (d + 1)):
        L = _operator(A, vec, r, d)
        if L.leading_coefficient().lc() < 0:
            L = -L
        ops.append(L)
    return ops


# --------------------------------------------------------------------------
# search
# --------------------------------------------------------------------------


def _max_degree(N, r, ensure):
    return (N - ensure) // (r + 1) - 2


def default_path(N, opts):
    """Points ``(r, d)`` with ``r = 1, 2, 4, ...`` and the largest admissible ``d``."""
    orders = []
    r = 1
    while _max_degree(N, r, opts.ensure) >= 0:
        if opts.max_order is not None and r > opts.max_order:
            # finish on max_order itself when it falls between two powers of two
            if opts.max_order > (orders[-1] if orders else 0):
                orders.append(opts.max_order)
            break
        orders.append(r)
        r *= 2
    out = []
    for r in orders:
        d = _max_degree(N, r, opts.ensure)
        if opts.max_degree is not None:
            d = min(d, opts.max_degree)
        if d >= 0 and opts.admits(r, d):
            out.append((r, d))
    return out


def _size(L):
    return sum(c.degree() + 1 for c in L.coefficients() if c), sum(
        int(v.p).bit_length() + int(v.q).bit_length() for c in L.coefficients() for v in c.coeffs())


def _verify(ints, kind, L, r, d):
    vec = []
    cs = L.coefficients()
    for i in range(r + 1):
        c = cs[i] if i < len(cs) else Poly.zero()
        vec.extend(QQ(c[j]) for j in range(d + 1))
    for row in _rows(ints, kind, r, d, len(ints)):
        if sum((a * v for a, v in zip(row, vec) if a), QQ(0)) != 0:
            return False
    return True


def _solve_at(A, ints, r, d, opts):
    N = len(ints)
    rows = _rows(ints, A.kind, r, d, _terms_for(N, r, d, opts.cut))
    ncols = (r + 1) * (d + 1)
    cands = []
    for vec in _exact_kernel(rows, ncols):
        L = normalize(_operator(A, vec, r, d))
        if L.order() == r and _verify(ints, A.kind, L, r, d):
            cands.append(L)
    if not cands:
        return None
    return min(cands, key=_size), len(rows) - ncols


def _refine(A, ints, ri, opts):
    """Smallest order ``<= ri`` with a relation, then its smallest degree."""
    N = len(ints)
    for r in range(1, ri + 1):
        dmax = _max_degree(N, r, opts.ensure)
        if dmax < 0:
            continue

        def kernel(d):
            rows = _rows(ints, A.kind, r, d, _terms_for(N, r, d, opts.cut))
            return _has_kernel_mod_p(rows, (r + 1) * (d + 1))

        if not kernel(dmax):
            continue
        lo, hi = 0, dmax
        while lo < hi:
            mid = (lo + hi) // 2
            if kernel(mid):
                hi = mid
            else:
                lo = mid + 1
        for d in range(lo, dmax + 1):
            found = _solve_at(A, ints, r, d, opts)
            if found is not None:
                return found[0], r, d, found[1]
    return None


def guess_report(data, kind="S", opts=None, **kwargs):
    """Like :func:`guess` but returns a :class:`GuessReport`."""
    if opts is None:
        opts = GuessOptions(**kwargs)
    elif kwargs:
        raise TypeError("pass either opts or keyword options, not both")
    A = _algebra(kind)
    if not data:
        raise InsufficientDataError("no data")
    ints = _integer_data(data)
    N = len(ints)
    if not any(ints):
        raise NoRelationError("no-relation", "all data terms are zero; every operator fits")
    if opts.path is not None:
        path = [(r, d) for r, d in opts.path
                if opts.admits(r, d) and (r + 1) * (d + 2) + opts.ensure <= N]
    else:
        path = default_path(N, opts)
    if not path:
        raise NoRelationError("no-admissible-point",
                              "no admissible (order, degree) point for %d terms and these options" % N)
    for r, d in path:
        rows = _rows(ints, A.kind, r, d, _terms_for(N, r, d, opts.cut))
        if not _has_kernel_mod_p(rows, (r + 1) * (d + 1)):
            continue
        found = _refine(A, ints, r, opts)
        if found is not None:
            L, rr, dd, margin = found
            return GuessReport(L, (r, d), rr, dd, _terms_for(N, rr, dd, opts.cut), margin)
    raise NoRelationError("no-relation", "no relation found along the path %s" % (path,))


def guess(data, kind="S", opts=None, **kwargs):
    """Operator of small order fitting ``data``.

    ``kind`` is ``"S"`` (the data are the terms of a sequence) or ``"D"``
    (the data are power series coefficients), or an algebra of one of these
    kinds.  Options go in ``opts`` or as keywords (see
    :class:`GuessOptions`).  The returned order may be below ``min_order``
    and the degree above ``max_degree``.

    >>> print(guess([0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]))
    Sn^2 - Sn - 1
    """
    return guess_report(data, kind, opts, **kwargs).operator
