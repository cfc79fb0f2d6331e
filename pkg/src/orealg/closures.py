"""
Closure properties of D-finite functions and P-recursive sequences.

Every construction follows the same pattern.  A solution ``f`` of ``L``
(order r) is modelled by symbols ``y_0, ..., y_{r-1}`` standing for
``f, X f, ..., X^{r-1} f``; the generator acts on them through ``L``
(``X y_{r-1} = -sum(a_k/a_r * y_k)``).  The target object is a polynomial in
these symbols with rational-function coefficients.  Applying ``X`` over and
over and stopping at the first K(x)-linear dependence gives the annihilator
of minimal order for the generic object.

Only the derivation (D) and shift (S) kinds are supported.
"""

from __future__ import annotations

import re

from .algebra import Kind, OrePoly
from .arith import to_ratfun
from .errors import ConversionError, OreDomainError, UnsupportedError
from .euclid import normalize, quo_rem
from .grammar import MPoly, parse_polynomial


def _check_kind(A):
    if A.kind not in (Kind.D, Kind.S):
        raise UnsupportedError("closure properties need a D or S algebra, not %s" % A.kind.value)


class _Space:
    """Polynomials in the symbols of one or more blocks (one block per operator)."""

    def __init__(self, ops, chain=None):
        A = ops[0].parent
        self.kind = A.kind
        self.K = A.ratfun_algebra()
        self.offsets = []
        self.rules = []
        n = 0
        for L in ops:
            if not L or L.order() < 1:
                raise OreDomainError("operators of positive order are required")
            cs = [to_ratfun(c) for c in L.coefficients()]
            r = len(cs) - 1
            self.offsets.append(n)
            lead = cs[-1]
            for i in range(r):
                if i < r - 1:
                    rule = {n + i + 1: self.K.base(1)}
                else:
                    rule = {n + k: -cs[k] / lead for k in range(r) if cs[k]}
                if chain is not None:
                    # d/dx f^(i)(a(x)) = a'(x) f^(i+1)(a(x))
                    rule = {w: c * chain for w, c in rule.items()}
                self.rules.append(rule)
            n += r
        self.nvars = n

    def var(self, block, i):
        e = [0] * self.nvars
        e[self.offsets[block] + i] = 1
        return {tuple(e): self.K.base(1)}

    def apply_x(self, obj, times=1):
        for _ in range(times):
            obj = self._derive(obj) if self.kind is Kind.D else self._shift(obj)
        return obj

    def _derive(self, obj):
        out = {}
        for m, c in obj.items():
            dc = c.derivative()
            if dc:
                _acc(out, m, dc)
            for v, e in enumerate(m):
                if not e:
                    continue
                base = list(m)
                base[v] -= 1
                ce = c * e
                for w, a in self.rules[v].items():
                    mm = list(base)
                    mm[w] += 1
                    _acc(out, tuple(mm), ce * a)
        return out

    def _shift(self, obj):
        out = {}
        for m, c in obj.items():
            term = {(0,) * self.nvars: c.shift(1)}
            for v, e in enumerate(m):
                for _ in range(e):
                    term = _mul(term, self.rules[v], self.nvars)
            for mm, cc in term.items():
                _acc(out, mm, cc)
        return out


def _acc(d, m, c):
    if m in d:
        s = d[m] + c
        if s:
            d[m] = s
        else:
            del d[m]
    elif c:
        d[m] = c


def _mul(poly, lin, nvars):
    out = {}
    for m, c in poly.items():
        for w, a in lin.items():
            mm = list(m)
            mm[w] += 1
            _acc(out, tuple(mm), c * a)
    return out


def _poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            _acc(out, tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
    return out


def _minimal_annihilator(space, obj, A, step=1):
    """First linear dependence among obj, X obj, X^2 obj, ... as a normalized operator.

    With ``step = u`` the powers ``X^u`` are used instead of ``X``.
    """
    K = space.K
    one, zero = K.base(1), K.base(0)
    basis = []  # (pivot monomial, vector with pivot entry 1, combination)
    v = dict(obj)
    k = 0
    while True:
        combo = [zero] * k + [one]
        w = dict(v)
        for piv, b, cb in basis:
            f = w.get(piv)
            if f is None:
                continue
            for m, c in b.items():
                _acc(w, m, -f * c)
            for i, c in enumerate(cb):
                if c:
                    combo[i] = combo[i] - f * c
        if not w:
            return normalize(OrePoly(K, combo, _trusted=True)) if A is not None else combo
        piv = min(w, key=lambda m: (w[m].degree(), m))
        inv = w[piv].inverse()
        basis.append((piv, {m: c * inv for m, c in w.items()}, [c * inv for c in combo]))
        v = space.apply_x(v, step)
        k += 1


def _same_algebra(L, M):
    if not L.parent.compatible(M.parent):
        raise ConversionError("operators live in incompatible algebras")


def symmetric_product(L, M):
    """Annihilator of ``f*g`` for ``L(f) = 0`` and ``M(g) = 0``."""
    _same_algebra(L, M)
    _check_kind(L.parent)
    sp = _Space([L, M])
    return _minimal_annihilator(sp, _poly_mul(sp.var(0, 0), sp.var(1, 0)), L.parent)


def symmetric_power(L, n):
    """Annihilator of ``f^n`` for ``L(f) = 0``."""
    _check_kind(L.parent)
    if not isinstance(n, int) or n < 1:
        raise OreDomainError("symmetric_power needs a positive integer exponent")
    sp = _Space([L])
    y = sp.var(0, 0)
    obj = y
    for _ in range(n - 1):
        obj = _poly_mul(obj, y)
    return _minimal_annihilator(sp, obj, L.parent)


def annihilator_of_associate(L, M):
    """Annihilator of ``M(f)`` for ``L(f) = 0``; ``M`` is first reduced modulo ``L``."""
    if not isinstance(M, OrePoly):
        M = L.parent([M])
    _same_algebra(L, M)
    _check_kind(L.parent)
    _, R = quo_rem(M, L)
    sp = _Space([L])
    obj = {}
    for i, c in enumerate(R.coefficients()):
        if c:
            for m, one in sp.var(0, i).items():
                _acc(obj, m, to_ratfun(c) * one)
    if not obj:
        return normalize(L.parent.one())
    return _minimal_annihilator(sp, obj, L.parent)


_INDEXED = re.compile(r"\b([A-Za-z_]+?)(\d+)\b")


def _infer_names(text, A):
    found = {}
    for m in _INDEXED.finditer(text):
        name = m.group(0)
        if name in (A.base_var, A.gen_name):
            continue
        found.setdefault(m.group(1), set()).add(int(m.group(2)))
    if not found:
        return []
    if len(found) > 1:
        raise OreDomainError("ambiguous variable prefixes %s; pass names explicitly" % sorted(found))
    prefix, idx = next(iter(found.items()))
    return ["%s%d" % (prefix, i) for i in range(max(idx) + 1)]


def annihilator_of_polynomial(L, p, names=None):
    """Annihilator of ``p(f, X f, X^2 f, ...)`` for ``L(f) = 0``.

    ``p`` is a string such as ``"y1^2 - y0*y2"`` (variables ``y_i`` stand
    for ``X^i f``; any indexed prefix works) or an :class:`~orealg.grammar.MPoly`.
    Variables of index at least ``order(L)`` are reduced through ``L``.

    >>> from orealg import make_algebra
    >>> A = make_algebra("n", "Sn")
    >>> print(annihilator_of_polynomial(A("Sn^2 - Sn - 1"), "y1^2 - y0*y2"))
    Sn + 1
    """
    A = L.parent
    _check_kind(A)
    if isinstance(p, str):
        if names is None:
            names = _infer_names(p, A)
        p = parse_polynomial(p, names, A)
    if not isinstance(p, MPoly):
        raise TypeError("p must be a string or an MPoly")
    if not p.terms:
        raise OreDomainError("p must be nonzero")
    sp = _Space([L])
    # X^j y_0 for every index used
    need = max((i for e in p.terms for i, k in enumerate(e) if k), default=-1)
    powers = [sp.var(0, 0)]
    for _ in range(need):
        powers.append(sp.apply_x(powers[-1]))
    one_m = (0,) * sp.nvars
    obj = {}
    for e, c in p.terms.items():
        term = {one_m: to_ratfun(c)}
        for i, k in enumerate(e):
            for _ in range(k):
                term = _poly_mul(term, powers[i])
        for m, v in term.items():
            _acc(obj, m, v)
    if not obj:
        raise OreDomainError("p reduces to zero modulo L")
    return _minimal_annihilator(sp, obj, A)
