"""Truncated power series ``c0 + c1*x + ... + O(x^prec)`` with rational coefficients."""

from __future__ import annotations

import math

from flint import fmpq

from .arith import QQ, Poly, RatFun, format_rational, is_scalar
from .errors import OreDomainError


class Series:
    """A power series known modulo ``x^prec``."""

    __slots__ = ("c", "prec")

    def __init__(self, coeffs, prec=None):
        cs = [QQ(c) for c in coeffs]
        if prec is None:
            prec = len(cs)
        cs = cs[:prec]
        cs += [fmpq(0)] * (prec - len(cs))
        self.c = tuple(cs)
        self.prec = prec

    @classmethod
    def from_function(cls, f, prec):
        """Expand a polynomial or rational function (regular at 0) to ``prec`` terms."""
        if isinstance(f, Poly):
            return cls(f.coeffs()[:prec], prec)
        if is_scalar(f):
            return cls([f], prec)
        if isinstance(f, RatFun):
            num = cls(f.num.coeffs()[:prec], prec)
            return num * _inverse(f.den, prec)
        raise TypeError("cannot expand %r" % (f,))

    def __getitem__(self, i):
        return self.c[i]

    def __len__(self):
        return self.prec

    def coeffs(self):
        return list(self.c)

    def valuation(self):
        for i, c in enumerate(self.c):
            if c:
                return i
        return math.inf

    def is_zero(self):
        return not any(self.c)

    def truncate(self, prec):
        return Series(self.c[:prec], min(prec, self.prec))

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if is_scalar(other):
            return Series([other], self.prec)
        if isinstance(other, (Poly, RatFun)):
            return Series.from_function(other, self.prec)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = min(self.prec, o.prec)
        return Series([a + b for a, b in zip(self.c[:p], o.c[:p])], p)

    __radd__ = __add__

    def __neg__(self):
        return Series([-a for a in self.c], self.prec)

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
        if isinstance(other, Poly):
            # multiplying by x^k raises the precision by k
            v = other.valuation()
            if v == math.inf:
                return Series([], self.prec)
            prec = self.prec + v
            pc = other.coeffs()
            out = [fmpq(0)] * prec
            for i, a in enumerate(pc):
                if not a or i >= prec:
                    continue
                for j, b in enumerate(self.c):
                    if i + j >= prec:
                        break
                    out[i + j] += a * b
            return Series(out, prec)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = min(self.prec, o.prec)
        out = [fmpq(0)] * p
        for i, a in enumerate(self.c[:p]):
            if not a:
                continue
            for j in range(p - i):
                out[i + j] += a * o.c[j]
        return Series(out, p)

    __rmul__ = __mul__

    def derivative(self):
        return Series([i * c for i, c in enumerate(self.c)][1:], max(self.prec - 1, 0))

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.prec == other.prec and self.c == other.c
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c[:self.prec]

    def __hash__(self):
        return hash((self.c, self.prec))

    def to_str(self, var="x"):
        terms = []
        for i, c in enumerate(self.c):
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
            a = abs(c)
            body = format_rational(a) if not mono else (mono if a == 1 else "%s*%s" % (format_rational(a), mono))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        big_o = "O(%s)" % ("1" if self.prec == 0 else var if self.prec == 1 else "%s^%d" % (var, self.prec))
        if not terms:
            return big_o
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += " %s %s" % (sign, body)
        return out + " + " + big_o

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "Series(%s)" % self.to_str()


def _inverse(den, prec):
    d = den.coeffs()
    if not d or not d[0]:
        raise OreDomainError("rational function has a pole at 0; not a power series")
    inv0 = 1 / d[0]
    out = [fmpq(0)] * prec
    for n in range(prec):
        s = fmpq(1) if n == 0 else fmpq(0)
        for k in range(1, min(n, len(d) - 1) + 1):
            s -= d[k] * out[n - k]
        out[n] = s * inv0
    return Series(out, prec)
