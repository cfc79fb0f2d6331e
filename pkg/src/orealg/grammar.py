"""
Operator text: parser and printer.

Grammar (whitespace is insignificant, implicit multiplication is rejected)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' INTEGER]
    atom   := INTEGER | NAME | '(' expr ')'

NAME is the base variable, the generator or ``q``.  Division is allowed
between coefficients only; over a polynomial coefficient domain the divisor
must be a nonzero constant.
"""

from __future__ import annotations

import re

from .arith import QQ, RatFun, format_rational, is_scalar
from .errors import ConversionError, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], pos, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("INT", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("NAME", m.group(2), start))
        else:
            op = m.group(3)
            toks.append(("OP", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(("END", None, n))
    return toks


class _Parser:
    """Recursive descent over an abstract value domain.

    ``ctx`` supplies ``name(name, pos)``, ``integer(n)`` and
    ``divide(a, b, pos)``; values must support ``+ - *`` and ``**``.
    """

    def __init__(self, text, ctx):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "END":
            self.error("empty expression")
        v = self.expr()
        t = self.peek()
        if t[0] != "END":
            self.error("unexpected %s" % _describe(t))
        return v

    def expr(self):
        t = self.peek()
        neg = False
        if t[0] == "OP" and t[1] in "+-":
            self.take()
            neg = t[1] == "-"
        v = self.term()
        if neg:
            v = -v
        while True:
            t = self.peek()
            if t[0] == "OP" and t[1] in "+-":
                self.take()
                w = self.term()
                v = v + w if t[1] == "+" else v - w
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t[0] == "OP" and t[1] == "*":
                self.take()
                v = v * self.factor()
            elif t[0] == "OP" and t[1] == "/":
                self.take()
                v = self.ctx.divide(v, self.factor(), t[2])
            elif t[0] in ("INT", "NAME") or (t[0] == "OP" and t[1] == "("):
                self.error("missing operator (implicit multiplication is not allowed)")
            else:
                return v

    def factor(self):
        v = self.atom()
        t = self.peek()
        if t[0] == "OP" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "INT":
                self.error("exponent must be a nonnegative integer", e)
            v = v ** e[1]
            t = self.peek()
            if t[0] == "OP" and t[1] == "^":
                self.error("chained exponents are ambiguous; use parentheses")
        return v

    def atom(self):
        t = self.take()
        if t[0] == "INT":
            return self.ctx.integer(t[1])
        if t[0] == "NAME":
            return self.ctx.name(t[1], t[2])
        if t[0] == "OP" and t[1] == "(":
            v = self.expr()
            c = self.take()
            if c[0] != "OP" or c[1] != ")":
                self.error("expected ')' but found %s" % _describe(c), c)
            return v
        self.error("unexpected %s" % _describe(t), t)


def _describe(tok):
    if tok[0] == "END":
        return "end of input"
    return "%r" % (tok[1],)


class _OperatorContext:
    def __init__(self, A, text):
        self.A = A
        self.R = A.ratfun_algebra()
        self.text = text

    def integer(self, n):
        return self.A([n])

    def name(self, s, pos):
        A = self.A
        if s == A.base_var:
            return A([A.x])
        if s == A.gen_name:
            return A.gen()
        if s == "q" and A.q is not None:
            return A([A.constant(A.q)])
        raise ParseError("unknown symbol %r" % s, pos, self.text)

    def divide(self, a, b, pos):
        if b.order() != 0:
            if b.is_zero():
                raise ParseError("division by zero", pos, self.text)
            raise ParseError("only coefficients may be divided", pos, self.text)
        if a.order() > 0:
            raise ParseError("only coefficients may be divided", pos, self.text)
        num, den = a[0], b[0]
        if self.A.is_poly_domain:
            if den.degree() > 0:
                raise ParseError("division by a polynomial needs the rational-function domain", pos, self.text)
            return self.A([num * (1 / den.lc())]) if a else a
        return self.A([num / den])


def parse(text, A):
    """Parse operator text in the algebra ``A``.

    >>> from orealg import make_algebra
    >>> A = make_algebra("n", "Sn")
    >>> print(parse("Sn^2 - Sn - 1", A))
    Sn^2 - Sn - 1
    """
    if not isinstance(text, str):
        raise TypeError("parse expects a string")
    return _Parser(text, _OperatorContext(A, text)).parse()


def format_coefficient(c, var):
    if is_scalar(c):
        return format_rational(QQ(c))
    return c.to_str(var)


def _atomic(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and (ch in "/" or (ch in "+-" and i > 0)):
            return False
    return True


def _rational_constant(c):
    if is_scalar(c):
        return True
    if isinstance(c, RatFun):
        if not c.is_constant():
            return False
        c = c.num
    if c.degree() > 0:
        return False
    return not c or not isinstance(c[0], RatFun) or c[0].is_constant()


def format_operator(L):
    """Render ``L`` highest power first, e.g. ``(x+1)*Dx^2 - x*Dx + 1``."""
    A = L.parent
    cs = L.coefficients()
    if not cs:
        return "0"
    if len(cs) == 1:
        return format_coefficient(cs[0], A.base_var)
    out = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if not c:
            continue
        s = format_coefficient(c, A.base_var)
        neg = False
        scalar = _rational_constant(c)
        if s.startswith("-") and (scalar or _atomic(s[1:])):
            neg, s = True, s[1:]
        if not scalar and not _atomic(s):
            s = "(%s)" % s
        if i == 0:
            body = s
        else:
            g = A.gen_name if i == 1 else "%s^%d" % (A.gen_name, i)
            body = g if s == "1" else "%s*%s" % (s, g)
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --------------------------------------------------------------------------
# multivariate polynomials p(y0, y1, ...) for annihilator_of_polynomial
# --------------------------------------------------------------------------


class MPoly:
    """Sparse polynomial in a few variables with base-ring coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.terms = {e: c for e, c in terms.items() if c}
        self.nvars = nvars

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly({(0,) * self.nvars: other}, self.nvars)

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t[e] + c if e in t else c
        return MPoly(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                t[e] = t[e] + v if e in t else v
        return MPoly(t, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = MPoly({(0,) * self.nvars: self._one()}, self.nvars)
        for _ in range(k):
            r = r * self
        return r

    def _one(self):
        for c in self.terms.values():
            return c ** 0
        return 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)


class _PolyContext:
    def __init__(self, names, A, text):
        self.names = list(names)
        self.A = A
        self.text = text

    def _const(self, c):
        return MPoly({(0,) * len(self.names): self.A.base(c)}, len(self.names))

    def integer(self, n):
        return self._const(n)

    def name(self, s, pos):
        if s in self.names:
            e = [0] * len(self.names)
            e[self.names.index(s)] = 1
            return MPoly({tuple(e): self.A.base(1)}, len(self.names))
        if s == self.A.base_var:
            return self._const(self.A.x)
        if s == "q" and self.A.q is not None:
            return self._const(self.A.constant(self.A.q))
        raise ParseError("unknown symbol %r" % s, pos, self.text)

    def divide(self, a, b, pos):
        if not b.is_constant() or not b.terms:
            raise ParseError("divisor must be a nonzero constant", pos, self.text)
        c = next(iter(b.terms.values()))
        if c.degree() > 0:
            raise ParseError("divisor must be a nonzero constant", pos, self.text)
        inv = 1 / c.lc() if hasattr(c, "lc") else 1 / c
        return MPoly({e: v * inv for e, v in a.terms.items()}, a.nvars)


def parse_polynomial(text, names, A):
    """Parse ``text`` as a polynomial in ``names`` with coefficients in ``A``'s base ring.

    Returns an :class:`MPoly` whose exponent tuples follow ``names``.
    """
    for s in names:
        if s in (A.base_var, A.gen_name, "q"):
            raise ConversionError("variable name %r clashes with the algebra" % s)
    return _Parser(text, _PolyContext(names, A, text)).parse()
