import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from orealg import (Poly, RatFun, Series, apply, lclm, make_algebra, polynomial_solutions,
                    power_series_solutions, rational_solutions)
from orealg.errors import OreDomainError

from oracles import X, coeff_expr, op_coeffs
from strategies import ALGEBRAS, nonzero_polys, operators, polys

D = make_algebra("x", "Dx")
S = make_algebra("n", "Sn")
x = Poly.gen()


def check(L, sols, rhs=()):
    for s in sols:
        lhs = apply(L, s.g)
        target = sum((c * f for c, f in zip(s.c, rhs)), Poly(0))
        assert RatFun(lhs) == RatFun(target) if not isinstance(lhs, RatFun) else lhs == RatFun(target)


def span_contains(sols, p):
    """Is ``p`` a constant-coefficient combination of the g's?"""
    gs = [s.g for s in sols]
    k = len(gs)
    cs = sp.symbols("c0:%d" % max(k, 1))
    expr = sum((c * coeff_expr(g) for c, g in zip(cs, gs)), sp.Integer(0)) - coeff_expr(p)
    eqs = sp.Poly(sp.together(expr).as_numer_denom()[0], X).all_coeffs()
    return bool(sp.solve(eqs, cs[:k], dict=True)) if k else p == 0


def test_paper_lclm_recovers_p_and_q():
    p = x**2 + 3 * x + 8
    q = x**3 - 7 * x + 5
    L = lclm(D([-p.derivative(), p]), D([-q.derivative(), q]))
    sols = polynomial_solutions(L)
    assert len(sols) == 2 and all(s.c == () for s in sols)
    check(L, sols)
    assert span_contains(sols, p) and span_contains(sols, q)


def test_paper_inhomogeneous_example():
    M = D("(2*x+3)*Dx^2 + (4*x+5)*Dx + (6*x+7)")
    rhs = [Poly(1), x, x**2, x**3]
    sols = polynomial_solutions(M, rhs)
    assert sols
    for s in sols:
        assert apply(M, s.g) == s.c[0] + s.c[1] * x + s.c[2] * x**2 + s.c[3] * x**3


def test_trivial_solutions():
    assert [s.g for s in polynomial_solutions(D("Dx"))] == [Poly(1)]
    assert [s.g for s in rational_solutions(D("Dx"))] == [Poly(1)]
    (s,) = rational_solutions(D("x*Dx + 1"))
    assert RatFun(s.g) == RatFun(Poly(1), x)
    (t,) = rational_solutions(S("(n+1)*Sn - n"))
    assert RatFun(t.g) == RatFun(Poly(1), x)
    assert apply(S("(n+1)*Sn - n"), t.g) == 0
    with pytest.raises(OreDomainError):
        polynomial_solutions(D("0"))


def test_power_series_examples():
    sols = power_series_solutions(D("Dx^2 + 2*x*Dx"), 10)
    assert sorted(str(s) for s in sols) == sorted([
        "1 + O(x^10)", "x - 1/3*x^3 + 1/10*x^5 - 1/42*x^7 + 1/216*x^9 + O(x^10)"])
    (e,) = power_series_solutions(D("Dx - 1"), 5)
    assert str(e) == "1 + x + 1/2*x^2 + 1/6*x^3 + 1/24*x^4 + O(x^5)"
    (m,) = power_series_solutions(D("x*Dx - 5"), 8)
    assert m.coeffs() == [0, 0, 0, 0, 0, 1, 0, 0]


def _dense_count(L, B):
    """Dimension of {g : deg g <= B, L(g) = 0} by a sympy linear system."""
    gs = sp.symbols("g0:%d" % (B + 1))
    g = sum(c * X ** i for i, c in enumerate(gs))
    cs = op_coeffs(L)
    if L.parent.kind.value == "D":
        expr = sum(c * sp.diff(g, X, i) for i, c in enumerate(cs))
    else:
        expr = sum(c * g.subs(X, X + i) for i, c in enumerate(cs))
    eqs = sp.Poly(sp.expand(expr), X).all_coeffs() if sp.expand(expr) != 0 else []
    A = sp.Matrix([[sp.Poly(e, *gs).coeff_monomial(v) for v in gs] for e in eqs]) if eqs else sp.zeros(1, B + 1)
    return B + 1 - A.rank()


@settings(max_examples=100)
@given(st.sampled_from(["D", "S"]).flatmap(
    lambda k: st.tuples(operators(ALGEBRAS[k], 1, 2), nonzero_polys(3), st.just(k))))
def test_polynomial_solutions_basis(args):
    M, p, kind = args
    A = ALGEBRAS[kind]
    base = A([-p.derivative(), p]) if kind == "D" else A([-p.shift(1), p])
    L = M * base if M else base
    sols = polynomial_solutions(L)
    check(L, sols)
    assert span_contains(sols, p)
    degs = [s.g.degree() for s in sols]
    assert degs == sorted(degs)
    # linear independence and completeness against a dense ansatz
    B = 12
    if max(degs) <= B:
        assert len(sols) == _dense_count(L, B)


@settings(max_examples=100)
@given(operators(ALGEBRAS["D"], 2, 2).filter(lambda L: L.order() >= 1), polys(2))
def test_homogeneous_inhomogeneous_consistency(L, f):
    hom = polynomial_solutions(L)
    zero = polynomial_solutions(L, [Poly(0)])
    assert [s.g for s in zero if s.g] == [s.g for s in hom]
    sols = polynomial_solutions(L, [f])
    check(L, sols, [f])


@settings(max_examples=100)
@given(nonzero_polys(3), nonzero_polys(2).filter(lambda q: q.degree() >= 1))
def test_rational_solutions_witness(p, q):
    # L = q*p*Dx - (q*p' - q'*p) has solution p/q
    L = D([-(q * p.derivative() - q.derivative() * p), q * p])
    sols = rational_solutions(L)
    check(L, sols)
    g = RatFun(p, q)
    assert any((RatFun(s.g) / g).is_constant() for s in sols)


@settings(max_examples=100)
@given(operators(ALGEBRAS["D"], 1, 2), nonzero_polys(3))
def test_series_contain_polynomial_solutions(M, p):
    base = D([-p.derivative(), p])
    L = M * base if M else base
    n = 12
    series = power_series_solutions(L, n)
    for s in series:
        out = apply(L, s)
        assert out.is_zero()
    target = Series(p.coeffs(), n)
    rows = [s.coeffs() for s in series]
    M_ = sp.Matrix([[sp.Rational(int(c.p), int(c.q)) for c in r] for r in rows]) if rows else sp.zeros(0, n)
    t = sp.Matrix([[sp.Rational(int(c.p), int(c.q)) for c in target.coeffs()]])
    assert M_.col_join(t).rank() == M_.rank()
