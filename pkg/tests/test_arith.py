from fractions import Fraction

import pytest
from flint import fmpq
from hypothesis import given
from hypothesis import strategies as st

from orealg import QQ, Poly, RatFun, nullspace, rank
from orealg.arith import poly_divrem, poly_gcd
from orealg.errors import OreDomainError

from oracles import rank as sympy_rank
from strategies import nonzero_polys, polys

x = Poly.gen()


def test_qq_accepts_exact_inputs():
    assert QQ("-7/3") == fmpq(-7, 3)
    assert QQ(Fraction(3, 6)) == fmpq(1, 2)
    assert QQ(5) == 5
    with pytest.raises(TypeError):
        QQ(0.5)


@pytest.mark.parametrize("a, b, q, r", [
    (x**2 - 1, x - 1, x + 1, Poly(0)),
    (x**2, x, x, Poly(0)),
    (x**3 + 2*x + 5, x**2 + 1, x, x + 5),
])
def test_divrem_examples(a, b, q, r):
    assert poly_divrem(a, b) == (q, r)


def test_divrem_by_zero():
    with pytest.raises(OreDomainError):
        poly_divrem(x, Poly(0))


def test_gcd_examples():
    assert poly_gcd(x**2 - 1, x - 1) == x - 1
    assert poly_gcd(Poly(0), 2*x + 4) == x + 2
    assert poly_gcd(x**2 + 3*x + 2, x**2 + 4*x + 3) == x + 1


def test_nullspace_examples():
    assert nullspace([[1, 0], [0, 1]]) == []
    assert nullspace([[1, 1]]) == [[1, -1]]
    ones = [[1, 1, 1]] * 3
    basis = nullspace(ones)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0


def test_zero_poly_degree_is_minus_infinity():
    assert Poly(0).degree() == float("-inf")
    assert Poly(0).degree() < Poly(3).degree() == 0


def test_ratfun_normalizes():
    r = RatFun(2*x + 2, 4*x**2 + 4*x)
    assert r.num == Poly([fmpq(1, 2)]) and r.den == x
    with pytest.raises((ZeroDivisionError, OreDomainError)):
        RatFun(x, Poly(0))


@given(polys(12).map(lambda p: p), nonzero_polys(6))
def test_divrem_reconstructs(a, b):
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree() < b.degree()


@given(nonzero_polys(4), nonzero_polys(4), nonzero_polys(4))
def test_gcd_divides_and_scales(a, b, c):
    g = poly_gcd(a, b)
    assert g.lc() == 1
    assert poly_divrem(a, g)[1] == 0 and poly_divrem(b, g)[1] == 0
    assert poly_gcd(a * b, a * c) == a.monic() * poly_gcd(b, c)


matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices)
def test_nullspace_exact_against_sympy(M):
    ncols = len(M[0])
    basis = nullspace(M)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
    assert len(basis) == ncols - sympy_rank(M)
    assert rank(M) == sympy_rank(M)


@given(st.lists(st.lists(st.fractions(max_denominator=7).filter(lambda f: abs(f) < 20), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_nullspace_rational_entries(M):
    basis = nullspace(M)
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in M)
    assert len(basis) == 3 - sympy_rank(M)


@given(polys(3), nonzero_polys(3), polys(3), nonzero_polys(3))
def test_ratfun_field_ops_keep_invariants(a, b, c, d):
    f, g = RatFun(a, b), RatFun(c, d)
    for h in (f + g, f - g, f * g) + ((f / g,) if g else ()):
        assert h.den.lc() == 1
        assert poly_gcd(h.num, h.den) == 1 or not h.num
        if not h.num:
            assert h.den == 1
    assert (f + g) - g == f
    if g:
        assert (f / g) * g == f
