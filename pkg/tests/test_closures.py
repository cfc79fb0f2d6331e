import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from orealg import (QQ, Series, annihilator_of_associate, annihilator_of_polynomial, apply,
                    guess_raw, lclm, make_algebra, normalize, symmetric_power, symmetric_product,
                    to_list)

from oracles import X, fibonacci, series_coeffs
from strategies import nonzero_polys, recurrences

D = make_algebra("x", "Dx")
S = make_algebra("n", "Sn")
fib = S("Sn^2 - Sn - 1")


def zero_series(L, expr, n=15):
    out = apply(L, Series(series_coeffs(expr, n)))
    return out.is_zero()


def test_symmetric_product_examples():
    L = symmetric_product(D("Dx - 1"), D("Dx - 1"))
    assert L == D("Dx - 2")
    assert zero_series(L, sp.exp(2 * X))
    M = S("(n+1)*Sn^2 + n*Sn - 3")
    assert symmetric_product(M, S("Sn - 1")) == normalize(M)
    assert symmetric_product(D("x*Dx^2 - 1"), D("Dx")) == normalize(D("x*Dx^2 - 1"))
    P = symmetric_product(fib, S("Sn + 1"))
    seq = [(-1) ** k * f for k, f in enumerate(fibonacci(20))]
    assert apply(P, seq) == [0] * (20 - P.order())


def test_symmetric_power_examples():
    P = symmetric_power(fib, 2)
    assert P == S("Sn^3 - 2*Sn^2 - 2*Sn + 1")
    squares = [f * f for f in fibonacci(30)]
    assert any(normalize(g) == P for g in guess_raw(squares, "S", 3, 0))
    assert symmetric_power(D("Dx - 1"), 3) == D("Dx - 3")
    L = S("(n+2)*Sn^2 - n")
    assert symmetric_power(L, 1) == normalize(L)


def test_associate_examples():
    A = annihilator_of_associate(fib, S("Sn"))
    shifted = fibonacci(21)[1:]
    assert apply(A, shifted) == [0] * (20 - A.order())
    assert annihilator_of_associate(fib, S("1")) == fib
    B = annihilator_of_associate(D("Dx^2 + 1"), D("Dx"))
    assert B.order() == 2 and zero_series(B, -sp.sin(X))


def test_cassini():
    C = annihilator_of_polynomial(fib, "y1^2 - y0*y2")
    alt = [(-1) ** k for k in range(20)]
    assert apply(C, alt) == [0] * (20 - C.order())
    L1 = symmetric_power(annihilator_of_associate(fib, S("Sn")), 2)
    L2 = symmetric_product(annihilator_of_associate(fib, S("Sn^2")), fib)
    M = lclm(L1, L2)
    assert M.order() > C.order()
    assert apply(M, alt) == [0] * (20 - M.order())


def test_polynomial_examples():
    assert annihilator_of_polynomial(fib, "y0") == fib
    assert annihilator_of_polynomial(D("Dx - 1"), "y0^2") == D("Dx - 2")


def _terms(L, seed_vals, n=30):
    return to_list(L, seed_vals[:L.order()], n)


@settings(max_examples=100)
@given(recurrences(), recurrences(), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_product_witnesses(L, M, init):
    f, g = _terms(L, init), _terms(M, init[2:] + init[:2])
    P = symmetric_product(L, M)
    assert P.order() <= L.order() * M.order()
    h = [a * b for a, b in zip(f, g)]
    assert all(v == 0 for v in apply(P, h))
    assert symmetric_product(M, L) == P


@settings(max_examples=100)
@given(nonzero_polys(3), nonzero_polys(3))
def test_product_polynomial_witnesses(p, q):
    L = D([-p.derivative(), p])
    M = D([-q.derivative(), q])
    P = symmetric_product(L, M)
    assert apply(P, p * q) == 0


@settings(max_examples=100)
@given(recurrences(2, 1), st.integers(2, 3), st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_power_and_associate_witnesses(L, k, init):
    f = _terms(L, init)
    P = symmetric_power(L, k)
    assert all(v == 0 for v in apply(P, [QQ(a) ** k for a in f]))
    A = annihilator_of_associate(L, S("Sn + n"))
    g = [f[i + 1] + i * f[i] for i in range(len(f) - 1)]
    assert all(v == 0 for v in apply(A, g))


def test_generic_product_order():
    L = S("(n+1)*Sn^2 + 3*Sn - (2*n+5)")
    M = S("(n+4)*Sn^2 - n*Sn + 7")
    assert symmetric_product(L, M).order() == 4
