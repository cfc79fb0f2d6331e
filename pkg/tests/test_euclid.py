from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from orealg import (QQ, OreDomainError, Poly, apply, gcrd, lclm, make_algebra, normalize, quo_rem,
                    random_operator, to_list, xgcrd, xlclm)

from strategies import ALGEBRAS, operators

D = make_algebra("x", "Dx")
S = make_algebra("n", "Sn")
STRATEGIES = ["improved", "classic", "monic", "subresultant"]


def test_quo_rem_examples():
    assert quo_rem(D("Dx^2"), D("Dx")) == (D("Dx"), D("0"))
    q, r = quo_rem(S("Sn^2 - Sn - 1"), S("Sn - 1"))
    assert (q, r) == (S("Sn"), S("-1"))
    assert q * S("Sn - 1") + r == S("Sn^2 - Sn - 1")
    L = S("(n+1)*Sn^2 - 3")
    assert quo_rem(L, L) == (S("1"), S("0"))
    with pytest.raises(OreDomainError):
        quo_rem(L, S("0"))


def test_gcrd_examples():
    L = S("(n^2+1)*Sn^2 - n*Sn + 7")
    assert gcrd(L, S("0")) == normalize(L)
    assert gcrd(S("Sn - 2"), S("3")) == S("1")
    G, A_, B_ = xgcrd(D("Dx - 1"), D("Dx + 1"))
    assert G == D("1")
    assert A_ == D("-1/2") and B_ == D("1/2")


def test_lclm_examples():
    L = lclm(D("Dx - 1"), D("x*Dx - 5"))
    assert L.order() == 2 and apply(L, Poly.gen() ** 5) == 0
    A_ = S("(n+1)*Sn - n")
    assert lclm(A_, A_) == normalize(A_)
    M = lclm(S("Sn - 3"), S("(n+1)*Sn - 1"))
    assert M.order() == 2
    # 3^n + 1/n!
    fact = [1]
    for k in range(1, 20):
        fact.append(fact[-1] * k)
    seq = [3 ** k + Fraction(1, fact[k]) for k in range(20)]
    assert all(v == 0 for v in apply(M, seq))


def test_normalize_examples():
    assert normalize(D("(2*x+2)*Dx + 2")) == D("(x+1)*Dx + 1")
    assert normalize(D("0")) == D("0")
    Sx = make_algebra("x", "Sx")
    assert normalize(Sx.ratfun_algebra()("1/x*Sx - 1")) == Sx("Sx - x")


def test_xlclm_cofactors():
    A_, B_ = S("(n+2)*Sn - 1"), S("Sn^2 - n")
    L, U, V = xlclm(A_, B_)
    assert U * A_ == L == V * B_


def test_unknown_strategy():
    with pytest.raises(OreDomainError):
        gcrd(D("Dx"), D("Dx"), prs="fastest")


pairs = st.sampled_from(["D", "S"]).flatmap(
    lambda k: st.tuples(operators(ALGEBRAS[k], 5, 3), operators(ALGEBRAS[k], 5, 3)))


@settings(max_examples=200)
@given(pairs)
def test_division_identity(p):
    A_, B_ = p
    assume(B_)
    Q, R = quo_rem(A_, B_)
    assert Q * B_ + R == A_
    assert R.order() < B_.order()


def _coprime_pair(A, seed, orders):
    import random
    rng = random.Random(seed)
    G = random_operator(A, orders[2], 2, seed=rng)
    L1 = random_operator(A, orders[0], 2, seed=rng)
    L2 = random_operator(A, orders[1], 2, seed=rng)
    while gcrd(L1, L2) != A.one():
        L2 = random_operator(A, orders[1], 2, seed=rng)
    return L1, L2, G


@settings(max_examples=100)
@given(st.sampled_from(["D", "S"]), st.integers(0, 10 ** 6))
def test_gcrd_of_multiples(kind, seed):
    A = ALGEBRAS[kind]
    L1, L2, G = _coprime_pair(A, seed, (3, 2, 1))
    P, Q = L1 * G, L2 * G
    results = {s: gcrd(P, Q, prs=s) for s in STRATEGIES}
    assert all(g == normalize(G) for g in results.values())
    for M in (P, Q):
        assert quo_rem(M, results["improved"])[1] == A.zero()
    H, U, V = xgcrd(P, Q)
    assert U * P + V * Q == H == normalize(G)
    L = lclm(P, Q)
    assert L.order() == P.order() + Q.order() - G.order()
    assert quo_rem(L, P)[1] == A.zero() and quo_rem(L, Q)[1] == A.zero()


def test_gcrd_solution_level():
    # 1/k! is a common solution of both multiples of (n+1)Sn - 1
    G = S("(n+1)*Sn - 1")
    P, Q = S("Sn^2 + n") * G, S("(n+3)*Sn - 2") * G
    g = gcrd(P, Q)
    terms = to_list(g, [1], 15)
    assert terms[5] == QQ("1/120")
    assert apply(P, terms) == [0] * 12
