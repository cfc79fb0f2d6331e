import random

import pytest
import sympy as sp
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from orealg import (GuessOptions, InsufficientDataError, NoRelationError, OreDomainError, Series,
                    apply, guess, guess_raw, guess_report, lclm, make_algebra, normalize,
                    random_operator, to_list)
from orealg.errors import SingularIndexError

from oracles import X, series_coeffs
from strategies import recurrences

S = make_algebra("n", "Sn")
D = make_algebra("x", "Dx")
FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_fibonacci_recurrence():
    L = guess(FIB)
    assert L == S("Sn^2 - Sn - 1")
    assert apply(L, FIB) == [0] * 9


def test_fibonacci_differential_equation():
    M = guess(FIB, "D")
    assert M.parent.kind.value == "D"
    assert apply(M, Series(series_coeffs(X / (1 - X - X ** 2), 40))).truncate(30).is_zero()
    assert guess(FIB, "D", max_order=2).order() == 1


def test_min_order_max_degree_example():
    data = [(n + 1) ** 10 * 2 ** n + 3 ** n for n in range(200)]
    rep = guess_report(data, "S", min_order=3, max_degree=5)
    oracle = lclm(S("(n+1)^10*Sn - 2*(n+2)^10"), S("Sn - 3"))
    assert (rep.order, rep.degree) == (oracle.order(), oracle.degree()) == (2, 10)
    assert rep.operator == oracle
    assert rep.point[0] >= 3 and rep.point[1] <= 5


def test_guess_raw_examples():
    assert S("Sn^2 - Sn - 1") in guess_raw(FIB, "S", 2, 0)
    assert guess_raw([2 ** n for n in range(10)], "S", 1, 0) == [S("Sn - 2")]
    rng = random.Random(5)
    noise = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(30)]
    assert guess_raw(noise, "S", 2, 2) == []


def test_degenerate_and_failing_inputs():
    with pytest.raises(NoRelationError) as info:
        guess([0] * 5)
    assert info.value.reason == "no-relation"
    with pytest.raises(NoRelationError) as info:
        guess([1, 2, 3], min_order=5)
    assert info.value.reason == "no-admissible-point"
    rng = random.Random(11)
    with pytest.raises(NoRelationError) as info:
        guess([rng.randint(-99, 99) for _ in range(20)])
    assert info.value.reason == "no-relation"


def test_options_validation():
    with pytest.raises(OreDomainError):
        GuessOptions(ensure=3, cut=2)
    with pytest.raises(OreDomainError):
        GuessOptions(min_order=-1)
    opts = GuessOptions(path=[(1, 1), (2, 0), (9, 9)], max_order=2)
    assert guess(FIB, opts=opts) == S("Sn^2 - Sn - 1")


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 6), st.integers(2, 30))
def test_admissibility_law(r, d, ensure, N):
    data = list(range(1, N + 1))
    need = (r + 1) * (d + 2) + ensure
    if need > N:
        with pytest.raises(InsufficientDataError):
            guess_raw(data, "S", r, d, ensure=ensure)
    else:
        guess_raw(data, "S", r, d, ensure=ensure)


def _sequence(L, init, n):
    try:
        return to_list(L, init, n)
    except SingularIndexError:
        return None


@settings(max_examples=100)
@given(recurrences(2, 2), st.lists(st.integers(-5, 5), min_size=2, max_size=2), st.integers(0, 4))
def test_soundness_with_holdout(L, init, cut):
    data = _sequence(L, init[:L.order()], 40)
    assume(data is not None and any(data))
    rep = guess_report(data, "S", cut=cut)
    assert all(v == 0 for v in apply(rep.operator, data))
    assert rep.order <= L.order()


def test_minimal_order_recovered():
    rng = random.Random(7)
    done = 0
    while done < 10:
        r0, deg = rng.randint(1, 3), rng.randint(0, 2)
        L0 = random_operator(S, r0, deg, seed=rng)
        init = [rng.randint(-9, 9) for _ in range(r0)]
        n = 3 * (r0 + 1) * (deg + 2) + 10
        data = _sequence(L0, init, n)
        if data is None or not any(data):
            continue
        G = guess(data)
        assert G.order() == r0
        assert normalize(G) == normalize(L0) or all(v == 0 for v in apply(G, data))
        done += 1


@settings(max_examples=100)
@given(recurrences(2, 1), st.lists(st.integers(-5, 5), min_size=2, max_size=2), st.integers(1, 10))
def test_enlarging_data_keeps_the_guess(L, init, extra):
    data = _sequence(L, init[:L.order()], 40 + extra)
    assume(data is not None and any(data))
    a = guess(data[:40])
    b = guess(data)
    assert a == b


def test_d_kind_series_guess():
    coeffs = series_coeffs(sp.exp(X) / (1 - X), 30)
    M = guess(coeffs, "D")
    assert apply(M, Series(series_coeffs(sp.exp(X) / (1 - X), 45))).truncate(40).is_zero()
