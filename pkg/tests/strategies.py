"""Hypothesis strategies for operators and polynomials."""

from hypothesis import strategies as st

from orealg import Poly, make_algebra

ints = st.integers(-9, 9)


def polys(max_deg=3):
    return st.lists(ints, min_size=0, max_size=max_deg + 1).map(Poly)


def nonzero_polys(max_deg=3):
    return polys(max_deg).filter(bool)


ALGEBRAS = {
    "D": make_algebra("x", "Dx"),
    "S": make_algebra("n", "Sn"),
    "T": make_algebra("x", "Tx"),
    "F": make_algebra("n", "Fn"),
    "Q": make_algebra("x", "Qx", q=2),
    "J": make_algebra("x", "Jx", q=3),
    "CUSTOM": make_algebra("x", "X", kind="CUSTOM", sigma=Poly([1, 2]), delta=Poly([0, 0, 1])),
}


def operators(A, max_order=3, max_deg=3):
    return st.lists(polys(max_deg), min_size=0, max_size=max_order + 1).map(A)


def positive_polys(max_deg=2):
    """Polynomials with positive coefficients: no roots at n >= 0."""
    return st.lists(st.integers(1, 9), min_size=1, max_size=max_deg + 1).map(Poly)


def recurrences(max_order=2, max_deg=2):
    """Shift operators over n whose leading coefficient never vanishes for n >= 0."""
    S = ALGEBRAS["S"]
    return st.integers(1, max_order).flatmap(
        lambda r: st.tuples(st.lists(polys(max_deg), min_size=r, max_size=r), positive_polys(max_deg))
        .map(lambda t: S(t[0] + [t[1]])))
