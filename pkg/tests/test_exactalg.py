from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hilbfock.exactalg import (
    MPoly,
    RatFun,
    Series,
    linear_solve,
    parse_poly,
    pochhammer,
    qpochhammer_inf,
    series_exp,
    series_log,
    series_pow,
)

M, T1, T2 = MPoly.var("m"), MPoly.var("t1"), MPoly.var("t2")
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)
small_polys = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), fractions), max_size=4).map(
    lambda ts: sum((MPoly.monomial({"t1": a, "t2": b}, c) for a, b, c in ts), MPoly.const(0))
)


def to_sympy(p: MPoly):
    return sympy.sympify(str(p).replace("^", "**"))


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@given(small_polys, small_polys)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(small_polys)
def test_text_round_trip(p):
    assert parse_poly(str(p)) == p


def test_substitution_and_degree():
    p = (M + T1) ** 2 * (M - 2 * T2)
    assert p.degree("m") == 3
    assert p.subs({"t1": 1, "t2": -1}) == (M + 1) ** 2 * (M + 2)


def test_rational_functions_reduce():
    f = RatFun((M + T1) * (M - T1), M + T1)
    assert f.is_polynomial() and f.as_poly() == M - T1
    g = RatFun(1, M + 1) + RatFun(1, M - 1)
    assert g == RatFun(2 * M, M * M - 1)
    assert RatFun(T1, T1 * T2).as_poly() == T2.inverse_monomial()
    with pytest.raises(ZeroDivisionError):
        RatFun(1, 0)


def test_exp_and_log():
    e = series_exp(Series([0, 1], 3))
    assert e.coeffs == [1, 1, Fraction(1, 2), Fraction(1, 6)]


@given(st.lists(fractions, min_size=1, max_size=10))
def test_log_inverts_exp(cs):
    s = Series([0] + cs, 10)
    assert series_log(series_exp(s)) == s


@given(st.lists(fractions, min_size=1, max_size=8))
def test_inverse(cs):
    s = Series([1] + cs, 8)
    assert s * s.inverse() == Series.one(8)


def test_pochhammer_conventions():
    assert pochhammer(MPoly.var("a"), 0, 3) == Series([1 - MPoly.var("a")], 3)
    assert pochhammer(0, None, 5, qpower=1) == Series.one(5)
    assert qpochhammer_inf(7).coeffs == [1, -1, -1, 0, 0, 1, 0, 1]


def test_symbolic_power_of_euler_product():
    z = series_pow(qpochhammer_inf(3), M * M - 1)
    assert z[1] == 1 - M * M
    assert series_pow(qpochhammer_inf(6), 3) == qpochhammer_inf(6) ** 3


def test_prefactors_add_and_negate():
    s = Series([1, 1], 3, Fraction(1, 24))
    assert (s * s).prefactor == Fraction(1, 12)
    assert s.inverse().prefactor == Fraction(-1, 24)
    assert Series([1], 2, 2).absorb_prefactor().coeffs == [0, 0, 1]


def test_linear_solve():
    I = [[1, 0], [0, 1]]
    assert linear_solve(I, [3, 4]).solution == [3, 4]
    bad = linear_solve([[1], [1]], [1, 2])
    assert not bad.consistent and bad.failing_row == 1
    # interpolation of 1 - 2u + 3u^2 at u = 0, 1, 2
    V = [[1, u, u * u] for u in range(3)]
    values = [1 - 2 * u + 3 * u * u for u in range(3)]
    assert linear_solve(V, values).solution == [1, -2, 3]


def test_linear_solve_with_polynomial_right_side():
    res = linear_solve([[2, 0], [1, 1]], [2 * M, M + 1])
    assert res.solution == [M, MPoly.const(1)]
