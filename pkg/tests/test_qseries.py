from fractions import Fraction

import pytest

from hilbfock.exactalg import MPoly, Series, qpochhammer_inf
from hilbfock.qseries import (
    QmfBasisElement,
    divisor_sigma,
    eisenstein,
    eta_quotient,
    fit_series,
    parse_basis_label,
    quasimodular_basis,
    theta,
    theta11_product,
    theta11_sum,
    theta_w_coefficients,
    theta_z_expansion,
)

X = MPoly.var("x")


def test_eisenstein_expansions():
    assert eisenstein(2, 3).coeffs == [Fraction(-1, 24), 1, 3, 4]
    assert eisenstein(4, 0)[0] == Fraction(1, 240)
    assert eisenstein(6, 0)[0] == Fraction(-1, 504)
    assert divisor_sigma(6, 3) == divisor_sigma(2, 3) * divisor_sigma(3, 3)
    with pytest.raises(ValueError):
        eisenstein(3, 2)


def test_ramanujan_relation():
    # E4^2 and E8 span one line: the weight 8 modular forms are one-dimensional
    n = 8
    e4, e8 = eisenstein(4, n), eisenstein(8, n)
    ratio = e8[0] / (e4 * e4)[0]
    assert e8 == (e4 * e4) * ratio


def test_basis_dimensions_and_labels():
    assert len(quasimodular_basis(8)) == 11
    assert len(quasimodular_basis(12)) == 23
    assert len(quasimodular_basis(6, homogeneous=True)) == 3
    for el in quasimodular_basis(10):
        assert parse_basis_label(el.label()) == el
    assert QmfBasisElement(0, 0, 0).label() == "1"


def test_fit_basis_element():
    res = fit_series(eisenstein(2, 12) ** 2, 4)
    assert res.ok and {el.label(): c for el, c in res.coefficients.items()} == {"E2^2": 1}


def test_fit_constant():
    partitions = qpochhammer_inf(15).inverse()
    res = fit_series(partitions * qpochhammer_inf(15), 6)
    assert res.ok and {el.label(): c for el, c in res.coefficients.items()} == {"1": 1}


def test_fit_reports_failure():
    res = fit_series(qpochhammer_inf(15), 4)
    assert not res.ok and res.failing_order is not None


def test_fit_needs_guard_orders():
    res = fit_series(eisenstein(2, 4) ** 2, 4)
    assert not res.ok and "need the series" in res.message


def test_eta_prefactors():
    eta = eta_quotient([(1, 1)], 7)
    assert eta.prefactor == Fraction(1, 24)
    assert eta.body.coeffs == [1, -1, -1, 0, 0, 1, 0, 1]
    assert eta_quotient([(1, 4), (2, 2), (4, 4)], 3).prefactor == 1
    q = eta_quotient([(1, 4), (2, -2)], 8)
    assert q.prefactor == 0
    assert q.body == qpochhammer_inf(8) ** 4 * (qpochhammer_inf(8, 2) ** 2).inverse()


def test_theta_constant_term_and_symmetry():
    th = theta(5)
    assert th[0] == 1 - X.inverse_monomial()
    for n in range(6):
        assert MPoly.coerce(th[n]).subs({"x": X.inverse_monomial()}) == -X * th[n]


def test_triple_product():
    assert theta11_product(12) == theta11_sum(12)


def test_theta_in_the_elliptic_variable():
    coeffs = theta_w_coefficients(8, 6)
    for j in (0, 2, 4, 6):
        assert coeffs[j] == Series.zero(8)
    a1, a3, a5 = theta_z_expansion(8, 5)
    assert a1 == Series.one(8)
    assert a3 == -eisenstein(2, 8)
    fit = fit_series(a5, 4, guard=3)
    assert fit.ok and all(el.weight == 4 for el in fit.coefficients)
