from fractions import Fraction

import pytest
from hypothesis import given

from hilbfock.correlators import (
    M,
    CorrelationSpec,
    content_power_sum,
    gtheta_check,
    hook_numerator,
    localization_F,
    quasimodular_report,
    rank1_product,
    w_weight,
    z_rank1,
)
from hilbfock.exactalg import Series, parse_poly, qpochhammer_inf
from hilbfock.partitions import Partition

from strategies import partitions


def test_localization_weights():
    assert w_weight(()) == 1
    assert w_weight((1,)) == 1 - M * M
    assert w_weight((2, 1), 1) == 0


@given(partitions(7))
def test_weight_vanishes_at_m_one(mu):
    if mu:
        assert w_weight(mu, 1) == 0


@given(partitions(7))
def test_packed_numerator_matches_direct_product(mu):
    num, den = hook_numerator(Partition(mu))
    direct = parse_poly("1")
    for h in mu.hooks():
        direct = direct * (h * h - M * M) * Fraction(1, h * h)
    assert w_weight(mu) == direct
    assert w_weight(mu, Fraction(2, 3)) == direct.subs({"m": Fraction(2, 3)})


def test_content_sums():
    assert content_power_sum((2, 1), 1) == 0
    assert content_power_sum((2,), 2, divided=True) == Fraction(1, 2)
    assert content_power_sum((3,), 0) == 3


def test_no_insertions():
    F = localization_F((), 1)
    assert F == Series([1, 1 - M * M], 1)


def test_f13_coefficients():
    F = localization_F((1, 3), 3)
    assert F[2] == 2 - Fraction(5, 2) * M**2 + Fraction(1, 2) * M**4
    assert F[3] == 54 - Fraction(147, 2) * M**2 + 21 * M**4 - Fraction(3, 2) * M**6


def test_divided_convention_rescales():
    plain, divided = localization_F((1, 3), 5), localization_F((1, 3), 5, divided=True)
    assert plain == divided * 6


@pytest.mark.parametrize("ks", [(1,), (3,), (1, 2)])
def test_odd_total_order_vanishes(ks):
    assert localization_F(ks, 7) == Series.zero(7)


def test_rank1_specializations():
    assert localization_F((), 8, m=0) == qpochhammer_inf(8).inverse()
    assert localization_F((), 8, m=1) == Series.one(8)
    assert z_rank1(8).equal
    assert z_rank1(6, m=Fraction(5, 3)).equal


def test_parallel_mapper_gives_the_same_series():
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(2) as pool:
        assert localization_F((2, 2), 8, mapper=pool.map) == localization_F((2, 2), 8)


def test_spec_bounds():
    spec = CorrelationSpec((1, 3))
    assert spec.weight_bound == 8 and spec.m_degree_bound == 6


def test_quasimodular_fits():
    empty = quasimodular_report((), 8, 0, guard=5)
    assert empty.ok and {el.label(): c for el, c in empty.fit.coefficients.items()} == {"1": 1}
    two = quasimodular_report((2,), 12)
    assert two.ok and two.worst_degree <= 4


def test_ratio_is_f_over_z():
    rep = quasimodular_report((2,), 10)
    assert rep.ratio * rank1_product(10) == localization_F((2,), 10)


@pytest.mark.parametrize("m, order", [(0, 4), (2, 4), (3, 3)])
def test_gtheta(m, order):
    rep = gtheta_check(m, order, 6)
    assert rep.equal, rep.first_difference()


def test_gtheta_detects_a_wrong_exponent():
    rep = gtheta_check(2, 3, 4)
    rep.lhs[(1, 0)] = rep.lhs.get((1, 0), 0) + 1
    assert not rep.equal and rep.first_difference() == (1, 0)
