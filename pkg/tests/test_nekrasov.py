from fractions import Fraction

import pytest

from hilbfock.correlators import M, rank1_product, w_weight
from hilbfock.exactalg import RatFun
from hilbfock.exactalg import Series
from hilbfock.nekrasov import (
    blend_identity_holds,
    blend_identity_sweep,
    blend_triples,
    dual_partition,
    load_weight5_fixtures,
    modular_example_check,
    rank1_from_dual,
    rank2_weight,
    z_inst_rank2,
)
from hilbfock.partitions import blend, enumerate_partitions, nu, unblend


def test_rank2_small_orders():
    assert z_inst_rank2(1, -1, 1, order=1) == Series.one(1)
    z = z_inst_rank2(3, -3, 1, m=0, order=4)
    assert z.coeffs == [1, 0, 2, 0, 5]


def test_rank2_weight_is_symbolic_when_m_is():
    w = rank2_weight((1,), (), 1, -1, 1)
    assert w.subs({"m": 0}) == 1


def test_rank2_rejects_degenerate_parameters():
    with pytest.raises(ValueError):
        rank2_weight((1,), (), 0, 0, 0)


def test_sector_symmetry():
    for mu1 in enumerate_partitions(2):
        for mu2 in enumerate_partitions(1):
            assert rank2_weight(mu1, mu2, 3, -3, 1) == rank2_weight(mu2, mu1, -3, 3, 1)


def test_blending_identity():
    count, failures = blend_identity_sweep(8)
    assert count == len(blend_triples(8)) and failures == []
    assert blend_identity_sweep(6, Fraction(7, 3))[1] == []


def test_blend_triples_cover_all_partitions():
    triples = blend_triples(6)
    assert sorted(blend(*t) for t in triples) == sorted(mu for n in range(7) for mu in enumerate_partitions(n))
    for b, mu1, mu2 in triples:
        assert unblend(blend(b, mu1, mu2)) == (b, mu1, mu2)


def test_identity_is_sensitive_to_the_parameters():
    assert blend_identity_holds(1, (1,), ())
    lhs = w_weight(blend(1, (1,), ())) * RatFun(1, w_weight(nu(1)))
    assert lhs == rank2_weight((1,), (), 2, -3, 2)
    assert lhs != rank2_weight((1,), (), 2, -3, 1)


def test_dual_k0_is_rank_one():
    assert dual_partition(0, order=8) == rank1_product(8)
    assert rank1_from_dual(6)


def test_odd_dual_does_not_vanish():
    # only mu = (1) contributes at q^1: b = -1 and w = 1 - m^2
    assert dual_partition(1, order=1)[1] == 2 * M * M - 2
    assert dual_partition(3, 3, 1)[1] == Fraction(-8, 6) * (1 - 9)


def test_dual_k2_at_three():
    z = dual_partition(2, 3, 9)
    assert z.coeffs == [0, -16, 0, 0, 0, 128, 0, 0, 0, -320]


def test_dual_symbolic_matches_specialized():
    sym = dual_partition(2, None, 6)
    num = dual_partition(2, 3, 6)
    assert all(sym[n].subs({"m": 3}) == num[n] for n in range(7))


def test_modular_example():
    rep = modular_example_check(6)
    assert rep.ok and rep.prefactor == 1 and rep.matched == list(range(7))


def test_modular_example_negative_control():
    fixtures, target = load_weight5_fixtures()
    zeroed = {name: Series.zero(s.order) for name, s in fixtures.items()}
    rep = modular_example_check(6, zeroed, target)
    # both sides vanish at q^1, so the first mismatch is at q^2
    assert not rep.ok and rep.failing_order == 2


def test_modular_example_depth_limit():
    with pytest.raises(ValueError):
        modular_example_check(7)
