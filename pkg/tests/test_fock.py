from fractions import Fraction
from math import factorial

import pytest

from hilbfock.exactalg import MPoly
from hilbfock.fock import (
    T1,
    T1T2,
    T2,
    FockElement,
    annihilate,
    character,
    create,
    inner,
    jack,
    p1_power,
    power_sum_norm,
    schur,
)
from hilbfock.partitions import enumerate_partitions, partitions_up_to

P = FockElement.power_sum
VAC = FockElement.vacuum()


def test_creation():
    assert create(1, VAC) == P((1,))
    assert create(2, P((1,))) == P((2, 1))


def test_annihilation():
    assert annihilate(1, P((1,))) == FockElement({(): T1T2.inverse_monomial()})
    assert not annihilate(2, P((1, 1)))
    assert annihilate(1, P((1, 1)), t1t2=-1) == P((1,), -2)


@pytest.mark.parametrize("mu", partitions_up_to(5))
def test_heisenberg_commutator(mu):
    v = P(mu)
    for k in range(1, 6):
        for l in range(1, 6):
            lhs = annihilate(k, create(l, v)) - create(l, annihilate(k, v))
            want = v.scale(T1T2.inverse_monomial() * k) if k == l else FockElement()
            assert lhs == want


def test_pairing_values():
    assert inner(P((1,)), P((1,))) == T1T2.inverse_monomial()
    assert inner(P((2,)), P((2,))) == T1T2.inverse_monomial() * -2
    assert inner(P((2,)), P((1, 1))) == 0
    assert power_sum_norm((2, 1, 1), t1t2=-1) == 4


def test_annihilator_is_adjoint_to_creator():
    u, v = jack((2, 1)), jack((3, 1))
    for k in (1, 2, 3):
        assert inner(annihilate(k, v), u) == inner(v, create(k, u))


def test_jack_fixtures():
    assert jack((1,)) == P((1,), 1).scale(T1T2)
    assert jack((2,)) == FockElement({(1, 1): T1**2 * T2**2, (2,): -(T1**2) * T2})
    assert jack((1, 1)) == FockElement({(1, 1): T1**2 * T2**2, (2,): -T1 * T2**2})


@pytest.mark.parametrize("n", range(7))
def test_jack_normalization(n):
    for mu in enumerate_partitions(n):
        assert inner(jack(mu), p1_power(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_jacks_are_orthogonal(n):
    mus = enumerate_partitions(n)
    for i, a in enumerate(mus):
        for b in mus[i + 1 :]:
            assert inner(jack(a), jack(b)) == 0


def test_schur_functions():
    assert schur((1,)) == P((1,))
    assert schur((2,)) == FockElement({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert character((2, 1), (1, 1, 1)) == 2


def test_jack_specializes_to_schur():
    spec = jack((2,)).subs({"t1": 1, "t2": -1})
    assert spec == schur((2,)).scale(2)
    # J_lam at t1 = 1, t2 = -1 is (-1)^(|lam|) hook product times s_lam
    for mu in partitions_up_to(4):
        hooks = 1
        for h in mu.hooks():
            hooks *= h
        spec = jack(mu).subs({"t1": 1, "t2": -1}).map_coefficients(
            lambda c: c.constant_value() if isinstance(c, MPoly) else c
        )
        assert spec == schur(mu).scale(hooks * (-1) ** mu.size)


def test_json_round_trip():
    v = jack((2, 1))
    assert FockElement.from_json(v.to_json()) == v
