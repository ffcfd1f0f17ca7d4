import pytest
from hypothesis import given

from hilbfock.exactalg import MPoly
from hilbfock.fock import T1, T2, FockElement, jack
from hilbfock.partitions import partitions_up_to
from hilbfock.vertex import (
    M,
    HalfVertexSpec,
    dual_shift,
    half_vertex_apply,
    hook_side,
    identity_sweep,
    staircase_character,
    tangent_character,
    tangent_character_check,
    w_matrix_element,
    worked_example,
)

from strategies import partitions

Z1, Z2 = MPoly.var("z1"), MPoly.var("z2")


def test_half_vertex_kills_nothing_on_the_vacuum():
    vac = FockElement.vacuum()
    assert half_vertex_apply(HalfVertexSpec(M, True), vac) == vac


def test_worked_example_intermediates():
    ex = worked_example()
    assert ex["left"] == FockElement(
        {(): M * (M - T1), (1,): 2 * M * T1 * T2, (1, 1): T1**2 * T2**2, (2,): -(T1**2) * T2}
    )
    c = M + T1 + T2
    assert ex["right"] == FockElement(
        {(): (M + T1 + 2 * T2) * c, (1,): 2 * T1 * T2 * c, (1, 1): T1**2 * T2**2, (2,): -T1 * T2**2}
    )
    assert ex["matrix_element"] == M * (M + T1) * (M + T1 + T2) * (M - T1 + 2 * T2)


def test_small_matrix_elements():
    assert w_matrix_element((), ()) == 1
    assert w_matrix_element((), (1,)) == M + T1 + T2
    assert hook_side((1,), (1,)) == (M + T1) * (M + T2)


@pytest.mark.parametrize("mu", partitions_up_to(3))
def test_identity_row(mu):
    for lam in partitions_up_to(3):
        assert w_matrix_element(mu, lam) == hook_side(mu, lam)


def test_identity_sweep_counts():
    count, failures = identity_sweep(2, 3)
    assert failures == []
    assert count == 16 + 3 * 3


@given(partitions(4), partitions(4))
def test_m_degree_is_total_size(mu, lam):
    assert hook_side(mu, lam).degree("m") == mu.size + lam.size


def test_dual_shift_swaps_the_arguments():
    # replacing m by -t1 - t2 - m maps <mu|W|lam> to (-1)^(|mu|+|lam|) <lam|W|mu>
    for mu in partitions_up_to(2):
        for lam in partitions_up_to(2):
            sign = (-1) ** (mu.size + lam.size)
            assert dual_shift(hook_side(mu, lam)) == hook_side(lam, mu) * sign


def test_tangent_character_small_cases():
    assert tangent_character((1,), (1,)) == Z1 + Z2
    assert tangent_character((), (1,)) == 1
    assert tangent_character((1,), ()) == Z1 * Z2


@given(partitions(4), partitions(4))
def test_tangent_character_matches_staircase(lam, mu):
    assert tangent_character(lam, mu) == staircase_character(lam, mu)


def test_tangent_character_sweep():
    count, failures = tangent_character_check(3)
    assert count == 49 and failures == []


@given(partitions(5))
def test_diagonal_character_has_dimension_twice_size(mu):
    ch = tangent_character(mu, mu)
    assert sum(ch.terms.values()) == 2 * mu.size
    assert (0, 0) not in ch.terms
