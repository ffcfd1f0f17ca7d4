"""Both sides of the hook-product identity for the Chern-class vertex operator.

The operator side pairs two half-vertex operators applied to Jack
polynomials.  The combinatorial side is a product over cells of linear
forms built from generalized arms and legs.  Their equality for all pairs
of partitions is the identity checked by :func:`identity_sweep`.
"""

from dataclasses import dataclass
from functools import lru_cache

from .exactalg import MPoly, RatFun
from .fock import T1, T1T2, T2, FockElement, inner, jack
from .partitions import Partition, arm, leg, partitions_up_to

M = MPoly.var("m")
Z1 = MPoly.var("z1")
Z2 = MPoly.var("z2")


@dataclass(frozen=True)
class HalfVertexSpec:
    """exp((scale / (t1 t2)) * sum_n sign(n) d/dp_n).

    ``alternating`` selects sign(n) = (-1)^(n+1); otherwise sign(n) = 1.
    """

    scale: object
    alternating: bool

    def shift(self, n: int):
        s = -1 if (self.alternating and n % 2 == 0) else 1
        return self.scale * T1T2.inverse_monomial() * s


def half_vertex_apply(spec: HalfVertexSpec, v: FockElement) -> FockElement:
    """Apply the exponential of first-order derivatives.

    exp(sum_n a_n d/dp_n) is the translation p_n -> p_n + a_n, so each
    monomial p_mu becomes prod_i (p_{mu_i} + a_{mu_i}), expanded.
    """
    out = {}
    for mu, c in v.terms.items():
        # expand the product one factor at a time: {partition: coefficient}
        partial = {(): c}
        for part in mu:
            a = spec.shift(part)
            nxt = {}
            for key, coef in partial.items():
                grown = tuple(sorted(key + (part,), reverse=True))
                nxt[grown] = nxt.get(grown, 0) + coef
                nxt[key] = nxt.get(key, 0) + coef * a
            partial = nxt
        for key, coef in partial.items():
            k = Partition(key)
            out[k] = out.get(k, 0) + coef
    return FockElement(out)


def w_operator_sides(mu, lam):
    """The two vectors whose pairing is the matrix element for (mu, lam).

    The constant-sign operator with scale m acts on the Jack polynomial of
    mu; the alternating one with scale m + t1 + t2 acts on that of lam.
    """
    left = half_vertex_apply(HalfVertexSpec(M, False), jack(mu))
    right = half_vertex_apply(HalfVertexSpec(M + T1 + T2, True), jack(lam))
    return left, right


@lru_cache(maxsize=None)
def _w_cached(mu: Partition, lam: Partition) -> MPoly:
    left, right = w_operator_sides(mu, lam)
    value = inner(left, right)
    if isinstance(value, RatFun):
        value = value.as_poly()
    return MPoly.coerce(value).trim()


def w_matrix_element(mu, lam) -> MPoly:
    """Matrix element of the vertex operator between two fixed-point classes."""
    return _w_cached(Partition(mu), Partition(lam))


def hook_side(mu, lam) -> MPoly:
    """prod_{cells of mu} (m + t1 (a_lam + 1) - t2 l_mu)
    * prod_{cells of lam} (m - t1 a_mu + t2 (l_lam + 1))."""
    mu, lam = Partition(mu), Partition(lam)
    result = MPoly.const(1)
    for c in mu.cells():
        result = result * (M + T1 * (arm(lam, c) + 1) - T2 * leg(mu, c))
    for c in lam.cells():
        result = result * (M - T1 * arm(mu, c) + T2 * (leg(lam, c) + 1))
    return result


def tangent_character(lam, mu) -> MPoly:
    """sum_{cells of mu} z1^(a_lam + 1) z2^(-l_mu) + sum_{cells of lam} z1^(-a_mu) z2^(l_lam + 1)."""
    lam, mu = Partition(lam), Partition(mu)
    terms = {}
    for c in mu.cells():
        key = (arm(lam, c) + 1, -leg(mu, c))
        terms[key] = terms.get(key, 0) + 1
    for c in lam.cells():
        key = (-arm(mu, c), leg(lam, c) + 1)
        terms[key] = terms.get(key, 0) + 1
    return MPoly(terms, ("z1", "z2"))


def staircase_character(lam, mu, R: int = None) -> MPoly:
    """sum_{i,j} z1^(lam_i - j + 1) z2^(i - mu^t_j) - sum_{i,j} z1^(1 - j) z2^i over i, j < R.

    Only exponents with e1 > lam_1 - R + 1 and e2 < R - len(mu) are kept;
    in that window no term is lost by cutting the sums at R.
    """
    lam, mu = Partition(lam), Partition(mu)
    if R is None:
        R = lam.size + mu.size + max(lam.part(1), len(mu)) + 4
    mt = mu.transpose()
    low1, high2 = lam.part(1) - R + 1, R - len(mu)
    terms = {}
    for i in range(1, R):
        for j in range(1, R):
            for key, c in (((lam.part(i) - j + 1, i - mt.part(j)), 1), ((1 - j, i), -1)):
                if key[0] > low1 and key[1] < high2:
                    terms[key] = terms.get(key, 0) + c
    return MPoly({k: v for k, v in terms.items() if v}, ("z1", "z2"))


def tangent_character_check(max_size: int, R: int = None):
    """Hook formula against the truncated double sum; returns (count, failures)."""
    parts = partitions_up_to(max_size)
    failures = [(lam, mu) for lam in parts for mu in parts if tangent_character(lam, mu) != staircase_character(lam, mu, R)]
    return len(parts) ** 2, failures


def worked_example():
    """The pair mu = (2), lam = (1, 1): both intermediate vectors and the product."""
    left, right = w_operator_sides((2,), (1, 1))
    return {
        "left": left,
        "right": right,
        "matrix_element": w_matrix_element((2,), (1, 1)),
        "expected": M * (M + T1) * (M + T1 + T2) * (M - T1 + 2 * T2),
    }


def character_weights(ch: MPoly):
    """Exponent pairs of a character, repeated by multiplicity."""
    out = []
    i1 = ch.gens.index("z1") if "z1" in ch.gens else None
    i2 = ch.gens.index("z2") if "z2" in ch.gens else None
    for e, c in sorted(ch.terms.items()):
        if c.denominator != 1 or c < 0:
            raise ValueError("character must have nonnegative integer multiplicities")
        pair = (e[i1] if i1 is not None else 0, e[i2] if i2 is not None else 0)
        out.extend([pair] * int(c))
    return out


def euler_class(ch: MPoly, shift=None) -> MPoly:
    """prod over weights (a, b) of (shift + a t1 + b t2)."""
    shift = M if shift is None else shift
    result = MPoly.const(1)
    for a, b in character_weights(ch):
        result = result * (shift + T1 * a + T2 * b)
    return result


def strip_closed_form(k: int, l: int) -> MPoly:
    """Matrix element for a column (1^k) against a row (l), k, l >= 1."""
    result = M + T1 * l - T2 * (k - 1)
    for j in range(k - 1):
        result = result * (M - T2 * j)
    for j in range(l):
        result = result * (M + T2 + T1 * j)
    return result


def identity_pairs(max_size: int, diagonal_size: int = None):
    """All pairs with both sizes <= max_size, plus equal-size pairs up to diagonal_size."""
    parts = partitions_up_to(max_size)
    pairs = [(a, b) for a in parts for b in parts]
    if diagonal_size is not None and diagonal_size > max_size:
        from .partitions import enumerate_partitions

        for n in range(max_size + 1, diagonal_size + 1):
            same = enumerate_partitions(n)
            pairs += [(a, b) for a in same for b in same]
    return pairs


def check_pair(pair):
    """(mu, lam, ok) comparing the operator and hook sides."""
    mu, lam = pair
    return mu, lam, w_matrix_element(mu, lam) == hook_side(mu, lam)


def identity_sweep(max_size: int, diagonal_size: int = None, mapper=map):
    """Run the identity over all pairs; returns (count, failures)."""
    pairs = identity_pairs(max_size, diagonal_size)
    failures = [(mu, lam) for mu, lam, ok in mapper(check_pair, pairs) if not ok]
    return len(pairs), failures


def dual_shift(p: MPoly) -> MPoly:
    """m -> -t1 - t2 - m."""
    return p.subs({"m": -T1 - T2 - M})


__all__ = [
    "HalfVertexSpec",
    "character_weights",
    "check_pair",
    "dual_shift",
    "euler_class",
    "half_vertex_apply",
    "hook_side",
    "identity_pairs",
    "identity_sweep",
    "staircase_character",
    "strip_closed_form",
    "tangent_character",
    "tangent_character_check",
    "w_matrix_element",
    "w_operator_sides",
    "worked_example",
]
