"""Rank-2 instanton sums by localization, blending, and the dual partition function."""

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product
from math import factorial, gcd

from .correlators import hook_numerator, w_weight
from .exactalg import MPoly, RatFun, Series
from .partitions import Partition, blend, enumerate_partitions, nu, partitions_up_to, unblend
from .qseries import eta_quotient
from .vertex import tangent_character

M = MPoly.var("m")


def _sector_terms(mu1, mu2):
    """Yield (i, j, e1, e2) for every weight of every sector (i, j)."""
    parts = (Partition(mu1), Partition(mu2))
    for i, j in product(range(2), repeat=2):
        ch = tangent_character(parts[j], parts[i])
        for e, mult in ch.terms.items():
            e1 = e[ch.gens.index("z1")] if "z1" in ch.gens else 0
            e2 = e[ch.gens.index("z2")] if "z2" in ch.gens else 0
            for _ in range(int(mult)):
                yield i, j, e1, e2


def rank2_weight(mu1, mu2, a1, a2, t, m=None):
    """prod over sectors and weights w of (m + w) / w, with w = a_i - a_j + t e1 - t e2.

    Parameters may be rationals or MPoly; ``m=None`` means the symbol m.
    """
    m = M if m is None else m
    a = (a1, a2)
    num, den = Fraction(1), Fraction(1)
    for i, j, e1, e2 in _sector_terms(mu1, mu2):
        w = a[i] - a[j] + t * e1 - t * e2
        if w == 0:
            raise ValueError(f"vanishing weight for ({mu1}, {mu2}); parameters are not generic")
        num = num * (m + w)
        den = den * w
    if isinstance(den, MPoly) and not den.is_constant():
        return RatFun(MPoly.coerce(num), den)
    if isinstance(den, MPoly):
        den = den.constant_value()
    return num / den


def z_inst_rank2(a1, a2, t, m=None, order: int = 4) -> Series:
    """sum over pairs (mu1, mu2) of q^(2n) rank2_weight, n = |mu1| + |mu2|."""
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(order // 2 + 1):
        for k in range(n + 1):
            for mu1 in enumerate_partitions(k):
                for mu2 in enumerate_partitions(n - k):
                    coeffs[2 * n] = coeffs[2 * n] + rank2_weight(mu1, mu2, a1, a2, t, m)
    return Series(coeffs, order)


def blend_triples(max_size: int):
    """All (b, mu1, mu2) with 2|mu1| + 2|mu2| + 2b^2 + b <= max_size."""
    out = []
    b = 0
    while 2 * b * b - abs(b) <= max_size:
        for bb in {b, -b}:
            rest = max_size - (2 * bb * bb + bb)
            if rest < 0:
                continue
            for mu1 in partitions_up_to(rest // 2):
                for mu2 in partitions_up_to((rest - 2 * mu1.size) // 2):
                    out.append((bb, mu1, mu2))
        b += 1
    return sorted(out)


def blend_identity_holds(b: int, mu1, mu2, m=None) -> bool:
    """w_m(blend) / w_m(nu(b)) against the rank-2 weight at t = 2, a = (2b, -2b - 1)."""
    lhs_num = w_weight(blend(b, mu1, mu2), m)
    lhs_den = w_weight(nu(b), m)
    rhs = rank2_weight(mu1, mu2, 2 * b, -2 * b - 1, 2, m)
    if isinstance(rhs, RatFun):
        return lhs_num * rhs.den == lhs_den * rhs.num
    return lhs_num == lhs_den * rhs


def blend_identity_sweep(max_size: int, m=None):
    """Returns (count, failures) over :func:`blend_triples`."""
    triples = blend_triples(max_size)
    return len(triples), [tr for tr in triples if not blend_identity_holds(*tr, m)]


# -- dual partition function ------------------------------------------------------------
def _dual_coefficient(job):
    """q^n coefficient of Z_k as integer numerators in u = m^2 over a common denominator."""
    n, k = job
    acc, common = [], 1
    for mu in enumerate_partitions(n):
        b = unblend(mu).charge
        c = Fraction((2 * b) ** k, factorial(k))
        if not c:
            continue
        num, den = hook_numerator(mu)
        den *= c.denominator
        g = gcd(common, den)
        lift, scale = den // g, common // g * c.numerator
        if lift != 1:
            acc = [x * lift for x in acc]
            common *= lift
        if len(acc) < len(num):
            acc += [0] * (len(num) - len(acc))
        for i, v in enumerate(num):
            acc[i] += scale * v
    return [Fraction(x, common) for x in acc]


@dataclass(frozen=True)
class DualSpec:
    k: int
    m: object = None
    order: int = 10


def dual_partition(k: int, m=None, order: int = 10, mapper=map) -> Series:
    """Z_k = sum_mu q^|mu| (2 b(mu))^k / k! w_m(mu): the zeta^k coefficient of the dual function."""
    rows = list(mapper(_dual_coefficient, [(n, k) for n in range(order + 1)]))
    coeffs = []
    for r in rows:
        if m is None:
            coeffs.append(MPoly({(2 * i,): c for i, c in enumerate(r) if c}, ("m",)))
        else:
            u = Fraction(m) ** 2
            coeffs.append(sum((c * u**i for i, c in enumerate(r)), Fraction(0)))
    return Series(coeffs, order)


# -- the weight-5 example ---------------------------------------------------------------
def load_weight5_fixtures():
    text = resources.files("hilbfock").joinpath("data/gamma1_4_weight5.json").read_text()
    data = json.loads(text)
    out = {}
    for name, entry in data["series"].items():
        depth = entry["depth"]
        coeffs = [Fraction(0)] * (depth + 1)
        for n, c in entry["coefficients"].items():
            coeffs[int(n)] = Fraction(c)
        out[name] = Series(coeffs, depth)
    target = {name: Fraction(c) for name, c in data["target"].items()}
    return out, target


@dataclass
class ModularReport:
    order: int
    prefactor: Fraction
    computed: Series
    expected: Series
    matched: list
    failing_order: object

    @property
    def ok(self) -> bool:
        return self.failing_order is None


def modular_example_check(order: int = 6, fixtures=None, target=None) -> ModularReport:
    """Z_2(3, q) / (q; q)^8 * eta(tau)^4 eta(2 tau)^2 eta(4 tau)^4 against the fixture combination."""
    if fixtures is None:
        fixtures, default_target = load_weight5_fixtures()
        target = default_target if target is None else target
    depth = min(s.order for s in fixtures.values())
    if order > depth:
        raise ValueError(f"fixtures only reach q^{depth}")
    z = dual_partition(2, 3, order)
    eta = eta_quotient([(1, 4), (2, 2), (4, 4)], order).series()
    # (q; q)^8 = q^(-1/3) eta(tau)^8
    qq8 = eta_quotient([(1, 8)], order).series() * Series([Fraction(1)], order, Fraction(-1, 3))
    product_ = z * eta / qq8
    prefactor = product_.prefactor
    computed = product_.absorb_prefactor().truncate(order)
    expected = Series.zero(order)
    for name, c in target.items():
        expected = expected + fixtures[name].truncate(order) * c
    matched, failing = [], None
    for n in range(order + 1):
        if computed[n] == expected[n]:
            matched.append(n)
        elif failing is None:
            failing = n
    return ModularReport(order, prefactor, computed, expected, matched, failing)


def rank1_from_dual(order: int, m=None) -> bool:
    """Z_0 agrees with (q; q)^(m^2 - 1)."""
    from .correlators import rank1_product

    return dual_partition(0, m, order) == rank1_product(order, m)


__all__ = [
    "DualSpec",
    "ModularReport",
    "blend_identity_holds",
    "blend_identity_sweep",
    "blend_triples",
    "dual_partition",
    "load_weight5_fixtures",
    "modular_example_check",
    "rank1_from_dual",
    "rank2_weight",
    "z_inst_rank2",
]
