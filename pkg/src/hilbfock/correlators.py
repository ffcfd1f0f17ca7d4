"""Rank-1 correlation functions by localization, and their checks.

F(k_1..k_N; m, q) = sum_mu q^|mu| prod_l c_{k_l}(mu) w_m(mu), where
c_k(mu) is the content power sum sum_cells (j - i)^k and
w_m(mu) = prod_cells (h^2 - m^2) / h^2.  Passing ``divided=True`` uses
c_k / k! instead, which only rescales F by prod_l 1/k_l!.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Optional

from .exactalg import MPoly, Series, qpochhammer_inf, series_pow
from .partitions import Partition, enumerate_partitions
from .qseries import FitResult, fit_series

M = MPoly.var("m")


@lru_cache(maxsize=None)
def hook_numerator(mu: Partition):
    """(coefficients of prod (h^2 - u) in u = m^2, prod h^2)."""
    squares = [h * h for h in Partition(mu).hooks()]
    den = 1
    for h2 in squares:
        den *= h2
    # Kronecker substitution: prod (h^2 + B) read in base B gives the
    # absolute values of the coefficients once B exceeds all of them
    bits = sum(h2.bit_length() + 1 for h2 in squares) + 1
    packed = 1
    for h2 in squares:
        packed *= h2 + (1 << bits)
    mask = (1 << bits) - 1
    num = []
    for i in range(len(squares) + 1):
        digit = packed & mask
        packed >>= bits
        num.append(-digit if i % 2 else digit)
    return tuple(num), den


def _u_to_m(coeffs) -> MPoly:
    return MPoly({(2 * i,): Fraction(c) for i, c in enumerate(coeffs) if c}, ("m",))


def w_weight(mu, m=None):
    """prod over cells (h^2 - m^2) / h^2; a polynomial in m, or its value at m."""
    num, den = hook_numerator(Partition(mu))
    if m is None:
        return _u_to_m([Fraction(c, den) for c in num])
    u = Fraction(m) ** 2
    return sum((Fraction(c, den) * u**i for i, c in enumerate(num)), Fraction(0))


def content_power_sum(mu, k: int, divided: bool = False) -> Fraction:
    """sum over cells of (j - i)^k, with 0^0 = 1; divided by k! on request."""
    total = Fraction(sum(c**k for c in Partition(mu).contents()))
    return total / factorial(k) if divided else total


def insertion_factor(mu, ks, divided: bool = False) -> Fraction:
    out = Fraction(1)
    for k in ks:
        out *= content_power_sum(mu, k, divided)
        if not out:
            break
    return out


def _f_coefficient(job):
    """Coefficient list in u = m^2 of the q^n term; top level so it pickles."""
    n, ks, divided = job
    # integer numerators over one common denominator
    acc, common = [], 1
    for mu in enumerate_partitions(n):
        c = insertion_factor(mu, ks, divided)
        if not c:
            continue
        num, den = hook_numerator(mu)
        den *= c.denominator
        g = gcd(common, den)
        lift, scale = den // g, common // g * c.numerator
        if lift != 1:
            acc = [a * lift for a in acc]
            common *= lift
        if len(acc) < len(num):
            acc += [0] * (len(num) - len(acc))
        for i, v in enumerate(num):
            acc[i] += scale * v
    return [Fraction(a, common) for a in acc]


@dataclass(frozen=True)
class CorrelationSpec:
    ks: tuple = ()
    order: int = 10
    m: Optional[Fraction] = None

    @property
    def weight_bound(self) -> int:
        return 2 * len(self.ks) + sum(self.ks)

    @property
    def m_degree_bound(self) -> int:
        return 2 * len(self.ks) + 2 * sum(k // 2 for k in self.ks)


def _evaluate(coeffs, m):
    if m is None:
        return _u_to_m(coeffs)
    u = Fraction(m) ** 2
    return sum((c * u**i for i, c in enumerate(coeffs)), Fraction(0))


def localization_F(ks, order: int, m=None, mapper=map, divided: bool = False) -> Series:
    """F(ks; m, q) to q^order, symbolic in m unless a value is given."""
    ks = tuple(int(k) for k in ks)
    rows = list(mapper(_f_coefficient, [(n, ks, divided) for n in range(order + 1)]))
    return Series([_evaluate(r, m) for r in rows], order)


def rank1_product(order: int, m=None) -> Series:
    """(q; q)_inf^(m^2 - 1)."""
    e = M * M - 1 if m is None else Fraction(m) ** 2 - 1
    return series_pow(qpochhammer_inf(order), e)


@dataclass
class RankOneResult:
    localization: Series
    product: Series

    @property
    def equal(self) -> bool:
        return self.localization == self.product


def z_rank1(order: int, m=None, mapper=map) -> RankOneResult:
    """The partition function both as a sum over partitions and as a product."""
    return RankOneResult(localization_F((), order, m, mapper), rank1_product(order, m))


def m_degree(c) -> int:
    c = MPoly.coerce(c)
    return c.degree("m") if c.terms else -1


@dataclass
class QuasimodularReport:
    spec: CorrelationSpec
    ratio: Series
    fit: FitResult
    degree_ok: bool
    worst_degree: int
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.fit.ok and self.degree_ok


def quasimodular_report(ks, order: int, max_weight: int = None, guard: int = 5, mapper=map) -> QuasimodularReport:
    """Fit F / Z into quasimodular forms and check the m-degree bound on F / Z."""
    spec = CorrelationSpec(tuple(ks), order)
    W = spec.weight_bound if max_weight is None else max_weight
    F = localization_F(spec.ks, order, mapper=mapper)
    ratio = F * z_rank1_inverse(order)
    worst = max((m_degree(ratio[n]) for n in range(order + 1)), default=-1)
    fit = fit_series(ratio, W, guard)
    return QuasimodularReport(spec, ratio, fit, worst <= spec.m_degree_bound, worst)


def z_rank1_inverse(order: int) -> Series:
    """1 / Z = (q; q)_inf^(1 - m^2)."""
    return series_pow(qpochhammer_inf(order), 1 - M * M)


# -- the theta-product trace formula with one insertion ------------------------------
# Laurent series in (x, y) with q-truncation: {(q, x, y): Fraction}.  Every
# monomial x^a y^b q^n appearing in a factor has a, b <= n, so dropping
# exponents below a cut L only disturbs exponents below L + order.
class _Trunc:
    def __init__(self, order, xlow, ylow):
        self.order, self.xlow, self.ylow = order, xlow, ylow

    def keep(self, n, a, b):
        return n <= self.order and a >= self.xlow and b >= self.ylow

    def mul(self, A, B):
        out = {}
        for (n1, a1, b1), c1 in A.items():
            for (n2, a2, b2), c2 in B.items():
                key = (n1 + n2, a1 + a2, b1 + b2)
                if self.keep(*key):
                    out[key] = out.get(key, 0) + c1 * c2
        return {k: v for k, v in out.items() if v}

    def geometric(self, n, a, b):
        """1 / (1 - x^a y^b q^n), expanded in powers of the monomial."""
        if n == 0 and a >= 0 and b >= 0:
            raise ValueError("expansion does not converge in the chosen annulus")
        out = {}
        j = 0
        while self.keep(j * n, j * a, j * b):
            out[(j * n, j * a, j * b)] = Fraction(1)
            j += 1
        return out

    def linear(self, n, a, b):
        """1 - x^a y^b q^n."""
        out = {(0, 0, 0): Fraction(1)}
        if self.keep(n, a, b):
            out[(n, a, b)] = out.get((n, a, b), 0) - 1
        return {k: v for k, v in out.items() if v}

    def power(self, A, e):
        out = {(0, 0, 0): Fraction(1)}
        for _ in range(e):
            out = self.mul(out, A)
        return out

    def theta(self, a, b, inverse=False):
        """theta(x^a y^b; q) or its inverse, with (x^a y^b)^-1 small."""
        out = {(0, 0, 0): Fraction(1)}
        for k in range(1, self.order + 1):
            f = self.geometric(k, a, b) if inverse else self.linear(k, a, b)
            out = self.mul(out, f)
            g = self.geometric(k, -a, -b) if inverse else self.linear(k, -a, -b)
            out = self.mul(out, g)
            # (q; q)^-2 or (q; q)^2
            h = self.linear(k, 0, 0) if inverse else self.geometric(k, 0, 0)
            out = self.mul(out, self.mul(h, h))
        first = self.geometric(0, -a, -b) if inverse else self.linear(0, -a, -b)
        return self.mul(out, first)


def gtheta_lhs(m: int, order: int, window: int) -> dict:
    """sum_mu q^|mu| w_m(mu) sum_{i >= 1} x^(mu_i - i + 1), x-exponents >= -window.

    Returns {(n, a): coefficient}.
    """
    out = {}
    for n in range(order + 1):
        for mu in enumerate_partitions(n):
            w = w_weight(mu, m)
            if not w:
                continue
            i = 1
            while True:
                a = mu.part(i) - i + 1
                if a < -window and i > len(mu):
                    break
                if a >= -window:
                    out[(n, a)] = out.get((n, a), 0) + w
                i += 1
    return {k: v for k, v in out.items() if v}


def gtheta_rhs(m: int, order: int, window: int) -> dict:
    """[y^0] theta(x)^-1 (theta(xy) / theta(y))^m (q; q)^(m^2 - 1), for |xy| > |y| > 1."""
    tr = _Trunc(order, -window - order - 1, -order - 1)
    body = tr.theta(1, 0, inverse=True)
    body = tr.mul(body, tr.power(tr.theta(1, 1), m))
    body = tr.mul(body, tr.power(tr.theta(0, 1, inverse=True), m))
    z = rank1_product(order, m)
    zdict = {(n, 0, 0): Fraction(z[n]) for n in range(order + 1) if z[n]}
    body = tr.mul(body, zdict)
    out = {}
    for (n, a, b), c in body.items():
        if b == 0 and a >= -window:
            out[(n, a)] = out.get((n, a), 0) + c
    return {k: v for k, v in out.items() if v}


@dataclass
class GthetaReport:
    m: int
    order: int
    window: int
    lhs: dict
    rhs: dict

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def first_difference(self):
        for key in sorted(set(self.lhs) | set(self.rhs)):
            if self.lhs.get(key, 0) != self.rhs.get(key, 0):
                return key
        return None


def gtheta_check(m: int, order: int = 4, window: int = 6) -> GthetaReport:
    if int(m) != m or m < 0:
        raise ValueError("m must be a nonnegative integer")
    m = int(m)
    return GthetaReport(m, order, window, gtheta_lhs(m, order, window), gtheta_rhs(m, order, window))


__all__ = [
    "CorrelationSpec",
    "GthetaReport",
    "QuasimodularReport",
    "RankOneResult",
    "content_power_sum",
    "gtheta_check",
    "gtheta_lhs",
    "gtheta_rhs",
    "hook_numerator",
    "insertion_factor",
    "localization_F",
    "m_degree",
    "quasimodular_report",
    "rank1_product",
    "w_weight",
    "z_rank1",
    "z_rank1_inverse",
]
