"""Eisenstein series, eta quotients, theta functions and quasimodular fitting.

Everything is an exact q-expansion.  Theta coefficients are Laurent
polynomials in ``x``; expansions in the elliptic variable use w = 2 pi i z,
so x = e^w and every stored coefficient is rational.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

from sympy import bernoulli

from .exactalg import MPoly, Series, linear_solve, pochhammer, qpochhammer_inf

X = MPoly.var("x")


def divisor_sigma(n: int, k: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def bernoulli_number(n: int) -> Fraction:
    b = bernoulli(n)
    return Fraction(int(b.p), int(b.q))


@lru_cache(maxsize=None)
def _eisenstein(weight: int, order: int) -> Series:
    coeffs = [-bernoulli_number(weight) / (2 * weight)]
    coeffs += [Fraction(divisor_sigma(n, weight - 1)) for n in range(1, order + 1)]
    return Series(coeffs, order)


def eisenstein(weight: int, order: int) -> Series:
    """E_w = -B_w/(2w) + sum_n sigma_{w-1}(n) q^n for even w >= 2."""
    if weight < 2 or weight % 2:
        raise ValueError("Eisenstein series need an even weight >= 2")
    return _eisenstein(weight, order)


# -- quasimodular forms ----------------------------------------------------------
@dataclass(frozen=True, order=True)
class QmfBasisElement:
    """The monomial E2^a E4^b E6^c."""

    a: int
    b: int
    c: int

    @property
    def weight(self) -> int:
        return 2 * self.a + 4 * self.b + 6 * self.c

    def label(self) -> str:
        parts = []
        for name, e in (("E2", self.a), ("E4", self.b), ("E6", self.c)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def series(self, order: int) -> Series:
        return _monomial_series(self, order)


@lru_cache(maxsize=None)
def _monomial_series(el: QmfBasisElement, order: int) -> Series:
    out = Series.one(order)
    for w, e in ((2, el.a), (4, el.b), (6, el.c)):
        for _ in range(e):
            out = out * eisenstein(w, order)
    return out


def quasimodular_basis(max_weight: int, homogeneous: bool = False):
    """Monomials of weight <= max_weight (or == when homogeneous), by weight then exponents."""
    out = []
    for w in range(0, max_weight + 1, 2):
        if homogeneous and w != max_weight:
            continue
        for c in range(w // 6 + 1):
            for b in range((w - 6 * c) // 4 + 1):
                rest = w - 6 * c - 4 * b
                out.append(QmfBasisElement(rest // 2, b, c))
    return sorted(out, key=lambda e: (e.weight, -e.a, -e.b))


def parse_basis_label(label: str) -> QmfBasisElement:
    exps = {"E2": 0, "E4": 0, "E6": 0}
    if label != "1":
        for factor in label.split("*"):
            name, _, e = factor.partition("^")
            exps[name] += int(e) if e else 1
    return QmfBasisElement(exps["E2"], exps["E4"], exps["E6"])


@dataclass
class FitResult:
    ok: bool
    coefficients: dict = field(default_factory=dict)
    solve_orders: int = 0
    verified_orders: int = 0
    failing_order: Optional[int] = None
    message: str = ""

    def predicted(self, order: int) -> Series:
        out = Series.zero(order)
        for el, c in self.coefficients.items():
            out = out + el.series(order) * c
        return out


def fit_series(s: Series, max_weight: int, guard: int = 5, homogeneous: bool = False) -> FitResult:
    """Write ``s`` in the quasimodular basis of weight <= max_weight.

    The unknowns are fixed by the shortest prefix of q-coefficients on
    which the basis is linearly independent.  Every later coefficient up
    to the truncation of ``s`` is then checked, and at least ``guard`` of
    them must exist.
    """
    if s.prefactor:
        raise ValueError("fit a series without a fractional q-prefactor")
    basis = quasimodular_basis(max_weight, homogeneous)
    order = s.order
    columns = [el.series(order) for el in basis]
    # smallest prefix with full column rank
    rows = None
    for r in range(len(basis), order + 2):
        A = [[col[n] for col in columns] for n in range(r)]
        if linear_solve(A, [Fraction(0)] * r).rank == len(basis):
            rows = r
            break
    if rows is None:
        return FitResult(False, message=f"basis of size {len(basis)} is not determined by {order + 1} coefficients")
    if order + 1 - rows < guard:
        return FitResult(
            False,
            solve_orders=rows,
            message=f"need the series to order {rows + guard - 1}, have {order}",
        )
    A = [[col[n] for col in columns] for n in range(rows)]
    res = linear_solve(A, [s[n] for n in range(rows)])
    if not res.consistent:
        return FitResult(False, solve_orders=rows, failing_order=res.failing_row, message=res.report())
    coeffs = {el: c for el, c in zip(basis, res.solution) if c != 0}
    for n in range(rows, order + 1):
        value = sum((col[n] * c for col, c in zip(columns, res.solution)), Fraction(0))
        if value != s[n]:
            return FitResult(False, coeffs, rows, n - rows, n, f"mismatch at q^{n}")
    return FitResult(True, coeffs, rows, order + 1 - rows, None, "ok")


# -- eta quotients ------------------------------------------------------------------
@dataclass
class EtaQuotient:
    """prod_d eta(d tau)^r_d as q^prefactor * body."""

    factors: tuple
    prefactor: Fraction
    body: Series

    def series(self) -> Series:
        return Series(self.body.coeffs, self.body.order, self.prefactor)


def eta_quotient(factors, order: int) -> EtaQuotient:
    """``factors`` is a sequence of (d, r) meaning eta(d tau)^r."""
    factors = tuple((int(d), int(r)) for d, r in factors)
    prefactor = sum((Fraction(d * r, 24) for d, r in factors), Fraction(0))
    body = Series.one(order)
    for d, r in factors:
        base = qpochhammer_inf(order, d)
        body = body * (base**r if r >= 0 else base.inverse() ** (-r))
    return EtaQuotient(factors, prefactor, body)


# -- theta functions ----------------------------------------------------------------
def theta(order: int, window: Optional[int] = None) -> Series:
    """theta(x; q) = (xq; q)_inf (x^-1; q)_inf / (q; q)_inf^2, coefficients in Z[x, x^-1].

    With ``window`` set, raise if any exponent of x leaves [-window, window].
    """
    num = pochhammer(X, None, order, qpower=1) * pochhammer(X.inverse_monomial(), None, order)
    out = num * qpochhammer_inf(order).inverse() ** 2
    if window is not None:
        for n in range(order + 1):
            c = MPoly.coerce(out[n])
            if c.terms and (c.degree("x") > window or c.min_degree("x") < -window):
                raise ValueError(f"x-window {window} too small at q^{n}")
    return out


def theta11_product(order: int) -> Series:
    """prod_k (1 + x s^(2k-1)) (1 + x^-1 s^(2k-1)) (1 - s^2k) in s = q^(1/2)."""
    out = pochhammer(-X, None, order, qpower=1, step=2)
    out = out * pochhammer(-X.inverse_monomial(), None, order, qpower=1, step=2)
    return out * qpochhammer_inf(order, 2)


def theta11_sum(order: int) -> Series:
    """sum_n x^n s^(n^2) in s = q^(1/2)."""
    coeffs = [MPoly.const(0) for _ in range(order + 1)]
    n = 0
    while n * n <= order:
        term = X**n + (X.inverse_monomial() ** n if n else 0)
        coeffs[n * n] = coeffs[n * n] + term
        n += 1
    return Series(coeffs, order)


def _laurent_moment(c, j: int, shift: Fraction) -> Fraction:
    """sum over x^k in c of coeff * (k + shift)^j."""
    c = MPoly.coerce(c)
    if not c.terms:
        return Fraction(0)
    i = c.gens.index("x") if "x" in c.gens else None
    total = Fraction(0)
    for e, v in c.terms.items():
        k = e[i] if i is not None else 0
        total += v * (k + shift) ** j
    return total


def theta_w_coefficients(order: int, max_power: int, shift=Fraction(1, 2)):
    """Coefficients of w^0..w^max_power in e^(shift w) theta(e^w; q).

    The default shift makes the expansion odd in w.
    """
    th = theta(order)
    out = []
    for j in range(max_power + 1):
        out.append(Series([_laurent_moment(th[n], j, shift) / factorial(j) for n in range(order + 1)], order))
    return out


def theta_z_expansion(order: int, max_power: int):
    """Series a_1, a_3, ... with x^(1/2) theta(x; q) = a_1 w + a_3 w^3 + ..., x = e^w."""
    coeffs = theta_w_coefficients(order, max_power)
    return [coeffs[j] for j in range(1, max_power + 1, 2)]


__all__ = [
    "EtaQuotient",
    "FitResult",
    "QmfBasisElement",
    "bernoulli_number",
    "divisor_sigma",
    "eisenstein",
    "eta_quotient",
    "fit_series",
    "parse_basis_label",
    "quasimodular_basis",
    "theta",
    "theta11_product",
    "theta11_sum",
    "theta_w_coefficients",
    "theta_z_expansion",
]
