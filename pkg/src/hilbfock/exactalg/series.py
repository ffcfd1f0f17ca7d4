"""Truncated power series in q with exact coefficients.

A :class:`Series` knows its coefficients through q^order inclusive.  The
coefficient ring is whatever the entries are: Fractions, MPoly, RatFun, or
anything else supporting ``+``, ``*`` and comparison with 0.  An optional
rational ``prefactor`` records an overall q^prefactor, which is how eta
quotients keep integer-exponent bodies.
"""

from fractions import Fraction
from numbers import Rational

from .mpoly import MPoly, format_coefficient, format_poly


def _is_zero(c):
    return c == 0


class Series:
    __slots__ = ("coeffs", "order", "prefactor")

    def __init__(self, coeffs, order=None, prefactor=0):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        self.order = order
        self.prefactor = Fraction(prefactor)

    @classmethod
    def one(cls, order):
        return cls([Fraction(1)], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def monomial(cls, k, order, coeff=1):
        c = [Fraction(0)] * (order + 1)
        if k <= order:
            c[k] = coeff
        return cls(c, order)

    def __getitem__(self, n):
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"q^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def truncate(self, order):
        return Series(self.coeffs[: order + 1], min(order, self.order), self.prefactor)

    def map(self, f):
        return Series([f(c) for c in self.coeffs], self.order, self.prefactor)

    # -- ring operations --------------------------------------------------
    def _check_prefactor(self, other):
        if self.prefactor != other.prefactor:
            raise ValueError("cannot add series with different q-prefactors")

    def __add__(self, other):
        if not isinstance(other, Series):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return Series(c, self.order, self.prefactor)
        self._check_prefactor(other)
        n = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.prefactor)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.prefactor)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.order, self.prefactor)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        nz_b = [(j, y) for j, y in enumerate(b[: n + 1]) if not _is_zero(y)]
        for i in range(n + 1):
            x = a[i]
            if _is_zero(x):
                continue
            for j, y in nz_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + x * y
        return Series(out, n, self.prefactor + other.prefactor)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.order, self.prefactor)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return Series([c / other for c in self.coeffs], self.order, self.prefactor)

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        a = self.coeffs
        if _is_zero(a[0]):
            raise ZeroDivisionError("constant term is zero")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = Fraction(0)
            for k in range(1, n + 1):
                if not _is_zero(a[k]):
                    s = s + a[k] * out[n - k]
            out.append(-s * inv0)
        return Series(out, self.order, -self.prefactor)

    def __pow__(self, k):
        if not isinstance(k, int):
            return series_pow(self, k)
        if k < 0:
            return self.inverse() ** (-k)
        result = Series.one(self.order)
        result.prefactor = Fraction(0)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.prefactor == other.prefactor and all(
            _is_zero(a - b) for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])
        )

    __hash__ = None

    # -- operators on q ---------------------------------------------------
    def shift(self, k):
        """Multiply by q^k (k may be negative if the low terms vanish)."""
        if k >= 0:
            return Series([Fraction(0)] * k + self.coeffs, self.order, self.prefactor)
        if any(not _is_zero(c) for c in self.coeffs[:-k]):
            raise ValueError("shift would produce negative powers")
        return Series(self.coeffs[-k:], self.order + k, self.prefactor)

    def absorb_prefactor(self):
        """Fold an integer prefactor into the coefficients."""
        if self.prefactor.denominator != 1:
            raise ValueError(f"prefactor q^{self.prefactor} is not integral")
        k = int(self.prefactor)
        s = Series(self.coeffs, self.order, 0)
        return s.shift(k) if k else s

    def substitute_power(self, d, order=None):
        """Series in q^d, truncated at ``order`` (default: same order)."""
        order = self.order * d if order is None else order
        out = [Fraction(0)] * (order + 1)
        for n, c in enumerate(self.coeffs):
            if n * d > order:
                break
            out[n * d] = c
        return Series(out, order, self.prefactor * d)

    def q_derivative(self):
        """q d/dq, ignoring the prefactor."""
        return Series([c * n for n, c in enumerate(self.coeffs)], self.order, self.prefactor)

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"Series({format_series(self)!r})"


def _format_coeff_ring(c):
    if isinstance(c, (int, Rational)):
        return format_coefficient(c), Fraction(c) < 0, Fraction(c) in (1, -1)
    if isinstance(c, MPoly) and c.is_constant():
        v = c.constant_value()
        return format_coefficient(v), v < 0, v in (1, -1)
    return f"({c})", False, False


def format_series(s: Series, var="q") -> str:
    """Canonical text form, e.g. ``1 - q + 3/2*q^2 + O(q^3)``."""
    parts = []
    for n, c in enumerate(s.coeffs):
        if _is_zero(c):
            continue
        text, negative, unit = _format_coeff_ring(c)
        mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
        if negative:
            text = text[1:]
        if not mono:
            body = text
        elif unit:
            body = mono
        else:
            body = f"{text}*{mono}"
        parts.append(("-" if negative else "+", body))
    tail = f"O({var}^{s.order + 1})" if s.order + 1 != 1 else f"O({var})"
    if not parts:
        out = tail
    else:
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        out += f" + {tail}"
    if s.prefactor:
        out = f"q^({format_coefficient(s.prefactor)})*({out})"
    return out


# -- transcendental operations ---------------------------------------------
def series_exp(s: Series, order=None) -> Series:
    """exp(s) for s with zero constant term."""
    order = s.order if order is None else min(order, s.order)
    if not _is_zero(s.coeffs[0]):
        raise ValueError("exp needs a series with zero constant term")
    g = s.coeffs
    out = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if not _is_zero(g[k]):
                acc = acc + g[k] * out[n - k] * k
        out.append(acc * Fraction(1, n))
    return Series(out, order)


def series_log(s: Series, order=None) -> Series:
    """log(s) for s with constant term 1."""
    order = s.order if order is None else min(order, s.order)
    if not _is_zero(s.coeffs[0] - 1):
        raise ValueError("log needs a series with constant term 1")
    f = s.coeffs
    out = [Fraction(0)]
    for n in range(1, order + 1):
        acc = f[n] * n
        for k in range(1, n):
            if not _is_zero(out[k]) and not _is_zero(f[n - k]):
                acc = acc - out[k] * f[n - k] * k
        out.append(acc * Fraction(1, n))
    return Series(out, order)


def series_pow(s: Series, e, order=None) -> Series:
    """s**e for constant term 1; e may be a rational or a polynomial in m.

    Uses the recurrence n f_n = sum_k ((e+1)k - n) s_k f_{n-k}, which is
    exp(e log s) without forming the logarithm.
    """
    order = s.order if order is None else min(order, s.order)
    if not _is_zero(s.coeffs[0] - 1):
        raise ValueError("pow needs a series with constant term 1")
    if s.prefactor and not isinstance(e, (int, Rational)):
        raise ValueError("symbolic powers need a series without q-prefactor")
    a = s.coeffs
    out = [Fraction(1)]
    e1 = e + 1
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if not _is_zero(a[k]):
                acc = acc + (e1 * k - n) * a[k] * out[n - k]
        out.append(acc * Fraction(1, n))
    return Series(out, order, s.prefactor * e if isinstance(e, (int, Rational)) else 0)


def pochhammer(a, n, order, qpower=0, step=1) -> Series:
    """The product of (1 - a q^(qpower + k*step)) for k = 0..n, or k >= 0 if n is None.

    With the default arguments this is (a;q)_n including the factor k = n,
    so (a;q)_0 = 1 - a.  ``pochhammer(1, None, N, qpower=1)`` is (q;q)_inf.
    """
    result = [Fraction(1)] + [Fraction(0)] * order
    k = 0
    while n is None or k <= n:
        e = qpower + k * step
        if e > order:
            if step <= 0:
                raise ValueError("infinite product does not truncate")
            break
        if e < 0:
            raise ValueError("negative q-exponent in a product factor")
        # multiply in place by (1 - a q^e), highest degree first
        for d in range(order, e - 1, -1):
            if not _is_zero(result[d - e]):
                result[d] = result[d] - a * result[d - e]
        k += 1
    return Series(result, order)


def qpochhammer_inf(order, d=1) -> Series:
    """(q^d; q^d)_inf."""
    return pochhammer(1, None, order, qpower=d, step=d)


def series_from_poly(p: MPoly, var="q", order=None) -> Series:
    """Split a polynomial in q into a series with coefficients in the other variables."""
    top = p.degree(var) if order is None else order
    return Series([p.coeff(var, k) for k in range(top + 1)], top)


def format_poly_or_number(c) -> str:
    if isinstance(c, MPoly):
        return format_poly(c)
    return format_coefficient(c) if isinstance(c, (int, Rational)) else str(c)
