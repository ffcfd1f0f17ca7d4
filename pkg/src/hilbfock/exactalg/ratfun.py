"""Rational functions as reduced quotients of Laurent polynomials."""

from fractions import Fraction
from numbers import Rational

from .mpoly import MPoly, _merge_gens


def _poly_to_dense(p: MPoly, var: str) -> list:
    """Coefficient list, lowest degree first, for a polynomial in one variable."""
    deg = p.degree(var)
    out = [Fraction(0)] * (deg + 1)
    i = p.gens.index(var) if var in p.gens else None
    for e, c in p.terms.items():
        out[e[i] if i is not None else 0] = c
    return out


def _dense_to_poly(coeffs, var: str) -> MPoly:
    return MPoly({(k,): c for k, c in enumerate(coeffs) if c}, (var,))


def _dense_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for k, c in enumerate(b):
            a[shift + k] -= f * c
        a.pop()
        while a and not a[-1]:
            a.pop()
    return q, a


def _dense_gcd(a, b):
    while b and any(b):
        _, r = _dense_divmod(a, b)
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _shift_to_polynomial(p: MPoly):
    """Split off the monomial making every exponent of p nonnegative and minimal."""
    if not p.terms:
        return p, {}
    mins = {g: p.min_degree(g) for g in p.gens}
    shift = MPoly.monomial({g: -k for g, k in mins.items()}) if any(mins.values()) else None
    return (p * shift if shift is not None else p), mins


def _gcd(a: MPoly, b: MPoly) -> MPoly:
    """Monic gcd of two ordinary polynomials."""
    names = _merge_gens(a.variables(), b.variables())
    if len(names) == 0:
        return MPoly.const(1)
    if len(names) == 1:
        var = names[0]
        g = _dense_gcd(_poly_to_dense(a, var), _poly_to_dense(b, var))
        return _dense_to_poly(g, var)
    # several variables: defer to sympy's multivariate gcd
    import sympy

    syms = sympy.symbols(names)
    pa = sympy.Poly.from_dict({_restrict(e, a, names): c for e, c in a.terms.items()}, *syms, domain="QQ")
    pb = sympy.Poly.from_dict({_restrict(e, b, names): c for e, c in b.terms.items()}, *syms, domain="QQ")
    g = pa.gcd(pb)
    return MPoly({k: Fraction(int(v.numerator), int(v.denominator)) for k, v in g.as_dict().items()}, names)


def _restrict(exp, p, names):
    return tuple(exp[p.gens.index(n)] if n in p.gens else 0 for n in names)


def _exact_div(a: MPoly, b: MPoly) -> MPoly:
    """a / b when b divides a."""
    names = _merge_gens(a.variables(), b.variables())
    if len(names) <= 1:
        var = names[0] if names else "x"
        q, r = _dense_divmod(_poly_to_dense(a, var), _poly_to_dense(b, var))
        if r and any(r):
            raise ArithmeticError("inexact division")
        return _dense_to_poly(q, var)
    import sympy

    syms = sympy.symbols(names)
    pa = sympy.Poly.from_dict({_restrict(e, a, names): c for e, c in a.terms.items()}, *syms, domain="QQ")
    pb = sympy.Poly.from_dict({_restrict(e, b, names): c for e, c in b.terms.items()}, *syms, domain="QQ")
    q, r = pa.div(pb)
    if not r.is_zero:
        raise ArithmeticError("inexact division")
    return MPoly({k: Fraction(int(v.numerator), int(v.denominator)) for k, v in q.as_dict().items()}, names)


class RatFun:
    """Quotient num/den, kept gcd-reduced.

    Normal form: the denominator has nonnegative exponents with no monomial
    factor and leading coefficient 1.  A monomial denominator is absorbed
    into the numerator, so Laurent polynomials have denominator 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = MPoly.coerce(num), MPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = self._normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @staticmethod
    def _normalize(num, den):
        if not num:
            return MPoly.const(0), MPoly.const(1)
        if den.is_monomial():
            return num * den.inverse_monomial(), MPoly.const(1)
        den, mins = _shift_to_polynomial(den)
        if any(mins.values()):
            num = num * MPoly.monomial({g: -k for g, k in mins.items()})
        numpoly, nmins = _shift_to_polynomial(num)
        g = _gcd(numpoly, den)
        if not g.is_constant():
            numpoly = _exact_div(numpoly, g)
            den = _exact_div(den, g)
        if any(nmins.values()):
            numpoly = numpoly * MPoly.monomial(nmins)
        lead = den.sorted_terms()[0][1]
        if lead != 1:
            numpoly, den = numpoly * (1 / lead), den * (1 / lead)
        if den.is_monomial():
            return numpoly * den.inverse_monomial(), MPoly.const(1)
        return numpoly.trim(), den.trim()

    @staticmethod
    def coerce(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (MPoly, int, Rational)):
            return RatFun._raw(MPoly.coerce(other), MPoly.const(1))
        return NotImplemented

    def is_polynomial(self):
        return self.den == 1

    def as_poly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return RatFun._raw(self.num * other, self.den) if other else RatFun.coerce(0)
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun.coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFun(self.den ** (-n), self.num ** (-n))
        return RatFun._raw(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = RatFun.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den)) if self.den != 1 else hash(self.num)

    def subs(self, values):
        num = self.num.subs(values)
        den = self.den.subs(values)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at {values}")
        return num / den if isinstance(num, MPoly) and isinstance(den, MPoly) else RatFun(num, den)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFun({str(self)!r})"
