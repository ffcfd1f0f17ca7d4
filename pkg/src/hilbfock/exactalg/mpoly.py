"""Sparse multivariate Laurent polynomials over the rationals."""

import re
from fractions import Fraction
from numbers import Rational

# Variables listed here sort first, in this order; any others follow by name.
CANONICAL_ORDER = ("t1", "t2", "m", "z1", "z2", "x", "y", "q", "a1", "a2", "alpha", "t")


def _var_key(name):
    if name in CANONICAL_ORDER:
        return (0, CANONICAL_ORDER.index(name), name)
    return (1, 0, name)


def _merge_gens(g1, g2):
    if g1 == g2:
        return g1
    return tuple(sorted(set(g1) | set(g2), key=_var_key))


def _embed(terms, old, new):
    if old == new:
        return terms
    pos = [new.index(g) for g in old]
    size = len(new)
    out = {}
    for exp, c in terms.items():
        e = [0] * size
        for p, k in zip(pos, exp):
            e[p] = k
        out[tuple(e)] = c
    return out


class MPoly:
    """Polynomial in named variables with Fraction coefficients.

    Exponents may be negative, so monomials are units and division by a
    monomial is exact.  Instances are treated as immutable.
    """

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, terms=None, gens=()):
        self.gens = tuple(gens)
        self.terms = {}
        self._hash = None
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[tuple(exp)] = Fraction(c)

    @classmethod
    def _raw(cls, terms, gens):
        obj = cls.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name):
        return cls._raw({(1,): Fraction(1)}, (name,))

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._raw({(): c} if c else {}, ())

    @classmethod
    def monomial(cls, powers, coeff=1):
        """``monomial({'t1': 2, 't2': -1}, 3)`` is 3*t1^2*t2^-1."""
        gens = tuple(sorted(powers, key=_var_key))
        return cls({tuple(powers[g] for g in gens): coeff}, gens)

    # -- coercion -------------------------------------------------------
    @staticmethod
    def coerce(other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.const(other)
        return NotImplemented

    def _aligned(self, other):
        gens = _merge_gens(self.gens, other.gens)
        return gens, _embed(self.terms, self.gens, gens), _embed(other.terms, other.gens, gens)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        for exp, c in self.terms.items():
            if not any(exp):
                return c
        return Fraction(0)

    def is_monomial(self):
        return len(self.terms) == 1

    def variables(self):
        """Variables that actually occur."""
        used = set()
        for exp in self.terms:
            used.update(g for g, k in zip(self.gens, exp) if k)
        return tuple(sorted(used, key=_var_key))

    def trim(self):
        """Drop generators that do not occur."""
        used = self.variables()
        if used == self.gens:
            return self
        idx = [self.gens.index(g) for g in used]
        return MPoly._raw({tuple(e[i] for i in idx): c for e, c in self.terms.items()}, used)

    # -- arithmetic -----------------------------------------------------
    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self.terms.items()}, self.gens)

    def __add__(self, other):
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return other
        gens, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(out, gens)

    __radd__ = __add__

    def __sub__(self, other):
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return MPoly._raw({}, self.gens)
            f = Fraction(other)
            return MPoly._raw({e: c * f for e, c in self.terms.items()}, self.gens)
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return other
        gens, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e1, c1 in b.items():
            for e2, c2 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(out, gens)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        if isinstance(other, MPoly):
            if other.is_monomial():
                return self * other.inverse_monomial()
            from .ratfun import RatFun

            return RatFun(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        from .ratfun import RatFun

        return RatFun(MPoly.coerce(other), self)

    def inverse_monomial(self):
        if not self.is_monomial():
            raise ZeroDivisionError("only monomials are invertible polynomials")
        (e, c), = self.terms.items()
        return MPoly._raw({tuple(-k for k in e): 1 / c}, self.gens)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse_monomial() ** (-n)
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        if self.gens == other.gens:
            return self.terms == other.terms
        return self.trim().terms == other.trim().terms and self.variables() == other.variables()

    def __hash__(self):
        if self._hash is None:
            t = self.trim()
            if t.is_constant():
                self._hash = hash(t.constant_value())
            else:
                self._hash = hash((t.gens, frozenset(t.terms.items())))
        return self._hash

    # -- inspection -----------------------------------------------------
    def degree(self, var=None) -> int:
        """Total degree, or the degree in one variable; -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.gens:
            return 0
        i = self.gens.index(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var) -> int:
        if var not in self.gens or not self.terms:
            return 0
        i = self.gens.index(var)
        return min(e[i] for e in self.terms)

    def coeff(self, var, k):
        """Coefficient of var^k as a polynomial in the remaining variables."""
        if var not in self.gens:
            return self if k == 0 else MPoly.const(0)
        i = self.gens.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return MPoly._raw(out, self.gens).trim()

    def coefficient_of(self, powers: dict) -> Fraction:
        """Rational coefficient of the monomial given as {var: exponent}."""
        for g in powers:
            if g not in self.gens and powers[g]:
                return Fraction(0)
        exp = tuple(powers.get(g, 0) for g in self.gens)
        return self.terms.get(exp, Fraction(0))

    def subs(self, values: dict):
        """Substitute numbers or polynomials for variables."""
        keep = [g for g in self.gens if g not in values]
        keep_idx = [self.gens.index(g) for g in keep]
        sub_idx = [(self.gens.index(g), values[g]) for g in self.gens if g in values]
        result = MPoly._raw({}, tuple(keep))
        cache = {}
        for e, c in self.terms.items():
            factor = c
            for i, val in sub_idx:
                k = e[i]
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = val ** k if k > 0 else 1 / (val ** -k)
                    factor = factor * cache[key]
            mono = MPoly._raw({tuple(e[i] for i in keep_idx): Fraction(1)}, tuple(keep))
            result = result + mono * factor
        return result

    def derivative(self, var):
        if var not in self.gens:
            return MPoly.const(0)
        i = self.gens.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return MPoly._raw(out, self.gens)

    def sorted_terms(self):
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MPoly({format_poly(self)!r})"


def format_coefficient(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: MPoly) -> str:
    """Canonical text form, e.g. ``2*t1^2*t2 - m^2``."""
    if not p.terms:
        return "0"
    pieces = []
    for exp, c in p.sorted_terms():
        mono = "*".join(
            g if k == 1 else f"{g}^{k}" for g, k in zip(p.gens, exp) if k
        )
        mag = abs(c)
        if not mono:
            body = format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coefficient(mag)}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def parse_poly(text: str) -> MPoly:
    """Inverse of :func:`format_poly` for canonical strings."""
    text = text.strip()
    if text == "0":
        return MPoly.const(0)
    result = MPoly.const(0)
    parts = re.split(r"\s+([+-])\s+", text)
    signs = [1]
    bodies = [parts[0]]
    for i in range(1, len(parts), 2):
        signs.append(1 if parts[i] == "+" else -1)
        bodies.append(parts[i + 1])
    for s, body in zip(signs, bodies):
        body = body.strip()
        if body.startswith("-"):
            s, body = -s, body[1:]
        coeff = Fraction(1)
        powers = {}
        for factor in body.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
            else:
                name, _, k = factor.partition("^")
                powers[name] = powers.get(name, 0) + (int(k) if k else 1)
        if powers:
            result = result + MPoly.monomial(powers, s * coeff)
        else:
            result = result + s * coeff
    return result


def poly_var(name: str) -> MPoly:
    return MPoly.var(name)


def poly_vars(names: str):
    return tuple(MPoly.var(n) for n in names.split())
