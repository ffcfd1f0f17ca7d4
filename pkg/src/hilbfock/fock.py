"""The Fock space as polynomials in power sums p_1, p_2, ... over Q(t1, t2).

A :class:`FockElement` maps partitions mu to the coefficient of
p_mu = p_{mu_1} p_{mu_2} ...; the empty partition is the vacuum |0>.
Creation alpha_{-k} multiplies by p_k and annihilation alpha_k acts as
(k/(t1 t2)) d/dp_k.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactalg import MPoly, RatFun, format_poly, linear_solve, parse_poly
from .partitions import EMPTY, Partition, enumerate_partitions, format_partition, parse_partition

T1 = MPoly.var("t1")
T2 = MPoly.var("t2")
T1T2 = T1 * T2


def _zero(c):
    return c == 0


class FockElement:
    """Finite linear combination of power-sum monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mu, c in terms.items():
                if not _zero(c):
                    key = Partition(sorted(mu, reverse=True))
                    self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {k: v for k, v in self.terms.items() if not _zero(v)}

    @classmethod
    def vacuum(cls):
        return cls({EMPTY: Fraction(1)})

    @classmethod
    def power_sum(cls, mu, coeff=1):
        return cls({Partition(mu): Fraction(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, mu):
        return self.terms.get(Partition(mu), Fraction(0))

    def degrees(self):
        return sorted({mu.size for mu in self.terms})

    def homogeneous_part(self, n):
        return FockElement({mu: c for mu, c in self.terms.items() if mu.size == n})

    def __add__(self, other):
        if not isinstance(other, FockElement):
            return NotImplemented
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return FockElement(out)

    def __neg__(self):
        return FockElement({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return FockElement({mu: v * c for mu, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FockElement):
            out = {}
            for mu, a in self.terms.items():
                for lam, b in other.terms.items():
                    key = Partition(sorted(mu + lam, reverse=True))
                    out[key] = out.get(key, 0) + a * b
            return FockElement(out)
        return self.scale(other)

    def __rmul__(self, other):
        return FockElement({mu: other * v for mu, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(_zero(self.coefficient(k) - other.coefficient(k)) for k in keys)

    __hash__ = None

    def map_coefficients(self, f):
        return FockElement({mu: f(c) for mu, c in self.terms.items()})

    def subs(self, values):
        """Substitute values for t1, t2, m, ... in every coefficient."""
        return self.map_coefficients(lambda c: c.subs(values) if hasattr(c, "subs") else c)

    def __repr__(self):
        body = " + ".join(f"({_coeff_str(c)})*p[{format_partition(mu)}]" for mu, c in self._sorted())
        return f"FockElement({body or '0'})"

    def _sorted(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, kv[0]), reverse=True)

    def to_json(self):
        """List of [partition, coefficient] string pairs, highest degree first."""
        return [[format_partition(mu), _coeff_str(c)] for mu, c in self._sorted()]

    @classmethod
    def from_json(cls, data):
        return cls({parse_partition(mu): parse_poly(c) for mu, c in data})


def _coeff_str(c):
    if isinstance(c, MPoly):
        return format_poly(c)
    if isinstance(c, (int, Fraction)):
        return format_poly(MPoly.const(c))
    return str(c)


# -- Nakajima operators ------------------------------------------------------
def create(k: int, v: FockElement) -> FockElement:
    """alpha_{-k}: multiply by p_k."""
    if k <= 0:
        raise ValueError("creation needs k >= 1")
    return FockElement({mu + (k,): c for mu, c in v.terms.items()})


def annihilate(k: int, v: FockElement, t1t2=None) -> FockElement:
    """alpha_k = (k / (t1 t2)) d/dp_k.

    ``t1t2`` replaces the symbolic product t1*t2, e.g. -1 on the fermionic side.
    """
    if k <= 0:
        raise ValueError("annihilation needs k >= 1")
    scale = (T1T2 if t1t2 is None else Fraction(t1t2))
    inv = scale.inverse_monomial() if isinstance(scale, MPoly) else 1 / scale
    out = {}
    for mu, c in v.terms.items():
        mult = mu.count(k)
        if mult:
            rest = list(mu)
            rest.remove(k)
            key = Partition(rest)
            out[key] = out.get(key, 0) + c * (inv * (k * mult))
    return FockElement(out)


def z_factor(mu) -> int:
    """z(mu) = (prod of parts) * (prod of multiplicity factorials)."""
    r = 1
    for p in mu:
        r *= p
    for mult in Counter(mu).values():
        r *= factorial(mult)
    return r


def power_sum_norm(mu, t1t2=None):
    """<p_mu, p_mu> = (-1)^(|mu| - l(mu)) z(mu) / (t1 t2)^l(mu)."""
    mu = Partition(mu)
    sign = -1 if (mu.size - len(mu)) % 2 else 1
    if t1t2 is None:
        return T1T2 ** (-len(mu)) * (sign * z_factor(mu))
    return Fraction(sign * z_factor(mu)) / Fraction(t1t2) ** len(mu)


def inner(u: FockElement, v: FockElement, t1t2=None):
    """Bilinear pairing, diagonal in the power-sum basis."""
    total = Fraction(0)
    small, big = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    for mu, a in small.terms.items():
        b = big.terms.get(mu)
        if b is not None:
            total = total + a * b * power_sum_norm(mu, t1t2)
    return total


def p1_power(n: int) -> FockElement:
    return FockElement.power_sum([1] * n)


# -- monomial symmetric functions ---------------------------------------------
def _times_power_sum(k, lam, coeff, out):
    """Accumulate p_k * m_lam into ``out`` (monomial basis)."""
    for u in set(lam) | {0}:
        parts = list(lam)
        if u:
            parts.remove(u)
        parts.append(u + k)
        new = Partition(sorted(parts, reverse=True))
        out[new] = out.get(new, 0) + coeff * new.count(u + k)


@lru_cache(maxsize=None)
def power_sum_in_monomials(mu: Partition) -> dict:
    """p_mu expanded in monomial symmetric functions (integer coefficients)."""
    if not mu:
        return {EMPTY: 1}
    rest = power_sum_in_monomials(Partition(mu[1:]))
    out = {}
    for lam, c in rest.items():
        _times_power_sum(mu[0], lam, c, out)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def monomials_in_power_sums(n: int) -> dict:
    """m_lam for |lam| = n as {lam: {mu: rational}} in the power-sum basis."""
    parts = enumerate_partitions(n)
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    # rows: p_mu = sum_lam M[mu][lam] m_lam; solve M^T-style for each m_lam
    M = [[Fraction(0)] * size for _ in range(size)]
    for i, mu in enumerate(parts):
        for lam, c in power_sum_in_monomials(mu).items():
            M[i][index[lam]] = Fraction(c)
    # m_lam = sum_mu X[lam][mu] p_mu, i.e. X M = I, so M^T X^T = I
    MT = [[M[j][i] for j in range(size)] for i in range(size)]
    out = {}
    for col, lam in enumerate(parts):
        e = [Fraction(int(i == col)) for i in range(size)]
        res = linear_solve(MT, e)
        out[lam] = {parts[j]: x for j, x in enumerate(res.solution) if x}
    return out


# -- Jack polynomials ---------------------------------------------------------
ALPHA = MPoly.var("alpha")


@lru_cache(maxsize=None)
def _jack_alpha_degree(n: int) -> dict:
    """Integral-form Jack polynomials J_lam(alpha) of degree n in power sums.

    Gram-Schmidt on monomials in increasing lexicographic order (a linear
    extension of dominance) for the pairing <p_mu, p_mu> = z(mu) alpha^l(mu),
    then scaled so the coefficient of p_1^n is 1.
    """
    mono = monomials_in_power_sums(n)
    order = list(reversed(enumerate_partitions(n)))
    norms = {mu: RatFun(ALPHA ** len(mu) * z_factor(mu)) for mu in order}

    def pair(f, g):
        total = RatFun(0)
        for mu, a in f.items():
            b = g.get(mu)
            if b is not None:
                total = total + a * b * norms[mu]
        return total

    done = []
    result = {}
    for lam in order:
        vec = {mu: RatFun(c) for mu, c in mono[lam].items()}
        for prev, prev_norm in done:
            proj = pair(vec, prev)
            if proj:
                f = proj / prev_norm
                for mu, c in prev.items():
                    vec[mu] = vec.get(mu, RatFun(0)) - f * c
                vec = {mu: c for mu, c in vec.items() if c}
        done.append((vec, pair(vec, vec)))
        lead = vec[Partition([1] * n)] if n else RatFun(1)
        jack = {}
        for mu, c in vec.items():
            q = c / lead
            if not q.is_polynomial():
                raise ArithmeticError(f"Jack coefficient is not polynomial: {lam} {mu} {q}")
            jack[mu] = q.as_poly()
        result[lam] = jack
    return result


def jack_alpha(lam) -> dict:
    """Integral-form Jack polynomial J_lam as {mu: polynomial in alpha}."""
    lam = Partition(lam)
    return dict(_jack_alpha_degree(lam.size)[lam])


@lru_cache(maxsize=None)
def _jack_cached(lam: Partition) -> FockElement:
    n = lam.size
    out = {}
    for mu, theta in jack_alpha(lam).items():
        # alpha = -t1/t2, then multiply by t1^l(mu) t2^n
        c = MPoly.const(0)
        for (k,), a in theta.terms.items() if theta.gens else [((0,), theta.constant_value())]:
            sign = -1 if k % 2 else 1
            c = c + MPoly.monomial({"t1": k + len(mu), "t2": n - k}, sign * a)
        out[mu] = c
    return FockElement(out)


def jack(lam) -> FockElement:
    """The integral-form Jack polynomial normalized by <J, p_1^n> = n!."""
    return _jack_cached(Partition(lam))


# -- Schur functions ----------------------------------------------------------
@lru_cache(maxsize=None)
def _mn_character(beta: frozenset, rho: tuple) -> int:
    """Murnaghan-Nakayama on beta-sets: remove border strips of size rho[0]."""
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - k >= 0 and (b - k) not in beta:
            between = sum(1 for x in beta if b - k < x < b)
            sign = -1 if between % 2 else 1
            total += sign * _mn_character((beta - {b}) | {b - k}, rest)
    return total


def character(lam, rho) -> int:
    """Irreducible symmetric group character chi^lam at cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("sizes differ")
    ell = len(lam)
    beta = frozenset(lam.part(i) + ell - i for i in range(1, ell + 1))
    return _mn_character(beta, tuple(rho))


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition) -> FockElement:
    return FockElement(
        {rho: Fraction(character(lam, rho), z_factor(rho)) for rho in enumerate_partitions(lam.size)}
    )


def schur(lam) -> FockElement:
    """s_lam = sum_rho chi^lam(rho) p_rho / z(rho)."""
    return _schur_cached(Partition(lam))


def power_sum_in_schur(mu) -> dict:
    """p_mu = sum_lam chi^lam(mu) s_lam."""
    mu = Partition(mu)
    return {lam: c for lam in enumerate_partitions(mu.size) if (c := character(lam, mu))}


def fock_dimension(n: int) -> int:
    return len(enumerate_partitions(n))
