"""The charged infinite wedge, free fermions, the boson-fermion map, and the
affine sl2 action in its matrix and principal forms.

A basis vector is a pair (charge c, partition mu) standing for
v_{mu_1 + c} ^ v_{mu_2 + c - 1} ^ ...; its index sequence is
i_j = mu_j - j + 1 + c.
"""

from fractions import Fraction
from math import factorial

from .exactalg import MPoly, RatFun
from .fock import FockElement, annihilate, create, power_sum_in_schur, schur
from .partitions import EMPTY, Partition, charge as blend_charge, format_partition


def _zero(c):
    return c == 0


class WedgeVector:
    """Finite combination of basis vectors keyed by (charge, partition)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for (c, mu), v in (terms or {}).items():
            if not _zero(v):
                key = (int(c), Partition(mu))
                self.terms[key] = self.terms.get(key, 0) + v
        self.terms = {k: v for k, v in self.terms.items() if not _zero(v)}

    @classmethod
    def basis(cls, mu=(), charge=0, coeff=1):
        return cls({(charge, Partition(mu)): Fraction(coeff)})

    @classmethod
    def vacuum(cls, charge=0):
        return cls.basis(EMPTY, charge)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, mu, charge=0):
        return self.terms.get((charge, Partition(mu)), Fraction(0))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return WedgeVector(out)

    def __neg__(self):
        return WedgeVector({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return WedgeVector({k: v * c for k, v in self.terms.items()})

    __mul__ = scale

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, WedgeVector):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(_zero(self.terms.get(k, 0) - other.terms.get(k, 0)) for k in keys)

    __hash__ = None

    def charges(self):
        return sorted({c for c, _ in self.terms})

    def max_energy(self):
        return max((mu.size for _, mu in self.terms), default=0)

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].size, kv[0][1]))
        body = " + ".join(f"({v})*v[{c};{format_partition(mu)}]" for (c, mu), v in items)
        return f"WedgeVector({body or '0'})"


def _linear(f):
    """Extend a basis-vector operation (charge, mu) -> WedgeVector linearly."""

    def apply(w: WedgeVector, *args):
        out = {}
        for (c, mu), v in w.terms.items():
            for key, u in f(c, mu, *args).terms.items():
                out[key] = out.get(key, 0) + v * u
        return WedgeVector(out)

    return apply


def _indices(c, mu, depth):
    return [mu.part(j) - j + 1 + c for j in range(1, depth + 1)]


def _from_indices(indices, c):
    mu = [v + j - 1 - c for j, v in enumerate(indices, start=1)]
    if mu and mu[-1] != 0:
        raise AssertionError("index list does not reach the filled sea")
    return c, Partition(mu)


# -- fermions ------------------------------------------------------------------
def _psi_basis(c, mu, i):
    depth = len(mu) + max(0, c - i) + 2
    idx = _indices(c, mu, depth)
    if i in idx or i <= idx[-1]:
        return WedgeVector()
    j = sum(1 for x in idx if x > i)
    new = idx[:j] + [i] + idx[j:]
    sign = -1 if j % 2 else 1
    return WedgeVector({_from_indices(new, c + 1): Fraction(sign)})


def _psi_star_basis(c, mu, i):
    depth = len(mu) + max(0, c - i) + 2
    idx = _indices(c, mu, depth)
    if i not in idx:
        return WedgeVector()
    j = idx.index(i) + 1
    new = idx[: j - 1] + idx[j:]
    sign = -1 if (j - 1) % 2 else 1
    return WedgeVector({_from_indices(new, c - 1): Fraction(sign)})


psi = _linear(_psi_basis)
psi_star = _linear(_psi_star_basis)


def apply_psi(i: int, w: WedgeVector) -> WedgeVector:
    """psi_i: wedge v_i into the sorted position; zero if already present."""
    return psi(w, i)


def apply_psi_star(i: int, w: WedgeVector) -> WedgeVector:
    """psi*_i: remove v_i with the sign of its position; zero if absent."""
    return psi_star(w, i)


def q_shift(w: WedgeVector, k: int = 1) -> WedgeVector:
    """Q^k: raise every index by k, so the charge moves by k."""
    return WedgeVector({(c + k, mu): v for (c, mu), v in w.terms.items()})


def _bilinear_basis(c, mu, moves):
    """sum over (src, dst, coeff) of coeff * psi_dst psi*_src on one basis vector.

    ``moves`` maps a source index to a list of (destination, coefficient);
    it is called only for indices in the window that can act nontrivially.
    """
    depth = len(mu) + moves.reach + 2
    idx = _indices(c, mu, depth)
    occupied = set(idx)
    bottom = idx[-1]
    out = WedgeVector()
    for pos, src in enumerate(idx, start=1):
        for dst, coeff in moves(src):
            if dst == src:
                out = out + WedgeVector({(c, mu): coeff})
                continue
            if dst in occupied or dst <= bottom:
                continue
            removed = idx[: pos - 1] + idx[pos:]
            j = sum(1 for x in removed if x > dst)
            new = removed[:j] + [dst] + removed[j:]
            sign = (-1) ** ((pos - 1) + j)
            key = _from_indices(new, c)
            out = out + WedgeVector({key: Fraction(sign) * coeff})
    return out


class _Moves:
    """Index map of a fermion bilinear; ``reach`` bounds |destination - source|."""

    def __init__(self, fn, reach):
        self.fn = fn
        self.reach = reach

    def __call__(self, src):
        return self.fn(src)


def alpha_fermionic(k: int, w: WedgeVector) -> WedgeVector:
    """sum_n psi_n psi*_{n+k}: every index i moves to i - k."""
    if k == 0:
        raise ValueError("k must be nonzero")
    moves = _Moves(lambda s: [(s - k, Fraction(1))], abs(k))
    return _linear(_bilinear_basis)(w, moves)


def energy(w: WedgeVector) -> WedgeVector:
    return WedgeVector({key: v * key[1].size for key, v in w.terms.items()})


def f_diag(k: int, w: WedgeVector) -> WedgeVector:
    """Multiply v_mu by sum over cells of (j - i)^k / k!, with 0^0 = 1."""
    out = {}
    for (c, mu), v in w.terms.items():
        total = sum(Fraction(x**k) for x in mu.contents()) / factorial(k)
        out[(c, mu)] = v * total
    return WedgeVector(out)


# -- boson-fermion map ------------------------------------------------------------
def _specialize(c):
    if isinstance(c, (MPoly, RatFun)):
        value = c.subs({"t1": 1, "t2": -1})
        if isinstance(value, RatFun):
            value = value.as_poly()
        if isinstance(value, MPoly):
            if not value.is_constant():
                return value
            return value.constant_value()
        return value
    return c


def phi_iso(v: FockElement) -> WedgeVector:
    """Phi: s_mu -> v_mu at charge 0, after setting t1 = 1, t2 = -1."""
    out = {}
    for mu, c in v.terms.items():
        c = _specialize(c)
        for lam, chi in power_sum_in_schur(mu).items():
            key = (0, lam)
            out[key] = out.get(key, 0) + c * chi
    return WedgeVector(out)


def phi_inverse(w: WedgeVector) -> FockElement:
    out = FockElement()
    for (c, mu), v in w.terms.items():
        if c != 0:
            raise ValueError("Phi is defined on the charge 0 sector")
        out = out + schur(mu).scale(v)
    return out


# -- affine sl2: matrix form ----------------------------------------------------------
# t^j (x) u_i <-> v_{-2j-i}: even indices carry u_0, odd indices carry u_1,
# with e u_1 = u_0, f u_0 = u_1, h u_0 = u_0, h u_1 = -u_1.
def _loop_moves(kind: str, j: int):
    def fn(s):
        if kind == "e":
            return [(s + 1 - 2 * j, Fraction(1))] if s % 2 else []
        if kind == "f":
            return [] if s % 2 else [(s - 1 - 2 * j, Fraction(1))]
        if kind == "h":
            return [(s - 2 * j, Fraction(-1 if s % 2 else 1))]
        raise ValueError(kind)

    return _Moves(fn, abs(2 * j) + 1)


def h0_eigenvalue(c: int, mu) -> int:
    """Vacuum-relative parity count: even indices +1, odd -1, holes opposite."""
    mu = Partition(mu)
    depth = len(mu) + abs(c) + 2
    idx = _indices(c, mu, depth)
    bottom = idx[-1]
    present = set(idx)
    total = 0
    for v in idx:
        if v > 0:
            total += 1 if v % 2 == 0 else -1
    for v in range(bottom, 1):
        if v not in present:
            total += -1 if v % 2 == 0 else 1
    return total


def _loop_degree(s: int) -> int:
    # index s carries t^j with s = -2j - i, i in {0, 1}
    return -(s // 2) if s % 2 == 0 else -((s + 1) // 2)


def loop_degree_eigenvalue(c: int, mu) -> int:
    """Vacuum-relative sum of loop degrees over occupied indices."""
    mu = Partition(mu)
    depth = len(mu) + abs(c) + 2
    idx = _indices(c, mu, depth)
    present = set(idx)
    total = sum(_loop_degree(v) for v in idx if v > 0)
    total -= sum(_loop_degree(v) for v in range(idx[-1], 1) if v not in present)
    return total


def sl2hat_matrix_action(gen, w: WedgeVector) -> WedgeVector:
    """Apply ('e', j), ('f', j), ('h', j), 'h0', 'K', 'd' or 'loop_degree'.

    Loop generators act as derivations through the index identification;
    h0 is the regularized parity count and d the energy.
    """
    if gen == "K":
        return w
    if gen == "d":
        return energy(w)
    if gen == "loop_degree":
        return WedgeVector({(c, mu): v * loop_degree_eigenvalue(c, mu) for (c, mu), v in w.terms.items()})
    if gen in ("h0", ("h", 0)):
        return WedgeVector({(c, mu): v * h0_eigenvalue(c, mu) for (c, mu), v in w.terms.items()})
    kind, j = gen
    return _linear(_bilinear_basis)(w, _loop_moves(kind, j))


# -- affine sl2: principal form ------------------------------------------------------
# The principal side uses the Heisenberg modes transported by Phi from the
# fermionic bilinears: alpha_n = n d/dp_n and alpha_-n = p_n for n > 0.  At
# t1 t2 = -1 this is minus the Nakajima annihilator.
def heisenberg(n: int, v: FockElement) -> FockElement:
    if n == 0:
        raise ValueError("n must be nonzero")
    v = v.map_coefficients(_specialize)
    return annihilate(n, v, t1t2=-1).scale(-1) if n > 0 else create(-n, v)


def _exponential(order: int, scale, odd: bool) -> dict:
    """exp(scale * sum_n z^n p_n / n) as {z-power: FockElement} through z^order.

    With ``odd`` only odd n enter the sum.
    """
    result = {0: FockElement.vacuum()}
    step = 2 if odd else 1
    gen = {n: FockElement.power_sum([n], Fraction(scale, n)) for n in range(1, order + 1, step)}
    # E' = g' E  =>  k E_k = sum_n n g_n E_{k-n}
    for k in range(1, order + 1):
        acc = FockElement()
        for n, g in gen.items():
            if n <= k:
                acc = acc + (g * result[k - n]).scale(n)
        result[k] = acc.scale(Fraction(1, k))
    return result


def vertex_coefficient(k: int, v: FockElement, scale=2, odd: bool = True) -> FockElement:
    """[z^k] exp(scale sum_n z^n p_n / n) exp(-scale sum_n z^-n alpha_n / n) v.

    With alpha_n = n d/dp_n the right factor is the translation
    p_n -> p_n - scale z^-n.  The sums run over odd n when ``odd``.
    """
    v = v.map_coefficients(_specialize)
    # translated element as {nonpositive z-power: {partition: coefficient}}
    translated = {}
    for mu, c in v.terms.items():
        partial = {(0, ()): c}
        for part in mu:
            nxt = {}
            for (zp, key), coef in partial.items():
                grown = tuple(sorted(key + (part,), reverse=True))
                nxt[(zp, grown)] = nxt.get((zp, grown), 0) + coef
                if part % 2 or not odd:
                    nxt[(zp - part, key)] = nxt.get((zp - part, key), 0) - scale * coef
            partial = nxt
        for (zp, key), coef in partial.items():
            if coef:
                bucket = translated.setdefault(zp, {})
                bucket[key] = bucket.get(key, 0) + coef
    low = min(translated, default=0)
    expo = _exponential(k - low, scale, odd)
    out = FockElement()
    for zp, terms in translated.items():
        need = k - zp
        if need in expo:
            out = out + expo[need] * FockElement(terms)
    return out


def gamma_odd_coefficient(k: int, v: FockElement) -> FockElement:
    """[z^k] Gamma_-^odd(z)^2 Gamma_+^odd(z)^-2 v."""
    return vertex_coefficient(k, v, 2, True)


def principal_operator(gen, v: FockElement) -> FockElement:
    """Fock-side image of a generator under the principal construction.

    ``gen`` is one of
      ('h', j)        h_j    -> [z^-2j] Gamma/2, minus 1/2 when j = 0
      ('e-f', j)      e_{j+1} - f_j -> -[z^-(2j+1)] Gamma/2
      ('e+f', j)      e_{j+1} + f_j -> alpha_{2j+1}
      ('vertex', k)   [z^k] (1 - Gamma)/2
      ('heis', n)     alpha_n
      'degree'        sum_{n >= 1} alpha_-n alpha_n
      'odd_degree'    the same sum over odd n only
    where Gamma = Gamma_-^odd(z)^2 Gamma_+^odd(z)^-2.
    """
    if gen in ("degree", "odd_degree"):
        step = 2 if gen == "odd_degree" else 1
        out = FockElement()
        for n in range(1, max(v.degrees(), default=0) + 1, step):
            out = out + heisenberg(-n, heisenberg(n, v))
        return out
    kind, j = gen
    if kind == "heis":
        return heisenberg(j, v)
    if kind == "e+f":
        return heisenberg(2 * j + 1, v)
    if kind == "h":
        out = gamma_odd_coefficient(-2 * j, v).scale(Fraction(1, 2))
        if j == 0:
            out = out - v.map_coefficients(_specialize).scale(Fraction(1, 2))
        return out
    if kind == "e-f":
        return gamma_odd_coefficient(-(2 * j + 1), v).scale(Fraction(-1, 2))
    if kind == "vertex":
        base = v.map_coefficients(_specialize) if j == 0 else FockElement()
        return (base - gamma_odd_coefficient(j, v)).scale(Fraction(1, 2))
    raise ValueError(f"unknown generator {gen!r}")


def sl2hat_principal_action(gen, w: WedgeVector, truncation: int = None) -> WedgeVector:
    """Apply ``gen`` to a charge-0 wedge vector through Phi and the principal construction."""
    if truncation is not None and w.max_energy() > truncation:
        raise ValueError("vector has energy beyond the truncation")
    return phi_iso(principal_operator(gen, phi_inverse(w)))


def matrix_combination(gen, w: WedgeVector) -> WedgeVector:
    """Matrix-side counterpart of a principal generator name (see principal_operator)."""
    if gen == "degree":
        return energy(w)
    kind, j = gen
    if kind == "h":
        return sl2hat_matrix_action(("h", j), w)
    if kind in ("e+f", "e-f"):
        e = sl2hat_matrix_action(("e", j + 1), w)
        f = sl2hat_matrix_action(("f", j), w)
        return e + f if kind == "e+f" else e - f
    raise ValueError(f"no matrix counterpart for {gen!r}")


def principal_generators(span: int = 2):
    """h_j for |j| <= span, e_{j+1} +- f_j for -span <= j < span, and the degree."""
    gens = [("h", j) for j in range(-span, span + 1)]
    gens += [(kind, j) for j in range(-span, span) for kind in ("e+f", "e-f")]
    return gens + ["degree"]


def principal_agreement(max_energy: int, span: int = 2):
    """Compare both realizations on every charge-0 basis vector up to max_energy.

    Returns (number of comparisons, list of (generator, partition) failures).
    """
    from .partitions import partitions_up_to

    count, failures = 0, []
    for gen in principal_generators(span):
        for mu in partitions_up_to(max_energy):
            w = WedgeVector.basis(mu)
            count += 1
            if matrix_combination(gen, w) != sl2hat_principal_action(gen, w):
                failures.append((gen, mu))
    return count, failures


def literal_degree_claim(max_energy: int):
    """Partitions mu for which (2d + h0) v_mu differs from sum_{n odd} alpha_-n alpha_n v_mu."""
    from .partitions import partitions_up_to

    bad = []
    for mu in partitions_up_to(max_energy):
        w = WedgeVector.basis(mu)
        lhs = energy(w).scale(2) + sl2hat_matrix_action("h0", w)
        if lhs != sl2hat_principal_action("odd_degree", w):
            bad.append(mu)
    return bad


def charge_of(mu) -> int:
    """Blending charge b(mu); h0 acts on v_mu by 2 b(mu)."""
    return blend_charge(mu)


# -- verification sweeps -------------------------------------------------------------
def _basis_vectors(max_energy: int, charges):
    from .partitions import partitions_up_to

    return [WedgeVector.basis(mu, c) for c in charges for mu in partitions_up_to(max_energy)]


def clifford_check(max_energy: int, max_mode: int, charges=(-1, 0, 1)):
    """Anticommutators of psi and psi* on basis vectors; returns (count, failures)."""
    count, failures = 0, []
    modes = range(-max_mode, max_mode + 1)
    for w in _basis_vectors(max_energy, charges):
        ps = {i: apply_psi(i, w) for i in modes}
        pss = {i: apply_psi_star(i, w) for i in modes}
        for i in modes:
            for j in modes:
                count += 1
                mixed = apply_psi(i, pss[j]) + apply_psi_star(j, ps[i])
                same = apply_psi(i, ps[j]) + apply_psi(j, ps[i])
                dual = apply_psi_star(i, pss[j]) + apply_psi_star(j, pss[i])
                expected = w if i == j else WedgeVector()
                if mixed != expected or same or dual:
                    failures.append((next(iter(w.terms)), i, j))
    return count, failures


def boson_fermion_check(max_degree: int, max_mode: int):
    """Phi against alpha_k on every p_mu with |mu| <= max_degree; returns (count, failures).

    Compares multiplication by p_k with the bilinear of mode -k, the
    derivation k d/dp_k with mode k, and records that the Nakajima
    annihilator at t1 t2 = -1 carries the opposite sign.
    """
    from .partitions import partitions_up_to

    count, failures = 0, []
    for mu in partitions_up_to(max_degree):
        v = FockElement.power_sum(mu)
        image = phi_iso(v)
        for k in range(1, max_mode + 1):
            count += 1
            ok = phi_iso(create(k, v)) == alpha_fermionic(-k, image)
            ok = ok and phi_iso(heisenberg(k, v)) == alpha_fermionic(k, image)
            ok = ok and phi_iso(annihilate(k, v, t1t2=-1)) == -alpha_fermionic(k, image)
            if not ok:
                failures.append((mu, k))
    return count, failures


def psi_generating_check(max_energy: int, max_mode: int, charges=(-1, 0, 1)):
    """psi_i on (c, mu) equals Q applied to [x^(i - c - 1)] Gamma_-(x) Gamma_+(x)^-1 s_mu."""
    count, failures = 0, []
    for w in _basis_vectors(max_energy, charges):
        (c, mu), = w.terms
        for i in range(-max_mode, max_mode + 1):
            count += 1
            body = phi_iso(vertex_coefficient(i - c - 1, schur(mu), 1, False))
            rhs = WedgeVector({(c + 1, nu): x for (_, nu), x in body.terms.items()})
            if apply_psi(i, w) != rhs:
                failures.append((c, mu, i))
    return count, failures


def h0_charge_check(max_energy: int):
    """h0 v_mu = 2 b(mu) v_mu with b from the blending bijection; returns (count, failures)."""
    from .partitions import partitions_up_to

    mus = partitions_up_to(max_energy)
    return len(mus), [mu for mu in mus if h0_eigenvalue(0, mu) != 2 * charge_of(mu)]
