"""Enumeration of x-orbit representatives in F_q[x]/(g^t) for irreducible g.

The ring splits into the zero element plus layers g^s * (units of
F_q[x]/(g^(t-s))). Unit orbits under multiplication by x are cosets of the
cyclic subgroup generated by x, so each has size ord(x); one representative
per orbit is produced from a generator h of the residue field's
multiplicative group together with the generator family
1 + alpha^i x^j g(x)^k of the p-Sylow subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .poly import (
    Poly,
    find_group_generator,
    poly_order,
    pow_mod,
)


@dataclass(frozen=True)
class GAdicForm:
    """Digits f_0..f_(t-1) of f = sum f_l * g^l, each with deg f_l < deg g."""

    digits: tuple

    @property
    def is_unit(self) -> bool:
        # invertible iff the 0-th digit is nonzero
        return not self.digits[0].is_zero


@dataclass(frozen=True)
class SylowGenerator:
    """Generator 1 + alpha^i x^j g^k of a cyclic factor of the p-Sylow subgroup."""

    i: int
    j: int
    k: int
    poly: Poly
    order: int


@dataclass(frozen=True)
class OrbitRep:
    """Canonical orbit representative with its x-orbit size and g-adic valuation."""

    element: Poly
    orbit_size: int
    valuation: int = 0


@dataclass(frozen=True)
class XSplit:
    """x written as a p-power-order part times a prime-to-p part."""

    x_p: Poly
    x_og: Poly
    excluded: tuple  # (i0, j0): the k=1 generator replaced by x_p


def _p_power_at_least(p: int, num: int, den: int = 1) -> int:
    """Smallest p^m with den * p^m >= num, i.e. p^ceil(log_p(num/den))."""
    v = 1
    while den * v < num:
        v *= p
    return v


def g_adic_digits(f: Poly, g: Poly, t: int) -> GAdicForm:
    """Expansion of f in base g with t digits; requires deg f < t * deg g."""
    if f.degree >= t * g.degree:
        raise ValueError("deg f must be < t * deg g")
    digits = []
    cur = f
    for _ in range(t):
        cur, rem = divmod(cur, g)
        digits.append(rem)
    return GAdicForm(tuple(digits))


def unit_group_order(g: Poly, l: int) -> int:
    """|(F_q[x]/(g^l))^*| = (q^r - 1) * q^((l-1) r) for irreducible g of degree r."""
    q = g.field.q
    r = g.degree
    return (q**r - 1) * q ** ((l - 1) * r)


def sylow_generators(g: Poly, l: int):
    """All generators 1 + alpha^i x^j g^k with 0<=i<delta, 0<=j<r, 1<=k<l, p∤k.

    Sorted by (i, j, k); the product of their orders is q^((l-1) r).
    """
    if l < 2:
        raise ValueError("p-Sylow generators need l >= 2")
    F = g.field
    p, delta, r = F.p, F.delta, g.degree
    one = Poly.one(F)
    gens = []
    gk = g
    for k in range(1, l):
        if k % p != 0:
            order = _p_power_at_least(p, l, k)
            for i in range(delta):
                alpha_i = p**i  # encoding of alpha^i, valid since i < delta
                for j in range(r):
                    poly = one + gk.scale(alpha_i).shift(j)
                    gens.append(SylowGenerator(i, j, k, poly, order))
        gk = gk * g
    gens.sort(key=lambda s: (s.i, s.j, s.k))
    return gens


def sylow_decompose(f: Poly, g: Poly, l: int, gens=None) -> dict:
    """Exponents c with prod a_(i,j,k)^c == f mod g^l, for f == 1 mod g.

    Works layer by layer through the g-adic digits of the residual: at layer
    h = k * p^s (p not dividing k) the digit is a p^s-th power of an element
    of the residue field, whose alpha-basis coordinates give the exponent
    contributions of the k-layer generators.
    """
    F = g.field
    p, r = F.p, g.degree
    gl = g**l
    f = f % gl
    if not (f % g).is_one:
        raise ValueError("f must be congruent to 1 mod g")
    if gens is None:
        gens = sylow_generators(g, l)
    by_key = {(s.i, s.j, s.k): s for s in gens}
    exps = {key: 0 for key in by_key}
    Q = F.q**r
    cur = f
    for h in range(1, l):
        dh = g_adic_digits(cur, g, l).digits[h]
        if dh.is_zero:
            continue
        s, k = 0, h
        while k % p == 0:
            k //= p
            s += 1
        root = dh
        for _ in range(s):
            root = pow_mod(root, Q // p, g)  # p-th root in the residue field
        for j, cj in enumerate(root.coeffs):
            if not cj:
                continue
            for i, cij in enumerate(F.coeffs(cj)):
                if not cij:
                    continue
                gen = by_key[(i, j, k)]
                e = cij * p**s
                exps[(i, j, k)] = (exps[(i, j, k)] + e) % gen.order
                cur = cur * pow_mod(gen.poly, gen.order - e, gl) % gl
    if not cur.is_one:
        raise InternalConsistencyError("layer peeling left a nontrivial residual")
    return exps


def x_split(g: Poly, l: int, gens=None) -> XSplit:
    """Split x into x^ord(g) (p-power order) and h^((q^r-1)/ord(g)).

    Also picks the lexicographically least (i0, j0) whose k=1 exponent in
    the decomposition of x^ord(g) is coprime to p; that generator is the one
    replaced by x_p in the orbit-representative family.
    """
    if l < 2:
        raise ValueError("x_split needs l >= 2")
    F = g.field
    p = F.p
    ord_g = poly_order(g)
    x = Poly.x(F)
    x_p = pow_mod(x, ord_g, g**l)
    exps = sylow_decompose(x_p, g, l, gens)
    eligible = sorted(
        (i, j) for (i, j, k), c in exps.items() if k == 1 and c % p != 0
    )
    if not eligible:
        raise InternalConsistencyError(
            "x^ord(g) has no k=1 exponent coprime to p"
        )
    h = find_group_generator(g)
    x_og = pow_mod(h, (F.q**g.degree - 1) // ord_g, g)
    return XSplit(x_p, x_og, eligible[0])


def unit_orbit_reps(g: Poly, l: int):
    """One representative per x-orbit of the units of F_q[x]/(g^l).

    Every unit orbit is a coset of the subgroup generated by x, so all have
    size ord(x) = ord(g) * p^ceil(log_p l). Emitted lazily in lexicographic
    order of (power of h, exponent tuple of the free Sylow generators).
    """
    F = g.field
    p, r = F.p, g.degree
    ord_g = poly_order(g)
    T = (F.q**r - 1) // ord_g
    h = find_group_generator(g)
    if l == 1:
        cur = Poly.one(F)
        for _ in range(T):
            yield OrbitRep(cur, ord_g, 0)
            cur = cur * h % g
        return
    gl = g**l
    gens = sylow_generators(g, l)
    i0, j0 = x_split(g, l, gens).excluded
    free = [s for s in gens if (s.i, s.j, s.k) != (i0, j0, 1)]
    ord_x = ord_g * _p_power_at_least(p, l)
    h_mod = h % gl
    base = Poly.one(F)
    for _ in range(T):
        yield from _free_products(base, free, 0, gl, ord_x)
        base = base * h_mod % gl


def _free_products(acc, free, idx, modulus, size):
    if idx == len(free):
        yield OrbitRep(acc, size, 0)
        return
    gen = free[idx]
    cur = acc
    for e in range(gen.order):
        yield from _free_products(cur, free, idx + 1, modulus, size)
        if e + 1 < gen.order:
            cur = cur * gen.poly % modulus


def ring_orbit_reps(g: Poly, t: int):
    """Representatives of every x-orbit of F_q[x]/(g^t), zero included.

    The sum of the orbit sizes equals q^(r t).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if g.constant_term == 0:
        raise ValueError("g(0) must be nonzero")
    F = g.field
    reps = [OrbitRep(Poly.zero(F), 1, t)]
    for s in range(t - 1, -1, -1):
        gs = g**s
        for rep in unit_orbit_reps(g, t - s):
            reps.append(OrbitRep(gs * rep.element, rep.orbit_size, s))
    return reps
