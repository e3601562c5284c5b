"""Dense univariate polynomials over GF(q).

Provides division, gcd, modular exponentiation, irreducible factorization
(squarefree / distinct-degree / seeded equal-degree splitting), polynomial
orders, primitivity tests and group-generator search.

Text form: comma-separated integer encodings of the coefficients, constant
term first ("1,1,0,1" is 1 + x + x^3 over GF(2)).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalConsistencyError, ParseError
from .field import GF
from .intfactor import integer_factor

DEFAULT_FACTOR_SEED = 0x5EED


class Poly:
    """Immutable dense polynomial; coeffs[i] is the encoding of the x^i coefficient."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c % field.q,))

    @classmethod
    def monomial(cls, field, c, deg):
        return cls(field, (0,) * deg + (c % field.q,))

    @classmethod
    def from_string(cls, field, text):
        parts = text.split(",")
        coeffs = []
        for idx, part in enumerate(parts):
            part = part.strip()
            try:
                c = int(part)
            except ValueError:
                raise ParseError(f"bad coefficient {part!r}", idx) from None
            if not 0 <= c < field.q:
                raise ParseError(f"coefficient {c} outside [0, {field.q})", idx)
            coeffs.append(c)
        return cls(field, coeffs)

    def to_string(self):
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_encoding(cls, field, enc):
        q = field.q
        coeffs = []
        while enc:
            coeffs.append(enc % q)
            enc //= q
        return cls(field, coeffs)

    @property
    def encoding(self) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.q + c
        return v

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is -1 (stands in for -infinity)
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Poly[{self.to_string()}]"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __sub__(self, other):
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else 0
            y = other.coeffs[i] if i < len(other.coeffs) else 0
            out[i] = F.sub(x, y)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        mul, add = F.mul, F.add
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = add(out[i + j], mul(ca, cb))
        return Poly(F, out)

    def scale(self, c: int):
        F = self.field
        c %= F.q
        return Poly(F, [F.mul(c, v) for v in self.coeffs])

    def shift(self, k: int):
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        db = other.degree
        inv_lb = F.inv(other.lc)
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly.zero(F), self
        quot = [0] * (len(rem) - db)
        mul, sub = F.mul, F.sub
        bcoeffs = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                factor = mul(c, inv_lb)
                quot[i - db] = factor
                for j, bc in enumerate(bcoeffs):
                    if bc:
                        rem[i - db + j] = sub(rem[i - db + j], mul(factor, bc))
        return Poly(F, quot), Poly(F, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self):
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        return self.scale(self.field.inv(self.lc))

    def evaluate(self, a: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def derivative(self):
        F = self.field
        p = F.p
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(i % p, self.coeffs[i]))
        return Poly(F, out)

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("polynomials over different fields")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via Euclid's algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        raise ValueError("xgcd(0, 0) is undefined")
    c = F.inv(r0.lc)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base**e reduced mod `mod`, by square-and-multiply."""
    if mod.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


# -- factorization ----------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """unit * prod(g_l ** e_l) == the factored polynomial."""

    field: GF
    unit: int
    factors: tuple  # ((Poly, int), ...) sorted by (degree, encoding)
    seed: int = DEFAULT_FACTOR_SEED

    def product(self) -> Poly:
        out = Poly.constant(self.field, self.unit)
        for g, e in self.factors:
            out = out * g**e
        return out


def _pth_root(f: Poly) -> Poly:
    """p-th root of a polynomial of the form h(x^p)."""
    F = f.field
    p = F.p
    inv_frob = F.p ** (F.delta - 1)  # a ** p^(delta-1) inverts Frobenius in GF(q)
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.pow(f.coeffs[i], inv_frob) if f.coeffs[i] else 0)
    return Poly(F, out)


def _squarefree_parts(f: Poly):
    """Squarefree decomposition of monic f: list of (monic squarefree, multiplicity)."""
    p = f.field.p
    out: dict[Poly, int] = {}

    def accumulate(g, mult):
        d = g.derivative()
        if d.is_zero:
            accumulate(_pth_root(g), mult * p)
            return
        c = poly_gcd(g, d)
        w = g // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                out[z] = out.get(z, 0) + i * mult
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            accumulate(_pth_root(c), mult * p)

    accumulate(f, 1)
    return list(out.items())


def _distinct_degree(f: Poly):
    """Distinct-degree split of monic squarefree f: list of (product, degree)."""
    F = f.field
    q = F.q
    out = []
    h = Poly.x(F) % f
    x = Poly.x(F)
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, q, f)
        diff = h - x
        g = f if diff.is_zero else poly_gcd(diff, f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            if f.degree == 0:
                break
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree(f: Poly, d: int, rng: random.Random):
    """Cantor-Zassenhaus split of monic squarefree f into irreducibles of degree d."""
    if f.degree == d:
        return [f]
    F = f.field
    q = F.q
    while True:
        h = Poly(F, [rng.randrange(q) for _ in range(f.degree)])
        if h.degree < 1:
            continue
        g = poly_gcd(h, f)
        if 0 < g.degree < f.degree:
            break
        if F.p == 2:
            # char 2: additive trace down to F_2
            t = Poly.zero(F)
            acc = h
            for _ in range(d * F.delta):
                t = t + acc
                acc = acc * acc % f
        else:
            t = pow_mod(h, (q**d - 1) // 2, f) - Poly.one(F)
        g = poly_gcd(t, f) if not t.is_zero else f
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factorize(f: Poly, seed: int = DEFAULT_FACTOR_SEED) -> Factorization:
    """Full irreducible factorization of a nonzero polynomial over GF(q)."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lc
    if f.degree == 0:
        return Factorization(f.field, unit, (), seed)
    fm = f.monic()
    rng = random.Random(seed)
    factors: dict[Poly, int] = {}
    for sqf, mult in _squarefree_parts(fm):
        for prod, d in _distinct_degree(sqf):
            for irr in _equal_degree(prod, d, rng):
                factors[irr] = factors.get(irr, 0) + mult
    ordered = tuple(
        sorted(factors.items(), key=lambda item: (item[0].degree, item[0].encoding))
    )
    result = Factorization(f.field, unit, ordered, seed)
    if result.product() != f:
        raise InternalConsistencyError("factorization does not multiply back")
    return result


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    fac = factorize(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


# -- orders and generators ---------------------------------------------------


def _p_power_at_least(p: int, m: int) -> int:
    """Smallest power of p that is >= m (i.e. p^ceil(log_p m))."""
    v = 1
    while v < m:
        v *= p
    return v


@lru_cache(maxsize=None)
def _irreducible_order(g: Poly) -> int:
    """Multiplicative order of x mod irreducible g (g != x)."""
    F = g.field
    n = F.q**g.degree - 1
    if n == 0:
        return 1
    o = n
    x = Poly.x(F)
    for prime in integer_factor(n):
        while o % prime == 0 and pow_mod(x, o // prime, g).is_one:
            o //= prime
    return o


@lru_cache(maxsize=None)
def poly_order(f: Poly) -> int:
    """Least o with f | x^o - 1; requires f(0) != 0."""
    if f.is_zero:
        raise ValueError("order of the zero polynomial is undefined")
    if f.constant_term == 0:
        raise ValueError("f(0) = 0: x divides f, no order exists")
    if f.degree == 0:
        return 1
    fac = factorize(f)
    o = 1
    emax = 1
    for g, e in fac.factors:
        o = math.lcm(o, _irreducible_order(g))
        emax = max(emax, e)
    if emax > 1:
        o *= _p_power_at_least(f.field.p, emax)
    return o


def is_primitive(f: Poly) -> bool:
    """True iff irreducible f has full order q^deg(f) - 1."""
    if f.constant_term == 0 or not f.is_monic or not is_irreducible(f):
        raise ValueError("is_primitive requires a monic irreducible f with f(0) != 0")
    return poly_order(f) == f.field.q**f.degree - 1


@lru_cache(maxsize=None)
def find_group_generator(g: Poly) -> Poly:
    """A generator of the cyclic group (F_q[x]/(g))^* for irreducible g.

    Returns x whenever x itself has full order; otherwise scans candidates
    in increasing canonical integer encoding.
    """
    if g.constant_term == 0:
        raise ValueError("g(0) must be nonzero")
    F = g.field
    r = g.degree
    n = F.q**r - 1
    x = Poly.x(F) % g if r == 1 else Poly.x(F)
    if n == 1:
        return x
    if _irreducible_order(g) == n:
        return x
    primes = list(integer_factor(n))
    for enc in range(1, F.q**r):
        h = Poly.from_encoding(F, enc)
        if all(not pow_mod(h, n // ell, g).is_one for ell in primes):
            return h
    raise InternalConsistencyError("no generator found; is g irreducible?")
