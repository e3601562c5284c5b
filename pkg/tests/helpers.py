"""Shared brute-force oracles and enumeration helpers for the test suite.

Everything here recomputes results from first principles (exhaustive loops,
closure under multiplication by x, direct divisibility checks) so it stays
independent of the code paths it is used to check.
"""

from __future__ import annotations

from crcspectrum import GF, CrcCode, Poly, is_irreducible, pow_mod


def monic_polys(field, degree):
    """All monic polynomials of exactly the given degree."""
    q = field.q
    for enc in range(q**degree):
        low = []
        e = enc
        for _ in range(degree):
            low.append(e % q)
            e //= q
        yield Poly(field, low + [1])


def irreducible_polys(field, max_degree, nonzero_constant=True):
    """All monic irreducibles up to max_degree, optionally with g(0) != 0."""
    out = []
    for d in range(1, max_degree + 1):
        for f in monic_polys(field, d):
            if nonzero_constant and f.constant_term == 0:
                continue
            if is_irreducible(f):
                out.append(f)
    return out


def brute_poly_order(f):
    """Least o <= q^deg(f) with f | x^o - 1, by direct divisibility checks."""
    F = f.field
    if f.degree == 0:
        return 1
    one = Poly.one(F)
    x = Poly.x(F) % f
    acc = x
    for o in range(1, F.q ** f.degree + 1):
        if acc == one:
            return o
        acc = acc * x % f
    raise AssertionError("no order found")


def brute_multiplicative_order(a, modulus):
    """Order of a in (F_q[x]/(modulus))^* by repeated multiplication."""
    one = Poly.one(a.field)
    cur = a % modulus
    o = 1
    while not cur.is_one:
        cur = cur * a % modulus
        o += 1
    return o


def brute_x_orbit(u, modulus):
    """Closure of u under multiplication by x mod `modulus`, as a set of Poly."""
    seen = {u % modulus}
    x = Poly.x(u.field)
    cur = u % modulus
    while True:
        cur = cur * x % modulus
        if cur in seen:
            return seen
        seen.add(cur)


def brute_word_set(u, code: CrcCode):
    """All length-n windows of the sequence of u, by stepping one full period."""
    from crcspectrum import LrsState

    state = LrsState(u, code.g)
    # enough symbols to see every window at least once
    limit = code.field.q ** code.r + code.n
    symbols = [next(state) for _ in range(limit)]
    words = set()
    for k in range(limit - code.n + 1):
        words.add(tuple(symbols[k : k + code.n]))
    return words


class RingScanner:
    """Fast x-multiplication on integer-encoded elements of F_q[x]/(m).

    Char-2 fields use packed-bit encodings (digit-wise addition is XOR);
    other characteristics fall back to digit lists with lookup tables.
    """

    def __init__(self, modulus: Poly):
        F = modulus.field
        self.field = F
        self.modulus = modulus
        self.size = F.q ** modulus.degree
        self._n = modulus.degree
        if F.p == 2:
            self._bits = F.delta
            self._setup_packed()
        else:
            self._setup_generic()

    def _setup_packed(self):
        F, n, b = self.field, self._n, self._bits
        self._mask = (1 << (n * b)) - 1
        # m is monic: folding the overflow digit d subtracts d * modulus
        self._fold = [0] * F.q
        for d in range(1, F.q):
            enc = 0
            for i, c in enumerate(self.modulus.coeffs[:n]):
                enc |= F.mul(d, c) << (i * b)
            self._fold[d] = enc

    def _setup_generic(self):
        F, n = self.field, self._n
        self._scaled = [
            [F.mul(d, c) for c in self.modulus.coeffs[:n]] for d in range(F.q)
        ]

    def encode(self, f: Poly) -> int:
        v = 0
        for c in reversed(f.coeffs):
            v = v * self.field.q + c
        return v

    def xmul(self, e: int) -> int:
        """Encoding of x * (element encoded by e) mod modulus."""
        F = self.field
        if F.p == 2:
            b = self._bits
            e <<= b
            top = e >> (self._n * b)
            if top:
                e = (e & self._mask) ^ self._fold[top]
            return e
        q = F.q
        qn = q ** (self._n - 1)
        top = e // qn
        e = (e % qn) * q
        if top:
            add = F.add
            row = self._scaled[top]
            out = 0
            mult = 1
            for i in range(self._n):
                out += add(e % q, F.neg(row[i])) * mult if row[i] else (e % q) * mult
                e //= q
                mult *= q
            return out
        return e

    def orbit_transversal_check(self, reps_with_sizes):
        """Assert the reps' x-orbits are disjoint and cover the whole ring.

        reps_with_sizes: iterable of (Poly, claimed orbit size). Returns the
        number of elements covered; raises AssertionError on any violation.
        """
        seen = set()
        for rep, size in reps_with_sizes:
            e = self.encode(rep)
            start = e
            count = 0
            while True:
                assert e not in seen, f"orbit overlap at encoding {e}"
                seen.add(e)
                count += 1
                e = self.xmul(e)
                if e == start:
                    break
            assert count == size, f"orbit of {rep} has size {count}, claimed {size}"
        assert len(seen) == self.size, f"covered {len(seen)} of {self.size}"
        return len(seen)
