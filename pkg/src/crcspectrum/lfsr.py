"""Linear recurring sequences for a generator polynomial g.

A ring element u in F_q[x]/(g) induces the unique sequence (c_i) with
u(x)/g(x) = sum c_i / x^(i+1); stepping the sequence is multiplication of
the running state by x mod g, emitting the top coefficient. Length-n
windows of the sequence are exactly the dual codewords of the CRC code
generated by g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import GF
from .poly import Poly, poly_gcd, poly_order


@dataclass(frozen=True)
class CrcCode:
    """An (n, n-r) CRC code: monic generator g with g(0) != 0, 0 < deg g < n."""

    g: Poly
    n: int

    def __post_init__(self):
        if not self.g.is_monic:
            raise ValueError("generator polynomial must be monic")
        if self.g.constant_term == 0:
            raise ValueError("generator polynomial must have g(0) != 0")
        if not 0 < self.g.degree < self.n:
            raise ValueError(
                f"need 0 < deg g < n, got deg g = {self.g.degree}, n = {self.n}"
            )

    @property
    def r(self) -> int:
        return self.g.degree

    @property
    def field(self) -> GF:
        return self.g.field


class LrsState:
    """Mutable LFSR state: emits one sequence symbol per step.

    The running state is the polynomial x^k * u mod g; each step emits its
    x^(r-1) coefficient and then multiplies by x mod g.
    """

    __slots__ = ("g", "_neg_g", "_cur", "_field", "emitted")

    def __init__(self, u: Poly, g: Poly):
        if g.degree < 1:
            raise ValueError("g must have degree >= 1")
        if u.degree >= g.degree:
            raise ValueError("initial state must satisfy deg u < deg g")
        F = g.field
        self.g = g
        self._field = F
        # x*cur mod g subtracts (top coeff) * g; precompute -g_0..-g_{r-1}
        self._neg_g = [F.neg(c) for c in g.coeffs[: g.degree]]
        r = g.degree
        self._cur = list(u.coeffs) + [0] * (r - len(u.coeffs))
        self.emitted = 0

    @property
    def current(self) -> Poly:
        return Poly(self.g.field, self._cur)

    def __iter__(self):
        return self

    def __next__(self) -> int:
        cur = self._cur
        top = cur[-1]
        # shift up by one degree, fold the overflow back via g
        cur.pop()
        cur.insert(0, 0)
        if top:
            F = self._field
            add, mul = F.add, F.mul
            for i, c in enumerate(self._neg_g):
                if c:
                    cur[i] = add(cur[i], mul(top, c))
        self.emitted += 1
        return top


def lrs_next(state: LrsState) -> int:
    """Emit the next sequence symbol and advance the state."""
    return next(state)


def extract_word(u: Poly, code: CrcCode, k: int = 0):
    """The dual codeword (c_k, ..., c_(k+n-1)) from the sequence of u."""
    state = LrsState(u, code.g)
    for _ in range(k):
        next(state)
    return tuple(next(state) for _ in range(code.n))


def orbit_word_count(u: Poly, g: Poly) -> int:
    """Number of distinct words extractable from the sequence of u.

    Equals the order of g / gcd(g, u); the zero sequence contributes the
    single zero word (order of a nonzero constant is 1).
    """
    if u.is_zero:
        return 1
    return poly_order(g // poly_gcd(g, u))


class WindowTracker:
    """Ring buffer over the last n symbols with an incrementally held weight."""

    __slots__ = ("n", "buf", "weight", "_pos")

    def __init__(self, symbols):
        self.buf = list(symbols)
        self.n = len(self.buf)
        self.weight = sum(1 for s in self.buf if s)
        self._pos = 0

    def push(self, symbol: int) -> int:
        """Slide the window by one symbol; returns the new weight."""
        leaving = self.buf[self._pos]
        if leaving and not symbol:
            self.weight -= 1
        elif not leaving and symbol:
            self.weight += 1
        self.buf[self._pos] = symbol
        self._pos = (self._pos + 1) % self.n
        return self.weight

    def rescan(self) -> int:
        """Full-scan weight, for invariant checks."""
        return sum(1 for s in self.buf if s)


def weight_stream(u: Poly, code: CrcCode, count: int):
    """Weights of the first `count` words extracted from the sequence of u.

    The first weight is a full scan; each following one is a constant-time
    slide of the window.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    state = LrsState(u, code.g)
    window = WindowTracker([next(state) for _ in range(code.n)])
    weights = [window.weight]
    for _ in range(count - 1):
        weights.append(window.push(next(state)))
    return weights
