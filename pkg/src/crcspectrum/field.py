"""Arithmetic in GF(p^delta) = F_p[alpha]/(mu(alpha)).

Elements are encoded as integers in [0, q): the base-p digits of the
encoding are the coordinates in the basis 1, alpha, ..., alpha^(delta-1)
(little-endian in alpha). Encoding 0 is the additive identity, encoding 1
the multiplicative identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError

# Fields up to this size get full add/mul lookup tables.
_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(value, base, length):
    out = []
    for _ in range(length):
        out.append(value % base)
        value //= base
    return out


def _fp_rem(a, b, p):
    """Remainder of a by monic b over F_p; both little-endian coeff lists."""
    a = [c % p for c in a]
    db = len(b) - 1
    while a and a[-1] == 0:
        a.pop()
    while len(a) - 1 >= db:
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _fp_irreducible(f, p):
    """Trial-division irreducibility test for monic f over F_p."""
    d = len(f) - 1
    if d < 1:
        return False
    for deg in range(1, d // 2 + 1):
        for enc in range(p**deg):
            b = _digits(enc, p, deg) + [1]
            if not _fp_rem(f, b, p):
                return False
    return True


def default_modulus(p, delta):
    """Least monic irreducible of degree delta over F_p, by low-coefficient encoding."""
    for enc in range(p**delta):
        f = _digits(enc, p, delta) + [1]
        if _fp_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """The finite field GF(p^delta) with integer-encoded elements."""

    def __init__(self, p: int, delta: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if delta < 1:
            raise ValueError(f"delta must be >= 1, got {delta}")
        self.p = p
        self.delta = delta
        self.q = p**delta
        if modulus is None:
            modulus = default_modulus(p, delta)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != delta + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree delta")
        if not _fp_irreducible(list(modulus), p):
            raise ValueError("modulus is not irreducible over F_p")
        self.modulus = modulus
        self._alpha_red = self._alpha_reductions()
        self._mul_table = None
        self._inv_table = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    def _alpha_reductions(self):
        # reductions of alpha^(delta+j) mod mu, j = 0 .. delta-2
        p, delta = self.p, self.delta
        red = []
        cur = [(-c) % p for c in self.modulus[:delta]]  # alpha^delta
        red.append(cur)
        for _ in range(delta - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(delta):
                    nxt[i] = (nxt[i] + top * red[0][i]) % p
            red.append(nxt)
            cur = nxt
        return red

    def _build_tables(self):
        q = self.q
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = self._mul_raw(a, b)
                mul[a][b] = v
                mul[b][a] = v
        self._mul_table = mul
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._pow_raw(a, q - 2)
        self._inv_table = inv

    # -- encoding -----------------------------------------------------------

    def coeffs(self, a: int):
        """Coordinates of element a in the alpha basis (length delta)."""
        return _digits(a, self.p, self.delta)

    def encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    def elements(self):
        return range(self.q)

    # -- arithmetic on encodings --------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.delta == 1:
            return (a + b) % p
        v, mult = 0, 1
        for _ in range(self.delta):
            v += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return v

    def neg(self, a: int) -> int:
        p = self.p
        if self.delta == 1:
            return (-a) % p
        v, mult = 0, 1
        for _ in range(self.delta):
            v += ((-a) % p) * mult
            a //= p
            mult *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a, b):
        p, delta = self.p, self.delta
        if delta == 1:
            return (a * b) % p
        da = _digits(a, p, delta)
        db = _digits(b, p, delta)
        prod = [0] * (2 * delta - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for k in range(2 * delta - 2, delta - 1, -1):
            c = prod[k]
            if c:
                red = self._alpha_red[k - delta]
                for i in range(delta):
                    prod[i] = (prod[i] + c * red[i]) % p
            prod[k] = 0
        return self.encode(prod[:delta])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def _pow_raw(self, a, e):
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                raise ValueError("0**0 is undefined")
            return 0
        e %= self.q - 1 if self.q > 2 else 1
        if self._mul_table is not None:
            result, base = 1, a
            mul = self._mul_table
            while e:
                if e & 1:
                    result = mul[result][base]
                base = mul[base][base]
                e >>= 1
            return result
        return self._pow_raw(a, e)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._pow_raw(a, self.q - 2)

    # -- misc ---------------------------------------------------------------

    def element(self, value: int) -> "FqElement":
        return FqElement(self, value % self.q if value >= 0 else value % self.q)

    @property
    def zero(self) -> "FqElement":
        return FqElement(self, 0)

    @property
    def one(self) -> "FqElement":
        return FqElement(self, 1)

    @property
    def alpha(self) -> "FqElement":
        if self.delta == 1:
            return FqElement(self, 1)
        return FqElement(self, self.p)

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.delta == other.delta
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.delta, self.modulus))

    def __repr__(self):
        if self.delta == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.delta})"


@dataclass(frozen=True)
class FqElement:
    """A field element bound to its GF context, with operator arithmetic."""

    field: GF
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise FieldMismatchError("operands from different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FqElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FqElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FqElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FqElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FqElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __neg__(self):
        return FqElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FqElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FqElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.field!r}[{self.value}]"
