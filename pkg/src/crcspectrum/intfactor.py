"""Deterministic integer factorization: trial division, then Brent's rho."""

from __future__ import annotations

import math

from .errors import ResourceLimitError

_TRIAL_LIMIT = 10_000

# Deterministic Miller-Rabin witness set, valid for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, max_iters: int) -> int:
    """Find a nontrivial factor of composite odd n; deterministic parameters."""
    for c in range(1, 100):
        y, m, r, q_acc = 2, 128, 1, 1
        g = 1
        x = ys = y
        iters = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q_acc = q_acc * abs(x - y) % n
                g = math.gcd(q_acc, n)
                k += m
            r *= 2
            iters += r
            if iters > max_iters:
                raise ResourceLimitError(f"rho budget exceeded factoring {n}")
        if g == n:
            # backtrack to the first failing gcd
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ResourceLimitError(f"rho failed on {n}")


def integer_factor(n: int, max_iters: int = 10_000_000) -> dict:
    """Exact prime factorization of n >= 1 as a prime -> exponent map."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n and f <= _TRIAL_LIMIT:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m, max_iters)
        stack.append(d)
        stack.append(m // d)
    return out
