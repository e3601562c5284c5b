"""Chinese-remainder splitting of F_q[x]/(g) along the factorization of g,
and recombination of per-factor x-orbit representatives."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import InternalConsistencyError
from .orbits import OrbitRep
from .poly import Factorization, Poly, factorize, poly_xgcd, pow_mod


@dataclass(frozen=True)
class CrtBasis:
    """Precomputed data for the isomorphism F_q[x]/(g) ~ prod F_q[x]/(g_l^e_l)."""

    g: Poly
    factorization: Factorization
    moduli: tuple  # g_l^e_l
    cofactors: tuple  # g / g_l^e_l
    inverses: tuple  # v_l with v_l * cofactor_l == 1 mod g_l^e_l

    @classmethod
    def build(cls, g: Poly, factorization: Factorization | None = None) -> "CrtBasis":
        if factorization is None:
            factorization = factorize(g)
        moduli, cofactors, inverses = [], [], []
        for gl, el in factorization.factors:
            m = gl**el
            cof = g // m
            _, v, _ = poly_xgcd(cof % m, m)
            moduli.append(m)
            cofactors.append(cof)
            inverses.append(v % m)
        basis = cls(g, factorization, tuple(moduli), tuple(cofactors), tuple(inverses))
        total = Poly.zero(g.field)
        for v, cof in zip(basis.inverses, basis.cofactors):
            total = (total + v * cof) % g
        if not total.is_one:
            raise InternalConsistencyError("CRT idempotents do not sum to 1")
        return basis


def crt_split(u: Poly, basis: CrtBasis):
    """Component list (u mod g_l^e_l)."""
    return [u % m for m in basis.moduli]


def crt_join(components, basis: CrtBasis) -> Poly:
    """Inverse isomorphism: sum u_l * v_l * (g / g_l^e_l) mod g."""
    out = Poly.zero(basis.g.field)
    for u, v, cof, m in zip(components, basis.inverses, basis.cofactors, basis.moduli):
        out = out + (u * v % m) * cof
    return out % basis.g


def combine_orbit_reps(factor_reps, basis: CrtBasis):
    """Combine per-factor orbit representatives into representatives for g.

    For factor orbit sizes (d_1, ..., d_m), the first factor's rep is used
    as-is and factor l >= 2 contributes the shifts x^k * u_l for
    0 <= k < gcd(d_l, lcm(d_1, ..., d_(l-1))). Each combined orbit has size
    lcm(d_1, ..., d_m).
    """
    m = len(factor_reps)
    if m == 1:
        yield from factor_reps[0]
        return
    F = basis.g.field
    x = Poly.x(F)
    for combo in itertools.product(*factor_reps):
        sizes = [rep.orbit_size for rep in combo]
        ks = []
        running = sizes[0]
        for d in sizes[1:]:
            ks.append(math.gcd(d, running))
            running = math.lcm(running, d)
        for kvec in itertools.product(*(range(k) for k in ks)):
            comps = [combo[0].element]
            for l in range(1, m):
                shifted = combo[l].element
                if kvec[l - 1]:
                    shifted = (
                        shifted * pow_mod(x, kvec[l - 1], basis.moduli[l])
                        % basis.moduli[l]
                    )
                comps.append(shifted)
            yield OrbitRep(crt_join(comps, basis), running, 0)
