import random

import pytest

from crcspectrum import (
    GF,
    ParseError,
    Poly,
    factorize,
    find_group_generator,
    integer_factor,
    is_irreducible,
    is_primitive,
    poly_gcd,
    poly_order,
    poly_xgcd,
    pow_mod,
)
from helpers import brute_poly_order, irreducible_polys, monic_polys

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)


def P2(text):
    return Poly.from_string(F2, text)


def test_divmod_examples():
    a = P2("1,1,0,1")  # x^3 + x + 1
    b = P2("1,1")  # x + 1
    q, r = divmod(a, b)
    assert q == P2("0,1,1") and r == P2("1")
    assert divmod(a, a) == (Poly.one(F2), Poly.zero(F2))
    assert divmod(b, a) == (Poly.zero(F2), b)
    with pytest.raises(ZeroDivisionError):
        divmod(a, Poly.zero(F2))


def test_divmod_random_round_trip():
    rng = random.Random(7)
    for field in (F2, F3, F4):
        for _ in range(200):
            a = Poly(field, [rng.randrange(field.q) for _ in range(rng.randrange(9))])
            b = Poly(field, [rng.randrange(field.q) for _ in range(rng.randrange(1, 6))])
            if b.is_zero:
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


def test_gcd_examples():
    a = P2("1,0,1")  # x^2 + 1 = (x+1)^2 in char 2
    b = P2("1,1")
    assert poly_gcd(a, b) == b
    assert poly_gcd(a, Poly.zero(F2)) == a.monic()
    assert poly_gcd(Poly.x(F2), P2("1,1")) == Poly.one(F2)
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(F2), Poly.zero(F2))


def test_xgcd_bezout():
    rng = random.Random(11)
    for field in (F2, F3, F4):
        for _ in range(100):
            a = Poly(field, [rng.randrange(field.q) for _ in range(rng.randrange(1, 7))])
            b = Poly(field, [rng.randrange(field.q) for _ in range(rng.randrange(1, 7))])
            if a.is_zero and b.is_zero:
                continue
            g, s, t = poly_xgcd(a, b)
            assert s * a + t * b == g
            assert g.is_monic


def test_factorize_examples():
    f = P2("1,0,0,1")  # x^3 + 1
    fac = factorize(f)
    assert fac.unit == 1
    assert [(g.to_string(), e) for g, e in fac.factors] == [("1,1", 1), ("1,1,1", 1)]
    fac = factorize(P2("1,0,1"))  # x^2 + 1 = (x+1)^2
    assert [(g.to_string(), e) for g, e in fac.factors] == [("1,1", 2)]
    irr = P2("1,1,0,1")
    assert factorize(irr).factors == ((irr, 1),)
    with pytest.raises(ValueError):
        factorize(Poly.zero(F2))


@pytest.mark.parametrize("field", [F2, F3, F4])
def test_factorize_round_trip_exhaustive(field):
    for d in range(1, 7):
        for f in monic_polys(field, d):
            fac = factorize(f)
            assert fac.product() == f
            seen = set()
            for g, e in fac.factors:
                assert g.is_monic and e >= 1
                assert g not in seen
                seen.add(g)


def test_factorize_nonmonic_unit():
    f = Poly(F3, [2, 0, 2])  # 2(x^2 + 1) = 2(x^2+1); x^2+1 = (x+2)? check via product
    fac = factorize(f)
    assert fac.unit == 2
    assert fac.product() == f


def test_factorize_is_deterministic():
    f = Poly(F4, [1, 2, 3, 0, 1, 1])
    assert factorize(f) == factorize(f)


def test_poly_order_examples():
    assert poly_order(P2("1,1")) == 1
    assert poly_order(P2("1,1,0,1")) == 7
    assert poly_order(P2("1,1,1") ** 2) == 6
    assert poly_order(Poly.one(F2)) == 1
    with pytest.raises(ValueError):
        poly_order(Poly.x(F2))
    with pytest.raises(ValueError):
        poly_order(Poly.zero(F2))


@pytest.mark.parametrize("field", [F2, F3])
def test_poly_order_matches_brute_force(field):
    for d in range(1, 5):
        for f in monic_polys(field, d):
            if f.constant_term == 0:
                continue
            assert poly_order(f) == brute_poly_order(f)


def test_is_primitive_examples():
    assert is_primitive(P2("1,1,0,1"))
    assert not is_primitive(P2("1,1,1,1,1"))  # order 5, not 15
    assert is_primitive(P2("1,1"))
    with pytest.raises(ValueError):
        is_primitive(P2("1,0,1"))  # (x+1)^2


def test_find_group_generator_examples():
    assert find_group_generator(P2("1,1,0,1")) == Poly.x(F2)
    assert find_group_generator(P2("1,1,1")) == Poly.x(F2)
    assert find_group_generator(P2("1,1,1,1,1")) == P2("1,1")


@pytest.mark.parametrize(
    "field,maxdeg", [(F2, 6), (F3, 3), (F4, 3), (GF(2, 3), 2)]
)
def test_group_generator_certificate(field, maxdeg):
    for g in irreducible_polys(field, maxdeg):
        h = find_group_generator(g)
        n = field.q**g.degree - 1
        assert h.degree < g.degree or g.degree == 0
        assert pow_mod(h, n, g).is_one if n else h.is_one
        for ell in integer_factor(n) if n > 1 else []:
            assert not pow_mod(h, n // ell, g).is_one


def test_integer_factor_examples():
    assert integer_factor(7) == {7: 1}
    assert integer_factor(15) == {3: 1, 5: 1}
    assert integer_factor(2**16 - 1) == {3: 1, 5: 1, 17: 1, 257: 1}
    assert integer_factor(1) == {}
    assert integer_factor(2**4 * 3**2) == {2: 4, 3: 2}
    with pytest.raises(ValueError):
        integer_factor(0)


def test_is_prime():
    from crcspectrum import is_prime

    primes = {2, 3, 5, 7, 11, 13, 2**13 - 1, 2**31 - 1, 2**61 - 1}
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(n) for n in (0, 1, 4, 9, 561, 2**32 - 1, 2**67 - 1))


def test_integer_factor_large():
    n = (2**31 - 1) * (2**61 - 1)
    assert integer_factor(n) == {2**31 - 1: 1, 2**61 - 1: 1}


def test_string_round_trip_and_errors():
    f = P2("1,1,0,1")
    assert Poly.from_string(F2, f.to_string()) == f
    assert Poly.zero(F2).to_string() == "0"
    with pytest.raises(ParseError):
        Poly.from_string(F2, "1,2")  # coefficient out of range
    with pytest.raises(ParseError):
        Poly.from_string(F2, "1,,1")


def test_encoding_round_trip():
    rng = random.Random(3)
    for field in (F2, F3, F4):
        for _ in range(100):
            f = Poly(field, [rng.randrange(field.q) for _ in range(rng.randrange(8))])
            assert Poly.from_encoding(field, f.encoding) == f


def test_is_irreducible_small():
    assert is_irreducible(P2("1,1,1"))
    assert not is_irreducible(P2("1,0,1"))
    assert not is_irreducible(Poly.one(F2))
