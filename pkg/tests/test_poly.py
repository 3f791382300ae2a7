import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmzv import BothZero, BudgetExceeded, DivisionByZero, Poly, budget_limit, make_field
from fmzv.poly import (enumerate_monic, irreducibles, is_irreducible, poly_divrem, poly_ext_gcd,
                       poly_gcd, primes_up_to)
from fmzv.residue import frobenius

FIELDS = [make_field(2), make_field(3), make_field(5), make_field(2, 2), make_field(3, 2)]


def P3(*c):
    return Poly(make_field(3), c)


@st.composite
def polys(draw, F, max_len=8):
    return Poly(F, draw(st.lists(st.integers(0, F.q - 1), max_size=max_len)))


@st.composite
def field_and_polys(draw, n=3, max_len=8):
    F = draw(st.sampled_from(FIELDS))
    return (F,) + tuple(draw(polys(F, max_len)) for _ in range(n))


@given(field_and_polys())
def test_ring_axioms(data):
    F, a, b, c = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Poly.zero(F)
    assert a * Poly.one(F) == a


@given(field_and_polys(n=2))
def test_divrem_roundtrip(data):
    F, a, b = data
    if b.is_zero():
        return
    quot, rem = poly_divrem(a, b)
    assert quot * b + rem == a
    assert rem.degree < b.degree


@given(field_and_polys(n=2))
def test_ext_gcd_certificate(data):
    F, a, b = data
    if a.is_zero() and b.is_zero():
        return
    g, x, y = poly_ext_gcd(a, b)
    assert g.is_monic()
    assert x * a + y * b == g
    assert (a % g).is_zero() and (b % g).is_zero()


@given(field_and_polys(n=2, max_len=6), st.integers(0, 2))
def test_frobenius_is_ring_map(data, i):
    F, a, b = data
    assert frobenius(a + b, i) == frobenius(a, i) + frobenius(b, i)
    assert frobenius(a * b, i) == frobenius(a, i) * frobenius(b, i)
    assert frobenius(a, i) == a ** (F.q ** i)


def test_kronecker_path_matches_schoolbook():
    F = make_field(5)
    ca = [(7 * k + 3) % 5 for k in range(40)] + [1]
    cb = [(3 * k + 1) % 5 for k in range(30)] + [2]
    a, b = Poly(F, ca), Poly(F, cb)
    slow = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            slow[i + j] = (slow[i + j] + x * y) % 5
    assert a * b == Poly(F, slow)


def test_divrem_examples():
    assert poly_divrem(P3(1, 0, 1), P3(0, 1)) == (P3(0, 1), P3(1))
    assert poly_divrem(P3(0, 1), P3(1, 0, 1)) == (P3(), P3(0, 1))
    with pytest.raises(DivisionByZero):
        poly_divrem(P3(1, 0, 1), P3())


def test_ext_gcd_examples():
    g, x, y = poly_ext_gcd(P3(1, 0, 1), P3(0, 1))
    assert g == P3(1)
    assert x * P3(1, 0, 1) + y * P3(0, 1) == g
    assert poly_gcd(P3(0, 1), P3(0, 1)) == P3(0, 1)
    assert poly_gcd(P3(), P3(1, 1)) == P3(1, 1)
    assert poly_gcd(P3(0, 2), P3(0, 2)) == P3(0, 1)
    with pytest.raises(BothZero):
        poly_ext_gcd(P3(), P3())


def test_frobenius_examples(F3):
    assert frobenius(P3(1, 1), 1) == P3(1, 0, 0, 1)
    assert frobenius(P3(2, 1, 2), 0) == P3(2, 1, 2)
    for c in range(3):
        assert frobenius(c, 2, F3) == c


def test_enumerate_monic(F2, F3):
    assert list(enumerate_monic(F2, 1)) == [Poly(F2, [0, 1]), Poly(F2, [1, 1])]
    assert list(enumerate_monic(F3, 0)) == [P3(1)]
    assert len(enumerate_monic(F3, 2)) == 9
    assert len(set(enumerate_monic(F3, 3))) == 27


def test_enumeration_budget(F3):
    with budget_limit(10):
        with pytest.raises(BudgetExceeded):
            enumerate_monic(F3, 3)


def test_irreducible_examples(F2, F3):
    assert list(irreducibles(F3, 1)) == [P3(0, 1), P3(1, 1), P3(2, 1)]
    quad = irreducibles(F3, 2)
    assert len(quad) == 3 and P3(1, 0, 1) in quad
    # sieve: a monic quadratic is reducible iff it is a product of two monic linears
    lin = enumerate_monic(F3, 1)
    products = {a * b for a in lin for b in lin}
    assert set(quad) == set(enumerate_monic(F3, 2)) - products
    assert not is_irreducible(Poly(F2, [1, 0, 1]))


def _mobius(n):
    out, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    return -out if m > 1 else out


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"q{F.q}")
def test_necklace_count(F):
    for d in range(1, 5):
        if F.q ** d > 10**4:
            break
        expected = sum(_mobius(k) * F.q ** (d // k) for k in range(1, d + 1) if d % k == 0) // d
        assert len(irreducibles(F, d)) == expected


def test_primes_up_to_order(F3):
    ps = primes_up_to(F3, 3)
    assert [P.degree for P in ps] == sorted(P.degree for P in ps)
    assert len(ps) == 3 + 3 + 8


def test_encoding_and_pretty(F3, F4):
    assert str(P3(1, 0, 1)) == "[1,0,1]"
    assert str(P3()) == "[]"
    assert P3(1, 0, 2).pretty() == "2θ^2+1"
    assert str(Poly(F4, [2, 1])) == "[2,1]"
    assert P3(0, 0, 0).degree == float("-inf")
    assert P3(1, 2, 0, 0) == P3(1, 2)


def test_evaluation_and_powmod(F3):
    P = P3(1, 0, 1)
    a = P3(1, 1)
    assert a.powmod(8, P) == P3(1)  # (A/P)^* has order 8
    assert P(P3(0, 1)) == P
    assert a.frobenius_mod(1, P) == frobenius(a, 1) % P


def test_mixed_fields_rejected(F2, F3):
    with pytest.raises(ValueError):
        Poly(F2, [1]) + Poly(F3, [1])
