import pytest
from hypothesis import given
from hypothesis import strategies as st

from fmzv import (DivisionByZero, ExcludedPrime, NotInvertible, Poly, RationalFn, Residue,
                  make_field)
from fmzv.poly import irreducibles
from fmzv.ratfn import ratfn_normalize
from fmzv.residue import frobenius, residue_inverse

F3 = make_field(3)


def P(*c):
    return Poly(F3, c)


coeff_lists = st.lists(st.integers(0, 2), max_size=5)


@st.composite
def ratfns(draw):
    num = P(*draw(coeff_lists))
    den = P(*draw(coeff_lists))
    if den.is_zero():
        den = P(1)
    return RationalFn(num, den)


def test_normalize_examples():
    assert ratfn_normalize(P(0, 2, 1), P(0, 1)) == RationalFn(P(2, 1))
    r = ratfn_normalize(P(1), P(0, 2))
    assert (r.num, r.den) == (P(2), P(0, 1))
    z = ratfn_normalize(P(), P(0, 1))
    assert (z.num, z.den) == (P(), P(1))
    assert str(r) == "[2]/[0,1]"
    with pytest.raises(DivisionByZero):
        ratfn_normalize(P(1), P())


@given(ratfns())
def test_normalize_idempotent(x):
    assert ratfn_normalize(x.num, x.den) == x
    assert x.den.is_monic()


@given(ratfns(), ratfns(), ratfns())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if not b.is_zero():
        assert (a / b) * b == a


@given(ratfns(), ratfns(), st.integers(0, 2))
def test_frobenius_on_k(a, b, i):
    assert frobenius(a * b, i) == frobenius(a, i) * frobenius(b, i)
    assert frobenius(a + b, i) == frobenius(a, i) + frobenius(b, i)


def test_residue_inverse_examples():
    Q = P(1, 0, 1)
    assert residue_inverse(P(0, 1), Q).rep == P(0, 2)
    assert residue_inverse(P(1, 1), Q).rep == P(2, 1)
    with pytest.raises(NotInvertible):
        residue_inverse(P(1, 0, 1), Q)


@pytest.mark.parametrize("F", [make_field(2), make_field(3), make_field(2, 2)], ids=str)
def test_residue_inverse_all(F):
    for d in (1, 2, 3):
        for Q in irreducibles(F, d):
            for a in range(1, min(F.q ** d, 40)):
                rep = Poly(F, [(a // F.q ** k) % F.q for k in range(d)])
                if rep.is_zero():
                    continue
                inv = residue_inverse(rep, Q)
                assert (inv * Residue(rep, Q)).rep == Poly.one(F)


def test_reduce_mod():
    Q = P(1, 0, 1)
    x = RationalFn(P(1), P(0, 1))
    assert x.reduce_mod(Q) == P(0, 2)
    with pytest.raises(ExcludedPrime):
        x.reduce_mod(P(0, 1))
    assert Residue.from_ratfn(x, Q) * Residue(P(0, 1), Q) == Residue(P(1), Q)


def test_residue_frobenius_and_encoding():
    Q = P(1, 0, 1)
    x = Residue(P(1, 1), Q)
    assert frobenius(x, 1) == x ** 3
    assert frobenius(x, 2) == x  # |A/(Q)| = 9
    assert x.to_dict() == {"prime": "[1,0,1]", "residue": "[1,1]"}
    assert Residue(P(1, 1, 1), Q) == Residue(P(0, 1), Q)


def test_residues_at_different_primes_do_not_mix():
    with pytest.raises(ValueError):
        Residue(P(1), P(1, 0, 1)) + Residue(P(1), P(0, 1))
