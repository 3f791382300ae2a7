import pytest

from fmzv import NotIrreducible, Poly, RationalFn, make_field
from fmzv.encoding import (parse_composition, parse_point, parse_poly, parse_prime,
                           split_top_level)

F3, F4 = make_field(3), make_field(2, 2)


def test_parse_poly():
    assert parse_poly(F3, "[1,0,2]") == Poly(F3, [1, 0, 2])
    assert parse_poly(F3, "[]").is_zero()
    assert parse_poly(F3, "θ") == Poly.theta(F3)
    assert parse_poly(F3, "theta") == Poly.theta(F3)
    assert parse_poly(F3, "-1") == Poly(F3, [2])
    assert parse_poly(F4, "[2,1]") == Poly(F4, [2, 1])
    with pytest.raises(ValueError):
        parse_poly(F3, "[3]")
    with pytest.raises(ValueError):
        parse_poly(F3, "x+1")


def test_bare_integer_is_prime_field_constant():
    # 2 in F_4 is omega, but a bare 2 means 1 + 1 = 0
    assert parse_poly(F4, "2").is_zero()
    assert parse_poly(F4, "[2]") == Poly(F4, [2])


def test_parse_point_and_split():
    assert split_top_level("[1,2]/[0,1],3", ",") == ["[1,2]/[0,1]", "3"]
    u = parse_point(F3, "1,1/θ")
    assert u == (RationalFn.one(F3), RationalFn(Poly(F3, [1]), Poly.theta(F3)))
    with pytest.raises(ValueError):
        split_top_level("[1,2", ",")


def test_roundtrip_through_str():
    x = RationalFn(Poly(F3, [1, 2, 1]), Poly(F3, [2, 1, 1]))
    assert parse_point(F3, str(x)) == (x,)


def test_parse_composition_and_prime():
    assert parse_composition("1,2").parts == (1, 2)
    assert parse_composition("(3)").parts == (3,)
    assert parse_prime(F3, "[1,0,1]") == Poly(F3, [1, 0, 1])
    with pytest.raises(NotIrreducible):
        parse_prime(F3, "[0,1,1]")
    with pytest.raises(NotIrreducible):
        parse_prime(F3, "[1,0,2]")
