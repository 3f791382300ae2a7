import pytest

from fmzv import InexactDivision, Poly, TFraction, TPoly, make_field

F = make_field(3)


def th(*c):
    return Poly(F, c)


def T(*rows):
    return TPoly(F, [th(*r) for r in rows])


def test_arithmetic_and_degrees():
    a = T([0, 2], [1])  # t - θ
    assert a.degree_t == 1 and a.degree_theta == 1
    b = a * a
    assert b == T([0, 0, 1], [0, 1], [1])  # t^2 - 2tθ + θ^2
    assert (b - a * a).is_zero()
    assert a.to_pairs() == [(0, "[0,2]"), (1, "[1]")]
    assert a.pretty() == "t + 2θ"


def test_twist_and_at_theta():
    a = T([0, 2], [1])
    assert a.twist(1) == T([0, 0, 0, 2], [1])
    assert a.twist(0) is a
    assert a.at_theta().is_zero()
    assert TPoly.one(F).twist(3) == TPoly.one(F)


def test_theta_major_roundtrip():
    a = T([1, 2, 0, 1], [], [0, 1])
    assert TPoly.from_theta_major(F, a.theta_major()) == a


def test_exact_t_division():
    d = th(2, 0, 0, 1)  # t^3 - t
    a = T([0, 1], [2, 1]) * TPoly.from_t(d)
    assert a.divide_exact_t(d) == T([0, 1], [2, 1])
    with pytest.raises(InexactDivision):
        T([0, 1]).divide_exact_t(th(0, 1))


def test_fraction_sum():
    x = TFraction(TPoly.one(F), th(0, 1))
    y = TFraction(TPoly.one(F), th(1, 1))
    s = x + y
    # 1/t + 1/(t+1) = (2t+1)/(t^2+t)
    assert s == TFraction(TPoly.from_t(th(1, 2)), th(0, 1, 1))
    assert s.exact(th(0, 1, 1)) == TPoly.from_t(th(1, 2))
