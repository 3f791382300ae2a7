"""Exact elements of k = F_q(theta) in canonical form."""

from .errors import DivisionByZero, ExcludedPrime, NotInvertible
from .poly import Poly, poly_ext_gcd, poly_gcd

__all__ = ["RationalFn", "ratfn_normalize"]


class RationalFn:
    """A reduced fraction num/den with monic denominator.

    Two instances are equal iff their canonical numerators and denominators
    coincide, so ``==`` and ``str`` agree.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.one(num.F)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.one(num.F)
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num // g, den // g
        lc, den = den.monic()
        if lc != 1:
            num = num.scale(num.F.inv[lc])
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_poly(cls, a: Poly):
        return cls._raw(a, Poly.one(a.F))

    @classmethod
    def zero(cls, F):
        return cls._raw(Poly.zero(F), Poly.one(F))

    @classmethod
    def one(cls, F):
        return cls._raw(Poly.one(F), Poly.one(F))

    @property
    def F(self):
        return self.num.F

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RationalFn.from_poly(other)
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"RationalFn({self})"

    def pretty(self, var: str = "θ") -> str:
        if self.den.is_one():
            return self.num.pretty(var)
        return f"({self.num.pretty(var)})/({self.den.pretty(var)})"

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, Poly):
            return RationalFn.from_poly(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RationalFn(a + c, b)
        g = poly_gcd(b, d)
        if g.is_one():
            num = a * d + c * b
            if num.is_zero():
                return RationalFn.zero(self.F)
            return RationalFn._raw(num, b * d)
        b1, d1 = b // g, d // g
        num = a * d1 + c * b1
        if num.is_zero():
            return RationalFn.zero(self.F)
        # only factors of g can cancel
        h = poly_gcd(num, g)
        den = b1 * d
        if not h.is_one():
            num, den = num // h, den // h
        return RationalFn._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFn.zero(self.F)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        return RationalFn._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in k")
        lc, num = self.num.monic()
        return RationalFn._raw(self.den.scale(self.F.inv[lc]), num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFn._raw(self.num**n, self.den**n)

    def frobenius(self, i: int = 1):
        return RationalFn._raw(self.num.frobenius(i), self.den.frobenius(i))

    def reduce_mod(self, P: Poly) -> Poly:
        """Image in A/(P) as a reduced representative.

        Raises :class:`ExcludedPrime` when P divides the denominator.
        """
        den = self.den % P
        if den.is_zero():
            raise ExcludedPrime(P, "divides the denominator")
        num = self.num % P
        if den.is_one():
            return num
        g, x, _ = poly_ext_gcd(den, P)
        if not g.is_one():  # pragma: no cover - P irreducible
            raise NotInvertible(f"{self.den} is not invertible mod {P}")
        return (num * x) % P


def ratfn_normalize(num: Poly, den: Poly) -> RationalFn:
    """Canonical (reduced, monic-denominator) form of num/den."""
    return RationalFn(num, den)
