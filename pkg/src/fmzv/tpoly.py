"""Polynomials in t over A = F_q[theta], and fractions with F_q[t] denominators.

A :class:`TPoly` stores its t-coefficients (each a :class:`Poly` in theta)
little-endian.  A :class:`TFraction` is ``num / den`` with ``den`` a
:class:`Poly` read as a polynomial in t with constant coefficients.
Fractions are not reduced; :meth:`TFraction.exact` performs the one place
where exactness is asserted.
"""

from .errors import DivisionByZero, InexactDivision
from .poly import Poly, _strip as _strip_codes, poly_divrem, poly_gcd

__all__ = ["TPoly", "TFraction"]


def _strip(c):
    n = len(c)
    while n and c[n - 1].is_zero():
        n -= 1
    return tuple(c[:n])


class TPoly:
    """An element of F_q[t, theta]."""

    __slots__ = ("F", "c")

    def __init__(self, F, coeffs=()):
        coeffs = list(coeffs)
        for a in coeffs:
            if not isinstance(a, Poly) or a.F != F:
                raise ValueError("TPoly coefficients must be Poly over the same field")
        self.F = F
        self.c = _strip(coeffs)

    @classmethod
    def _raw(cls, F, c):
        obj = cls.__new__(cls)
        obj.F, obj.c = F, c
        return obj

    @classmethod
    def zero(cls, F):
        return cls._raw(F, ())

    @classmethod
    def one(cls, F):
        return cls._raw(F, (Poly.one(F),))

    @classmethod
    def from_theta(cls, a: Poly):
        """Embed a polynomial in theta (degree 0 in t)."""
        return cls._raw(a.F, (a,) if a else ())

    @classmethod
    def from_t(cls, a: Poly):
        """Embed a polynomial in t with constant coefficients."""
        F = a.F
        return cls._raw(F, tuple(Poly.const(F, x) for x in a.c))

    @classmethod
    def t_power(cls, F, n: int, coeff: Poly = None):
        coeff = Poly.one(F) if coeff is None else coeff
        if coeff.is_zero():
            return cls.zero(F)
        return cls._raw(F, (Poly.zero(F),) * n + (coeff,))

    @property
    def degree_t(self):
        return len(self.c) - 1 if self.c else float("-inf")

    @property
    def degree_theta(self):
        return max((a.degree for a in self.c), default=float("-inf"))

    def coeff(self, j: int) -> Poly:
        return self.c[j] if 0 <= j < len(self.c) else Poly.zero(self.F)

    def is_zero(self):
        return not self.c

    def is_one(self):
        return len(self.c) == 1 and self.c[0].is_one()

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.F == other.F and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash((self.F, self.c))

    def to_pairs(self):
        """Sparse ``[(t-exponent, theta-poly string), ...]`` ascending in t."""
        return [(j, str(a)) for j, a in enumerate(self.c) if a]

    def __str__(self):
        return str(self.to_pairs())

    def __repr__(self):
        return f"TPoly({self.pretty()})"

    def pretty(self):
        if not self.c:
            return "0"
        parts = []
        for j in range(len(self.c) - 1, -1, -1):
            a = self.c[j]
            if a.is_zero():
                continue
            mono = "" if j == 0 else "t" if j == 1 else f"t^{j}"
            body = a.pretty()
            if mono and body == "1":
                parts.append(mono)
            elif mono:
                parts.append(f"({body}){mono}" if "+" in body else body + mono)
            else:
                parts.append(body)
        return " + ".join(parts)

    def __add__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, y in enumerate(b):
            out[j] = out[j] + y
        return TPoly._raw(self.F, _strip(out))

    def __neg__(self):
        return TPoly._raw(self.F, tuple(-a for a in self.c))

    def __sub__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def _pack(self, width):
        # t -> z**width, theta -> z; injective when width exceeds theta-degrees
        out = [0] * (len(self.c) * width)
        for j, a in enumerate(self.c):
            out[j * width:j * width + len(a.c)] = a.c
        return Poly._raw(self.F, _strip_codes(out))

    @classmethod
    def _unpack(cls, F, z: Poly, width):
        c = z.c
        coeffs = [Poly(F, c[k:k + width]) for k in range(0, len(c), width)]
        return cls._raw(F, _strip(coeffs))

    def __mul__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.c or not other.c:
            return TPoly.zero(self.F)
        if len(self.c) == 1 or len(other.c) == 1:
            if len(self.c) == 1:
                self, other = other, self
            a = other.c[0]
            return TPoly._raw(self.F, _strip([x * a for x in self.c]))
        width = self.degree_theta + other.degree_theta + 1
        prod = self._pack(width) * other._pack(width)
        return TPoly._unpack(self.F, prod, width)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = TPoly.one(self.F), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_theta(self, a: Poly):
        return TPoly._raw(self.F, _strip([x * a for x in self.c]))

    def mul_t(self, d: Poly):
        """Multiply by a polynomial in t with constant coefficients."""
        return self * TPoly.from_t(d)

    def twist(self, i: int):
        """Apply the q**i-power map to every theta-coefficient; t is untouched."""
        if i == 0:
            return self
        return TPoly._raw(self.F, tuple(a.frobenius(i) for a in self.c))

    def at_theta(self) -> Poly:
        """Substitute t -> theta."""
        result = Poly.zero(self.F)
        for j, a in enumerate(self.c):
            result = result + a.shift(j)
        return result

    def theta_major(self):
        """Transpose: list of t-polynomials indexed by the theta-exponent."""
        F = self.F
        width = self.degree_theta + 1 if self.c else 0
        rows = [[0] * len(self.c) for _ in range(width)]
        for j, a in enumerate(self.c):
            for k, x in enumerate(a.c):
                rows[k][j] = x
        return [Poly(F, r) for r in rows]

    @classmethod
    def from_theta_major(cls, F, rows):
        cols = max((len(r.c) for r in rows), default=0)
        coeffs = [[0] * len(rows) for _ in range(cols)]
        for k, r in enumerate(rows):
            for j, x in enumerate(r.c):
                coeffs[j][k] = x
        return cls._raw(F, _strip([Poly(F, c) for c in coeffs]))

    def divide_exact_t(self, d: Poly):
        """Divide by a t-polynomial, asserting that the division is exact."""
        if d.is_zero():
            raise DivisionByZero("division by the zero t-polynomial")
        rows = []
        for r in self.theta_major():
            quot, rem = poly_divrem(r, d)
            if not rem.is_zero():
                raise InexactDivision(f"{self.pretty()} is not divisible by {d.pretty('t')}")
            rows.append(quot)
        return TPoly.from_theta_major(self.F, rows)


class TFraction:
    """``num / den`` with num in F_q[t, theta] and den in F_q[t], not reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: TPoly, den: Poly = None):
        if den is None:
            den = Poly.one(num.F)
        if den.is_zero():
            raise DivisionByZero("TFraction with zero denominator")
        self.num, self.den = num, den

    @classmethod
    def zero(cls, F):
        return cls(TPoly.zero(F), Poly.one(F))

    @classmethod
    def one(cls, F):
        return cls(TPoly.one(F), Poly.one(F))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            return TFraction(self.num + other.num, d1)
        g = poly_gcd(d1, d2)
        c1, c2 = d2 // g, d1 // g
        num = self.num.mul_t(c1) + other.num.mul_t(c2)
        return TFraction(num, d1 * c1)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return TFraction.zero(self.num.F)
        return TFraction(self.num * other.num, self.den * other.den)

    def exact(self, factor: Poly = None) -> TPoly:
        """Return ``num * factor / den`` as a TPoly, raising if inexact."""
        num = self.num if factor is None else self.num.mul_t(factor)
        return num.divide_exact_t(self.den)

    def __eq__(self, other):
        if not isinstance(other, TFraction):
            return NotImplemented
        return self.num.mul_t(other.den) == other.num.mul_t(self.den)

    __hash__ = None
