"""Residues in A/(P) for a monic irreducible P, and the generic Frobenius map."""

from .errors import NotInvertible
from .poly import Poly, poly_ext_gcd
from .ratfn import RationalFn

__all__ = ["Residue", "residue_inverse", "frobenius"]


class Residue:
    """The class of ``rep`` in A/(P).

    P is trusted to be monic irreducible (callers such as the evaluator check
    this once per window rather than on every arithmetic step).
    """

    __slots__ = ("P", "rep")

    def __init__(self, rep: Poly, P: Poly):
        self.P = P
        self.rep = rep % P

    @classmethod
    def _raw(cls, rep, P):
        obj = cls.__new__(cls)
        obj.P, obj.rep = P, rep
        return obj

    @classmethod
    def from_ratfn(cls, x: RationalFn, P: Poly):
        return cls._raw(x.reduce_mod(P), P)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.P == other.P and self.rep == other.rep
        return NotImplemented

    def __hash__(self):
        return hash((self.P, self.rep))

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"Residue({self.rep} mod {self.P})"

    def to_dict(self):
        return {"prime": str(self.P), "residue": str(self.rep)}

    def is_zero(self):
        return self.rep.is_zero()

    def _same(self, other):
        if not isinstance(other, Residue):
            return NotImplemented
        if other.P != self.P:
            raise ValueError("residues modulo different primes")
        return other

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return Residue._raw(self.rep + other.rep, self.P)

    def __sub__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return Residue._raw(self.rep - other.rep, self.P)

    def __neg__(self):
        return Residue._raw(-self.rep, self.P)

    def __mul__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return Residue._raw((self.rep * other.rep) % self.P, self.P)

    def inverse(self):
        return residue_inverse(self.rep, self.P)

    def __truediv__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Residue._raw(self.rep.powmod(n, self.P), self.P)

    def frobenius(self, i: int = 1):
        return Residue._raw(self.rep.frobenius_mod(i, self.P), self.P)


def residue_inverse(a: Poly, P: Poly) -> Residue:
    """The inverse of a modulo P via the extended Euclidean algorithm."""
    r = a % P
    if r.is_zero():
        raise NotInvertible(f"{a} is divisible by {P}")
    g, x, _ = poly_ext_gcd(r, P)
    if not g.is_one():
        raise NotInvertible(f"{a} and {P} are not coprime")
    return Residue._raw(x % P, P)


def frobenius(x, i: int, F=None):
    """x**(q**i) for x in F_q, A, k or A/(P).

    Plain ints are field elements and need ``F`` only for validation;
    the q-power map fixes F_q pointwise.
    """
    if i < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    if isinstance(x, int):
        if F is not None and not 0 <= x < F.q:
            raise ValueError(f"{x} is not an element code of {F}")
        return x
    return x.frobenius(i)
