"""Univariate polynomials over F_q.

:class:`Poly` models A = F_q[theta].  The same class is reused for
polynomials in t with constant coefficients (the denominators
D_i|_{theta=t}); the variable name is only a matter of interpretation.

Coefficients are little-endian tuples of field codes with no trailing
zeros.  The zero polynomial has the empty tuple and degree ``NEG_INF``.
"""

from functools import lru_cache
from itertools import product

from .budget import check_budget
from .errors import BothZero, DivisionByZero
from .field import FieldCtx

__all__ = [
    "NEG_INF", "Poly", "poly_divrem", "poly_ext_gcd", "poly_gcd",
    "enumerate_monic", "is_irreducible", "irreducibles", "primes_up_to",
]

NEG_INF = float("-inf")

# Above this length both operands are packed into Python ints for multiplication.
_KRONECKER_MIN = 24


def _strip(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _mul_prime(a, b, p):
    if len(a) >= _KRONECKER_MIN and len(b) >= _KRONECKER_MIN:
        return _mul_kronecker(a, b, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip([v % p for v in out])


def _mul_kronecker(a, b, p):
    bound = min(len(a), len(b)) * (p - 1) ** 2
    width = (bound.bit_length() + 7) // 8
    pack = lambda c: int.from_bytes(b"".join(x.to_bytes(width, "little") for x in c), "little")
    prod = (pack(a) * pack(b)).to_bytes((len(a) + len(b) - 1) * width, "little")
    out = [int.from_bytes(prod[k:k + width], "little") % p for k in range(0, len(prod), width)]
    return _strip(out)


def _mul_table(a, b, F):
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][row[y]]
    return _strip(out)


class Poly:
    """An element of F_q[theta] (or of F_q[t]).

    >>> from fmzv.field import make_field
    >>> F = make_field(3)
    >>> a = Poly(F, [1, 0, 1])
    >>> str(a * Poly.theta(F))
    '[0,1,0,1]'
    """

    __slots__ = ("F", "c", "_hash")

    def __init__(self, F: FieldCtx, coeffs=()):
        c = _strip(list(coeffs))
        q = F.q
        for x in c:
            if not isinstance(x, int) or not 0 <= x < q:
                raise ValueError(f"coefficient {x!r} is not an element code of {F}")
        self.F = F
        self.c = c
        self._hash = None

    @classmethod
    def _raw(cls, F, c):
        obj = cls.__new__(cls)
        obj.F = F
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, F, a: int):
        return cls._raw(F, (a,) if a else ())

    @classmethod
    def zero(cls, F):
        return cls._raw(F, ())

    @classmethod
    def one(cls, F):
        return cls._raw(F, (1,))

    @classmethod
    def monomial(cls, F, n: int, a: int = 1):
        if not a:
            return cls._raw(F, ())
        return cls._raw(F, (0,) * n + (a,))

    @classmethod
    def theta(cls, F):
        return cls._raw(F, (0, 1))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def __getitem__(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __len__(self):
        return len(self.c)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c and self.F == other.F
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.F, self.c))
        return self._hash

    def sort_key(self):
        """Order by degree, then lexicographically on the coefficient vector."""
        return (len(self.c), self.c)

    def __str__(self):
        return "[" + ",".join(map(str, self.c)) + "]"

    def __repr__(self):
        return f"Poly({self})"

    def pretty(self, var: str = "θ") -> str:
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            coef = str(a) if (a != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms)

    # -- ring operations -------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.F is not self.F and other.F != self.F:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        F = self.F
        if F.e == 1:
            p = F.p
            out = list(a)
            for i, y in enumerate(b):
                out[i] = (out[i] + y) % p
        else:
            add = F.add
            out = list(a)
            for i, y in enumerate(b):
                out[i] = add[out[i]][y]
        return Poly._raw(F, _strip(out))

    def __neg__(self):
        neg = self.F.neg
        return Poly._raw(self.F, tuple(neg[x] for x in self.c))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return Poly._raw(self.F, ())
        F = self.F
        if F.e == 1:
            return Poly._raw(F, _mul_prime(a, b, F.p))
        return Poly._raw(F, _mul_table(a, b, F))

    def scale(self, a: int):
        if not a:
            return Poly._raw(self.F, ())
        row = self.F.mul[a]
        return Poly._raw(self.F, tuple(row[x] for x in self.c))

    def shift(self, n: int):
        """Multiply by theta**n."""
        if not self.c:
            return self
        return Poly._raw(self.F, (0,) * n + self.c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent; use RationalFn or Residue")
        result = Poly.one(self.F)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def monic(self):
        """Return ``(lc, self / lc)``."""
        if not self.c:
            raise DivisionByZero("zero polynomial has no monic associate")
        lc = self.c[-1]
        if lc == 1:
            return 1, self
        return lc, self.scale(self.F.inv[lc])

    def frobenius(self, i: int = 1):
        """Return self**(q**i).

        Coefficients are fixed by the q-power map, so only exponents move.
        """
        if i == 0 or len(self.c) <= 1:
            return self
        step = self.F.q**i
        out = [0] * ((len(self.c) - 1) * step + 1)
        for j, a in enumerate(self.c):
            out[j * step] = a
        return Poly._raw(self.F, tuple(out))

    def frobenius_mod(self, i: int, P: "Poly"):
        """Return self**(q**i) mod P by i successive q-power maps."""
        x = self % P
        for _ in range(i):
            x = x.frobenius(1) % P
        return x

    def powmod(self, n: int, P: "Poly"):
        result = Poly.one(self.F) % P
        base = self % P
        while n:
            if n & 1:
                result = (result * base) % P
            n >>= 1
            if n:
                base = (base * base) % P
        return result

    def __call__(self, x: "Poly"):
        """Evaluate at a polynomial by Horner's rule."""
        result = Poly.zero(self.F)
        for a in reversed(self.c):
            result = result * x + Poly.const(self.F, a)
        return result


def poly_divrem(a: Poly, b: Poly):
    """Euclidean division: ``a = quot*b + rem`` with ``deg rem < deg b``."""
    if not isinstance(b, Poly) or b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    F = a.F
    n, m = len(a.c), len(b.c)
    if n < m:
        return Poly._raw(F, ()), a
    bc = b.c
    inv = F.inv[bc[-1]]
    r = list(a.c)
    quot = [0] * (n - m + 1)
    if F.e == 1:
        p = F.p
        for k in range(n - m, -1, -1):
            coef = r[k + m - 1] * inv % p
            if coef:
                quot[k] = coef
                for j in range(m):
                    r[k + j] = (r[k + j] - coef * bc[j]) % p
    else:
        sub, mul = F.sub, F.mul
        for k in range(n - m, -1, -1):
            coef = mul[r[k + m - 1]][inv]
            if coef:
                quot[k] = coef
                row = mul[coef]
                for j in range(m):
                    r[k + j] = sub[r[k + j]][row[bc[j]]]
    return Poly._raw(F, _strip(quot)), Poly._raw(F, _strip(r[:m - 1]))


def poly_ext_gcd(a: Poly, b: Poly):
    """Return ``(g, x, y)`` with g the monic gcd and ``x*a + y*b == g``."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    F = a.F
    r0, r1 = a, b
    x0, x1 = Poly.one(F), Poly.zero(F)
    y0, y1 = Poly.zero(F), Poly.one(F)
    while r1:
        quot, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        x0, x1 = x1, x0 - quot * x1
        y0, y1 = y1, y0 - quot * y1
    lc, g = r0.monic()
    inv = F.inv[lc]
    return g, x0.scale(inv), y0.scale(inv)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd without the Bezout cofactors."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()[1]


def enumerate_monic(F: FieldCtx, d: int) -> list:
    """All q**d monic polynomials of degree d, lexicographic on coefficient vectors."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    check_budget(F.q**d, f"enumerating monic polynomials of degree {d}")
    return _enumerate_monic(F, d)


@lru_cache(maxsize=256)
def _enumerate_monic(F, d):
    return tuple(Poly._raw(F, low + (1,)) for low in product(range(F.q), repeat=d))


def is_irreducible(P: Poly) -> bool:
    """Trial division by every monic polynomial of degree <= deg(P)/2."""
    d = P.degree
    if d == NEG_INF or d < 1:
        return False
    if P.c[0] == 0:
        return d == 1
    for k in range(1, d // 2 + 1):
        for f in enumerate_monic(P.F, k):
            if (P % f).is_zero():
                return False
    return True


def irreducibles(F: FieldCtx, d: int) -> list:
    """The monic irreducibles of degree d in enumeration order."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    check_budget(F.q**d, f"sieving irreducibles of degree {d}")
    return list(_irreducibles(F, d))


@lru_cache(maxsize=256)
def _irreducibles(F, d):
    return tuple(P for P in _enumerate_monic(F, d) if is_irreducible(P))


def primes_up_to(F: FieldCtx, dmax: int) -> list:
    """Monic irreducibles of degree 1..dmax ordered by (degree, lex)."""
    out = []
    for d in range(1, dmax + 1):
        out.extend(irreducibles(F, d))
    return out
