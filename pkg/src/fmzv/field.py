"""The base field F_q, q = p^e.

Elements are plain ints in ``range(q)``.  For e > 1 an element with
polynomial-basis coordinates (d_0, ..., d_{e-1}) over F_p is the integer
d_0 + d_1 p + ... + d_{e-1} p^{e-1}; this is also its canonical text form, so
the class of ``w`` in F_4 = F_2[w]/(w^2+w+1) is ``2``.

Arithmetic goes through lookup tables built once per context.  Contexts are
immutable, hashable and picklable (pickling rebuilds the tables).
"""

from functools import lru_cache
from itertools import product

from .errors import MissingModulus, NonPrimeP, ReducibleModulus

__all__ = ["FieldCtx", "make_field", "is_prime", "BUILTIN_MODULI", "least_irreducible"]

# Lexicographically least monic irreducible of degree e over F_p, where
# "least" orders the lower coefficients by their integer code
# c_0 + c_1 p + ... + c_{e-1} p^{e-1}.  Little-endian, leading 1 included.
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# Small helpers on little-endian coefficient lists over F_p.  They are only
# used to validate moduli and build the tables, so clarity beats speed.

def _fp_strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, b, p):
    a = _fp_strip(a)
    b = _fp_strip(b)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _fp_strip(a)
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _fp_strip(out)


def _fp_is_irreducible(f, p):
    f = _fp_strip(f)
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _fp_mod(f, list(low) + [1], p):
                return False
    return True


def least_irreducible(p: int, e: int) -> tuple:
    """Search for the least monic irreducible of degree e over F_p."""
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        if _fp_is_irreducible(low + [1], p):
            return tuple(low + [1])
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldCtx:
    """Context for F_q with explicit representation.

    Attributes ``p``, ``e``, ``q`` and ``modulus`` (``None`` when e == 1) are
    read-only.  Tables ``add``, ``sub``, ``mul`` are q x q nested lists;
    ``neg`` and ``inv`` are length-q lists (``inv[0]`` is ``None``).
    """

    __slots__ = ("p", "e", "q", "modulus", "add", "sub", "mul", "neg", "inv")

    def __init__(self, p, e, modulus):
        q = p**e
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "modulus", modulus)
        if e == 1:
            add = [[(a + b) % p for b in range(p)] for a in range(p)]
            sub = [[(a - b) % p for b in range(p)] for a in range(p)]
            mul = [[a * b % p for b in range(p)] for a in range(p)]
        else:
            digits = [self.coords(a) for a in range(q)]
            add = [[self.from_coords([(x + y) % p for x, y in zip(digits[a], digits[b])])
                    for b in range(q)] for a in range(q)]
            sub = [[self.from_coords([(x - y) % p for x, y in zip(digits[a], digits[b])])
                    for b in range(q)] for a in range(q)]
            mul = [[self.from_coords(_fp_mod(_fp_mul(digits[a], digits[b], p), modulus, p))
                    for b in range(q)] for a in range(q)]
        neg = [sub[0][a] for a in range(q)]
        inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        for name, val in (("add", add), ("sub", sub), ("mul", mul), ("neg", neg), ("inv", inv)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("FieldCtx is immutable")

    def __reduce__(self):
        return (make_field, (self.p, self.e, self.modulus))

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p and self.e == other.e
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def coords(self, a: int) -> list:
        """Polynomial-basis coordinates of ``a`` over F_p (length e)."""
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def from_coords(self, coords) -> int:
        coords = list(coords) + [0] * (self.e - len(coords))
        return sum(c * self.p**i for i, c in enumerate(coords))

    def from_int(self, n: int) -> int:
        """The image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv[a], -n
        result = 1
        mul = self.mul
        while n:
            if n & 1:
                result = mul[result][a]
            a = mul[a][a]
            n >>= 1
        return result


@lru_cache(maxsize=None)
def _cached_field(p, e, modulus):
    return FieldCtx(p, e, modulus)


def make_field(p: int, e: int = 1, modulus=None) -> FieldCtx:
    """Build (or fetch the cached) context for F_{p^e}.

    ``modulus`` is a little-endian coefficient sequence over F_p of a monic
    degree-e polynomial.  When e > 1 and it is omitted, the built-in table is
    consulted.
    """
    if not is_prime(p):
        raise NonPrimeP(f"p = {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if e == 1:
        # any monic linear modulus gives the same representation of F_p
        if modulus is not None and len(_fp_strip([c % p for c in modulus])) != 2:
            raise ReducibleModulus("modulus must have degree e = 1")
        return _cached_field(p, 1, None)
    if modulus is None:
        try:
            modulus = BUILTIN_MODULI[(p, e)]
        except KeyError:
            raise MissingModulus(f"no built-in modulus for q = {p}^{e}; pass one") from None
    modulus = tuple(c % p for c in modulus)
    if len(_fp_strip(modulus)) != e + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {e}")
    if not _fp_is_irreducible(modulus, p):
        raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
    return _cached_field(p, e, modulus)
