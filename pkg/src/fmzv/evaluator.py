"""Per-prime and exact truncated evaluation of power sums, FMZVs and FCMPLs.

The sums over strictly decreasing index chains d > i_1 > ... > i_r >= 0 are
evaluated with a suffix recurrence: with term_j(i) the contribution of
coordinate j at degree i,

    T_r(i) = term_r(i),    T_j(i) = term_j(i) * sum_{i' < i} T_{j+1}(i'),

and the value is sum_{i<d} T_1(i).  This costs O(r d) ring operations after
the terms are known.  :func:`fmzv_p_direct` enumerates tuples literally and
is kept as an oracle.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .budget import check_budget
from .carlitz import Composition, l_poly
from .errors import ExcludedPrime, IndexOutOfRange, NotIrreducible
from .poly import Poly, enumerate_monic, is_irreducible
from .ratfn import RationalFn
from .residue import Residue, residue_inverse

__all__ = [
    "AkWindow", "power_sum_mod", "power_sum_exact", "fmzv_p", "fmzv_p_direct",
    "s_truncated", "fcmpl_p", "fcmpl_truncated", "window", "chain_sum",
    "prime_sort_key", "as_point",
]


def prime_sort_key(P: Poly):
    return P.sort_key()


def _comp(s):
    return s if isinstance(s, Composition) else Composition.of(s)


def as_point(F, u) -> tuple:
    """Coerce an evaluation point to a tuple of RationalFn."""
    out = []
    for x in u:
        if isinstance(x, RationalFn):
            out.append(x)
        elif isinstance(x, Poly):
            out.append(RationalFn.from_poly(x))
        elif isinstance(x, int):
            out.append(RationalFn.from_poly(Poly.const(F, F.from_int(x))))
        else:
            raise TypeError(f"cannot use {x!r} as a coordinate of an evaluation point")
    return tuple(out)


def chain_sum(terms, zero, add, mul):
    """Sum over d > i_1 > ... > i_r >= 0 of prod_j terms[j][i_j].

    ``terms`` is an r x d table; the ring is given by ``zero``, ``add``, ``mul``.
    """
    r = len(terms)
    d = len(terms[0]) if r else 0
    if d < r:
        return zero
    T = list(terms[-1])
    for j in range(r - 2, -1, -1):
        row = terms[j]
        prefix = zero
        new = [zero] * d
        for i in range(d):
            # prefix holds sum_{i' < i} T(i')
            new[i] = mul(row[i], prefix) if i else zero
            prefix = add(prefix, T[i])
        T = new
    total = zero
    for x in T:
        total = add(total, x)
    return total


# -- power sums ------------------------------------------------------------

@lru_cache(maxsize=4096)
def _monic_inverses(P: Poly, i: int):
    return tuple(residue_inverse(a, P).rep for a in enumerate_monic(P.F, i))


@lru_cache(maxsize=65536)
def _power_sum_rep(P: Poly, i: int, s: int) -> Poly:
    total = Poly.zero(P.F)
    for inv in _monic_inverses(P, i):
        total = total + inv.powmod(s, P)
    return total


def power_sum_mod(i: int, s: int, P: Poly) -> Residue:
    """sum_{a in A_{i+}} a^{-s} mod P, by direct enumeration."""
    if s < 1:
        raise ValueError("power sums need s >= 1")
    if i < 0 or i >= P.degree:
        raise IndexOutOfRange(f"degree {i} is not below deg P = {P.degree}")
    check_budget(P.F.q**i, "power sum enumeration")
    return Residue._raw(_power_sum_rep(P, i, s), P)


@lru_cache(maxsize=4096)
def _power_sum_exact(F, i, s):
    total = RationalFn.zero(F)
    one = Poly.one(F)
    for a in enumerate_monic(F, i):
        total = total + RationalFn._raw(one, a**s)
    return total


def power_sum_exact(F, i: int, s: int) -> RationalFn:
    """sum_{a in A_{i+}} a^{-s} exactly in k."""
    if s < 1:
        raise ValueError("power sums need s >= 1")
    check_budget(F.q**i, "power sum enumeration")
    return _power_sum_exact(F, i, s)


# -- FMZV --------------------------------------------------------------------

def _mod_ops(P):
    return (lambda a, b: a + b), (lambda a, b: (a * b) % P)


def fmzv_p(s, P: Poly) -> Residue:
    """P-component of the finite MZV zeta(s), via the chain recurrence."""
    s = _comp(s)
    F = P.F
    d = P.degree
    if d < s.depth:
        return Residue._raw(Poly.zero(F), P)
    check_budget(s.depth * sum(F.q**i for i in range(d)), "FMZV evaluation")
    terms = [[_power_sum_rep(P, i, sj) for i in range(d)] for sj in s]
    add, mul = _mod_ops(P)
    return Residue._raw(chain_sum(terms, Poly.zero(F), add, mul), P)


def fmzv_p_direct(s, P: Poly) -> Residue:
    """P-component of zeta(s) by literal enumeration of the tuples (a_1, ..., a_r)."""
    s = _comp(s)
    F = P.F
    d = P.degree
    r = s.depth
    chains = [c for c in product(range(d), repeat=r)
              if all(c[k] > c[k + 1] for k in range(r - 1))]
    count = sum(F.q**sum(c) for c in chains)
    check_budget(count, "brute-force FMZV enumeration")
    total = Poly.zero(F)
    for chain in chains:
        for tup in product(*(enumerate_monic(F, i) for i in chain)):
            term = Poly.one(F)
            for a, sj in zip(tup, s):
                term = (term * residue_inverse(a, P).rep.powmod(sj, P)) % P
            total = total + term
    return Residue._raw(total, P)


def s_truncated(F, s, d: int) -> RationalFn:
    """S_{<d}(s) = sum over deg a_1 < d, strictly decreasing degrees, exactly in k."""
    s = _comp(s)
    if d < s.depth:
        return RationalFn.zero(F)
    check_budget(s.depth * sum(F.q**i for i in range(d)), "truncated MZV")
    terms = [[power_sum_exact(F, i, sj) for i in range(d)] for sj in s]
    return chain_sum(terms, RationalFn.zero(F), lambda a, b: a + b, lambda a, b: a * b)


# -- FCMPL -------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _l_inverse_mod(P: Poly, i: int) -> Poly:
    # L_i = L_{i-1} (theta - theta^{q^i}); computed mod P without expanding L_i
    F = P.F
    L = Poly.one(F)
    th = Poly.theta(F) % P
    for k in range(1, i + 1):
        L = (L * (th - th.frobenius_mod(k, P))) % P
    if L.is_zero():
        raise AssertionError(f"L_{i} vanishes mod {P}, but {i} < deg P")
    return residue_inverse(L, P).rep


def _reduce_point(u, P):
    reps = []
    for j, x in enumerate(u, start=1):
        try:
            reps.append(x.reduce_mod(P))
        except ExcludedPrime:
            raise ExcludedPrime(P, f"divides the denominator of u_{j}") from None
    return reps


def fcmpl_p(s, u, P: Poly) -> Residue:
    """P-component of Li_{A_k, s}(u) for u in k^r."""
    s = _comp(s)
    F = P.F
    u = as_point(F, u)
    if len(u) != s.depth:
        raise ValueError(f"evaluation point has {len(u)} coordinates, composition depth {s.depth}")
    reps = _reduce_point(u, P)
    d = P.degree
    if d < s.depth or any(x.is_zero() for x in reps):
        return Residue._raw(Poly.zero(F), P)
    check_budget(s.depth * d * d, "FCMPL evaluation")
    linv = [_l_inverse_mod(P, i) for i in range(d)]
    terms = []
    for x, sj in zip(reps, s):
        row = []
        z = x
        for i in range(d):
            row.append((z * linv[i].powmod(sj, P)) % P)
            z = z.frobenius_mod(1, P)
        terms.append(row)
    add, mul = _mod_ops(P)
    return Residue._raw(chain_sum(terms, Poly.zero(F), add, mul), P)


def fcmpl_truncated(F, s, u, d: int) -> RationalFn:
    """sum_{d > i_1 > ... > i_r >= 0} prod_j u_j^{q^{i_j}} / L_{i_j}^{s_j}, exactly in k."""
    s = _comp(s)
    u = as_point(F, u)
    if len(u) != s.depth:
        raise ValueError(f"evaluation point has {len(u)} coordinates, composition depth {s.depth}")
    if d < s.depth:
        return RationalFn.zero(F)
    check_budget(s.depth * d * d, "truncated FCMPL")
    terms = []
    for x, sj in zip(u, s):
        terms.append([x.frobenius(i) * RationalFn(Poly.one(F), l_poly(F, i) ** sj)
                      for i in range(d)])
    return chain_sum(terms, RationalFn.zero(F), lambda a, b: a + b, lambda a, b: a * b)


# -- windows -----------------------------------------------------------------

@dataclass
class AkWindow:
    """A finite window into an element of A_k: residues at a chosen set of
    primes, with excluded primes kept alongside their reasons."""

    label: str
    entries: dict = field(default_factory=dict)
    excluded: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "label": self.label,
            "entries": [{"prime": str(P), "residue": str(r)} for P, r in self.entries.items()],
            "excluded": [{"prime": str(P), "reason": why} for P, why in self.excluded.items()],
        }

    def agrees_with(self, other: "AkWindow") -> bool:
        """Equality on the primes where both windows have entries."""
        common = self.entries.keys() & other.entries.keys()
        return all(self.entries[P] == other.entries[P] for P in common)


def _label(kind, s, u):
    if kind == "fmzv":
        return f"zeta{s}"
    return f"Li_{s}(" + ",".join(str(x) for x in u) + ")"


def window(kind: str, s, primes, u=None) -> AkWindow:
    """Evaluate an FMZV or FCMPL at each of ``primes``."""
    s = _comp(s)
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    for P in primes:
        if not (P.is_monic() and is_irreducible(P)):
            raise NotIrreducible(f"{P} is not monic irreducible")
    primes.sort(key=prime_sort_key)
    if kind == "fmzv":
        w = AkWindow(_label(kind, s, None))
        for P in primes:
            w.entries[P] = fmzv_p(s, P)
        return w
    if kind != "fcmpl":
        raise ValueError(f"unknown window kind {kind!r}")
    if u is None:
        raise ValueError("fcmpl windows need an evaluation point")
    if primes:
        u = as_point(primes[0].F, u)
    w = AkWindow(_label(kind, s, u))
    for P in primes:
        try:
            w.entries[P] = fcmpl_p(s, u, P)
        except ExcludedPrime as exc:
            w.excluded[P] = exc.reason
    return w
