"""Carlitz sequences and Anderson-Thakur polynomials.

All sequences are memoised per field.  The caches only ever store values
that are pure functions of their keys, so concurrent readers can at worst
compute a value twice.
"""

import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import InexactDivision
from .field import FieldCtx
from .poly import Poly
from .tpoly import TFraction, TPoly

__all__ = [
    "Composition", "compositions", "compositions_up_to", "ATExpansion",
    "d_poly", "l_poly", "carlitz_gamma", "g_poly", "at_polys", "at_poly",
    "at_series", "twist", "at_expansion", "base_q_digits",
]


@dataclass(frozen=True, order=True)
class Composition:
    """An index tuple s = (s_1, ..., s_r) of positive integers."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("a composition has at least one part")
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        return cls(tuple(parts))

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def compositions(w: int, max_depth: int = None) -> list:
    """All compositions of weight w, lexicographic in their part vectors."""
    if w < 1:
        return []
    out = []

    def rec(prefix, rest):
        if rest == 0:
            out.append(Composition(tuple(prefix)))
            return
        if max_depth is not None and len(prefix) == max_depth:
            return
        for first in range(1, rest + 1):
            rec(prefix + [first], rest - first)

    rec([], w)
    return out


def compositions_up_to(wmax: int, max_depth: int = None) -> list:
    out = []
    for w in range(1, wmax + 1):
        out.extend(compositions(w, max_depth))
    return out


def base_q_digits(n: int, q: int) -> list:
    digits = []
    while n:
        n, r = divmod(n, q)
        digits.append(r)
    return digits


@lru_cache(maxsize=None)
def _theta_qpow(F, i):
    return Poly.monomial(F, F.q**i)


@lru_cache(maxsize=None)
def d_poly(F: FieldCtx, i: int) -> Poly:
    """D_i = prod_{j<i} (theta^{q^i} - theta^{q^j}); D_0 = 1."""
    if i < 0:
        raise ValueError("index must be non-negative")
    result = Poly.one(F)
    top = _theta_qpow(F, i)
    for j in range(i):
        result = result * (top - _theta_qpow(F, j))
    return result


@lru_cache(maxsize=None)
def l_poly(F: FieldCtx, i: int) -> Poly:
    """L_i = (theta - theta^q) ... (theta - theta^{q^i}); L_0 = 1."""
    if i < 0:
        raise ValueError("index must be non-negative")
    if i == 0:
        return Poly.one(F)
    return l_poly(F, i - 1) * (Poly.theta(F) - _theta_qpow(F, i))


@lru_cache(maxsize=None)
def carlitz_gamma(F: FieldCtx, m: int) -> Poly:
    """Carlitz factorial Gamma_m = prod D_i^{n_i} over the base-q digits of m - 1."""
    if m < 1:
        raise ValueError("Gamma_m needs m >= 1")
    result = Poly.one(F)
    for i, digit in enumerate(base_q_digits(m - 1, F.q)):
        if digit:
            result = result * d_poly(F, i) ** digit
    return result


@lru_cache(maxsize=None)
def g_poly(F: FieldCtx, n: int) -> TPoly:
    """G_n(theta) = prod_{i=1}^{n} (t^{q^n} - theta^{q^i}); G_0 = 1."""
    if n < 0:
        raise ValueError("index must be non-negative")
    result = TPoly.one(F)
    tq = TPoly.t_power(F, F.q**n)
    for i in range(1, n + 1):
        result = result * (tq - TPoly.from_theta(_theta_qpow(F, i)))
    return result


def at_series(F: FieldCtx, N: int) -> list:
    """Coefficients of x^0..x^N of the series S = sum_i G_i(theta)/D_i|_{theta=t} x^{q^i}.

    D_i|_{theta=t} is the same coefficient vector read in t, so ``d_poly``
    is passed through unchanged as the t-denominator.
    """
    S = [TFraction.zero(F) for _ in range(N + 1)]
    i = 0
    while F.q**i <= N:
        S[F.q**i] = TFraction(g_poly(F, i), d_poly(F, i))
        i += 1
    return S


def _truncated_mul(a, sparse_b, N, F):
    out = [TFraction.zero(F) for _ in range(N + 1)]
    for n in range(N + 1):
        acc = out[n]
        for m, bm in sparse_b:
            if m > n:
                break
            if not a[n - m].is_zero():
                acc = acc + a[n - m] * bm
        out[n] = acc
    return out


def _inverse_series(F, N):
    S = at_series(F, N)
    # S has x-valuation >= 1, so sum_{k<=N} S^k is the inverse of 1 - S mod x^{N+1}
    assert S[0].is_zero(), "series must have positive x-valuation"
    sparse = [(m, c) for m, c in enumerate(S) if not c.is_zero()]
    total = [TFraction.one(F)] + [TFraction.zero(F) for _ in range(N)]
    power = list(total)
    for _ in range(N):
        power = _truncated_mul(power, sparse, N, F)
        if all(c.is_zero() for c in power):
            break
        total = [x + y for x, y in zip(total, power)]
    return total


_AT_CACHE: dict = {}
_AT_LOCK = threading.Lock()


def at_polys(F: FieldCtx, N: int) -> list:
    """Anderson-Thakur polynomials [H_0, ..., H_N] as TPoly in F_q[t, theta].

    H_n is the coefficient of x^n in (1 - S)^{-1} times Gamma_{n+1}|_{theta=t};
    the division by the accumulated t-denominator must be exact, otherwise
    :class:`InexactDivision` is raised.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    with _AT_LOCK:
        cached = _AT_CACHE.get(F)
    if cached is not None and len(cached) > N:
        return list(cached[:N + 1])
    inv = _inverse_series(F, N)
    H = []
    for n, coeff in enumerate(inv):
        try:
            H.append(coeff.exact(carlitz_gamma(F, n + 1)))
        except InexactDivision as exc:
            raise InexactDivision(f"H_{n} is not in A[t] over {F}: {exc}") from None
    with _AT_LOCK:
        if len(_AT_CACHE.get(F, ())) < len(H):
            _AT_CACHE[F] = tuple(H)
    return H


def at_poly(F: FieldCtx, n: int) -> TPoly:
    with _AT_LOCK:
        cached = _AT_CACHE.get(F)
    if cached is not None and len(cached) > n:
        return cached[n]
    # grow geometrically so a sweep over n does not recompute every time
    have = len(cached) if cached else 0
    return at_polys(F, max(n, 2 * have))[n]


def twist(H, i: int):
    """Coefficient-wise q**i-power of a polynomial in t (TPoly, or a list of
    coefficients in k)."""
    if isinstance(H, TPoly):
        return H.twist(i)
    return [c.frobenius(i) for c in H]


@dataclass(frozen=True)
class ATExpansion:
    """The data of H_{s_i-1} = sum_j u_ij t^j for every part of s."""

    s: Composition
    H: tuple
    m: tuple
    u: tuple
    gamma: Poly

    @property
    def size(self) -> int:
        out = 1
        for mi in self.m:
            out *= mi + 1
        return out

    def index_set(self):
        """J_s in lexicographic order."""
        return product(*(range(mi + 1) for mi in self.m))

    def point(self, j) -> tuple:
        """u_j = (u_{1 j_1}, ..., u_{r j_r})."""
        return tuple(self.u[i][ji] for i, ji in enumerate(j))

    def a_theta(self, j) -> Poly:
        """a_j(theta) = theta^{j_1 + ... + j_r}."""
        return Poly.monomial(self.gamma.F, sum(j))


def at_expansion(F: FieldCtx, s: Composition) -> ATExpansion:
    """Expansion data for s, with the leading-coefficient and degree bounds asserted."""
    if not isinstance(s, Composition):
        s = Composition.of(s)
    q = F.q
    H, m, u = [], [], []
    gamma = Poly.one(F)
    for si in s:
        h = at_poly(F, si - 1)
        mi = h.degree_t
        coeffs = tuple(h.coeff(j) for j in range(mi + 1))
        if coeffs[-1].is_zero():
            raise AssertionError(f"leading t-coefficient of H_{si - 1} vanishes")
        for c in coeffs:
            # |u|_inf = q^deg u < q^{s q/(q-1)}  <=>  deg(u) (q-1) < s q
            if c and not c.degree * (q - 1) < si * q:
                raise AssertionError(f"coefficient {c} of H_{si - 1} breaks the degree bound")
        H.append(h)
        m.append(mi)
        u.append(coeffs)
        gamma = gamma * carlitz_gamma(F, si)
    return ATExpansion(s, tuple(H), tuple(m), tuple(u), gamma)
