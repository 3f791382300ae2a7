"""Executable checks of the identities relating FMZVs, FCMPLs and the
Anderson-Thakur polynomials, plus a solver that discovers F_p-linear product
relations between FMZVs.

Every verifier returns a :class:`Report` whose ``equal`` flag is computed by
comparing canonical strings, never by a tolerance.
"""

from dataclasses import dataclass, field
from itertools import product

from .budget import get_budget
from .carlitz import Composition, at_expansion, at_poly, carlitz_gamma, compositions, l_poly
from .errors import ExcludedPrime, NoSolution, NotIrreducible, ValidationFailed
from .evaluator import (as_point, fcmpl_p, fcmpl_truncated, fmzv_p, power_sum_exact,
                        s_truncated)
from .linalg import mat_vec, rref, solve_affine
from .poly import Poly, is_irreducible
from .ratfn import RationalFn
from .residue import Residue, residue_inverse

__all__ = [
    "StuffleTerm", "Report", "RelationCandidate", "stuffle_terms", "assemble_point",
    "verify_stuffle", "verify_interpolation", "verify_main_theorem",
    "verify_truncated_chang", "discover_relation", "main_theorem_rhs",
]


def _comp(s):
    return s if isinstance(s, Composition) else Composition.of(s)


@dataclass(frozen=True)
class StuffleTerm:
    """One summand of the stuffle product.

    ``pattern[i]`` is ``("L", j)``, ``("R", l)`` or ``("B", j, l)`` (1-based),
    saying that position i of the merged index carries s_j, s'_l or both.
    """

    merged: Composition
    pattern: tuple


@dataclass
class Report:
    identity: str
    params: dict
    lhs: str
    rhs: str
    equal: bool
    breakdown: list = None

    def to_dict(self):
        out = {"identity": self.identity, "params": self.params,
               "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}
        if self.breakdown is not None:
            out["breakdown"] = self.breakdown
        return out


def _report(identity, params, lhs, rhs, breakdown=None):
    lhs, rhs = str(lhs), str(rhs)
    return Report(identity, params, lhs, rhs, lhs == rhs, breakdown)


# -- stuffle -----------------------------------------------------------------

def stuffle_terms(s, s2) -> list:
    """All zero-insertion pairs (v, v') with v + v' positive, as merged terms.

    Ordered by merged depth, then by pattern.
    """
    s, s2 = _comp(s), _comp(s2)
    r, r2 = s.depth, s2.depth
    patterns = []

    def rec(i, j, acc):
        if i == r and j == r2:
            patterns.append(tuple(acc))
            return
        if i < r:
            rec(i + 1, j, acc + [("L", i + 1)])
        if j < r2:
            rec(i, j + 1, acc + [("R", j + 1)])
        if i < r and j < r2:
            rec(i + 1, j + 1, acc + [("B", i + 1, j + 1)])

    rec(0, 0, [])
    patterns.sort(key=lambda pat: (len(pat), pat))
    terms = []
    for pat in patterns:
        parts = []
        for tag in pat:
            if tag[0] == "L":
                parts.append(s[tag[1] - 1])
            elif tag[0] == "R":
                parts.append(s2[tag[1] - 1])
            else:
                parts.append(s[tag[1] - 1] + s2[tag[2] - 1])
        terms.append(StuffleTerm(Composition(tuple(parts)), pat))
    return terms


def assemble_point(term: StuffleTerm, u, u2) -> tuple:
    """The point z'' for a stuffle term: u_j, u'_l or u_j u'_l per position."""
    out = []
    for tag in term.pattern:
        if tag[0] == "L":
            out.append(u[tag[1] - 1])
        elif tag[0] == "R":
            out.append(u2[tag[1] - 1])
        else:
            out.append(u[tag[1] - 1] * u2[tag[2] - 1])
    return tuple(out)


def verify_stuffle(s, s2, u, u2, P: Poly) -> Report:
    """Compare Li_s(u) Li_{s'}(u') with the stuffle expansion at the prime P."""
    s, s2 = _comp(s), _comp(s2)
    F = P.F
    u, u2 = as_point(F, u), as_point(F, u2)
    lhs = fcmpl_p(s, u, P) * fcmpl_p(s2, u2, P)
    rhs = Residue._raw(Poly.zero(F), P)
    breakdown = []
    for term in stuffle_terms(s, s2):
        point = assemble_point(term, u, u2)
        val = fcmpl_p(term.merged, point, P)
        rhs = rhs + val
        breakdown.append({"merged": str(term.merged), "point": [str(x) for x in point],
                          "value": str(val)})
    params = {"s": str(s), "s2": str(s2), "u": [str(x) for x in u],
              "u2": [str(x) for x in u2], "prime": str(P)}
    return _report("stuffle", params, lhs, rhs, breakdown)


# -- interpolation -----------------------------------------------------------

def verify_interpolation(F, s: int, i: int) -> Report:
    """H_{s-1}^{(i)}|_{t=theta} / L_i^s against Gamma_s * sum_{a in A_{i+}} a^{-s}, in k."""
    if s < 1 or i < 0:
        raise ValueError("need s >= 1 and i >= 0")
    twisted = at_poly(F, s - 1).twist(i).at_theta()
    lhs = RationalFn(twisted, l_poly(F, i) ** s)
    rhs = RationalFn.from_poly(carlitz_gamma(F, s)) * power_sum_exact(F, i, s)
    return _report("interpolation", {"q": F.q, "s": s, "i": i}, lhs, rhs)


# -- main theorem ------------------------------------------------------------

def main_theorem_rhs(s, P: Poly, expansion=None) -> Residue:
    """Gamma_s^{-1} sum_{j in J_s} a_j(theta) Li_s(u_j) at P."""
    s = _comp(s)
    F = P.F
    exp = expansion if expansion is not None else at_expansion(F, s)
    if (exp.gamma % P).is_zero():
        raise ExcludedPrime(P, f"divides Gamma_{s}")
    total = Residue._raw(Poly.zero(F), P)
    for j in exp.index_set():
        point = exp.point(j)
        if any(x.is_zero() for x in point):
            continue
        li = fcmpl_p(s, point, P)
        total = total + Residue(exp.a_theta(j), P) * li
    return total * residue_inverse(exp.gamma, P)


def verify_main_theorem(s, P: Poly) -> Report:
    """zeta(s)_P against its polylogarithm expansion at one prime (ExcludedPrime if P | Gamma_s)."""
    s = _comp(s)
    rhs = main_theorem_rhs(s, P)
    lhs = fmzv_p(s, P)
    return _report("main-theorem", {"q": P.F.q, "s": str(s), "prime": str(P)}, lhs, rhs)


def verify_truncated_chang(F, s, d: int) -> Report:
    """S_{<d}(s) against Gamma_s^{-1} sum_j a_j(theta) Li_s^{<d}(u_j), exactly in k."""
    s = _comp(s)
    exp = at_expansion(F, s)
    lhs = s_truncated(F, s, d)
    rhs = RationalFn.zero(F)
    for j in exp.index_set():
        point = exp.point(j)
        if any(x.is_zero() for x in point):
            continue
        rhs = rhs + RationalFn.from_poly(exp.a_theta(j)) * fcmpl_truncated(F, s, point, d)
    rhs = rhs / RationalFn.from_poly(exp.gamma)
    return _report("truncated-chang", {"q": F.q, "s": str(s), "d": d}, lhs, rhs)


# -- relation discovery ------------------------------------------------------

@dataclass
class RelationCandidate:
    """F_p-relation zeta(s) zeta(s') = sum_c f_c zeta(c) over weight-w compositions."""

    s: Composition
    s2: Composition
    weight: int
    unknowns: list
    coefficients: list = None
    nullspace: list = field(default_factory=list)
    probe_primes: list = field(default_factory=list)
    validation_primes: list = field(default_factory=list)
    stable: bool = False
    validated: bool = False

    def relation_str(self, coefficients=None) -> str:
        coefficients = self.coefficients if coefficients is None else coefficients
        if coefficients is None:
            return "none"
        terms = [(f if f != 1 else None, c) for f, c in zip(coefficients, self.unknowns) if f]
        rhs = " + ".join(f"zeta{c}" if f is None else f"{f}*zeta{c}" for f, c in terms) or "0"
        return f"zeta{self.s}*zeta{self.s2} = {rhs}"

    def contains(self, vector, p) -> bool:
        """Whether ``vector`` lies in the returned coset."""
        if self.coefficients is None:
            return False
        diff = [(a - b) % p for a, b in zip(vector, self.coefficients)]
        if not any(diff):
            return True
        base_rank = len(rref(self.nullspace, p)[1]) if self.nullspace else 0
        return len(rref(self.nullspace + [diff], p)[1]) == base_rank

    def to_dict(self):
        return {
            "s": str(self.s), "s2": str(self.s2), "weight": self.weight,
            "unknowns": [str(c) for c in self.unknowns],
            "coefficients": self.coefficients,
            "relation": self.relation_str(),
            "nullspace": self.nullspace,
            "probe_primes": [str(P) for P in self.probe_primes],
            "validation_primes": [str(P) for P in self.validation_primes],
            "stable": self.stable, "validated": self.validated,
        }


def _fp_coords(F, rep: Poly, n: int) -> list:
    """The F_p-coordinates of a residue with deg < n (n*e numbers)."""
    out = []
    for k in range(n):
        out.extend(F.coords(rep[k]))
    return out


def _equations(s, s2, unknowns, P):
    F = P.F
    n = P.degree
    target = (fmzv_p(s, P) * fmzv_p(s2, P)).rep
    cols = [_fp_coords(F, fmzv_p(c, P).rep, n) for c in unknowns]
    b = _fp_coords(F, target, n)
    rows = [[col[k] for col in cols] for k in range(len(b))]
    return rows, b


def _sparsest(x0, basis, p):
    """Coset element with fewest nonzeros, ties broken lexicographically."""
    if not basis or p ** len(basis) > get_budget():
        return x0
    best = None
    for coeffs in product(range(p), repeat=len(basis)):
        v = list(x0)
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        key = (sum(1 for x in v if x), v)
        if best is None or key < best[0]:
            best = (key, v)
    return best[1]


def discover_relation(s, s2, probe_primes, validation_primes) -> RelationCandidate:
    """Solve for f in zeta(s) zeta(s') = sum f_c zeta(c) over F_p prime by prime.

    Probe primes are added in order until the affine solution space is
    unchanged for two consecutive primes of degree >= w (below that degree
    the depth-w values vanish and carry no information).  The result is then checked on
    every validation prime; failures raise :class:`ValidationFailed`.
    """
    s, s2 = _comp(s), _comp(s2)
    probe_primes, validation_primes = list(probe_primes), list(validation_primes)
    if set(probe_primes) & set(validation_primes):
        raise ValueError("probe and validation primes must be disjoint")
    for P in probe_primes + validation_primes:
        if not (P.is_monic() and is_irreducible(P)):
            raise NotIrreducible(f"{P} is not monic irreducible")
    if not probe_primes:
        raise ValueError("need at least one probe prime")
    F = probe_primes[0].F
    p = F.p
    w = s.weight + s2.weight
    unknowns = compositions(w)
    cand = RelationCandidate(s, s2, w, unknowns, validation_primes=validation_primes)

    A, b = [], []
    history = []
    for P in probe_primes:
        rows, rhs = _equations(s, s2, unknowns, P)
        A.extend(rows)
        b.extend(rhs)
        cand.probe_primes.append(P)
        x0, basis = solve_affine(A, b, p)
        if x0 is None:
            raise NoSolution(f"no F_{p}-relation for zeta{s}*zeta{s2} at weight {w} "
                             f"(inconsistent at {P})")
        if P.degree < w:
            # the depth-w unknowns vanish identically at such primes
            continue
        history.append((tuple(x0), tuple(map(tuple, basis))))
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            cand.stable = True
            break
    if not history:
        history.append((tuple(x0), tuple(map(tuple, basis))))
    x0, basis = history[-1]
    cand.nullspace = [list(v) for v in basis]
    cand.coefficients = _sparsest(list(x0), cand.nullspace, p)

    for P in validation_primes:
        rows, rhs = _equations(s, s2, unknowns, P)
        if mat_vec(rows, cand.coefficients, p) != [x % p for x in rhs]:
            raise ValidationFailed(f"{cand.relation_str()} fails at held-out prime {P}", cand)
        for v in cand.nullspace:
            if any(mat_vec(rows, v, p)):
                raise ValidationFailed(f"homogeneous relation {v} fails at held-out prime {P}", cand)
    cand.validated = True
    return cand
