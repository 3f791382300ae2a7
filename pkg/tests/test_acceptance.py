"""Acceptance gate.

Each test carries a ``criterion`` marker; the conftest hook folds the
outcomes into one PASS/FAIL line per criterion at the end of the run.
Run on its own with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

import json
import os
import subprocess
import sys
import time

import pytest

from fmzv import Composition, Poly, RationalFn, TPoly, make_field
from fmzv.carlitz import at_poly, at_polys, compositions_up_to
from fmzv.identities import discover_relation, stuffle_terms, verify_interpolation
from fmzv.poly import irreducibles, primes_up_to
from fmzv.sweeps import (sweep_main_theorem, sweep_oracle, sweep_stuffle,
                         sweep_truncated_chang)

from oracles import (fmzv_oracle, gamma_oracle, power_sum_oracle, reconstruction_defect,
                     stuffle_count_delannoy, stuffle_terms_by_zero_insertion)

crit = pytest.mark.criterion

MAIN_QS = (2, 3, 5)
MAIN_COMPS = compositions_up_to(5, 3)


def _field(q):
    return {2: make_field(2), 3: make_field(3), 4: make_field(2, 2), 5: make_field(5)}[q]


def _main_argv(q, jobs):
    return ["verify", "main-theorem", "--q", str(q), "--weight-max", "5", "--depth-max", "3",
            "--prime-deg-max", "3", "--jobs", str(jobs), "--json"]


def _cli(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    proc = subprocess.run([sys.executable, "-m", "fmzv", *argv], capture_output=True, env=env)
    return proc.returncode, proc.stdout


@pytest.fixture(scope="module")
def main_theorem_runs():
    """Cold-process CLI runs of the full main-theorem sweep: two at --jobs 1, one at --jobs 8."""
    runs, elapsed = {}, 0.0
    for q in MAIN_QS:
        start = time.perf_counter()
        runs[q, 1, "a"] = _cli(_main_argv(q, 1), 1)
        elapsed += time.perf_counter() - start
        runs[q, 1, "b"] = _cli(_main_argv(q, 1), 2)
        runs[q, 8, "a"] = _cli(_main_argv(q, 8), 3)
    return runs, elapsed


# -- 1 ---------------------------------------------------------------------

@crit(1, "main theorem exact for q in {2,3,5}, wt <= 5, depth <= 3, deg P <= 3, in under 2 min")
@pytest.mark.parametrize("q", MAIN_QS)
def test_main_theorem_sweep(q):
    F = _field(q)
    primes = primes_up_to(F, 3)
    reports, excluded = sweep_main_theorem(F, MAIN_COMPS, primes)
    assert len(reports) + len(excluded) == len(MAIN_COMPS) * len(primes)
    assert reports and all(r.equal for r in reports)
    # exclusions are exactly the primes dividing Gamma_s, recomputed from the digit definition
    expected = set()
    for s in MAIN_COMPS:
        gamma = Poly.one(F)
        for si in s:
            gamma = gamma * gamma_oracle(F, si)
        expected |= {(str(s), str(P)) for P in primes if (gamma % P).is_zero()}
    assert {(x["s"], x["prime"]) for x in excluded} == expected


@crit(1, "main theorem exact for q in {2,3,5}, wt <= 5, depth <= 3, deg P <= 3, in under 2 min")
def test_main_theorem_wall_clock(main_theorem_runs):
    runs, elapsed = main_theorem_runs
    for q in MAIN_QS:
        code, out = runs[q, 1, "a"]
        assert code == 0
        doc = json.loads(out)
        assert all(r["equal"] for r in doc["results"])
    assert elapsed < 120, f"full sweep took {elapsed:.1f}s"


# -- 2 ---------------------------------------------------------------------

@crit(2, "interpolation lemma exact for s <= 4, i <= 3, q in {2,3}")
@pytest.mark.parametrize("q", (2, 3))
def test_interpolation(q):
    F = _field(q)
    for s in range(1, 5):
        for i in range(4):
            r = verify_interpolation(F, s, i)
            assert r.equal, (s, i)
            independent = RationalFn.from_poly(gamma_oracle(F, s)) * power_sum_oracle(F, i, s)
            assert r.rhs == str(independent)


# -- 3 ---------------------------------------------------------------------

AT = "AT polynomials: reconstruction mod x^13, H_n = 1 below q, H_q formula, degree bound"


@crit(3, AT)
@pytest.mark.parametrize("q", (2, 3))
def test_at_reconstruction(q):
    F = _field(q)
    assert all(reconstruction_defect(F, at_polys(F, 12), 12))


@crit(3, AT)
@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_at_small_and_q(q):
    F = _field(q)
    H = at_polys(F, q)
    assert all(h == TPoly.one(F) for h in H[:q])
    t = TPoly.t_power(F, 1)
    expected = (t - TPoly.from_theta(Poly.theta(F))) ** q + TPoly.t_power(F, q) - t
    assert H[q] == expected


@crit(3, AT)
@pytest.mark.parametrize("q", (2, 3, 4))
def test_at_degree_bound(q):
    F = _field(q)
    for s in range(1, 9):
        H = at_poly(F, s - 1)
        assert not H.coeff(H.degree_t).is_zero()
        for j in range(H.degree_t + 1):
            u = H.coeff(j)
            assert u.is_zero() or u.degree * (q - 1) < s * q, (s, j)


# -- 4 ---------------------------------------------------------------------

@crit(4, "fmzv_p equals brute force on criterion-1 instances with <= 1e5 tuples")
@pytest.mark.parametrize("q", MAIN_QS)
def test_oracle_equivalence(q):
    F = _field(q)
    rows = sweep_oracle(F, MAIN_COMPS, primes_up_to(F, 3), tuple_cap=10**5)
    assert rows and all(r["equal"] for r in rows)
    # an extra oracle sharing no code with either evaluator, on the small end
    for s in compositions_up_to(3, 2):
        for P in primes_up_to(F, 2):
            assert str(fmzv_oracle(F, tuple(s), P)) == next(
                r["dp"] for r in rows if r["s"] == str(s) and r["prime"] == str(P))


# -- 5 ---------------------------------------------------------------------

STUFFLE = "stuffle: q in {2,3}, depths <= (2,2), weights <= 6, deg P <= 3, 5 points; 3/5/13 terms"


@crit(5, STUFFLE)
def test_stuffle_term_counts():
    for (r, r2), n in {(1, 1): 3, (1, 2): 5, (2, 2): 13}.items():
        s, s2 = Composition(tuple(range(1, r + 1))), Composition(tuple(range(9, 9 + r2)))
        terms = stuffle_terms(s, s2)
        assert len(terms) == n == stuffle_count_delannoy(r, r2)
        assert len(stuffle_terms_by_zero_insertion(s.parts, s2.parts)) == n


@crit(5, STUFFLE)
@pytest.mark.parametrize("q", (2, 3))
def test_stuffle_sweep(q):
    F = _field(q)
    comps = compositions_up_to(6, 2)
    # every ordered pair with each factor of weight <= 6 (covers total weight <= 6 as well)
    pairs = [(a, b) for a in comps for b in comps]
    primes = primes_up_to(F, 3)
    reports = sweep_stuffle(F, pairs, primes, points=5, seed=0)
    assert len(reports) == len(pairs) * len(primes) * 5
    bad = [r.params for r in reports if not r.equal]
    assert not bad, bad[:3]


# -- 6 ---------------------------------------------------------------------

@crit(6, "truncated polylogarithm expansion exact in k for wt <= 4, d <= 3, q in {2,3}")
@pytest.mark.parametrize("q", (2, 3))
def test_truncated_chang(q):
    F = _field(q)
    reports = sweep_truncated_chang(F, compositions_up_to(4), range(4))
    assert len(reports) == len(compositions_up_to(4)) * 4
    assert all(r.equal for r in reports)


# -- 7 ---------------------------------------------------------------------

DISCOVERY = "discovery recovers zeta(1)^2 relations at q = 3 and q = 2"


@crit(7, DISCOVERY)
def test_discovery_q3():
    F = _field(3)
    cand = discover_relation(Composition.of(1), Composition.of(1), primes_up_to(F, 3),
                             irreducibles(F, 4))
    assert cand.validated
    assert len(cand.validation_primes) == len(irreducibles(F, 4)) == 18
    target = [{"(1,1)": 2, "(2)": 1}.get(str(c), 0) for c in cand.unknowns]
    assert cand.contains(target, 3)


@crit(7, DISCOVERY)
def test_discovery_q2():
    F = _field(2)
    cand = discover_relation(Composition.of(1), Composition.of(1), primes_up_to(F, 3),
                             irreducibles(F, 4))
    assert cand.validated
    assert cand.relation_str() == "zeta(1)*zeta(1) = zeta(2)"
    target = [{"(2)": 1}.get(str(c), 0) for c in cand.unknowns]
    assert cand.contains(target, 2)


# -- 8 ---------------------------------------------------------------------

@crit(8, "criterion-1 JSON byte-identical across runs and --jobs 1 vs --jobs 8")
@pytest.mark.parametrize("q", MAIN_QS)
def test_determinism(main_theorem_runs, q):
    runs, _ = main_theorem_runs
    a, b, c = runs[q, 1, "a"], runs[q, 1, "b"], runs[q, 8, "a"]
    assert a[0] == b[0] == c[0] == 0
    assert a[1] and a[1] == b[1] == c[1]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
