"""Batch drivers: run a verifier over a grid of parameters.

Work items are independent, so with ``jobs > 1`` they are farmed out to a
process pool; results always come back in task order, so output does not
depend on the pool width.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .budget import budget_limit, get_budget
from .carlitz import compositions_up_to
from .errors import ExcludedPrime
from .evaluator import fmzv_p, fmzv_p_direct
from .identities import (verify_interpolation, verify_main_theorem, verify_stuffle,
                         verify_truncated_chang)
from .poly import Poly
from .ratfn import RationalFn

__all__ = [
    "run_tasks", "random_point", "stuffle_pairs", "sweep_main_theorem",
    "sweep_interpolation", "sweep_stuffle", "sweep_truncated_chang", "sweep_oracle",
]


def _call(task):
    fn, budget, args = task
    with budget_limit(budget):
        return fn(*args)


def run_tasks(fn, arg_list, jobs: int = 1) -> list:
    """``[fn(*args) for args in arg_list]``, optionally in a process pool."""
    budget = get_budget()
    tasks = [(fn, budget, args) for args in arg_list]
    if jobs <= 1 or len(tasks) < 2:
        return [_call(t) for t in tasks]
    chunk = max(1, len(tasks) // (8 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, tasks, chunksize=chunk))


def random_point(F, r: int, rng: random.Random, avoid: Poly = None, max_deg: int = 2) -> tuple:
    """r random nonzero elements of k whose denominators are not divisible by ``avoid``."""
    out = []
    while len(out) < r:
        num = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(1, max_deg + 1))])
        den_deg = rng.randint(0, max_deg - 1)
        den = Poly(F, [rng.randrange(F.q) for _ in range(den_deg)] + [1])
        if num.is_zero() or (avoid is not None and (den % avoid).is_zero()):
            continue
        x = RationalFn(num, den)
        if avoid is not None and (x.num % avoid).is_zero():
            continue
        out.append(x)
    return tuple(out)


# -- task bodies (module level so they pickle) -------------------------------

def _main_theorem_task(s, P):
    try:
        return verify_main_theorem(s, P)
    except ExcludedPrime as exc:
        return {"s": str(s), "prime": str(P), "reason": exc.reason}


def _stuffle_task(s, s2, P, points, seed):
    rng = random.Random(f"{seed}:{s}:{s2}:{P}")
    F = P.F
    reports = []
    for _ in range(points):
        u = random_point(F, s.depth, rng, P)
        u2 = random_point(F, s2.depth, rng, P)
        reports.append(verify_stuffle(s, s2, u, u2, P))
    return reports


def _oracle_task(s, P):
    fast, slow = fmzv_p(s, P), fmzv_p_direct(s, P)
    return {"s": str(s), "prime": str(P), "dp": str(fast), "direct": str(slow),
            "equal": fast == slow}


# -- sweeps --------------------------------------------------------------------

def sweep_main_theorem(F, comps, primes, jobs=1):
    """Return ``(reports, excluded)`` for every composition in ``comps`` and prime."""
    out = run_tasks(_main_theorem_task, [(s, P) for s in comps for P in primes], jobs)
    reports = [x for x in out if not isinstance(x, dict)]
    excluded = [x for x in out if isinstance(x, dict)]
    return reports, excluded


def sweep_interpolation(F, s_values, i_max, jobs=1):
    args = [(F, s, i) for s in s_values for i in range(i_max + 1)]
    return run_tasks(verify_interpolation, args, jobs)


def stuffle_pairs(weight_max, depth_max):
    """Ordered pairs (s, s') with depths <= depth_max and total weight <= weight_max."""
    comps = compositions_up_to(weight_max - 1, depth_max)
    return [(a, b) for a in comps for b in comps if a.weight + b.weight <= weight_max]


def sweep_stuffle(F, pairs, primes, points=5, seed=0, jobs=1):
    args = [(s, s2, P, points, seed) for s, s2 in pairs for P in primes]
    return [r for batch in run_tasks(_stuffle_task, args, jobs) for r in batch]


def sweep_truncated_chang(F, comps, d_values, jobs=1):
    args = [(F, s, d) for s in comps for d in d_values]
    return run_tasks(verify_truncated_chang, args, jobs)


def sweep_oracle(F, comps, primes, tuple_cap=10**5, jobs=1):
    """fmzv_p against fmzv_p_direct wherever the brute-force tuple count is <= tuple_cap."""
    args = []
    for s in comps:
        for P in primes:
            if _tuple_count(F.q, s.depth, P.degree) <= tuple_cap:
                args.append((s, P))
    return run_tasks(_oracle_task, args, jobs)


def _tuple_count(q, r, d):
    # number of (a_1..a_r) with d > deg a_1 > ... > deg a_r >= 0
    return sum(q ** sum(c) for c in combinations(range(d), r))
