"""Finite multiple zeta values and finite Carlitz multiple polylogarithms over F_q[θ].

Quick start::

    >>> from fmzv import make_field, Poly, Composition, fmzv_p
    >>> F = make_field(3)
    >>> P = Poly(F, [1, 0, 1])          # θ^2 + 1
    >>> str(fmzv_p(Composition.of(1), P))
    '[1,1]'
"""

__version__ = "0.1.0"

from .budget import DEFAULT_BUDGET, budget_limit, get_budget
from .carlitz import (ATExpansion, Composition, at_expansion, at_poly, at_polys, carlitz_gamma,
                      compositions, compositions_up_to, d_poly, g_poly, l_poly)
from .errors import (BothZero, BudgetExceeded, DivisionByZero, ExcludedPrime, FMZVError,
                     IndexOutOfRange, InexactDivision, MissingModulus, NonPrimeP, NoSolution,
                     NotInvertible, NotIrreducible, ReducibleModulus, ValidationFailed)
from .evaluator import (AkWindow, fcmpl_p, fcmpl_truncated, fmzv_p, fmzv_p_direct,
                        power_sum_exact, power_sum_mod, s_truncated, window)
from .field import FieldCtx, make_field
from .identities import (RelationCandidate, Report, discover_relation, stuffle_terms,
                         verify_interpolation, verify_main_theorem, verify_stuffle,
                         verify_truncated_chang)
from .poly import Poly, irreducibles, is_irreducible, primes_up_to
from .ratfn import RationalFn
from .residue import Residue, frobenius
from .tpoly import TFraction, TPoly
