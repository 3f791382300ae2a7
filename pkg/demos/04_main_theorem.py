"""ζ_{A_k}(s) as Γ_s^{-1} Σ_j a_j(θ) Li_{A_k,s}(u_j), prime by prime.

Run: python demos/04_main_theorem.py
"""

from fmzv import Composition, ExcludedPrime, make_field
from fmzv.carlitz import at_expansion, compositions_up_to
from fmzv.evaluator import fcmpl_p, fmzv_p
from fmzv.identities import main_theorem_rhs, verify_main_theorem
from fmzv.poly import irreducibles, primes_up_to

F = make_field(3)
# (q-1) | s forces the value to vanish: monics times F_q^* run over all of (A/P)^*
print("ζ(4) at three cubic primes:", [fmzv_p(Composition.of(4), P).rep.pretty()
                                     for P in irreducibles(F, 3)[:3]])

s = Composition.of(5)
e = at_expansion(F, s)
print(f"\ns = {s}, Γ_s = {e.gamma.pretty()}, H_4 = {e.H[0].pretty()}")
for P in irreducibles(F, 3)[:3]:
    print(f"P = {P.pretty()}")
    for j in e.index_set():
        u = e.point(j)
        print(f"   a_j = {e.a_theta(j).pretty():4}  u_j = {u[0].pretty():5} "
              f" Li_s(u_j) = {fcmpl_p(s, u, P).rep.pretty()}")
    lhs, rhs = fmzv_p(s, P), main_theorem_rhs(s, P)
    print(f"   ζ_P = {lhs.rep.pretty():12} Γ^-1 Σ a_j Li = {rhs.rep.pretty():12} equal: {lhs == rhs}")

# linear primes divide Γ_5 = θ^3 - θ, so the formula says nothing there
try:
    verify_main_theorem(s, irreducibles(F, 1)[0])
except ExcludedPrime as exc:
    print("\nθ is excluded:", exc.reason)

ok = excluded = 0
for c in compositions_up_to(5, 3):
    for P in primes_up_to(F, 3):
        try:
            ok += verify_main_theorem(c, P).equal
        except ExcludedPrime:
            excluded += 1
print(f"weight <= 5, depth <= 3, deg P <= 3: {ok} equal, {excluded} excluded")
