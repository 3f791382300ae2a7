"""FMZVs and FCMPLs as finite windows: one residue per prime.

Run: python demos/03_fmzv_windows.py
"""

from fmzv import Composition, Poly, RationalFn, make_field
from fmzv.evaluator import fmzv_p, fmzv_p_direct, s_truncated, window
from fmzv.poly import primes_up_to

F = make_field(3)
primes = primes_up_to(F, 3)


def show(w):
    print(w.label)
    for P, r in w.entries.items():
        print(f"  {P.pretty():12} -> {r.rep.pretty()}")
    for P, why in w.excluded.items():
        print(f"  {P.pretty():12} excluded: {why}")


show(window("fmzv", Composition.of(1, 2), primes[:6]))
theta = Poly.theta(F)
show(window("fcmpl", Composition.of(1), primes[:6], u=(RationalFn(Poly.one(F), theta),)))

# the chain-sum DP and literal enumeration agree; the exact partial sum reduces to the same thing
s = Composition.of(2, 1)
P = primes[-1]
exact = s_truncated(F, s, P.degree)
print(f"\nζ{s} at P = {P.pretty()}:")
print("  dynamic programming :", fmzv_p(s, P).rep.pretty())
print("  brute force         :", fmzv_p_direct(s, P).rep.pretty())
print("  S_<3 reduced mod P   :", exact.reduce_mod(P).pretty())
print("  S_<3 itself          :", exact.pretty()[:70], "...")
