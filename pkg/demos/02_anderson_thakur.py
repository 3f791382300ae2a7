"""The Anderson-Thakur polynomials H_n and the data attached to a composition.

H_n is read off from the inverse of 1 - Σ G_i/D_i x^{q^i}, scaled by the
Carlitz factorial.  Below degree q nothing happens; H_q is the first
interesting one.

Run: python demos/02_anderson_thakur.py
"""

from fmzv import Composition, make_field
from fmzv.carlitz import at_expansion, at_polys

for q in (2, 3, 4):
    F = make_field(2, 2) if q == 4 else make_field(q)
    H = at_polys(F, q + 2)
    print(f"q = {q}")
    for n, h in enumerate(H):
        print(f"  H_{n} = {h.pretty()}")

F = make_field(3)
e = at_expansion(F, Composition.of(4, 1))
print("\ns = (4,1) over F_3")
print("  m =", e.m, "  |J_s| =", e.size, "  Γ_s =", e.gamma.pretty())
for j in e.index_set():
    point = ", ".join(u.pretty() for u in e.point(j))
    print(f"  j = {j}:  a_j = {e.a_theta(j).pretty():6}  u_j = ({point})")
