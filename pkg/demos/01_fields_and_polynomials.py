"""Finite fields, polynomials in θ and residues modulo a prime.

Run: python demos/01_fields_and_polynomials.py
"""

from fmzv import Poly, RationalFn, make_field
from fmzv.poly import irreducibles, poly_ext_gcd
from fmzv.residue import residue_inverse

F = make_field(3)
theta = Poly.theta(F)
P = theta**2 + Poly.one(F)
print("F =", F, "  P =", P.pretty(), " encoded", P)

# Bezout certificate for gcd(P, θ)
g, x, y = poly_ext_gcd(P, theta)
print(f"gcd = {g.pretty()};  ({x.pretty()})·P + ({y.pretty()})·θ = {(x * P + y * theta).pretty()}")

# inverses in A/(P), a field with 9 elements
for a in (theta, theta + Poly.one(F)):
    print(f"1/({a.pretty()}) mod P = {residue_inverse(a, P).rep.pretty()}")

print("monic irreducibles of degree 2:", [Q.pretty() for Q in irreducibles(F, 2)])

# rational functions are kept reduced with a monic denominator
r = RationalFn(theta**2 - theta, theta)
print("(θ^2 - θ)/θ =", r.pretty(), "  encoded", r)

# non-prime fields come with a fixed modulus; elements are integer codes
F4 = make_field(2, 2)
print(F4, " ω·ω =", F4.mul[2][2], " (ω^2 = ω + 1 has code 3)")
