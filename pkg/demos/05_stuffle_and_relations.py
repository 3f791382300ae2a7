"""Stuffle products at a prime, and recovering F_p-relations from residues alone.

Run: python demos/05_stuffle_and_relations.py
"""

from fmzv import Composition, Poly, RationalFn, ValidationFailed, make_field
from fmzv.identities import discover_relation, stuffle_terms, verify_stuffle
from fmzv.poly import irreducibles, primes_up_to

C = Composition.of
for a, b in [(C(1), C(2)), (C(1), C(1, 2)), (C(1, 2), C(3, 4))]:
    terms = stuffle_terms(a, b)
    print(f"{a} * {b}: {len(terms)} terms  " + " ".join(str(t.merged) for t in terms))

F = make_field(3)
theta = Poly.theta(F)
u = (RationalFn(theta + Poly.one(F), theta),)
u2 = (RationalFn(Poly.const(F, 2)), RationalFn(theta**2))
P = irreducibles(F, 3)[0]
r = verify_stuffle(C(2), C(1, 1), u, u2, P)
print(f"\nLi_(2)(u) Li_(1,1)(u') at {P.pretty()}: lhs {r.lhs}, rhs {r.rhs}")

# which F_p-combination of weight-w zetas equals a product?  solve, then check held-out primes
for q, s, s2 in [(3, C(1), C(1)), (2, C(1), C(1)), (5, C(1), C(2)), (3, C(2), C(2))]:
    Fq = make_field(q)
    try:
        cand = discover_relation(s, s2, primes_up_to(Fq, 3), irreducibles(Fq, 4))
        print(f"q = {q}: {cand.relation_str()}   (free directions: {len(cand.nullspace)})")
    except ValidationFailed as exc:
        print(f"q = {q}: no reliable relation, {exc}")
