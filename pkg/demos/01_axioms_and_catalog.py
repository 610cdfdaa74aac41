"""Tour of the data model: catalog algebras, products, axiom checking.

Run with:  python demos/01_axioms_and_catalog.py
"""

from fractions import Fraction

from bolalg import catalog, catalog_names, center, check_axioms, ideal_closure
from bolalg.core import BolAlgebra
from bolalg.linalg import basis_vec, span

print("Bundled example algebras")
print("------------------------")
for name in catalog_names():
    B = catalog(name)
    report = check_axioms(B)
    print(f"  {name:10s} dim {B.n}   identities: {'all pass' if report.ok else 'FAIL'}")

print()
print("Products in sl2 viewed as a Bol algebra (basis e, f, h)")
B = catalog("sl2bol")
e, f, h = B.basis()
print("  e * f     =", [str(c) for c in B.binary(e, f)])
print("  (e, f, e) =", [str(c) for c in B.ternary(e, f, e)])
print("  (e, f, h) =", [str(c) for c in B.ternary(e, f, h)], " -- the pair (e,f) acts through h")

print()
print("Perturbing a single structure constant is caught with a witness:")
R = [[[[B.R[a][b][c][d] for d in range(3)] for c in range(3)] for b in range(3)] for a in range(3)]
R[0][1][2][2] += Fraction(1)
bad = BolAlgebra.from_tensors(3, B.T, R, B.labels)
report = check_axioms(bad)
for c in report.identities:
    if not c.ok:
        print(f"  {c.name} fails at basis tuple {c.witness}, defect {[str(x) for x in c.defect]}")

print()
print("Centers and ideal closures")
print("  center(heis3bol) has dimension", center(catalog("heis3bol")).dim, "(the central element)")
M = catalog("mixed")
cl = ideal_closure(M, span([basis_vec(0, 5)], 5))
print("  the sl2 summand of `mixed` is recovered as an ideal closure: dim", cl.dim)
