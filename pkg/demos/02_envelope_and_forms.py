"""The enveloping Lie algebra and the Killing-Ricci form.

Run with:  python demos/02_envelope_and_forms.py
"""

from bolalg import catalog, envelope, envelope_form
from bolalg.envelope import standard_embedding_check
from bolalg.forms import compare_trace_vs_envelope, invariance_check, is_nondegenerate
from bolalg.lie import lie_is_semisimple, lie_is_solvable
from bolalg.linalg import basis_vec

print("Enveloping Lie algebras G = B (+) h")
print("-----------------------------------")
for name in ("abelian3", "solv2", "heis3bol", "sl2bol", "lts_sl2", "mixed"):
    B = catalog(name)
    E = envelope(B)  # construction verifies Jacobi + projection + recovery
    print(
        f"  {name:10s} dim G = {E.total_dim} = {E.b_dim} + {len(E.h_basis)}"
        f"   solvable={lie_is_solvable(E.lie)} semisimple={lie_is_semisimple(E.lie)}"
    )

print()
print("The two identities that pin the construction down, checked on sl2bol:")
B = catalog("sl2bol")
E = envelope(B)
G = E.lie
i, j, k = 0, 1, 0
br = G.bracket(basis_vec(i, 6), basis_vec(j, 6))
print("  proj_B [e, f]  =", [str(c) for c in br[:3]], "= e * f")
rec = G.bracket(basis_vec(k, 6), br)
print("  [e, [e, f]]    =", [str(c) for c in rec[:3]], "= (e, f, e)")

print()
print("Killing-Ricci forms (two constructions)")
for name in ("lts_sl2", "sl2bol", "solv2"):
    B = catalog(name)
    cmp = compare_trace_vs_envelope(B)
    print(f"  {name:8s} envelope restriction: {[[str(c) for c in row] for row in cmp.envelope_gram]}")
    print(f"           ternary trace form:   {[[str(c) for c in row] for row in cmp.trace_gram]}")
    print(f"           equal entrywise: {cmp.equal}")

beta = envelope_form(catalog("sl2bol"))
print()
print("The envelope form of sl2bol is invariant (skew variant):",
      invariance_check(catalog("sl2bol"), beta, "skew").ok)
print("and nondegenerate:", is_nondegenerate(beta))

print()
print("Ternary-only algebras admit the standard-embedding relations:")
rep = standard_embedding_check(envelope(catalog("lts_sl2")))
print("  lts_sl2:", "all three bracket relations hold" if rep.ok else "FAIL")
