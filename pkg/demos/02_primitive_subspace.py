"""Greedy construction of a large primitive subspace and the identity check."""
from primfield import build_tower, construct_primitive_subspace, element_degree, profile, verify_identity

t = build_tower(13, 2, 4)  # F_169 < F_169^4
prof = profile(t)
print("proper divisors:", prof.divisors, " psi =", prof.psi, " condition d(n) < q+2:", prof.condition_ok)

w = construct_primitive_subspace(t)
print("witness dimension:", w.dim, " verified:", w.verified)
for j, x in enumerate(w.construction_trace):
    print(f"  step {j}: picked {x}, degree {element_degree(x, t)}")

rep = verify_identity(t)
print("verdict:", rep.verdict, " phi =", rep.phi)

# a small case where the brute-force oracle also runs
small = verify_identity(build_tower(3, 1, 4))
print("F_81 over F_3:", small.verdict, " oracle phi =", small.phi_oracle)
