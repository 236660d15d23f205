"""F_64 over F_2: the divisor condition fails, so ask the exhaustive oracle."""
from primfield import build_tower, profile
from primfield.extension import primitive_census

t = build_tower(2, 1, 6)
prof = profile(t)
print("d(6) =", prof.m + 1, " q + 2 =", t.q + 2, " condition holds:", prof.condition_ok)

scanned, primitive = primitive_census(t, t.n - prof.psi)
print(f"{primitive} of {scanned} three-dimensional subspaces are primitive")
print("phi = n - psi here:", primitive > 0)
