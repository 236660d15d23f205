"""q + 1 hyperplanes cover F_q^n, and q proper subspaces never do."""
from primfield import construct_covering, lc_value, min_covering_exhaustive, verify_covering

for q, n in [(2, 2), (2, 3), (3, 2), (4, 2)]:
    cov = construct_covering(q, n)
    print(f"F_{q}^{n}: {len(cov)} members, covers: {verify_covering(cov)},"
          f" exhaustive minimum: {min_covering_exhaustive(q, n)}, formula: {lc_value(q, n)}")

# the three lines of F_2^2
for S in construct_covering(2, 2).members:
    print("  line spanned by", S.basis)
