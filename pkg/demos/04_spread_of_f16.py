"""A spread of F_16: five 2-dimensional subspaces sharing only zero."""
from primfield import PartitionSpec, build_partition, build_tower, construct_primitive_subspace

t = build_tower(2, 1, 4)
W = construct_primitive_subspace(t).V  # primitive, dimension 2
cert = build_partition(PartitionSpec(t, W, [W]))
print("members:", len(cert.members), " mode:", cert.mode, " ok:", cert.ok)
for S in cert.members:
    print("  ", [v for v in S.vectors() if v != t.zero])

# the nonzero counts add up to 15
print(sum(t.q**S.dim - 1 for S in cert.members), "=", t.order - 1)
