"""Over Q, a subspace meeting every member of a family trivially, of maximal size."""
from primfield import QQ, AvoidanceProblem, full_space, max_zero_intersection_subspace, span

n = 4
family = [
    span([(1, 0, 0, 0), (0, 1, 0, 0)], n, QQ),
    span([(0, 0, 1, 0), (0, 0, 0, 1)], n, QQ),
    span([(1, 1, 1, 1)], n, QQ),
]
res = max_zero_intersection_subspace(AvoidanceProblem(full_space(n, QQ), family))
print("largest member dimension s =", res.s)
print("T has dimension", res.T.dim, "with basis", [[str(c) for c in row] for row in res.T.basis])
print("moment-curve candidates tried per step:", res.candidates)
print("T meets every member in zero:", all((res.T & S).is_zero for S in family))
