"""Linear coverings of F_q^n by proper subspaces.

The minimum number of proper subspaces covering F_q^n (n >= 2) is q + 1.
:func:`construct_covering` realizes it with the q + 1 hyperplanes through a
fixed codimension-2 subspace, and :func:`min_covering_exhaustive` confirms
minimality on small spaces by searching hyperplane families (any covering
by k proper subspaces enlarges to one by k hyperplanes).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from math import comb

from .errors import DEFAULT_LIMIT, DimensionMismatch, NoCoveringExists, SizeLimit
from .fieldcore import field_of_order
from .linspace import all_vectors, contains, enumerate_subspaces, span

#: Cap on the number of hyperplane subsets examined by the exhaustive search.
SUBSET_LIMIT = 2_000_000


@dataclass(frozen=True)
class Covering:
    field: object
    ambient_dim: int
    members: tuple
    verified: bool = False

    @property
    def q(self) -> int:
        return self.field.order

    def __len__(self):
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "q": str(self.q),
            "n": str(self.ambient_dim),
            "members": [S.to_dict() for S in self.members],
            "verified": self.verified,
        }


def lc_value(q: int, dim: int) -> int:
    """Linear covering number of an F_q-space of dimension ``dim``."""
    if dim < 2:
        raise NoCoveringExists(f"a space of dimension {dim} has no linear covering")
    return q + 1


def construct_covering(q: int, n: int, limit: int = DEFAULT_LIMIT) -> Covering:
    """The q + 1 hyperplanes containing U = span(e_2, ..., e_{n-1}).

    Verified exhaustively when q^n <= limit; otherwise ``verified`` records
    the counting identity |union| = q^n instead.
    """
    lc_value(q, n)
    F = field_of_order(q)
    U = [tuple(F.one if j == i else F.zero for j in range(n)) for i in range(2, n)]
    lines = [(F.one, c) for c in F.elements()] + [(F.zero, F.one)]
    members = tuple(span(U + [(a, b) + (F.zero,) * (n - 2)], n, F) for a, b in lines)
    cov = Covering(F, n, members)
    if q**n <= limit:
        return replace(cov, verified=verify_covering(cov, limit))
    # Hyperplanes through U pairwise meet in U, so the union has
    # (q + 1) * (q^(n-1) - q^(n-2)) + q^(n-2) = q^n elements.
    union_size = (q + 1) * (q ** (n - 1) - q ** (n - 2)) + q ** (n - 2)
    return replace(cov, verified=union_size == q**n)


def verify_covering(c: Covering, limit: int = DEFAULT_LIMIT) -> bool:
    """Exhaustively check that every vector lies in some (proper) member."""
    n, F = c.ambient_dim, c.field
    if F.order**n > limit:
        raise SizeLimit(f"{F.order}^{n} vectors exceed limit {limit}")
    for S in c.members:
        if S.ambient_dim != n:
            raise DimensionMismatch("covering member lives in a different ambient space")
        if S.is_full:
            return False
    return all(any(contains(S, v) for S in c.members) for v in all_vectors(F, n))


def _masks(field, n: int, subspaces) -> list[int]:
    index = {v: i for i, v in enumerate(all_vectors(field, n))}
    return [sum(1 << index[v] for v in S.vectors()) for S in subspaces]


def min_covering_exhaustive(q: int, n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Smallest k such that some k hyperplanes of F_q^n cover it."""
    lc_value(q, n)
    F = field_of_order(q)
    if q**n > limit:
        raise SizeLimit(f"{q}^{n} vectors exceed limit {limit}")
    hyperplanes = list(enumerate_subspaces(F, n, n - 1, limit))
    H = len(hyperplanes)
    if sum(comb(H, k) for k in range(1, q + 2)) > SUBSET_LIMIT:
        raise SizeLimit(f"too many hyperplane subsets ({H} hyperplanes, up to {q + 1} at a time)")
    masks = _masks(F, n, hyperplanes)
    full = (1 << q**n) - 1
    for k in range(1, H + 1):
        for combo in itertools.combinations(masks, k):
            acc = 0
            for mk in combo:
                acc |= mk
            if acc == full:
                return k
    raise AssertionError("all hyperplanes together always cover the space")
