"""Subspace partitions of F_{q^n} grown from a partition of a primitive subspace.

Let W be primitive of dimension n - psi, M1 the subfield of degree psi
(so F_{q^n} = W + M1 directly), and {W_1, ..., W_l} a partition of W with
each ``dim W_i <= psi``.  Pick injective F_q-linear maps T_i: W_i -> M1.
For every nonzero alpha in M1 the graph

    W_{i,alpha} = {w + alpha * T_i(w) : w in W_i}

is a subspace of dimension dim W_i, and W, M1 together with all the
graphs partition F_{q^n}: a vector w + m with w in W_i and m in M1, both
nonzero, lies only in the graph with alpha = m / T_i(w).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DEFAULT_LIMIT, MapNotInjective, NotAPartitionOfW, NotPrimitive, TiTooLarge
from .extension import is_primitive_subspace, psi_of
from .fieldcore import Tower, subfield_basis
from .linspace import Subspace, combine, meets_trivially, rank, span


@dataclass(frozen=True)
class PartitionCert:
    members: tuple
    exhaustive: bool
    counts_identity: bool
    ok: bool

    @property
    def mode(self) -> str:
        return "exhaustive" if self.exhaustive else "certificate"

    def to_dict(self) -> dict:
        n = self.members[0].ambient_dim if self.members else 0
        q = self.members[0].field.order if self.members else 0
        return {
            "n": str(n),
            "q": str(q),
            "members": [
                {"dim": str(S.dim), "basis": [[str(a) for a in row] for row in S.basis]}
                for S in self.members
            ],
            "mode": self.mode,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class PartitionSpec:
    """Inputs of :func:`build_partition`.

    ``maps[i]`` is a ``dim W_i x dim M1`` matrix: row j gives the
    coordinates, in M1's basis, of the image of W_i's j-th basis vector.
    """

    tower: Tower
    W: Subspace
    pieces: tuple
    M1: Optional[Subspace] = None
    maps: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.M1 is None:
            object.__setattr__(self, "M1", subfield_basis(psi_of(self.tower.n), self.tower))
        if self.maps is None:
            object.__setattr__(self, "maps", tuple(default_maps(self.pieces, self.M1)))


def default_maps(pieces: Sequence[Subspace], M1: Subspace) -> list:
    """Send the j-th basis vector of each piece to the j-th basis vector of M1."""
    F, psi = M1.field, M1.dim
    maps = []
    for P in pieces:
        if P.dim > psi:
            raise TiTooLarge(f"piece of dimension {P.dim} cannot embed in a field of dimension {psi}")
        maps.append(tuple(tuple(F.one if j == i else F.zero for j in range(psi)) for i in range(P.dim)))
    return maps


def _counting_identity(members, q: int, n: int) -> bool:
    return sum(q**S.dim - 1 for S in members) == q**n - 1


def _check_spec(spec: PartitionSpec):
    tower, W, M1 = spec.tower, spec.W, spec.M1
    q, n = tower.q, tower.n
    psi = psi_of(n)
    if M1 != subfield_basis(psi, tower):
        raise NotPrimitive("M1 must be the intermediate field of largest proper degree")
    if not is_primitive_subspace(W, tower):
        raise NotPrimitive("W is not a primitive subspace")
    if W.dim + psi != n:
        raise NotPrimitive(f"W has dimension {W.dim}, expected n - psi = {n - psi}")
    for P in spec.pieces:
        if not P <= W:
            raise NotAPartitionOfW("a piece is not contained in W")
    nonzero = [P for P in spec.pieces if not P.is_zero]
    for A, B in itertools.combinations(nonzero, 2):
        if not meets_trivially(A, B):
            raise NotAPartitionOfW("two pieces share a nonzero vector")
    if not _counting_identity(nonzero, q, W.dim):
        raise NotAPartitionOfW("pieces do not exhaust the nonzero vectors of W")
    if len(spec.maps) != len(spec.pieces):
        raise MapNotInjective("need exactly one map per piece")
    for P, T in zip(spec.pieces, spec.maps):
        if P.dim > psi:
            raise TiTooLarge(f"piece of dimension {P.dim} exceeds psi = {psi}")
        if len(T) != P.dim or any(len(row) != M1.dim for row in T):
            raise MapNotInjective("map matrix has the wrong shape")
        if P.dim and rank(T, tower.base) != P.dim:
            raise MapNotInjective("map is not injective")


def graph_subspace(piece: Subspace, T, alpha, M1: Subspace, tower: Tower) -> Subspace:
    """{w + alpha * T(w) : w in piece}."""
    F, n = tower.base, tower.n
    rows = []
    for w, t_row in zip(piece.basis, T):
        image = combine(t_row, M1.basis, F, n)
        rows.append(tower.add(w, tower.mul(alpha, image)))
    G = span(rows, n, F)
    assert G.dim == piece.dim, "graph of an injective map lost dimension"
    return G


def build_partition(spec: PartitionSpec, limit: int = DEFAULT_LIMIT) -> PartitionCert:
    _check_spec(spec)
    tower, M1 = spec.tower, spec.M1
    members = [spec.W, M1]
    zero = tower.zero
    alphas = [a for a in M1.vectors() if a != zero]
    for P, T in zip(spec.pieces, spec.maps):
        if P.is_zero:
            continue
        members.extend(graph_subspace(P, T, alpha, M1, tower) for alpha in alphas)
    nonzero_pieces = sum(1 for P in spec.pieces if not P.is_zero)
    assert len(members) == 2 + nonzero_pieces * (tower.q**M1.dim - 1)
    assert _counting_identity(members, tower.q, tower.n)
    return verify_partition(members, tower, limit)


def verify_partition(members: Sequence[Subspace], tower: Tower, limit: int = DEFAULT_LIMIT) -> PartitionCert:
    """Check that every nonzero vector lies in exactly one member.

    Within ``limit`` every member's vectors are tallied; beyond it the
    pairwise-trivial-intersection test plus the counting identity is used,
    which is equivalent.
    """
    members = tuple(members)
    q, n = tower.q, tower.n
    counts_ok = _counting_identity(members, q, n)
    if tower.order <= limit and sum(S.cardinality() for S in members) <= limit:
        tally = Counter()
        zero = tower.zero
        for S in members:
            tally.update(v for v in S.vectors() if v != zero)
        ok = len(tally) == q**n - 1 and all(c == 1 for c in tally.values())
        return PartitionCert(members, True, counts_ok, ok)
    pairwise = all(meets_trivially(A, B) for A, B in itertools.combinations(members, 2))
    return PartitionCert(members, False, counts_ok, pairwise and counts_ok)


def pieces_of(W: Subspace, dims: Sequence[int]) -> list:
    """Partition W as one subspace U of dimension max(dims) plus lines.

    ``dims`` must be ``[dim W]`` or ``[u, 1, 1, ...]`` with exactly enough
    ones to cover the vectors of W outside U; a single entry ``u < dim W``
    is padded with the required lines.
    """
    dims = sorted((int(d) for d in dims), reverse=True)
    q, k = W.field.order, W.dim
    if not dims or any(d < 0 for d in dims):
        raise NotAPartitionOfW(f"bad piece dimensions {dims}")
    u = dims[0]
    if u > k:
        raise NotAPartitionOfW(f"piece of dimension {u} inside W of dimension {k}")
    n_lines = (q**k - q**u) // (q - 1)
    if u < k and len(dims) == 1:
        dims = [u] + [1] * n_lines
    if dims[1:] != [1] * n_lines:
        raise NotAPartitionOfW(f"unsupported piece dimensions {dims}; use [u] or [u, 1, ..., 1]")
    return _u_plus_lines(list(W.basis), u, W.field, W.ambient_dim)


def _u_plus_lines(rows: list, u: int, F, n: int) -> list:
    """span(rows[:u]) together with every line of span(rows) outside it."""
    U = span(rows[:u], n, F)
    pieces = [U] if u else []
    seen = set()
    for c in itertools.product(F.elements(), repeat=len(rows)):
        v = combine(c, rows, F, n)
        if not any(v) or v in U:
            continue
        L = span([v], n, F)
        if L.basis not in seen:
            seen.add(L.basis)
            pieces.append(L)
    return pieces


def random_partition_spec(tower: Tower, W: Subspace, rng: np.random.Generator) -> PartitionSpec:
    """A valid spec: random u-dimensional U inside W plus the remaining lines,
    with random injective maps into M1."""
    F = tower.base
    M1 = subfield_basis(psi_of(tower.n), tower)
    u = int(rng.integers(0, W.dim + 1))
    rows = [combine(mrow, W.basis, F, tower.n) for mrow in _random_invertible(F, W.dim, rng)]
    pieces = _u_plus_lines(rows, u, F, tower.n)
    maps = tuple(_random_injective(F, P.dim, M1.dim, rng) for P in pieces)
    return PartitionSpec(tower, W, tuple(pieces), M1, maps)


def _random_invertible(F, k: int, rng) -> list:
    while True:
        m = [tuple(int(x) for x in rng.integers(0, F.order, size=k)) for _ in range(k)]
        if rank(m, F) == k:
            return m


def _random_injective(F, t: int, psi: int, rng) -> tuple:
    while True:
        m = tuple(tuple(int(x) for x in rng.integers(0, F.order, size=psi)) for _ in range(t))
        if rank(m, F) == t:
            return m
