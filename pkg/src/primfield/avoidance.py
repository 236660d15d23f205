"""Escaping a finite union of proper subspaces.

Two searches are provided.  Over the rationals the candidates are points
of the moment curve ``f(t) = sum_i e_i t^(i-1)`` for ``t = 0, 1, ...,
m(n-1)``: a proper subspace is cut out by a nonzero linear functional, and
that functional restricted to the curve is a nonzero polynomial of degree
at most n-1, so each of the m subspaces swallows at most n-1 candidates.
Over a finite field the vectors of the ambient space are scanned in
coefficient order; a vector outside the union is guaranteed to exist when
the family has at most q members.

:func:`max_zero_intersection_subspace` grows a subspace T one avoiding
vector at a time until ``dim T = n - s``, where s is the largest member
dimension.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    DEFAULT_LIMIT,
    DimensionMismatch,
    EmptyFamily,
    FamilyTooLarge,
    FieldMismatch,
    InputError,
    NoAvoidingVector,
    SizeLimit,
)
from .linspace import (
    QQ,
    RationalField,
    Subspace,
    combine,
    contains,
    full_space,
    meets_trivially,
    span,
    sum_spaces,
    zero_space,
)


@dataclass(frozen=True)
class AvoidanceProblem:
    """An ambient space V and a nonempty family of proper subspaces of V."""

    ambient: Subspace
    family: tuple

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(self.family))
        if not self.family:
            raise EmptyFamily("the family of subspaces is empty")
        V = self.ambient
        for S in self.family:
            if S.field != V.field:
                raise FieldMismatch(f"{S.field!r} vs {V.field!r}")
            if S.ambient_dim != V.ambient_dim:
                raise DimensionMismatch("family member lives in a different ambient space")
            if not S <= V:
                raise DimensionMismatch("family member is not contained in the ambient space")
            if S.dim >= V.dim:
                raise DimensionMismatch(f"family member of dimension {S.dim} is not proper in dimension {V.dim}")

    @property
    def field(self):
        return self.ambient.field

    @property
    def n(self) -> int:
        return self.ambient.dim

    @property
    def m(self) -> int:
        return len(self.family)


@dataclass(frozen=True)
class MaxComplementResult:
    T: Subspace
    s: int
    steps: tuple
    candidates: tuple = field(default=())

    @property
    def dim(self) -> int:
        return self.T.dim


def moment_curve_point(basis: Sequence[Sequence], t, field, ambient_dim: int) -> tuple:
    coeffs = [field.coerce(t) ** i for i in range(len(basis))]
    return combine(coeffs, basis, field, ambient_dim)


def _outside_all(v, family) -> bool:
    return not any(contains(S, v) for S in family)


def search_avoiding_vector(problem: AvoidanceProblem, *, shuffle_seed: int | None = None,
                           limit: int = DEFAULT_LIMIT):
    """Return ``(v, candidates_examined)`` with v in V outside every member."""
    V, F = problem.ambient, problem.field
    if isinstance(F, RationalField):
        bound = problem.m * (problem.n - 1) + 1
        for tried, t in enumerate(range(bound), start=1):
            v = moment_curve_point(V.basis, t, F, V.ambient_dim)
            if _outside_all(v, problem.family):
                return v, tried
        raise AssertionError("moment-curve bound violated; the family cannot cover a rational space")

    coeff_iter = itertools.product(F.elements(), repeat=V.dim)
    if shuffle_seed is not None:
        if F.order**V.dim > limit:
            raise SizeLimit(f"shuffled scan over {F.order}^{V.dim} vectors exceeds limit {limit}")
        coeffs = list(coeff_iter)
        order = np.random.Generator(np.random.Philox(shuffle_seed)).permutation(len(coeffs))
        coeff_iter = (coeffs[i] for i in order)
    tried = 0
    for c in coeff_iter:
        tried += 1
        v = combine(c, V.basis, F, V.ambient_dim)
        if _outside_all(v, problem.family):
            return v, tried
    raise NoAvoidingVector(f"{problem.m} proper subspaces cover the space over {F!r}")


def find_avoiding_vector(problem: AvoidanceProblem, **kwargs) -> tuple:
    """A vector of V lying in no member of the family.

    Raises :class:`NoAvoidingVector` when the family is a linear covering
    (possible only over a finite field with at least q + 1 members).
    """
    v, _ = search_avoiding_vector(problem, **kwargs)
    return v


def max_zero_intersection_subspace(problem: AvoidanceProblem, **kwargs) -> MaxComplementResult:
    """Greedy maximal T with ``T & S == 0`` for every S in the family.

    The result has dimension ``n - s``.  Over F_q the family may have at
    most q members, otherwise a greedy step could face a covering.
    """
    F, V = problem.field, problem.ambient
    q = F.order
    if q is not None and problem.m > q:
        raise FamilyTooLarge(f"{problem.m} subspaces over a field of order {q}")
    s = max(S.dim for S in problem.family)
    T = zero_space(V.ambient_dim, F)
    steps, counts = [], []
    while T.dim < problem.n - s:
        stage = AvoidanceProblem(V, [sum_spaces(S, T) for S in problem.family])
        v, tried = search_avoiding_vector(stage, **kwargs)
        T_next = sum_spaces(T, span([v], V.ambient_dim, F))
        for S in problem.family:
            # A & B = 0 and (A + B) & C = 0 force (A + C) & B = 0.
            assert meets_trivially(T_next, S), "greedy step broke a trivial intersection"
        T = T_next
        steps.append(v)
        counts.append(tried)
    return MaxComplementResult(T, s, tuple(steps), tuple(counts))


def parse_family_file(text: str) -> AvoidanceProblem:
    """Parse the blank-line separated block format for rational problems.

    The first block declares the ambient dimension (``3`` or ``dim 3``,
    optionally with a ``field Q`` line); each further block lists the
    spanning rows of one subspace as whitespace-separated rationals.
    """
    blocks = [b for b in (blk.strip() for blk in text.replace("\r\n", "\n").split("\n\n")) if b]
    if not blocks:
        raise InputError("empty input")
    n = None
    for line in blocks[0].splitlines():
        words = line.split()
        if not words or words[0].startswith("#"):
            continue
        key = words[0].lower()
        if key == "field":
            if len(words) != 2 or words[1].upper() not in ("Q", "QQ", "RATIONAL", "RATIONALS"):
                raise InputError("rational mode requires rational blocks; got field declaration "
                                 + " ".join(words[1:]))
        elif key == "dim" and len(words) == 2:
            n = _parse_int(words[1])
        elif len(words) == 1:
            n = _parse_int(words[0])
        else:
            raise InputError(f"bad header line: {line!r}")
    if n is None or n < 1:
        raise InputError("first block must declare a positive ambient dimension")
    family = []
    for blk in blocks[1:]:
        rows = []
        for line in blk.splitlines():
            if line.strip().startswith("#"):
                continue
            row = [QQ.coerce(tok) for tok in line.split()]
            if len(row) != n:
                raise InputError(f"row {line!r} has {len(row)} entries, expected {n}")
            rows.append(row)
        family.append(span(rows, n, QQ))
    return AvoidanceProblem(full_space(n, QQ), family)


def _parse_int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError as exc:
        raise InputError(f"expected an integer dimension, got {tok!r}") from exc
