"""Exact linear algebra over a coefficient field.

Works with any field object exposing ``zero``, ``one``, ``add``, ``sub``,
``neg``, ``mul``, ``inv`` and ``coerce`` (``FqField`` from
:mod:`primfield.fieldcore`, or :data:`QQ` defined here).  Finite fields also
expose ``order`` and ``elements()``; those are needed only by the
enumeration routines.

Subspaces are stored in reduced row echelon form, so two subspaces are
equal exactly when their basis matrices are identical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    DEFAULT_LIMIT,
    WIDTH_BITS,
    DimensionMismatch,
    FieldMismatch,
    InputError,
    SizeLimit,
)

Vector = tuple


class RationalField:
    """The field of rational numbers with exact ``Fraction`` entries."""

    zero = Fraction(0)
    one = Fraction(1)
    order = None
    tag = "rational"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def coerce(self, x) -> Fraction:
        if isinstance(x, str):
            try:
                return Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"not a rational number: {x!r}") from exc
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise FieldMismatch(f"cannot interpret {x!r} as a rational")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a

    def elements(self):
        raise SizeLimit("the rationals cannot be enumerated")

    def to_json(self):
        return "rational"


QQ = RationalField()


def rref(rows: Iterable[Sequence], field, ncols: int | None = None):
    """Reduce ``rows`` to reduced row echelon form.

    Returns ``(basis, pivots)`` where ``basis`` holds the nonzero rows as
    tuples and ``pivots`` their pivot columns.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    if ncols is None:
        ncols = len(m[0])
    add, mul, inv = field.add, field.mul, field.inv
    neg = field.neg
    pivots = []
    top = 0
    for col in range(ncols):
        if top == len(m):
            break
        piv = next((i for i in range(top, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        lead = m[top][col]
        if lead != field.one:
            s = inv(lead)
            m[top] = [mul(s, a) for a in m[top]]
        prow = m[top]
        for i in range(len(m)):
            if i != top:
                f = m[i][col]
                if f:
                    nf = neg(f)
                    m[i] = [add(a, mul(nf, b)) if b else a for a, b in zip(m[i], prow)]
        pivots.append(col)
        top += 1
    return [tuple(r) for r in m[:top]], pivots


def rank(rows: Sequence[Sequence], field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, field) -> list[Vector]:
    """Basis of ``{x : rows @ x = 0}`` (right kernel), one vector per free column."""
    basis, pivots = rref(rows, field, ncols)
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [field.zero] * ncols
        x[free] = field.one
        for row, pc in zip(basis, pivots):
            if row[free]:
                x[pc] = field.neg(row[free])
        out.append(tuple(x))
    return out


def left_kernel(rows: Sequence[Sequence], field) -> list[Vector]:
    """Basis of ``{c : sum_i c_i * rows[i] = 0}``."""
    if not rows:
        return []
    transposed = list(zip(*rows))
    return nullspace(transposed, len(rows), field)


def combine(coeffs: Sequence, vectors: Sequence[Sequence], field, ambient_dim: int) -> Vector:
    """The linear combination ``sum_i coeffs[i] * vectors[i]``."""
    acc = [field.zero] * ambient_dim
    add, mul = field.add, field.mul
    for c, v in zip(coeffs, vectors):
        if c:
            acc = [add(a, mul(c, b)) for a, b in zip(acc, v)]
    return tuple(acc)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**ambient_dim`` held in canonical RREF."""

    field: object
    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(i for i, a in enumerate(row) if a) for row in self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_spaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __le__(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(contains(other, b) for b in self.basis)

    def cardinality(self) -> int:
        return self.field.order ** self.dim

    def vectors(self) -> Iterator[Vector]:
        """All vectors of the subspace, in lexicographic order of coefficients."""
        F = self.field
        for coeffs in itertools.product(F.elements(), repeat=self.dim):
            yield combine(coeffs, self.basis, F, self.ambient_dim)

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_json(),
            "ambient_dim": str(self.ambient_dim),
            "basis": [[str(a) for a in row] for row in self.basis],
        }


def _check_compatible(A: Subspace, B: Subspace):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {A.ambient_dim} and {B.ambient_dim}")


def span(vectors: Iterable[Sequence], ambient_dim: int, field) -> Subspace:
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows.append([field.coerce(a) for a in v])
    basis, _ = rref(rows, field, ambient_dim)
    return Subspace(field, ambient_dim, tuple(basis))


def zero_space(ambient_dim: int, field) -> Subspace:
    return Subspace(field, ambient_dim, ())


def full_space(ambient_dim: int, field) -> Subspace:
    rows = tuple(
        tuple(field.one if i == j else field.zero for j in range(ambient_dim))
        for i in range(ambient_dim)
    )
    return Subspace(field, ambient_dim, rows)


def sum_spaces(A: Subspace, B: Subspace) -> Subspace:
    _check_compatible(A, B)
    basis, _ = rref(A.basis + B.basis, A.field, A.ambient_dim)
    return Subspace(A.field, A.ambient_dim, tuple(basis))


def intersect(A: Subspace, B: Subspace) -> Subspace:
    """Exact intersection through the left kernel of the stacked bases."""
    _check_compatible(A, B)
    F, n = A.field, A.ambient_dim
    if A.is_zero or B.is_zero:
        return zero_space(n, F)
    k = A.dim
    vecs = [combine(c[:k], A.basis, F, n) for c in left_kernel(A.basis + B.basis, F)]
    basis, _ = rref(vecs, F, n)
    return Subspace(F, n, tuple(basis))


def meets_trivially(A: Subspace, B: Subspace) -> bool:
    """``A & B == 0`` decided by a rank count, without building the intersection."""
    _check_compatible(A, B)
    if A.is_zero or B.is_zero:
        return True
    return rank(A.basis + B.basis, A.field) == A.dim + B.dim


def reduce_vector(A: Subspace, v: Sequence) -> Vector:
    """Remainder of ``v`` after eliminating A's pivot columns."""
    F = A.field
    w = list(v)
    for row, pc in zip(A.basis, A.pivots):
        c = w[pc]
        if c:
            nc = F.neg(c)
            w = [F.add(a, F.mul(nc, b)) if b else a for a, b in zip(w, row)]
    return tuple(w)


def contains(A: Subspace, v: Sequence) -> bool:
    if len(v) != A.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {A.ambient_dim}")
    return not any(reduce_vector(A, v))


def all_vectors(field, n: int) -> Iterator[Vector]:
    return itertools.product(field.elements(), repeat=n)


def gaussian_binomial(n: int, k: int, q: int, width: int = WIDTH_BITS) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over F_q."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    value = num // den
    if value.bit_length() > width:
        raise SizeLimit(f"[{n} choose {k}]_{q} exceeds {width} bits")
    return value


def enumerate_subspaces(field, n: int, k: int, limit: int = DEFAULT_LIMIT) -> Iterator[Subspace]:
    """Yield every k-dimensional subspace of ``field**n`` exactly once.

    Order: pivot-column sets lexicographically, then free entries in
    ``itertools.product`` order over ``field.elements()``.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    q = field.order
    if q is None:
        raise SizeLimit("cannot enumerate subspaces over an infinite field")
    if q**n > limit:
        raise SizeLimit(f"q^n = {q}^{n} exceeds limit {limit}")
    count = gaussian_binomial(n, k, q)
    if count > limit:
        raise SizeLimit(f"{count} subspaces exceed limit {limit}")
    elems = list(field.elements())
    zero, one = field.zero, field.one
    for piv in itertools.combinations(range(n), k):
        pivset = set(piv)
        slots = [(i, j) for i, pc in enumerate(piv) for j in range(pc + 1, n) if j not in pivset]
        for fill in itertools.product(elems, repeat=len(slots)):
            rows = [[zero] * n for _ in range(k)]
            for i, pc in enumerate(piv):
                rows[i][pc] = one
            for (i, j), a in zip(slots, fill):
                rows[i][j] = a
            yield Subspace(field, n, tuple(tuple(r) for r in rows))


def subspace_from_dict(d: dict, field) -> Subspace:
    """Inverse of :meth:`Subspace.to_dict`; the caller supplies the field object."""
    if d["field"] != field.to_json():
        raise FieldMismatch(f"record field {d['field']!r} does not match {field!r}")
    n = int(d["ambient_dim"])
    S = span([[field.coerce(_parse_scalar(a, field)) for a in row] for row in d["basis"]], n, field)
    if [list(r) for r in S.basis] != [[field.coerce(_parse_scalar(a, field)) for a in row] for row in d["basis"]]:
        raise InputError("basis in record is not in canonical reduced row echelon form")
    return S


def _parse_scalar(s, field):
    if field is QQ or isinstance(field, RationalField):
        return s
    return int(s)
