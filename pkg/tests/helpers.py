"""Random generators and brute-force oracles shared by the test modules."""
import itertools
from fractions import Fraction

import numpy as np

from primfield.linspace import Subspace, combine, rank, span


def rng(seed=0):
    return np.random.default_rng(seed)


def random_scalar(field, g, lo=-5, hi=6):
    if field.order is None:
        den = int(g.integers(1, 4))
        return Fraction(int(g.integers(lo, hi)), den)
    return int(g.integers(0, field.order))


def random_vector(field, n, g):
    return tuple(random_scalar(field, g) for _ in range(n))


def random_subspace(field, n, k, g):
    """A uniformly-ish random subspace of dimension exactly k."""
    while True:
        rows = [random_vector(field, n, g) for _ in range(k)]
        S = span(rows, n, field)
        if S.dim == k:
            return S


def random_invertible(field, n, g):
    while True:
        rows = [random_vector(field, n, g) for _ in range(n)]
        if rank(rows, field) == n:
            return rows


def element_set(S: Subspace):
    """All vectors of a finite-field subspace as a frozenset."""
    return frozenset(S.vectors())


def closure(vectors, field, n):
    """Brute-force F-span: every combination of the given vectors."""
    vectors = list(vectors)
    return frozenset(
        combine(c, vectors, field, n) for c in itertools.product(field.elements(), repeat=len(vectors))
    )


def all_subspace_sets(field, n, k):
    """Every k-dim subspace of field^n as a set of vectors, found without RREF."""
    vecs = list(itertools.product(field.elements(), repeat=n))
    out = set()
    for combo in itertools.combinations(vecs, k):
        S = closure(combo, field, n)
        if len(S) == field.order**k:
            out.add(S)
    return out
