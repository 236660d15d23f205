"""Finite-field arithmetic: F_p, F_q = F_p[y]/(h), and towers F_q < F_{q^n}.

Encoding conventions
--------------------
* An element of F_q is an ``int`` in ``range(q)``; its base-p digits
  (least significant first) are the coefficients of its residue mod ``h``.
* A polynomial is a list of coefficients, lowest degree first, trimmed so
  that the last entry is nonzero (``[]`` is the zero polynomial).
* An element of F_{q^n} is a length-n tuple of F_q elements: its
  coordinates in the basis ``1, x, ..., x^(n-1)`` of F_q[x]/(g).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint, isprime, primefactors

from .errors import (
    WIDTH_BITS,
    FieldMismatch,
    InputError,
    InvalidPolynomial,
    NotADivisor,
    NotPrime,
    SizeLimit,
)
from .linspace import Subspace, full_space, nullspace, span

#: F_q above this order computes products digit-wise instead of by table.
TABLE_MAX = 256


class FqField:
    """The finite field F_p[y]/(h) with elements encoded as integers."""

    def __init__(self, p: int, h: Sequence[int] = (0, 1)):
        if not isprime(p):
            raise NotPrime(f"{p} is not prime")
        h = tuple(int(c) % p for c in h)
        if len(h) < 2 or h[-1] != 1:
            raise InvalidPolynomial("modulus must be monic of degree >= 1")
        self.p = p
        self.h = h
        self.r = len(h) - 1
        self.order = p**self.r
        if self.r > 1 and self.order <= TABLE_MAX:
            self._build_tables()
        else:
            self._mul_t = None

    zero = 0
    one = 1

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.h) == (other.p, other.h)

    def __hash__(self):
        return hash((self.p, self.h))

    # digit encoding

    def to_coords(self, a: int) -> tuple:
        out = []
        for _ in range(self.r):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def from_coords(self, coords: Sequence[int]) -> int:
        a = 0
        for c in reversed(coords):
            a = a * self.p + int(c) % self.p
        return a

    def coerce(self, x) -> int:
        if isinstance(x, str):
            x = int(x)
        if hasattr(x, "denominator"):
            if x.denominator != 1:
                raise FieldMismatch(f"{x!r} is not an element of {self!r}")
            x = int(x)
        if not isinstance(x, (int, np.integer)):
            raise FieldMismatch(f"{x!r} is not an element of {self!r}")
        x = int(x)
        if self.r == 1:
            return x % self.p
        if not 0 <= x < self.order:
            raise FieldMismatch(f"{x} out of range for {self!r}")
        return x

    def elements(self) -> range:
        return range(self.order)

    # arithmetic

    def _build_tables(self):
        q = self.order
        coords = [self.to_coords(a) for a in range(q)]
        self._add_t = [[self._add_slow(coords[a], coords[b]) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._mul_slow(coords[a], coords[b]) for b in range(q)] for a in range(q)]
        self._neg_t = [self.from_coords([-c for c in coords[a]]) for a in range(q)]
        self._inv_t = [0] * q
        for a in range(1, q):
            row = self._mul_t[a]
            self._inv_t[a] = row.index(1)

    def _add_slow(self, ca, cb):
        return self.from_coords([x + y for x, y in zip(ca, cb)])

    def _mul_slow(self, ca, cb):
        prod = poly_mod(poly_mul(list(ca), list(cb), _prime(self.p)), list(self.h), _prime(self.p))
        return self.from_coords(prod + [0] * (self.r - len(prod)))

    def add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        if self._mul_t is not None:
            return self._add_t[a][b]
        return self._add_slow(self.to_coords(a), self.to_coords(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.r == 1:
            return -a % self.p
        if self._mul_t is not None:
            return self._neg_t[a]
        return self.from_coords([-c for c in self.to_coords(a)])

    def mul(self, a, b):
        if self.r == 1:
            return a * b % self.p
        if self._mul_t is not None:
            return self._mul_t[a][b]
        return self._mul_slow(self.to_coords(a), self.to_coords(b))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.r == 1:
            return pow(a, -1, self.p)
        if self._mul_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.order - 2)

    def pow(self, a, e: int):
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def to_json(self):
        return {"p": str(self.p), "h": [str(c) for c in self.h]}


@lru_cache(maxsize=None)
def _prime(p: int) -> FqField:
    return FqField(p)


def prime_field(p: int) -> FqField:
    return _prime(p)


# polynomials over a field


def poly_trim(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    return f


def poly_add(f, g, F) -> list:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] = F.add(out[i], b)
    return poly_trim(out)


def poly_sub(f, g, F) -> list:
    return poly_add(f, [F.neg(b) for b in g], F)


def poly_mul(f, g, F) -> list:
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(out)


def poly_divmod(f, g, F):
    g = poly_trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(list(f))
    dg = len(g) - 1
    lead_inv = F.inv(g[-1])
    quo = [F.zero] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg:
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - 1 - dg
        quo[shift] = c
        nc = F.neg(c)
        for i, b in enumerate(g):
            r[shift + i] = F.add(r[shift + i], F.mul(nc, b))
        r.pop()
        poly_trim(r)
    return poly_trim(quo), r


def poly_mod(f, g, F) -> list:
    return poly_divmod(f, g, F)[1]


def poly_gcd(f, g, F) -> list:
    """Monic gcd (``[]`` when both inputs are zero)."""
    a, b = poly_trim(list(f)), poly_trim(list(g))
    while b:
        a, b = b, poly_mod(a, b, F)
    if a:
        s = F.inv(a[-1])
        a = [F.mul(s, c) for c in a]
    return a


def poly_powmod(base, e: int, mod, F) -> list:
    result = [F.one]
    base = poly_mod(base, mod, F)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, F), mod, F)
        base = poly_mod(poly_mul(base, base, F), mod, F)
        e >>= 1
    return poly_mod(result, mod, F)


def is_irreducible(f: Sequence, F) -> bool:
    """Rabin's irreducibility test for a monic polynomial over the finite field F."""
    f = poly_trim(list(f))
    if not f or f[-1] != F.one:
        raise InvalidPolynomial("irreducibility test needs a monic nonzero polynomial")
    k = len(f) - 1
    if k < 1:
        raise InvalidPolynomial("irreducibility test needs degree >= 1")
    if k == 1:
        return True
    Q = F.order
    x = [F.zero, F.one]
    # powers[j] = x^(Q^j) mod f
    powers = [poly_mod(x, f, F)]
    for _ in range(k):
        powers.append(poly_powmod(powers[-1], Q, f, F))
    if poly_sub(powers[k], x, F) != []:
        return False
    for ell in primefactors(k):
        if len(poly_gcd(poly_sub(powers[k // ell], x, F), f, F)) != 1:
            return False
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**r; raises NotPrime if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, r),) = fac.items()
    return p, r


def _rng(seed: int) -> np.random.Generator:
    # Philox is counter-based: the stream is a pure function of the seed.
    return np.random.Generator(np.random.Philox(seed))


def _random_monic_irreducible(F, degree: int, rng) -> list:
    while True:
        coeffs = [int(c) for c in rng.integers(0, F.order, size=degree)] + [F.one]
        if is_irreducible(coeffs, F):
            return coeffs


@lru_cache(maxsize=None)
def field_of_order(q: int, seed: int = 0) -> FqField:
    """A seeded realization of F_q for any prime power q."""
    p, r = prime_power(q)
    if r == 1:
        return prime_field(p)
    return FqField(p, _random_monic_irreducible(prime_field(p), r, _rng(seed)))


@dataclass(frozen=True, eq=True)
class Tower:
    """F_p < F_q = F_p[y]/(h) < F_{q^n} = F_q[x]/(g)."""

    p: int
    r: int
    n: int
    h: tuple
    g: tuple
    seed: int = 0
    base: FqField = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "base", FqField(self.p, self.h))
        if self.base.r != self.r:
            raise InvalidPolynomial(f"h has degree {self.base.r}, expected r = {self.r}")
        if len(self.g) != self.n + 1 or self.g[-1] != 1:
            raise InvalidPolynomial(f"g must be monic of degree n = {self.n}")

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def order(self) -> int:
        return self.q**self.n

    # elements

    @property
    def zero(self) -> tuple:
        return (0,) * self.n

    @property
    def one(self) -> tuple:
        return (1,) + (0,) * (self.n - 1)

    def embed(self, c: int) -> tuple:
        """The constant ``c`` of F_q as an element of F_{q^n}."""
        return (self.base.coerce(c),) + (0,) * (self.n - 1)

    def gen(self) -> tuple:
        """The class of x."""
        if self.n == 1:
            return (self.base.neg(self.g[0]),)
        return tuple(1 if i == 1 else 0 for i in range(self.n))

    def elements(self) -> Iterator[tuple]:
        return itertools.product(self.base.elements(), repeat=self.n)

    def random_element(self, rng, nonzero: bool = False) -> tuple:
        while True:
            a = tuple(int(c) for c in rng.integers(0, self.q, size=self.n))
            if a != self.zero or not nonzero:
                return a

    def add(self, a, b) -> tuple:
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b) -> tuple:
        F = self.base
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def scale(self, c, a) -> tuple:
        F = self.base
        return tuple(F.mul(c, x) for x in a)

    def _pad(self, f) -> tuple:
        return tuple(f) + (0,) * (self.n - len(f))

    def mul(self, a, b) -> tuple:
        F = self.base
        return self._pad(poly_mod(poly_mul(poly_trim(list(a)), poly_trim(list(b)), F), list(self.g), F))

    def pow(self, a, e: int) -> tuple:
        F = self.base
        return self._pad(poly_powmod(poly_trim(list(a)), e, list(self.g), F))

    # Frobenius

    @cached_property
    def frobenius_matrix(self) -> tuple:
        """Row i holds the coordinates of (x^i)^q."""
        F = self.base
        xq = poly_powmod([0, 1], self.q, list(self.g), F)
        rows, cur = [], [1]
        for _ in range(self.n):
            rows.append(self._pad(cur))
            cur = poly_mod(poly_mul(cur, xq, F), list(self.g), F)
        return tuple(rows)

    def apply_frobenius(self, a) -> tuple:
        F = self.base
        acc = [0] * self.n
        for c, row in zip(a, self.frobenius_matrix):
            if c:
                acc = [F.add(s, F.mul(c, t)) for s, t in zip(acc, row)]
        return tuple(acc)

    def frobenius_power_matrix(self, d: int) -> tuple:
        """Rows are the images of the basis under a -> a^(q^d)."""
        rows = [tuple(1 if i == j else 0 for j in range(self.n)) for i in range(self.n)]
        for _ in range(d % self.n):
            rows = [self.apply_frobenius(r) for r in rows]
        return tuple(rows)

    @cached_property
    def _subfields(self) -> dict:
        return {}

    # serialization

    def to_dict(self) -> dict:
        return {
            "p": str(self.p),
            "r": str(self.r),
            "n": str(self.n),
            "h": [str(c) for c in self.h],
            "g": [str(c) for c in self.g],
            "seed": str(self.seed),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Tower":
        try:
            tower = cls(
                p=int(d["p"]),
                r=int(d["r"]),
                n=int(d["n"]),
                h=tuple(int(c) for c in d["h"]),
                g=tuple(int(c) for c in d["g"]),
                seed=int(d.get("seed", 0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidPolynomial):
                raise
            raise InputError(f"malformed tower record: {exc}") from exc
        if not is_irreducible(list(tower.h), prime_field(tower.p)):
            raise InvalidPolynomial("h is reducible over F_p")
        if not is_irreducible(list(tower.g), tower.base):
            raise InvalidPolynomial("g is reducible over F_q")
        return tower

    @classmethod
    def from_json(cls, s: str) -> "Tower":
        return cls.from_dict(json.loads(s))


def build_tower(p: int, r: int, n: int, seed: int = 0) -> Tower:
    """Seeded random tower F_p < F_{p^r} < F_{p^(rn)}.

    Degree-1 stages use the trivial modulus ``y`` (resp. ``x``).
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1 or n < 1:
        raise ValueError("r and n must be positive")
    q = p**r
    if (q**n).bit_length() > WIDTH_BITS:
        raise SizeLimit(f"q^n = {q}^{n} exceeds {WIDTH_BITS}-bit width")
    rng = _rng(seed)
    Fp = prime_field(p)
    h = (0, 1) if r == 1 else tuple(_random_monic_irreducible(Fp, r, rng))
    Fq = FqField(p, h)
    g = (0, 1) if n == 1 else tuple(_random_monic_irreducible(Fq, n, rng))
    return Tower(p, r, n, h, g, seed)


def frobenius_q(a: Sequence[int], tower: Tower) -> tuple:
    """a -> a^q, the generator of Gal(F_{q^n}/F_q)."""
    return tower.apply_frobenius(a)


def element_degree(a: Sequence[int], tower: Tower) -> int:
    """Degree of F_q(a) over F_q: the orbit length of a under Frobenius."""
    a = tuple(a)
    b = tower.apply_frobenius(a)
    d = 1
    while b != a:
        b = tower.apply_frobenius(b)
        d += 1
    return d


def is_primitive_element(a: Sequence[int], tower: Tower) -> bool:
    """True when F_q(a) = F_{q^n}."""
    return element_degree(a, tower) == tower.n


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def subfield_basis(d: int, tower: Tower) -> Subspace:
    """F_{q^d} inside F_{q^n}: the kernel of a -> a^(q^d) - a."""
    if d < 1 or tower.n % d:
        raise NotADivisor(f"{d} does not divide {tower.n}")
    cache = tower._subfields
    if d not in cache:
        F, n = tower.base, tower.n
        if d == n:
            cache[d] = full_space(n, F)
        else:
            rows = tower.frobenius_power_matrix(d)
            shifted = [[F.sub(rows[i][j], 1 if i == j else 0) for j in range(n)] for i in range(n)]
            # left kernel of shifted, via the right kernel of its transpose
            transposed = [list(col) for col in zip(*shifted)]
            cache[d] = span(nullspace(transposed, n, F), n, F)
    return cache[d]


def multiplicative_generator(tower: Tower) -> tuple:
    """Smallest element (in coordinate order) generating F_{q^n}^*."""
    N = tower.order - 1
    exps = [N // ell for ell in primefactors(N)] if N > 1 else []
    one = tower.one
    for a in tower.elements():
        if a == tower.zero:
            continue
        if all(tower.pow(a, e) != one for e in exps):
            return a
    raise AssertionError("F_{q^n}^* is cyclic; a generator must exist")
