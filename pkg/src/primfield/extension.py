"""Primitive subspaces of F_{q^n} over F_q.

``psi`` is the largest degree of a proper intermediate field (the largest
proper divisor of n) and ``phi`` the largest dimension of a subspace whose
nonzero elements all generate F_{q^n} over F_q.  A primitive subspace
meets the degree-psi subfield trivially, so ``phi <= n - psi``; the greedy
construction below reaches that bound whenever ``d(n) < q + 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from sympy import primefactors

from .avoidance import AvoidanceProblem, search_avoiding_vector
from .errors import DEFAULT_LIMIT, DimensionMismatch, NoAvoidingVector, SizeLimit, TrivialExtension
from .fieldcore import Tower, divisors, element_degree, subfield_basis
from .linspace import Subspace, enumerate_subspaces, full_space, meets_trivially, span, sum_spaces

PROVED = "Proved"
ORACLE_CONFIRMED = "OracleConfirmed"
ORACLE_REFUTED = "OracleRefuted"
BOUNDARY_UNDETERMINED = "BoundaryUndetermined"


def num_divisors(n: int) -> int:
    return len(divisors(n))


def psi_of(n: int) -> int:
    if n < 2:
        raise TrivialExtension("F_q has no proper intermediate fields over itself")
    return n // min(primefactors(n))


@dataclass(frozen=True)
class ExtensionProfile:
    tower: Tower
    divisors: tuple  # proper divisors of n
    m: int
    psi: int
    condition_ok: bool
    intermediate: tuple  # Subspace per proper divisor

    @property
    def n(self) -> int:
        return self.tower.n

    @property
    def q(self) -> int:
        return self.tower.q

    @property
    def maximal_divisors(self) -> tuple:
        return tuple(self.n // ell for ell in primefactors(self.n))

    @property
    def M1(self) -> Subspace:
        """The intermediate field of largest degree psi."""
        return self.intermediate[self.divisors.index(self.psi)]


def profile(tower: Tower) -> ExtensionProfile:
    n = tower.n
    if n < 2:
        raise TrivialExtension("n = 1: F_{q^n} = F_q is not a proper extension")
    proper = tuple(d for d in divisors(n) if d < n)
    return ExtensionProfile(
        tower=tower,
        divisors=proper,
        m=len(proper),
        psi=psi_of(n),
        condition_ok=num_divisors(n) < tower.q + 2,
        intermediate=tuple(subfield_basis(d, tower) for d in proper),
    )


def is_primitive_subspace(V: Subspace, tower: Tower) -> bool:
    """True when every nonzero v in V satisfies F_q(v) = F_{q^n}.

    Decided by rank: V must meet each maximal proper subfield F_{q^(n/l)},
    l a prime divisor of n, only in 0.
    """
    if V.ambient_dim != tower.n:
        raise DimensionMismatch(f"subspace of F_q^{V.ambient_dim} in an extension of degree {tower.n}")
    if V.is_zero:
        return True
    if tower.n == 1:
        return False
    return all(meets_trivially(V, subfield_basis(tower.n // ell, tower)) for ell in primefactors(tower.n))


def exhaustive_primitivity_check(V: Subspace, tower: Tower, limit: int = DEFAULT_LIMIT) -> bool:
    """Element-by-element check that every nonzero vector of V has degree n."""
    if V.cardinality() > limit:
        raise SizeLimit(f"{V.cardinality()} vectors exceed limit {limit}")
    zero = tower.zero
    return all(element_degree(v, tower) == tower.n for v in V.vectors() if v != zero)


@dataclass(frozen=True)
class PrimitiveWitness:
    V: Subspace
    construction_trace: tuple
    verified: bool
    stage_families: tuple = ()  # subspaces M_{i,j-1} the j-th element avoided

    @property
    def dim(self) -> int:
        return self.V.dim


def construct_primitive_subspace(tower: Tower, *, shuffle_seed: Optional[int] = None,
                                 limit: int = DEFAULT_LIMIT) -> PrimitiveWitness:
    """Greedy primitive subspace of dimension n - psi.

    Stage j picks x_j outside every M_i + <x_1, ..., x_{j-1}>, M_i running
    over all proper intermediate fields.  With at most q such subspaces a
    choice always exists; otherwise the attempt may raise
    :class:`NoAvoidingVector`.
    """
    prof = profile(tower)
    F, n = tower.base, tower.n
    ambient = full_space(n, F)
    stage = list(prof.intermediate)
    trace, families = [], []
    for _ in range(n - prof.psi):
        x, _ = search_avoiding_vector(AvoidanceProblem(ambient, stage), shuffle_seed=shuffle_seed, limit=limit)
        trace.append(x)
        families.append(tuple(stage))
        step = span([x], n, F)
        stage = [sum_spaces(M, step) for M in stage]
    V = span(trace, n, F)
    return PrimitiveWitness(V, tuple(trace), is_primitive_subspace(V, tower), tuple(families))


def check_trace(witness: PrimitiveWitness) -> bool:
    """Re-check that each x_j avoided its stage family and the x_j are independent."""
    for x, fam in zip(witness.construction_trace, witness.stage_families):
        if any(x in M for M in fam):
            return False
    return witness.V.dim == len(witness.construction_trace)


def phi_upper_bound(tower: Tower) -> int:
    return tower.n - psi_of(tower.n)


def phi_oracle(tower: Tower, limit: int = DEFAULT_LIMIT) -> int:
    """Largest primitive dimension by exhaustive subspace enumeration."""
    n, F = tower.n, tower.base
    if tower.order > limit:
        raise SizeLimit(f"q^n = {tower.order} exceeds limit {limit}")
    for k in range(phi_upper_bound(tower), 0, -1):
        for V in enumerate_subspaces(F, n, k, limit=max(limit, tower.order)):
            if is_primitive_subspace(V, tower):
                return k
    return 0


def primitive_census(tower: Tower, k: int, limit: int = DEFAULT_LIMIT) -> tuple[int, int]:
    """Scan every k-dimensional subspace; return ``(scanned, primitive)`` counts."""
    if tower.order > limit:
        raise SizeLimit(f"q^n = {tower.order} exceeds limit {limit}")
    scanned = primitive = 0
    for V in enumerate_subspaces(tower.base, tower.n, k, limit=limit):
        scanned += 1
        primitive += is_primitive_subspace(V, tower)
    return scanned, primitive


@dataclass
class IdentityReport:
    tower: Tower
    profile: ExtensionProfile
    witness: Optional[PrimitiveWitness]
    phi_lower: int
    phi_upper: int
    phi_oracle: Optional[int]
    verdict: str
    note: str = ""

    @property
    def phi(self) -> Optional[int]:
        if self.verdict == PROVED:
            return self.phi_upper
        return self.phi_oracle

    def to_dict(self) -> dict:
        t, prof = self.tower, self.profile
        d = {
            "p": str(t.p),
            "r": str(t.r),
            "n": str(t.n),
            "q": str(t.q),
            "divisors": [str(x) for x in prof.divisors],
            "psi": str(prof.psi),
            "condition_ok": prof.condition_ok,
            "witness_basis": None,
            "trace": [],
            "phi_lower": str(self.phi_lower),
            "phi_upper": str(self.phi_upper),
            "verdict": self.verdict,
        }
        if self.witness is not None:
            d["witness_basis"] = [[str(a) for a in row] for row in self.witness.V.basis]
            d["trace"] = [[str(a) for a in x] for x in self.witness.construction_trace]
        if self.phi_oracle is not None:
            d["phi_oracle"] = str(self.phi_oracle)
        if self.phi is not None:
            d["phi"] = str(self.phi)
        if self.note:
            d["note"] = self.note
        return d


def verify_identity(tower: Tower, limit: int = DEFAULT_LIMIT, run_oracle: bool = True) -> IdentityReport:
    """Check psi + phi = n constructively, by the upper bound, and by the oracle."""
    prof = profile(tower)
    upper = tower.n - prof.psi
    witness, note = None, ""
    try:
        witness = construct_primitive_subspace(tower, limit=limit)
    except NoAvoidingVector as exc:
        note = f"greedy construction stalled: {exc}"
    lower = witness.dim if witness is not None and witness.verified else 0

    oracle = None
    if run_oracle and tower.order <= limit:
        try:
            oracle = phi_oracle(tower, limit)
        except SizeLimit as exc:
            note = (note + "; " if note else "") + f"oracle skipped: {exc}"

    if lower == upper:
        verdict = PROVED
    elif oracle is not None:
        verdict = ORACLE_CONFIRMED if oracle == upper else ORACLE_REFUTED
    else:
        verdict = BOUNDARY_UNDETERMINED
    return IdentityReport(tower, prof, witness, lower, upper, oracle, verdict, note)
