"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the report lines.
"""
import contextlib
import io
import json
import time

from sympy import isprime

from helpers import random_invertible, random_scalar, random_subspace, rng
from primfield.avoidance import AvoidanceProblem, max_zero_intersection_subspace
from primfield.cli import main
from primfield.covering import construct_covering, min_covering_exhaustive, verify_covering
from primfield.extension import (
    PROVED,
    construct_primitive_subspace,
    exhaustive_primitivity_check,
    is_primitive_subspace,
    num_divisors,
    phi_oracle,
    profile,
    verify_identity,
)
from primfield.fieldcore import build_tower, element_degree, frobenius_q, prime_field, subfield_basis
from primfield.linspace import (
    QQ,
    combine,
    enumerate_subspaces,
    full_space,
    gaussian_binomial,
    intersect,
    meets_trivially,
    span,
    sum_spaces,
)
from primfield.partition import PartitionSpec, build_partition, random_partition_spec, verify_partition


@contextlib.contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        print(f"\nFAIL [{number}] {title}: {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = budget is None or elapsed < budget
    limit = "no time budget" if budget is None else f"budget {budget}s"
    print(f"\n{'PASS' if ok else 'FAIL'} [{number}] {title} ({elapsed:.2f}s, {limit})")
    assert ok, f"took {elapsed:.2f}s, {limit}"


def test_1_example_13_2_4():
    with criterion(1, "F_169 inside F_169^4: psi = phi = 2, Proved", 30):
        t = build_tower(13, 2, 4)
        rep = verify_identity(t)
        assert rep.verdict == PROVED
        assert rep.profile.psi == 2 and rep.phi == 2
        V = rep.witness.V
        assert V.dim == 2 and is_primitive_subspace(V, t)
        g = rng(2024)
        sampled = 0
        while sampled < 1000:
            coeffs = [random_scalar(t.base, g) for _ in V.basis]
            v = combine(coeffs, V.basis, t.base, t.n)
            if v == t.zero:
                continue
            assert element_degree(v, t) == 4
            sampled += 1


def identity_cases():
    cases = []
    for p in range(2, 65):
        if not isprime(p):
            continue
        r = 1
        while p**r <= 64:
            q = p**r
            n = 2
            while q**n <= 2**12:
                if num_divisors(n) < q + 2:
                    cases.append((p, r, n))
                n += 1
            r += 1
    return cases


def test_2_identity_suite():
    cases = identity_cases()
    for must in [(2, 1, 2), (2, 1, 3), (2, 1, 4), (2, 1, 5), (3, 1, 2), (3, 1, 4), (2, 2, 2), (2, 2, 4), (5, 1, 3)]:
        assert must in cases
    assert (2, 1, 6) not in cases and (2, 1, 12) not in cases
    with criterion(2, f"identity phi = n - psi on {len(cases)} towers with q^n <= 4096", 60):
        for p, r, n in cases:
            t = build_tower(p, r, n)
            target = n - profile(t).psi
            w = construct_primitive_subspace(t)
            assert w.dim == target, (p, r, n)
            assert exhaustive_primitivity_check(w.V, t), (p, r, n)
            assert phi_oracle(t) == target, (p, r, n)


def test_3_covering_numbers():
    with criterion(3, "minimum linear covering has q + 1 members", 10):
        for q, n in [(2, 2), (2, 3), (3, 2), (4, 2), (5, 2)]:
            assert min_covering_exhaustive(q, n) == q + 1, (q, n)
            cov = construct_covering(q, n)
            assert len(cov) == q + 1 and verify_covering(cov), (q, n)


def test_4_partition():
    with criterion(4, "F_16 spread and counting identity on 50 random specs", 30):
        t = build_tower(2, 1, 4)
        W = construct_primitive_subspace(t).V
        cert = build_partition(PartitionSpec(t, W, [W]))
        assert len(cert.members) == 5 and all(S.dim == 2 for S in cert.members)
        check = verify_partition(cert.members, t)
        assert check.exhaustive and check.ok
        hits = {}
        for S in cert.members:
            for v in S.vectors():
                if v != t.zero:
                    hits[v] = hits.get(v, 0) + 1
        assert len(hits) == 15 and set(hits.values()) == {1}

        g = rng(50)
        towers = [build_tower(*a, seed=7) for a in [(2, 1, 4), (2, 1, 6), (3, 1, 4)]]
        witnesses = [construct_primitive_subspace(tw).V for tw in towers]
        for i in range(50):
            tw, Wi = towers[i % 3], witnesses[i % 3]
            cert = build_partition(random_partition_spec(tw, Wi, g))
            assert sum(tw.q**S.dim - 1 for S in cert.members) == tw.q**tw.n - 1
            assert cert.ok


def random_rational_family(g):
    n = int(g.integers(3, 7))
    m = int(g.integers(1, 6))
    family = []
    for _ in range(m):
        k = int(g.integers(1, n))
        rows = [tuple(QQ.coerce(int(x)) for x in g.integers(-3, 4, size=n)) for _ in range(k)]
        family.append(span(rows, n, QQ))
    return n, m, family


def test_5_rational_max_complement():
    with criterion(5, "rational avoidance: dim T = n - s on 100 families", 20):
        g = rng(5)
        done = 0
        while done < 100:
            n, m, family = random_rational_family(g)
            family = [S for S in family if not S.is_zero]
            if not family:
                continue
            res = max_zero_intersection_subspace(AvoidanceProblem(full_space(n, QQ), family))
            s = max(S.dim for S in family)
            assert res.s == s and res.T.dim == n - s
            for S in family:
                assert meets_trivially(res.T, S)
                if S.dim == s:
                    assert sum_spaces(res.T, S).is_full
            assert all(c <= len(family) * (n - 1) + 1 for c in res.candidates)
            done += 1


def _shear(row, S, field, g):
    coeffs = [random_scalar(field, g) for _ in S.basis]
    return tuple(field.add(x, y) for x, y in zip(row, combine(coeffs, S.basis, field, len(row))))


def test_6_property_suites():
    with criterion(6, "property suites, 1000+ cases each", None):
        fields = [prime_field(2), prime_field(3), build_tower(2, 2, 1).base, prime_field(5), QQ]
        g = rng(6)

        # (A + B) & C = 0 and A & B = 0 force (A + C) & B = 0
        for i in range(1000):
            F = fields[i % len(fields)]
            n = int(g.integers(2, 7))
            a = int(g.integers(0, n + 1))
            b = int(g.integers(0, n - a + 1))
            c = int(g.integers(0, n - a - b + 1))
            rows = random_invertible(F, n, g)
            A = span(rows[:a], n, F)
            B = span([_shear(r, A, F, g) for r in rows[a : a + b]], n, F)
            C = span([_shear(r, sum_spaces(A, B), F, g) for r in rows[a + b : a + b + c]], n, F)
            assert intersect(A, B).is_zero and intersect(sum_spaces(A, B), C).is_zero
            assert intersect(sum_spaces(A, C), B).is_zero

        both = [prime_field(2), prime_field(3), QQ]
        for i in range(2000):
            F = both[i % 3]
            n = int(g.integers(1, 6))
            A = random_subspace(F, n, int(g.integers(0, n + 1)), g)
            B = random_subspace(F, n, int(g.integers(0, n + 1)), g)
            assert sum_spaces(A, B).dim + intersect(A, B).dim == A.dim + B.dim

        towers = [build_tower(*a, seed=3) for a in [(2, 1, 4), (3, 1, 3), (2, 2, 3), (5, 1, 2), (13, 2, 4), (2, 1, 6)]]
        for i in range(1200):
            t = towers[i % len(towers)]
            x, y = t.random_element(g), t.random_element(g)
            assert frobenius_q(t.add(x, y), t) == t.add(frobenius_q(x, t), frobenius_q(y, t))
            assert frobenius_q(t.mul(x, y), t) == t.mul(frobenius_q(x, t), frobenius_q(y, t))
            assert (frobenius_q(x, t) == x) == (x in subfield_basis(1, t))

        checked = 0
        for q in (2, 3):
            F = prime_field(q)
            for n in range(1, 6):
                for k in range(n + 1):
                    found = set(enumerate_subspaces(F, n, k))
                    assert all(S.dim == k for S in found)
                    assert len(found) == gaussian_binomial(n, k, q)
                    checked += len(found)
        assert checked >= 1000


def test_7_boundary_probe():
    with criterion(7, "boundary probe over F_2^6 gives a definite verdict", 60):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(["boundary-search", "2", "6"])
        assert code in (0, 2)
        (rec,) = json.loads(buf.getvalue())["records"]
        census = rec["census"]
        assert census["dim"] == "3" and census["subspaces_scanned"] == "1395"
        assert isinstance(census["phi_equals_n_minus_psi"], bool)
        print(f"\n    boundary (q=2, n=6): phi = n - psi is {census['phi_equals_n_minus_psi']},"
              f" {census['primitive_subspaces']} of 1395 subspaces primitive")
