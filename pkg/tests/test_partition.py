import itertools

import pytest

from helpers import rng
from primfield.errors import MapNotInjective, NotAPartitionOfW, NotPrimitive, TiTooLarge
from primfield.extension import construct_primitive_subspace
from primfield.fieldcore import build_tower, subfield_basis
from primfield.linspace import enumerate_subspaces, full_space, meets_trivially, span
from primfield.partition import (
    PartitionSpec,
    build_partition,
    default_maps,
    graph_subspace,
    pieces_of,
    random_partition_spec,
    verify_partition,
)


@pytest.fixture(scope="module")
def f16():
    t = build_tower(2, 1, 4)
    return t, construct_primitive_subspace(t).V


def test_spread_of_f16(f16):
    t, W = f16
    cert = build_partition(PartitionSpec(t, W, [W]))
    assert len(cert.members) == 5
    assert all(S.dim == 2 for S in cert.members)
    assert cert.exhaustive and cert.ok and cert.counts_identity
    # independent tally of the 15 nonzero elements
    hits = {v: 0 for v in t.elements() if v != t.zero}
    for S in cert.members:
        for v in S.vectors():
            if v != t.zero:
                hits[v] += 1
    assert len(hits) == 15 and set(hits.values()) == {1}


def test_counting_identity_with_phi_plus_psi():
    for q, phi, psi in [(2, 2, 2), (3, 2, 2), (2, 3, 3), (5, 1, 1), (4, 1, 2)]:
        n = phi + psi
        assert (q**phi - 1) + (q**psi - 1) + (q**psi - 1) * (q**phi - 1) == q**n - 1


def test_piece_too_large(f16):
    t, W = f16
    M1 = subfield_basis(2, t)
    fake = full_space(4, t.base)
    with pytest.raises(TiTooLarge):
        default_maps([span(fake.basis[:3], 4, t.base)], M1)
    with pytest.raises(TiTooLarge):
        PartitionSpec(t, W, [span(fake.basis[:3], 4, t.base)])


def test_verify_partition_examples(f16):
    t, W = f16
    F4 = subfield_basis(2, t)
    assert not verify_partition([F4, F4], t).ok
    assert verify_partition([full_space(4, t.base)], t).ok


def test_default_maps_shapes():
    t = build_tower(2, 1, 6)
    M1 = subfield_basis(3, t)
    W = construct_primitive_subspace(t).V
    line = span([W.basis[0]], 6, t.base)
    zero = span([], 6, t.base)
    full, one, none = default_maps([W, line, zero], M1)
    assert full == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert one == ((1, 0, 0),)
    assert none == ()


def test_zero_piece_contributes_nothing(f16):
    t, W = f16
    zero = span([], 4, t.base)
    cert = build_partition(PartitionSpec(t, W, [W, zero]))
    assert len(cert.members) == 5 and cert.ok


def test_lines_partition_of_w(f16):
    t, W = f16
    pieces = pieces_of(W, [1])
    assert len(pieces) == 3
    cert = build_partition(PartitionSpec(t, W, pieces))
    assert cert.ok and len(cert.members) == 2 + 3 * 3


def test_pieces_of_rejects_unsupported(f16):
    t, W = f16
    with pytest.raises(NotAPartitionOfW):
        pieces_of(W, [3])
    with pytest.raises(NotAPartitionOfW):
        pieces_of(W, [1, 1])


def test_spec_validation(f16):
    t, W = f16
    F4 = subfield_basis(2, t)
    line = span([W.basis[0]], 4, t.base)
    with pytest.raises(NotAPartitionOfW):
        build_partition(PartitionSpec(t, W, [line]))
    with pytest.raises(NotAPartitionOfW):
        build_partition(PartitionSpec(t, W, [W, line]))
    outside = next(S for S in enumerate_subspaces(t.base, 4, 1) if not S <= W)
    with pytest.raises(NotAPartitionOfW):
        build_partition(PartitionSpec(t, W, [outside]))
    with pytest.raises(NotPrimitive):
        build_partition(PartitionSpec(t, F4, [F4]))
    with pytest.raises(NotPrimitive):
        build_partition(PartitionSpec(t, line, [line]))
    with pytest.raises(MapNotInjective):
        build_partition(PartitionSpec(t, W, [W], maps=(((1, 0), (1, 0)),)))
    with pytest.raises(MapNotInjective):
        build_partition(PartitionSpec(t, W, [W], maps=(((1, 0),),)))


@pytest.mark.parametrize("args", [(2, 1, 4), (3, 1, 4), (2, 1, 6)])
def test_graph_subspace_properties(args):
    t = build_tower(*args, seed=1)
    W = construct_primitive_subspace(t).V
    g = rng(3)
    spec = random_partition_spec(t, W, g)
    M1 = spec.M1
    alphas = [a for a in M1.vectors() if a != t.zero]
    for P, T in zip(spec.pieces, spec.maps):
        graphs = [graph_subspace(P, T, a, M1, t) for a in alphas]
        for G in graphs:
            assert G.dim == P.dim
            assert meets_trivially(G, M1) and meets_trivially(G, W)
        for G1, G2 in itertools.combinations(graphs, 2):
            assert meets_trivially(G1, G2)


@pytest.mark.parametrize("args", [(2, 1, 4), (3, 1, 4), (2, 1, 6), (2, 2, 4)])
def test_random_specs_pass_both_modes(args):
    t = build_tower(*args, seed=2)
    W = construct_primitive_subspace(t, shuffle_seed=1).V
    g = rng(11)
    for _ in range(5):
        spec = random_partition_spec(t, W, g)
        cert = build_partition(spec)
        assert cert.exhaustive and cert.ok and cert.counts_identity
        cert2 = verify_partition(cert.members, t, limit=1)
        assert not cert2.exhaustive and cert2.ok


def test_certificate_mode_detects_overlap(f16):
    t, W = f16
    F4 = subfield_basis(2, t)
    assert not verify_partition([W, F4, F4], t, limit=1).ok


def test_partition_json(f16):
    t, W = f16
    d = build_partition(PartitionSpec(t, W, [W])).to_dict()
    assert d["n"] == "4" and d["q"] == "2" and d["mode"] == "exhaustive" and d["ok"] is True
    assert [m["dim"] for m in d["members"]] == ["2"] * 5
