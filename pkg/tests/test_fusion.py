"""Fusion systems, Brauer pairs, focal/hyperfocal subgroups, nilpotency."""

import pytest

from blocklab.blocks import block_partition
from blocklab.fusion import (
    block_fusion_system,
    block_idempotents_mod_p,
    brauer_homomorphism,
    commutator_subgroup,
    direct_factor_check,
    focal_oracle,
    focal_subgroup,
    group_fusion_system,
    hyperfocal_oracle,
    hyperfocal_subgroup,
    is_nilpotent_fusion,
)

PRINCIPAL_CASES = [
    ("s3", 2), ("s3", 3), ("c6", 2), ("c6", 3), ("v4", 2), ("d8", 2),
    ("q8", 2), ("d10", 2), ("d10", 5), ("d12", 2), ("d12", 3),
    ("dicyclic12", 2), ("dicyclic12", 3), ("a4", 2), ("a4", 3),
    ("s3xc3", 2), ("s3xc3", 3), ("f20", 2), ("f20", 5), ("sl23", 2),
    ("sl23", 3), ("s4", 2), ("s4", 3), ("a4xc4", 2), ("a4xc4", 3),
    ("a5", 2), ("a5", 3), ("a5", 5), ("s5", 2), ("s5", 3), ("s5", 5),
]


def _principal_fusion(group, name, p):
    G = group(name)
    P = G.sylow_subgroup(p)
    return G, P, group_fusion_system(G, P)


@pytest.mark.parametrize("name,p", PRINCIPAL_CASES)
def test_focal_and_hyperfocal_oracles(group, name, p):
    G, P, F = _principal_fusion(group, name, p)
    assert F.complete
    foc = focal_subgroup(F)
    hyp = hyperfocal_subgroup(F)
    assert foc.same_group(focal_oracle(G, P))
    assert hyp.same_group(hyperfocal_oracle(G, P, p))
    # foc = hyp . P'
    Pprime = P.derived_subgroup()
    gens = list(hyp.generators) + list(Pprime.generators)
    from blocklab.group import PermGroup

    prod = PermGroup(G.degree, gens)
    assert prod.same_group(foc)


@pytest.mark.parametrize("name,p", PRINCIPAL_CASES)
def test_frobenius_cross_check(group, name, p):
    G, P, F = _principal_fusion(group, name, p)
    assert is_nilpotent_fusion(F) == G.is_p_nilpotent(p)


@pytest.mark.parametrize("name,p", PRINCIPAL_CASES)
def test_direct_factor_property(group, name, p):
    _, P, F = _principal_fusion(group, name, p)
    hyp = hyperfocal_subgroup(F)
    assert direct_factor_check(P, hyp)


@pytest.mark.parametrize("name,p", [
    ("s3", 2), ("s3", 3), ("d8", 2), ("q8", 2), ("a4", 2), ("a4", 3),
    ("dicyclic12", 2), ("dicyclic12", 3), ("s4", 2), ("s4", 3),
    ("a5", 2), ("a5", 3), ("a5", 5), ("sl23", 2), ("f20", 5),
])
def test_brauer_third_main(group, table, name, p):
    """Block fusion of the principal block equals group fusion."""
    G = group(name)
    B = block_partition(table(name), p)[0]
    F_block = block_fusion_system(G, B)
    F_group = group_fusion_system(G, B.defect_group)
    assert F_block.complete and F_group.complete
    assert len(F_block.subgroup_reps) == len(F_group.subgroup_reps)
    for Qb, Qg, Ab, Ag in zip(
        F_block.subgroup_reps, F_group.subgroup_reps,
        F_block.aut_groups, F_group.aut_groups,
    ):
        assert Qb.same_group(Qg)
        assert Ab.same_group(Ag)


def test_nilpotent_system_of_p_group(group):
    P = group("d8")
    F = group_fusion_system(P, P)
    assert is_nilpotent_fusion(F)
    # foc(F_P(P)) = P'
    assert focal_subgroup(F).same_group(P.derived_subgroup())
    assert hyperfocal_subgroup(F).order == 1


def test_s4_p2_focal_is_v4(group):
    G, P, F = _principal_fusion(group, "s4", 2)
    foc = focal_subgroup(F)
    assert foc.order == 4
    # V4 = P meet A4
    A4 = G.o_upper_p(2)
    assert foc.same_group(P.intersection(A4))
    assert hyperfocal_subgroup(F).same_group(foc)
    assert not is_nilpotent_fusion(F)
    # Aut_F(V4) contains an order-3 automorphism
    v4_idx = next(
        i for i, Q in enumerate(F.subgroup_reps)
        if Q.order == 4 and Q.same_group(foc)
    )
    assert F.aut_groups[v4_idx].order % 3 == 0


def test_a4_p3_focal_trivial(group):
    G, P, F = _principal_fusion(group, "a4", 3)
    assert focal_subgroup(F).order == 1  # Aut_F(C3) trivial, N_{A4}(C3) = C3
    assert is_nilpotent_fusion(F)
    for A, Q in zip(F.aut_groups, F.subgroup_reps):
        if Q.order == 3:
            assert A.order == 1


def test_dicyclic12_nonprincipal_block_fusion(group, table):
    G = group("dicyclic12")
    B = block_partition(table("dicyclic12"), 3)[1]
    assert not B.is_principal
    F = block_fusion_system(G, B)
    assert F.complete
    c3 = next(i for i, Q in enumerate(F.subgroup_reps) if Q.order == 3)
    assert F.aut_groups[c3].order == 2
    assert not is_nilpotent_fusion(F)


def test_defect_zero_block_fusion(group, table):
    G = group("s3")
    B = block_partition(table("s3"), 2)[1]
    F = block_fusion_system(G, B)
    assert F.complete
    assert F.P.order == 1
    assert is_nilpotent_fusion(F)


def test_block_idempotents(group):
    # a p-group has a single idempotent: the identity element
    P = group("d8")
    idems = block_idempotents_mod_p(P, 2)
    assert len(idems) == 1
    # S3 at p = 2: two idempotents matching the two 2-blocks
    G = group("s3")
    idems = block_idempotents_mod_p(G, 2)
    assert len(idems) == 2
    assert sorted(bi for _, bi in idems) == [0, 1]
    # C3 at p = 3: identity only
    from blocklab.catalog import cyclic

    idems = block_idempotents_mod_p(cyclic(3), 3)
    assert len(idems) == 1


def test_brauer_homomorphism_principal_nonzero(group, table):
    G = group("s4")
    P = G.sylow_subgroup(2)
    idems = block_idempotents_mod_p(G, 2)
    # the principal idempotent has nonzero Brauer image at C_G(P)
    C = G.centralizer_subgroup(P)
    nonzero = [bi for z, bi in idems if not brauer_homomorphism(z, C).is_zero()]
    assert nonzero == [0]


def test_commutator_subgroup_and_direct_factor_edge_cases(group):
    P = group("d8")
    triv = P.sylow_subgroup(3)  # trivial subgroup of P
    assert direct_factor_check(P, triv)
    assert direct_factor_check(P, P)
    W = commutator_subgroup(P, P)
    assert W.same_group(P.derived_subgroup())


def test_s4_direct_factor_worked_example(group):
    G, P, F = _principal_fusion(group, "s4", 2)
    U = hyperfocal_subgroup(F)  # V4
    assert U.order == 4
    W = commutator_subgroup(U, P)
    assert W.order == 2
    assert direct_factor_check(P, U)


def test_incomplete_fusion_for_large_defect_group():
    from blocklab.catalog import remark14_group
    from blocklab.group import CapacityError

    G = remark14_group()
    P = G.sylow_subgroup(3)
    F = group_fusion_system(G, P)
    assert not F.complete
    with pytest.raises(Exception):
        focal_subgroup(F)
    # the oracles still work
    foc = focal_oracle(G, P)
    assert P.order // foc.order == 3
