"""Verdict records for the height-zero square-sum characterisation.

For a block B with defect group P inside a Sylow p-subgroup S, and
m = sum of chi(1)^2 over the height-zero characters, the record
compares three equivalent statements: the p-part of m equals
|S:P|^2 |P:foc|, the height-zero count equals |P:foc|, and the block's
fusion system is nilpotent.  The right-hand side always divides the
p-part of m, which is asserted unconditionally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import Block, block_partition, blocks_of_normal_subgroup, valuation
from .chartab import character_table
from .fusion import (
    FusionSystem,
    block_fusion_system,
    focal_oracle,
    focal_subgroup,
    group_fusion_system,
    is_nilpotent_fusion,
)
from .group import PermGroup

__all__ = [
    "Verdict",
    "theorem11_verdict",
    "remark14_reproduction",
    "conjecture12_surrogate",
]


@dataclass
class Verdict:
    group_id: str
    prime: int
    block_index: int
    is_principal: bool
    defect: int
    m: int
    nu_m: int
    sylow_index_sq: int
    focal_index: int
    rhs: int
    irr0_count: int
    cond_i: bool
    cond_iii: bool
    cond_iv: bool | None
    consistent: bool | None
    divides: bool
    focal_method: str  # "fusion" or "oracle"
    source_condition_note: str = (
        "condition (ii) on source-idempotent values is out of scope"
    )


def _fusion_for(G: PermGroup, B: Block, fusion_cap: int | None) -> FusionSystem:
    if B.is_principal:
        return group_fusion_system(G, B.defect_group, fusion_cap)
    return block_fusion_system(G, B, fusion_cap)


def theorem11_verdict(
    G: PermGroup,
    p: int,
    B: Block,
    block_index: int = 0,
    group_id: str = "?",
    F: FusionSystem | None = None,
    fusion_cap: int | None = None,
) -> Verdict:
    table = B.table
    P = B.defect_group
    if F is None and not (B.is_principal and P.order == 1):
        F = _fusion_for(G, B, fusion_cap)

    if F is not None and F.complete:
        foc = focal_subgroup(F)
        cond_iv = is_nilpotent_fusion(F)
        method = "fusion"
    elif B.is_principal:
        # focal subgroup theorem and Frobenius, exact for principal blocks
        foc = focal_oracle(G, P)
        cond_iv = G.is_p_nilpotent(p)
        method = "oracle"
    else:
        foc = None
        cond_iv = None
        method = "unavailable"

    hz = B.height_zero_rows()
    m = sum(table.degrees[r] ** 2 for r in hz)
    nu_m = valuation(m, p)
    sylow_index = p ** (valuation(G.order, p) - B.defect)
    focal_index = P.order // foc.order if foc is not None else None
    irr0 = len(hz)

    if focal_index is None:
        return Verdict(
            group_id, p, block_index, B.is_principal, B.defect, m, nu_m,
            sylow_index**2, 0, 0, irr0,
            cond_i=False, cond_iii=False, cond_iv=None, consistent=None,
            divides=True, focal_method=method,
        )

    rhs = sylow_index**2 * focal_index
    cond_i = p**nu_m == rhs
    cond_iii = irr0 == focal_index
    divides = p**nu_m % rhs == 0
    assert divides, "right-hand side must divide the p-part of m"
    assert irr0 % focal_index == 0, "|P:foc| must divide |Irr_0|"
    consistent = cond_i == cond_iii == cond_iv if cond_iv is not None else None
    return Verdict(
        group_id, p, block_index, B.is_principal, B.defect, m, nu_m,
        sylow_index**2, focal_index, rhs, irr0,
        cond_i=cond_i, cond_iii=cond_iii, cond_iv=cond_iv,
        consistent=consistent, divides=divides, focal_method=method,
    )


def remark14_reproduction() -> dict:
    """The order-34992 counterexample to the naive divisibility guess.

    G = V : (A4 x C4) on 729 points has a unique 3-block; the square
    sum over characters of degree prime to 3 is 1548 = 2^2 * 3^2 * 43,
    while |P:P'| = 27 does not divide it.
    """
    from .catalog import build_catalog_entry

    G = build_catalog_entry("remark14")
    assert G.order == 34992
    table = character_table(G)
    blocks = block_partition(table, 3)
    assert len(blocks) == 1, "the group must have a unique 3-block"
    B = blocks[0]
    hz = B.height_zero_rows()
    assert all(table.degrees[r] % 3 for r in hz)
    assert sorted(hz) == sorted(
        r for r in range(len(table.degrees)) if table.degrees[r] % 3
    ), "height-zero characters are exactly those of degree prime to 3"
    m = sum(table.degrees[r] ** 2 for r in hz)
    assert m == 1548
    assert 1548 == 2**2 * 3**2 * 43
    P = B.defect_group
    assert P.order == 3**7
    pp_index = P.order // P.derived_subgroup().order
    assert pp_index == 27
    assert 1548 % 27 != 0
    verdict = theorem11_verdict(G, 3, B, group_id="remark14")
    assert verdict.cond_iv is False
    assert verdict.consistent
    return {
        "group": "remark14",
        "order": G.order,
        "prime": 3,
        "block_count": 1,
        "m": m,
        "m_factorization": "2^2 * 3^2 * 43",
        "p_prime_degree_count": len(hz),
        "P_order": P.order,
        "P_abelianization_index": pp_index,
        "divides": False,
        "verdict": verdict,
    }


def conjecture12_surrogate(G: PermGroup, p: int, group_id: str = "?") -> dict:
    """Character-level surrogate at the level of N = O^p(G).

    For the principal block, the covered block C of N has defect group
    Q = P intersect N; the test is the biconditional: every member of
    Irr(C) has degree prime to p if and only if Q is abelian.
    """
    table = character_table(G)
    B = block_partition(table, p)[0]
    P = B.defect_group
    N = G.o_upper_p(p)
    Q = P.intersection(N)
    tableN = character_table(N)
    covered, single = blocks_of_normal_subgroup(B, N, tableN)
    principal_N = [b for b in covered if b.is_principal]
    assert principal_N, "the principal block of N must be covered"
    C = principal_N[0]
    all_p_prime = all(tableN.degrees[r] % p for r in C.member_rows)
    q_abelian = Q.is_abelian()
    return {
        "group": group_id,
        "prime": p,
        "N_order": N.order,
        "Q_order": Q.order,
        "covered_block_degrees": C.member_degrees(),
        "covered_is_single": single,
        "all_p_prime_degrees": all_p_prime,
        "Q_abelian": q_abelian,
        "biconditional_holds": all_p_prime == q_abelian,
    }
