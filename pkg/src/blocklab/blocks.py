"""p-blocks of a character table: partition, defects, defect groups.

Two irreducible characters lie in the same p-block exactly when their
central characters agree after reduction modulo the fixed prime ideal
above p.  Defect groups are found through defect classes: a Sylow
p-subgroup of the centralizer of a class on which the block's reduced
central character is nonzero and whose centralizer has minimal p-part.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import CharacterTable
from .finitefield import ReductionMap
from .group import DomainError, PermGroup

__all__ = ["Block", "block_partition", "blocks_of_normal_subgroup", "valuation"]


def valuation(n: int, p: int) -> int:
    """Largest a with p^a dividing n."""
    if n == 0:
        raise DomainError("valuation of zero is undefined")
    n = abs(n)
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


@dataclass
class Block:
    """A p-block of Irr(G)."""

    prime: int
    member_rows: tuple[int, ...]
    lambda_values: tuple[int, ...]  # reduced central character, per class
    defect: int
    defect_class_index: int
    defect_group: PermGroup  # a representative, up to conjugacy
    heights: dict = field(default_factory=dict)  # member row -> height
    is_principal: bool = False
    table: CharacterTable = None
    reduction: ReductionMap = None

    def height_zero_rows(self) -> list[int]:
        return [r for r in self.member_rows if self.heights[r] == 0]

    def member_degrees(self) -> list[int]:
        return [self.table.degrees[r] for r in self.member_rows]


def block_partition(table: CharacterTable, p: int) -> list[Block]:
    """All p-blocks, principal block first, then by least member row."""
    group = table.group
    classes = table.classes
    rm = ReductionMap(p, table.conductor)
    nu_g = valuation(group.order, p)

    groups: dict[tuple, list[int]] = {}
    for row in range(len(table.characters)):
        omega = table.central_character(row)
        reduced = tuple(rm(w) for w in omega)
        groups.setdefault(reduced, []).append(row)

    entries = sorted(groups.items(), key=lambda kv: min(kv[1]))
    blocks = []
    for reduced, rows in entries:
        nus = [valuation(table.degrees[r], p) for r in rows]
        defect = nu_g - min(nus)
        heights = {r: nu - (nu_g - defect) for r, nu in zip(rows, nus)}
        dci, dgroup = _defect_group(table, p, reduced, defect)
        block = Block(
            prime=p,
            member_rows=tuple(rows),
            lambda_values=reduced,
            defect=defect,
            defect_class_index=dci,
            defect_group=dgroup,
            heights=heights,
            is_principal=(table.trivial_index in rows),
            table=table,
            reduction=rm,
        )
        assert min(block.heights.values()) == 0
        assert dgroup.order == p**defect
        blocks.append(block)
    assert sum(len(b.member_rows) for b in blocks) == len(table.characters)
    assert sum(1 for b in blocks if b.is_principal) == 1
    assert blocks[0].is_principal
    return blocks


def _defect_group(table: CharacterTable, p: int, reduced, defect):
    """Defect class and a Sylow p-subgroup of its element's centralizer."""
    group = table.group
    best = None
    for i, c in enumerate(table.classes):
        if reduced[i] == 0:
            continue
        nu = valuation(c.centralizer_order, p)
        if best is None or nu < best[0]:
            best = (nu, i)
    assert best is not None and best[0] == defect, (
        "no defect class found; block data inconsistent"
    )
    i = best[1]
    rep = table.classes[i].representative
    cent = group.centralizer(rep)
    return i, cent.sylow_subgroup(p)


def _conjugate_row(tableN: CharacterTable, row: int, g) -> int:
    """Row index of the conjugate character psi^g(n) = psi(g n g^-1)."""
    groupN = tableN.group
    psi = tableN.characters[row]
    values = []
    for c in tableN.classes:
        conj = g * c.representative * g.inverse()
        values.append(psi[groupN.class_index_of(conj)])
    for r, chi in enumerate(tableN.characters):
        if all(a == b for a, b in zip(chi, values)):
            return r
    raise AssertionError("conjugate character not found in the table")


def blocks_of_normal_subgroup(
    B: Block, N: PermGroup, tableN: CharacterTable
) -> tuple[list[Block], bool]:
    """Blocks of a normal subgroup N covered by B.

    Returns (covered blocks of N, is_single_block) where the flag is
    true when exactly one block of N is covered and conjugation by the
    big group fixes it.
    """
    table = B.table
    G = table.group
    for g in N.generators:
        for h in G.generators:
            if g.conjugate(h) not in N:
                raise DomainError("N is not normal")
    blocksN = block_partition(tableN, B.prime)
    row_to_block = {}
    for bi, b in enumerate(blocksN):
        for r in b.member_rows:
            row_to_block[r] = bi
    covered = set()
    for row in B.member_rows:
        mults = table.decompose_restriction(table.characters[row], tableN)
        for r, m in enumerate(mults):
            if m:
                covered.add(row_to_block[r])
    covered_blocks = [blocksN[i] for i in sorted(covered)]
    single = len(covered) == 1
    if single:
        members = set(covered_blocks[0].member_rows)
        for g in G.generators:
            image = {_conjugate_row(tableN, r, g) for r in members}
            if image != members:
                single = False
                break
    return covered_blocks, single
