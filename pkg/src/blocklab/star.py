"""Action of linear characters of P/foc on the characters of a block.

A linear character lambda of P trivial on the focal subgroup acts on
chi by multiplying the value at g = u*s (p-part u) with lambda(u') for
any u' in P conjugate to u; off sections meeting P the values of block
characters vanish, which the implementation asserts rather than
assumes.  The induced action is free on the height-zero characters.
"""

from __future__ import annotations

import numpy as np

from .blocks import Block
from .chartab import character_table
from .cyclotomic import Cyc
from .fusion import FusionSystem
from .group import DomainError, PermGroup
from .perm import Perm

__all__ = [
    "LinearCharacter",
    "WellDefinednessError",
    "linear_characters_mod_focal",
    "star_apply",
    "star_orbits",
]


class WellDefinednessError(RuntimeError):
    """Conjugates into P disagree on the linear character's value."""


class LinearCharacter:
    """A linear character of P trivial on a normal subgroup foc >= P'."""

    __slots__ = ("P", "foc", "conductor", "_coset_of", "coset_values", "index")

    def __init__(self, P, foc, conductor, coset_of, coset_values, index):
        self.P = P
        self.foc = foc
        self.conductor = conductor
        self._coset_of = coset_of  # element key -> coset index
        self.coset_values = coset_values  # coset index -> Cyc root of unity
        self.index = index

    def value_of(self, u: Perm) -> Cyc:
        key = np.asarray(u.images, dtype=">u2").tobytes()
        try:
            coset = self._coset_of[key]
        except KeyError:
            raise DomainError("element lies outside P") from None
        return self.coset_values[coset]

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.coset_values)

    def mul(self, other: "LinearCharacter") -> "LinearCharacter":
        assert self._coset_of is other._coset_of
        values = [a * b for a, b in zip(self.coset_values, other.coset_values)]
        return LinearCharacter(
            self.P, self.foc, self.conductor, self._coset_of, values, None
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearCharacter)
            and self.coset_values == other.coset_values
        )

    def __hash__(self):
        return hash(tuple(self.coset_values))


def linear_characters_mod_focal(P: PermGroup, foc: PermGroup):
    """The |P:foc| linear characters of P that are trivial on foc."""
    for a in P.generators:
        for b in P.generators:
            if a.inverse() * b.inverse() * a * b not in foc:
                raise DomainError("foc does not contain the derived subgroup")
        for f in foc.generators:
            if f.conjugate(a) not in foc:
                raise DomainError("foc is not normal in P")
    quotient, to_q = P.coset_action(foc)
    table = character_table(quotient)
    assert all(d == 1 for d in table.degrees)

    # element key -> coset index, built blockwise from the coset reps
    foc_arr = foc.elements_array()
    stride = 2 * P.degree
    coset_of = {}
    reps = []
    p_elems = P.elements_array()
    seen = set()
    for row in p_elems:
        key = row.astype(">u2").tobytes()
        if key in coset_of:
            continue
        rep = Perm(row.tolist())
        idx = len(reps)
        reps.append(rep)
        block = foc_arr[:, np.asarray(rep.images, dtype=np.int32)]
        raw = block.astype(">u2").tobytes()
        for r in range(len(block)):
            coset_of[raw[r * stride : (r + 1) * stride]] = idx
    assert len(reps) == P.order // foc.order

    out = []
    for li, chi in enumerate(table.characters):
        values = []
        for rep in reps:
            ci = quotient.class_index_of(to_q(rep))
            values.append(chi[ci])
        out.append(
            LinearCharacter(P, foc, table.conductor, coset_of, values, li)
        )
    assert len(out) == P.order // foc.order
    return out


def star_apply(
    lam: LinearCharacter, chi_row: int, B: Block, F: FusionSystem
) -> tuple[tuple, int]:
    """lambda * chi: the acted class function and its row in the table.

    The value at the class of g = u*s is lambda(u')*chi(g) for u' in P
    conjugate to u; where no conjugate exists, chi must vanish.
    """
    table = B.table
    G = table.group
    p = B.prime
    e = table.conductor
    chi = table.characters[chi_row]
    p_members = _p_elements_by_class(G, F.P)
    values = []
    for i, c in enumerate(table.classes):
        g = c.representative
        u, _ = g.pprime_decomposition(p)
        cands = p_members.get(G.class_index_of(u))
        if not cands:
            assert chi[i].is_zero(), (
                "block character must vanish off sections meeting P"
            )
            values.append(chi[i])
            continue
        lam_vals = {lam.value_of(x) for x in cands}
        if len(lam_vals) != 1:
            raise WellDefinednessError(
                "conjugates into P disagree on the linear character"
            )
        lv = lam_vals.pop().to_conductor(e)
        values.append(lv * chi[i])
    values = tuple(values)
    target = None
    for r in range(len(table.characters)):
        ip = table.inner_product(values, table.characters[r])
        if not ip.is_zero():
            assert ip == 1 and target is None, "acted character not irreducible"
            target = r
    assert target is not None
    assert target in B.member_rows, "star action left the block"
    # p-regular values are untouched
    for i, c in enumerate(table.classes):
        if c.representative.order() % p:
            assert values[i] == chi[i]
    return values, target


_p_members_cache: dict = {}


def _p_elements_by_class(G: PermGroup, P: PermGroup):
    """G-class index -> elements of P in that class."""
    # keep strong references in the entry: id() keys alone could be
    # reused after garbage collection and serve another group's data
    key = (id(G), id(P))
    hit = _p_members_cache.get(key)
    if hit is not None and hit[0] is G and hit[1] is P:
        return hit[2]
    out: dict = {}
    for row in P.elements_array().tolist():
        g = Perm(row)
        out.setdefault(G.class_index_of(g), []).append(g)
    _p_members_cache[key] = (G, P, out)
    return out


def star_orbits(B: Block, F: FusionSystem, lams=None) -> list[tuple[int, ...]]:
    """Orbits of the linear-character action on the height-zero rows.

    Every orbit has size |P:foc| (the action is free) and all members
    of an orbit share their degree.
    """
    if lams is None:
        from .fusion import focal_oracle, focal_subgroup

        foc = (
            focal_subgroup(F)
            if F.complete
            else focal_oracle(F.group, F.P)
        )
        lams = linear_characters_mod_focal(F.P, foc)
    hz = B.height_zero_rows()
    table = B.table
    orbits = []
    assigned = set()
    for row in hz:
        if row in assigned:
            continue
        orbit = set()
        for lam in lams:
            _, target = star_apply(lam, row, B, F)
            orbit.add(target)
        assert orbit <= set(hz), "orbit left the height-zero set"
        assert len(orbit) == len(lams), "action is not free on Irr_0"
        degs = {table.degrees[r] for r in orbit}
        assert len(degs) == 1, "orbit members must share their degree"
        assigned |= orbit
        orbits.append(tuple(sorted(orbit)))
    assert sum(len(o) for o in orbits) == len(hz)
    return orbits
