"""Fusion systems of blocks on their defect groups.

Principal blocks get plain group fusion (conjugation inside G); general
blocks get Brauer-pair fusion: block idempotents of centralizer algebras
mod p, the Brauer homomorphism as support truncation, and containment of
pairs along chains of normal inclusions.  Focal and hyperfocal subgroups
are generated from the recorded automorphism groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import Block, block_partition
from .chartab import CharacterTable, character_table, class_mult_coefficients
from .finitefield import ReductionMap
from .group import CapacityError, DomainError, PermGroup
from .perm import Perm

__all__ = [
    "FusionSystem",
    "CentralElement",
    "IncompleteFusionError",
    "block_idempotents_mod_p",
    "brauer_homomorphism",
    "group_fusion_system",
    "block_fusion_system",
    "focal_subgroup",
    "hyperfocal_subgroup",
    "is_nilpotent_fusion",
    "direct_factor_check",
    "focal_oracle",
    "hyperfocal_oracle",
    "commutator_subgroup",
    "IDEMPOTENT_ORDER_CAP",
]

IDEMPOTENT_ORDER_CAP = 5000


class IncompleteFusionError(RuntimeError):
    """Raised when an operation needs a fully enumerated fusion system."""


# ----------------------------------------------------------------------
# central elements of kH (class functions on conjugacy classes)


class CentralElement:
    """A central element of the mod-p group algebra of a subgroup H.

    Stored as one field element per conjugacy class of H (the support
    coefficient, constant on classes).
    """

    __slots__ = ("group", "field", "coeffs")

    def __init__(self, group: PermGroup, field, coeffs):
        self.group = group
        self.field = field
        self.coeffs = tuple(coeffs)

    def __eq__(self, other):
        # class ordering is deterministic, so equal groups (possibly
        # distinct instances) yield directly comparable coefficients
        return (
            isinstance(other, CentralElement)
            and (self.group is other.group or self.group.same_group(other.group))
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return self.coeffs

    def conjugate_by(self, g: Perm) -> "CentralElement":
        """g^-1 * self * g; g must normalize the subgroup."""
        group = self.group
        out = []
        for c in group.conjugacy_classes():
            moved = g * c.representative * g.inverse()
            out.append(self.coeffs[group.class_index_of(moved)])
        return CentralElement(group, self.field, out)

    def mul(self, other: "CentralElement") -> "CentralElement":
        assert self.group is other.group or self.group.same_group(other.group)
        F = self.field
        classes = self.group.conjugacy_classes()
        k = len(classes)
        acc = [0] * k
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y == 0:
                    continue
                xy = F.mul(x, y)
                for kk, a in enumerate(class_mult_coefficients(self.group, i, j)):
                    if a:
                        acc[kk] = F.add(acc[kk], F.mul(xy, F.embed_int(a)))
        return CentralElement(self.group, F, acc)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def block_idempotents_mod_p(H: PermGroup, p: int) -> list[tuple[CentralElement, int]]:
    """Block idempotents of kH, one per p-block, with the block index.

    The idempotent of a block b is the reduction of
    sum_{chi in b} (chi(1)/|H|) sum_g chi(g^-1) g, supported on
    p-regular classes.
    """
    if H.order > IDEMPOTENT_ORDER_CAP:
        raise CapacityError(
            f"group order {H.order} exceeds the idempotent bound "
            f"{IDEMPOTENT_ORDER_CAP}"
        )
    table = _cached_table(H)
    return _idempotents_from_table(table, p)


def _idempotents_from_table(table: CharacterTable, p: int):
    H = table.group
    rm = ReductionMap(p, table.conductor)
    blocks = block_partition(table, p)
    out = []
    for bi, b in enumerate(blocks):
        coeffs = []
        for i, c in enumerate(table.classes):
            inv = table.inverse_class(i)
            acc = None
            for row in b.member_rows:
                term = table.characters[row][inv] * table.degrees[row]
                acc = term if acc is None else acc + term
            val = rm(acc.divided_by(H.order))
            if c.representative.order() % p == 0:
                assert val == 0, "idempotent support must be p-regular"
            coeffs.append(val)
        out.append((CentralElement(H, rm.field, coeffs), bi))
    # the idempotents sum to 1 (indicator of the identity class)
    F = out[0][0].field
    total = [0] * len(table.classes)
    for e, _ in out:
        total = [F.add(a, b) for a, b in zip(total, e.coeffs)]
    assert total[0] == F.embed_int(1) and all(c == 0 for c in total[1:])
    return out


def brauer_homomorphism(z: CentralElement, H_target: PermGroup) -> CentralElement:
    """Support truncation of z to a centralizer subgroup inside z's group.

    Every class of the target must consist of elements of z's group;
    the coefficient of a target class is z's coefficient on the class
    containing it.
    """
    src = z.group
    out = []
    for c in H_target.conjugacy_classes():
        if c.representative not in src:
            raise DomainError("target class representative outside the source")
        out.append(z.coeffs[src.class_index_of(c.representative)])
    return CentralElement(H_target, z.field, out)


# ----------------------------------------------------------------------
# fusion systems


@dataclass
class FusionSystem:
    """Automorphism data of a fusion system on a p-group P.

    For each P-conjugacy class of subgroups Q: the ordered nonidentity
    elements of Q, the group Aut_F(Q) as permutations of those
    elements, and one conjugating witness per recorded generator.
    """

    group: PermGroup
    prime: int
    P: PermGroup
    subgroup_reps: list
    element_lists: list  # per rep: sorted nonidentity elements of Q
    aut_groups: list  # per rep: PermGroup on positions of element_lists
    aut_witnesses: list  # per rep: list of witnesses g, aligned with generators
    complete: bool
    kind: str  # "group" or "block"

    def rep_index_of(self, Q: PermGroup) -> int:
        for i, R in enumerate(self.subgroup_reps):
            if R.same_group(Q):
                return i
        raise DomainError("subgroup is not one of the stored representatives")


def _sorted_elements(Q: PermGroup) -> list[Perm]:
    elems = [Perm(row) for row in Q.elements_array().tolist()]
    nonident = [g for g in elems if not g.is_identity()]
    nonident.sort(key=lambda g: g.images)
    return nonident


def _aut_perm(elt_list, positions, g: Perm) -> Perm:
    """Permutation of positions induced by u -> g^-1 u g."""
    images = [positions[u.conjugate(g).images] for u in elt_list]
    return Perm(images)


def _aut_group_from(elt_list, witnesses_src) -> tuple[PermGroup, list[Perm]]:
    n = max(len(elt_list), 1)
    positions = {u.images: i for i, u in enumerate(elt_list)}
    aut = PermGroup(n, ())
    witnesses = []
    for g in witnesses_src:
        if not elt_list:
            break
        phi = _aut_perm(elt_list, positions, g)
        before = len(aut.generators)
        aut.add_generator(phi)
        if len(aut.generators) > before:
            witnesses.append(g)
    return aut, witnesses


def group_fusion_system(
    G: PermGroup, P: PermGroup, cap: int | None = None
) -> FusionSystem:
    """Fusion system of G on the p-subgroup P by plain conjugation.

    Aut_F(Q) is the image of N_G(Q) in the automorphisms of Q.  When
    subgroup enumeration exceeds its cap the system is returned with
    complete = False and no subgroup data.
    """
    p = _p_of(P)
    try:
        reps = P.subgroup_classes() if cap is None else P.subgroup_classes(cap)
    except CapacityError:
        return FusionSystem(G, p, P, [], [], [], [], False, "group")
    element_lists = []
    aut_groups = []
    aut_witnesses = []
    for Q in reps:
        elt_list = _sorted_elements(Q)
        N = G.normalizer(Q)
        aut, wit = _aut_group_from(elt_list, N.generators)
        element_lists.append(elt_list)
        aut_groups.append(aut)
        aut_witnesses.append(wit)
    return FusionSystem(
        G, p, P, reps, element_lists, aut_groups, aut_witnesses, True, "group"
    )


def _p_of(P: PermGroup) -> int:
    n = P.order
    if n == 1:
        raise DomainError("cannot infer the prime from a trivial group")
    for q in range(2, n + 1):
        if n % q == 0:
            if not P.is_p_group(q):
                raise DomainError("P is not a p-group")
            return q
    raise AssertionError  # pragma: no cover


_table_cache: dict = {}


def _cached_table(H: PermGroup) -> CharacterTable:
    sig = (H.degree, tuple(sorted(H._all_keys())))
    if sig not in _table_cache:
        _table_cache[sig] = character_table(H)
    return _table_cache[sig]


def _canonical(H: PermGroup) -> PermGroup:
    """The cached instance of H, so repeated work shares class data."""
    return _cached_table(H).group


def _normalizer_chain(P: PermGroup, Q: PermGroup) -> list[PermGroup]:
    """Subnormal chain Q = Q_0 < Q_1 < ... < P via iterated normalizers."""
    chain = [Q]
    current = Q
    while current.order < P.order:
        nxt = P.normalizer(current)
        assert nxt.order > current.order, "normalizers must grow in a p-group"
        chain.append(nxt)
        current = nxt
    return chain


def _block_element(B: Block) -> CentralElement:
    """The reduced block idempotent of B as a central element of kG."""
    table = B.table
    rm = B.reduction
    G = table.group
    coeffs = []
    for i in range(len(table.classes)):
        inv = table.inverse_class(i)
        acc = None
        for row in B.member_rows:
            term = table.characters[row][inv] * table.degrees[row]
            acc = term if acc is None else acc + term
        coeffs.append(rm(acc.divided_by(G.order)))
    return CentralElement(G, rm.field, coeffs)


def block_fusion_system(
    G: PermGroup, B: Block, cap: int | None = None
) -> FusionSystem:
    """Fusion system of the block B on its defect group via Brauer pairs.

    A maximal pair (P, e_P) is fixed deterministically; each subgroup
    class representative Q receives the unique e_Q with
    (Q, e_Q) <= (P, e_P), reached through a chain of normal pair
    containments; Aut_F(Q) is the image of the pair normalizer
    N_G(Q, e_Q).
    """
    p = B.prime
    P = B.defect_group
    if P.order == 1:
        triv = PermGroup.trivial(G.degree)
        one = PermGroup(1, ())
        return FusionSystem(
            G, p, triv, [triv], [[]], [one], [[]], True, "block"
        )
    try:
        reps = P.subgroup_classes() if cap is None else P.subgroup_classes(cap)
    except CapacityError:
        return FusionSystem(G, p, P, [], [], [], [], False, "block")

    b_G = _block_element(B)
    pair_idempotents = _pair_idempotent_resolver(G, B, P, b_G)

    element_lists = []
    aut_groups = []
    aut_witnesses = []
    for Q in reps:
        e_Q = pair_idempotents(Q)
        elt_list = _sorted_elements(Q)
        N = G.normalizer(Q)
        stab = _pair_normalizer(N, e_Q)
        aut, wit = _aut_group_from(elt_list, stab.generators)
        element_lists.append(elt_list)
        aut_groups.append(aut)
        aut_witnesses.append(wit)
    return FusionSystem(
        G, p, P, reps, element_lists, aut_groups, aut_witnesses, True, "block"
    )


def _pair_normalizer(N: PermGroup, e_Q: CentralElement) -> PermGroup:
    """Subgroup of N fixing the idempotent under conjugation."""
    keep = []
    for g in N._iter_perms(N):
        if e_Q.conjugate_by(g) == e_Q:
            keep.append(g)
    return PermGroup.from_elements(N.degree, keep)


def _pair_idempotent_resolver(G, B, P, b_G):
    """Returns Q -> e_Q with (Q, e_Q) <= (P, e_P) for the fixed maximal pair."""
    idem_cache: dict = {}

    def idempotents_of(H: PermGroup):
        sig = tuple(sorted(H._all_keys()))
        if sig not in idem_cache:
            idem_cache[sig] = block_idempotents_mod_p(H, B.prime)
        return idem_cache[sig]

    def centralizer_of(Q: PermGroup) -> PermGroup:
        return _canonical(G.centralizer_subgroup(Q))

    # maximal pair: lexicographically least e with Br_P(b) e = e
    C_P = centralizer_of(P)
    br_b = brauer_homomorphism(b_G, C_P)
    candidates = [
        e for e, _ in idempotents_of(C_P) if br_b.mul(e) == e
    ]
    assert candidates, "Br_P(b) kills every block of kC_G(P)"
    e_P = min(candidates, key=CentralElement.sort_key)

    resolved: dict = {}

    def resolve(Q: PermGroup) -> CentralElement:
        sig = tuple(sorted(Q._all_keys()))
        if sig in resolved:
            return resolved[sig]
        if Q.order == P.order:
            resolved[sig] = e_P
            return e_P
        chain = _normalizer_chain(P, Q)
        e_upper = resolve(chain[1])
        upper = chain[1]
        C_Q = centralizer_of(Q)
        C_upper = e_upper.group
        found = []
        for f, _ in idempotents_of(C_Q):
            if any(
                f.conjugate_by(r) != f for r in upper.generators
            ):
                continue
            if brauer_homomorphism(f, C_upper).mul(e_upper) == e_upper:
                found.append(f)
        assert len(found) == 1, (
            f"expected a unique contained idempotent, found {len(found)}"
        )
        resolved[sig] = found[0]
        return found[0]

    return resolve


# ----------------------------------------------------------------------
# focal and hyperfocal subgroups


def _commutator_generators(F: FusionSystem, use_op: bool):
    """Elements phi(u)u^-1 over all recorded (or O^p) automorphisms."""
    gens = []
    for Q, elt_list, aut in zip(
        F.subgroup_reps, F.element_lists, F.aut_groups
    ):
        if not elt_list:
            continue
        source = aut.o_upper_p(F.prime) if use_op else aut
        for phi in source.generators:
            for pos, u in enumerate(elt_list):
                v = elt_list[phi(pos)]
                w = v * u.inverse()
                if not w.is_identity():
                    gens.append(w)
    return gens


def focal_subgroup(F: FusionSystem) -> PermGroup:
    """foc(F) = < phi(u)u^-1 : Q <= P, phi in Aut_F(Q), u in Q >."""
    if not F.complete:
        raise IncompleteFusionError(
            "fusion system was truncated; use the principal-block oracles"
        )
    gens = _commutator_generators(F, use_op=False)
    foc = PermGroup(F.P.degree, ())
    for g in gens:
        if g not in foc:
            foc.add_generator(g)
    # cross-check the mirrored generating set u^-1 phi(u)
    mirror = PermGroup(F.P.degree, ())
    for g in gens:
        if g.inverse() not in mirror:
            mirror.add_generator(g.inverse())
    assert foc.same_group(mirror)
    return foc


def hyperfocal_subgroup(F: FusionSystem) -> PermGroup:
    """hyp(F) = < phi(u)u^-1 : phi in O^p(Aut_F(Q)), u in Q >."""
    if not F.complete:
        raise IncompleteFusionError(
            "fusion system was truncated; use the principal-block oracles"
        )
    gens = _commutator_generators(F, use_op=True)
    hyp = PermGroup(F.P.degree, ())
    for g in gens:
        if g not in hyp:
            hyp.add_generator(g)
    return hyp


def is_nilpotent_fusion(F: FusionSystem) -> bool:
    """True iff every Aut_F(Q) is a p-group (the system is F_P(P))."""
    if not F.complete:
        raise IncompleteFusionError(
            "fusion system was truncated; use the principal-block oracles"
        )
    flag = all(aut.is_p_group(F.prime) for aut in F.aut_groups)
    assert flag == (hyperfocal_subgroup(F).order == 1)
    return flag


def focal_oracle(G: PermGroup, P: PermGroup) -> PermGroup:
    """P intersect G' (the focal subgroup theorem, principal block)."""
    return P.intersection(G.derived_subgroup())


def hyperfocal_oracle(G: PermGroup, P: PermGroup, p: int) -> PermGroup:
    """P intersect O^p(G) (the hyperfocal subgroup theorem)."""
    return P.intersection(G.o_upper_p(p))


def commutator_subgroup(U: PermGroup, S: PermGroup) -> PermGroup:
    """[U, S] for U <= S: normal closure in S of generator commutators."""
    comms = []
    for u in U.generators:
        for s in S.generators:
            comms.append(u.inverse() * s.inverse() * u * s)
    return S.normal_closure(comms)


def direct_factor_check(S: PermGroup, U: PermGroup) -> bool:
    """Is U/[U,S] a direct factor of S/[U,S]?

    U must be normal in S.  In the quotient by W = [U,S] the image of U
    is central, so any subgroup meeting it trivially with complementary
    order is a normal complement.
    """
    if U.order == 1 or U.order == S.order:
        return True
    W = commutator_subgroup(U, S)
    Q, to_q = S.coset_action(W)
    Ubar = PermGroup(Q.degree, [to_q(u) for u in U.generators])
    if Ubar.order == 1 or Ubar.order == Q.order:
        return True
    for T in Q.subgroup_classes():
        if (
            T.order * Ubar.order == Q.order
            and T.intersection(Ubar).order == 1
        ):
            return True
    return False
