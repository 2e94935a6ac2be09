"""Finite permutation group engine.

Groups carry a stabilizer-chain backbone (deterministic incremental
Schreier-Sims).  Bulk element work (enumeration, conjugacy classes,
centralizers, normalizers) is vectorized with numpy; everything is
deterministic for fixed input, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .perm import Perm

__all__ = [
    "PermGroup",
    "ConjugacyClass",
    "CapacityError",
    "DomainError",
    "ELEMENT_ENUM_CAP",
    "SUBGROUP_ENUM_ORDER_CAP",
    "SUBGROUP_COUNT_CAP",
]

# Desk-scale capacity bounds.
ELEMENT_ENUM_CAP = 10**6
SUBGROUP_ENUM_ORDER_CAP = 10**5
SUBGROUP_COUNT_CAP = 20000
SUBGROUP_ENUM_WORK_CAP = 10**5


class CapacityError(RuntimeError):
    """A configured desk-scale bound was exceeded."""


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


@dataclass
class ConjugacyClass:
    """A conjugacy class with its minimal representative.

    power_map sends each prime divisor q of the representative's order to
    the index of the class containing representative**q.
    """

    representative: Perm
    size: int
    centralizer_order: int
    power_map: dict = field(default_factory=dict)
    rows: np.ndarray | None = None  # row indices into the parent's element table


class _Level:
    """One level of the stabilizer chain.

    ``gens`` holds every strong generator fixing all earlier base points,
    i.e. a generating set for this level's stabilizer subgroup.
    """

    __slots__ = ("point", "gens", "orbit", "transversal", "_sifted", "_expanded")

    def __init__(self, point):
        self.point = point
        self.gens = []
        self.orbit = [point]
        # point -> (u, u_inv) with u(level point) = point
        self.transversal = {point: (None, None)}
        self._sifted = {}  # gen index -> orbit positions already sifted
        self._expanded = {}  # orbit point -> number of gens already applied


class PermGroup:
    """A finite permutation group on 0..degree-1."""

    def __init__(self, degree: int, generators=()):
        if degree < 1:
            raise DomainError("degree must be positive")
        self.degree = degree
        self.generators = []
        self._levels: list[_Level] = []
        self._identity = Perm.identity(degree)
        self._elements = None
        self._elt_keys = None
        self._elt_index = None
        self._classes = None
        self._class_of_row = None
        for g in generators:
            if g.degree != degree:
                raise DomainError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
            self.add_generator(g)

    # ------------------------------------------------------------------
    # stabilizer chain

    @property
    def identity(self) -> Perm:
        return self._identity

    def add_generator(self, g: Perm):
        """Add a generator and restore the stabilizer chain invariants."""
        if self._elements is not None:
            raise RuntimeError("group is frozen after element enumeration")
        residue, level = self._strip(g, 0)
        if residue.is_identity():
            return
        self.generators.append(g)
        self._register(residue, level)
        self._rebuild()

    def _strip(self, g: Perm, level: int):
        for i in range(level, len(self._levels)):
            lvl = self._levels[i]
            beta = g(lvl.point)
            if beta == lvl.point:
                continue
            if beta not in lvl.transversal:
                return g, i
            _, u_inv = lvl.transversal[beta]
            g = u_inv * g
        return g, len(self._levels)

    def _register(self, g: Perm, level: int):
        """Record g, which fixes the first `level` base points, as a strong
        generator on every level it belongs to."""
        if level == len(self._levels):
            for pt, image in enumerate(g.images):
                if image != pt:
                    self._levels.append(_Level(pt))
                    break
            else:
                return
        for i in range(level + 1):
            self._levels[i].gens.append(g)

    def _rebuild(self):
        """Sweep levels bottom-up until every Schreier generator sifts."""
        while True:
            inserted = False
            for i in range(len(self._levels) - 1, -1, -1):
                if self._process_level(i):
                    inserted = True
                    break
            if not inserted:
                return

    def _extend_orbit(self, lvl: _Level):
        pos = 0
        while pos < len(lvl.orbit):
            alpha = lvl.orbit[pos]
            done = lvl._expanded.get(alpha, 0)
            if done < len(lvl.gens):
                u_alpha, _ = lvl.transversal[alpha]
                for g in lvl.gens[done:]:
                    beta = g(alpha)
                    if beta not in lvl.transversal:
                        u = g * u_alpha if u_alpha is not None else g
                        lvl.transversal[beta] = (u, u.inverse())
                        lvl.orbit.append(beta)
                lvl._expanded[alpha] = len(lvl.gens)
            pos += 1

    def _process_level(self, level: int) -> bool:
        """Extend the orbit and sift fresh Schreier generators at `level`.

        Transversal entries are never rewritten, so Schreier pairs sifted
        earlier remain valid.  Returns True if any strong generator was
        inserted anywhere below.
        """
        lvl = self._levels[level]
        while True:
            self._extend_orbit(lvl)
            progressed = False
            for gi in range(len(lvl.gens)):
                done = lvl._sifted.get(gi, 0)
                if done >= len(lvl.orbit):
                    continue
                g = lvl.gens[gi]
                for pos in range(done, len(lvl.orbit)):
                    alpha = lvl.orbit[pos]
                    u_alpha, _ = lvl.transversal[alpha]
                    x = g * u_alpha if u_alpha is not None else g
                    _, u_inv = lvl.transversal[x(lvl.point)]
                    schreier = u_inv * x if u_inv is not None else x
                    residue, drop = self._strip(schreier, level + 1)
                    if not residue.is_identity():
                        # Hand control back so deeper levels absorb the new
                        # strong generator before this level keeps sifting;
                        # otherwise the same residue re-registers forever.
                        lvl._sifted[gi] = pos
                        self._register(residue, drop)
                        return True
                lvl._sifted[gi] = len(lvl.orbit)
                progressed = True
            if not progressed:
                return False

    @property
    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.orbit)
        return n

    def __contains__(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self._strip(g, 0)
        return residue.is_identity()

    def __le__(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return self.order == other.order and self <= other

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, ())

    @classmethod
    def from_elements(cls, degree: int, elements) -> "PermGroup":
        """Group generated by (typically: consisting of) the given elements."""
        group = cls(degree, ())
        for g in elements:
            if g not in group:
                group.add_generator(g)
        return group

    # ------------------------------------------------------------------
    # element enumeration

    def _require_elements(self, cap: int = ELEMENT_ENUM_CAP):
        if self._elements is not None:
            return
        n = self.order
        if n > cap:
            raise CapacityError(
                f"group order {n} exceeds the element enumeration bound {cap}"
            )
        elems = np.arange(self.degree, dtype=np.int32).reshape(1, -1)
        for lvl in reversed(self._levels):
            blocks = []
            for pt in lvl.orbit:
                u, _ = lvl.transversal[pt]
                if u is None:
                    blocks.append(elems)
                else:
                    u_arr = np.asarray(u.images, dtype=np.int32)
                    blocks.append(u_arr[elems])
            elems = np.concatenate(blocks, axis=0)
        self._elements = elems
        wide = elems.astype(">u2")
        raw = wide.tobytes()
        stride = 2 * self.degree
        keys = [raw[i * stride : (i + 1) * stride] for i in range(len(elems))]
        self._elt_keys = keys
        self._elt_index = {k: i for i, k in enumerate(keys)}

    def elements_array(self, cap: int = ELEMENT_ENUM_CAP) -> np.ndarray:
        """All elements as an (order x degree) image table."""
        self._require_elements(cap)
        return self._elements

    def elements(self, cap: int = ELEMENT_ENUM_CAP):
        """All elements as Perm objects, in enumeration order."""
        return [Perm(row) for row in self.elements_array(cap).tolist()]

    def _key_of(self, g: Perm) -> bytes:
        return np.asarray(g.images, dtype=">u2").tobytes()

    def row_of(self, g: Perm) -> int:
        self._require_elements()
        try:
            return self._elt_index[self._key_of(g)]
        except KeyError:
            raise DomainError("element does not belong to the group") from None

    # ------------------------------------------------------------------
    # conjugacy classes

    def conjugacy_classes(self, cap: int = ELEMENT_ENUM_CAP) -> list[ConjugacyClass]:
        """Conjugacy classes: identity class first, then by (size, min rep)."""
        if self._classes is not None:
            return self._classes
        self._require_elements(cap)
        elems = self._elements
        keys = self._elt_keys
        index = self._elt_index
        n_elems = len(elems)
        class_of = np.full(n_elems, -1, dtype=np.int32)
        gen_pairs = []
        for g in self.generators:
            g_arr = np.asarray(g.images, dtype=np.int32)
            ginv_arr = np.asarray(g.inverse().images, dtype=np.int32)
            gen_pairs.append((g_arr, ginv_arr))
        # Deterministic sweep order: lexicographically sorted elements.
        sweep = sorted(range(n_elems), key=keys.__getitem__)
        raw_classes = []
        for start in sweep:
            if class_of[start] >= 0:
                continue
            cid = len(raw_classes)
            class_of[start] = cid
            members = [start]
            frontier = np.array([start], dtype=np.int64)
            while len(frontier):
                rows = elems[frontier]
                new = []
                for g_arr, ginv_arr in gen_pairs:
                    conj = ginv_arr[rows[:, g_arr]]
                    wide = conj.astype(">u2")
                    raw = wide.tobytes()
                    stride = 2 * self.degree
                    for i in range(len(conj)):
                        row = index[raw[i * stride : (i + 1) * stride]]
                        if class_of[row] < 0:
                            class_of[row] = cid
                            new.append(row)
                members.extend(new)
                frontier = np.array(new, dtype=np.int64)
            raw_classes.append((start, np.array(sorted(members), dtype=np.int64)))
        order = self.order
        identity_key = self._key_of(self._identity)

        def sort_key(entry):
            rep_row, members = entry
            rep_key = keys[rep_row]
            if rep_key == identity_key:
                return (0, 0, b"")
            return (1, len(members), rep_key)

        raw_classes.sort(key=sort_key)
        classes = []
        for rep_row, members in raw_classes:
            rep = Perm(elems[rep_row].tolist())
            size = len(members)
            classes.append(
                ConjugacyClass(
                    representative=rep,
                    size=size,
                    centralizer_order=order // size,
                    rows=members,
                )
            )
        final_of = np.empty(n_elems, dtype=np.int32)
        for new_cid, (rep_row, members) in enumerate(raw_classes):
            final_of[members] = new_cid
        self._class_of_row = final_of
        self._classes = classes
        for cls_ in classes:
            m = cls_.representative.order()
            q = 2
            mm = m
            primes = []
            while q * q <= mm:
                if mm % q == 0:
                    primes.append(q)
                    while mm % q == 0:
                        mm //= q
                q += 1
            if mm > 1:
                primes.append(mm)
            for q in primes:
                cls_.power_map[q] = self.class_index_of(cls_.representative**q)
        assert sum(c.size for c in classes) == order
        return classes

    def class_index_of(self, g: Perm) -> int:
        """Index of the conjugacy class containing g."""
        if self._classes is None:
            self.conjugacy_classes()
        return int(self._class_of_row[self.row_of(g)])

    def exponent(self) -> int:
        e = 1
        for c in self.conjugacy_classes():
            m = c.representative.order()
            e = e * m // gcd(e, m)
        return e

    # ------------------------------------------------------------------
    # standard subgroups

    def centralizer(self, x: Perm) -> "PermGroup":
        """Centralizer of an element of the group."""
        if x not in self:
            raise DomainError("element not in group")
        self._require_elements()
        elems = self._elements
        x_arr = np.asarray(x.images, dtype=np.int32)
        mask = np.all(x_arr[elems] == elems[:, x_arr], axis=1)
        rows = np.nonzero(mask)[0]
        return PermGroup.from_elements(
            self.degree, (Perm(elems[r].tolist()) for r in rows)
        )

    def centralizer_subgroup(self, H: "PermGroup") -> "PermGroup":
        """Centralizer of a subgroup H of this group."""
        if not H <= self:
            raise DomainError("H is not a subgroup")
        self._require_elements()
        elems = self._elements
        mask = np.ones(len(elems), dtype=bool)
        for x in H.generators:
            x_arr = np.asarray(x.images, dtype=np.int32)
            mask &= np.all(x_arr[elems] == elems[:, x_arr], axis=1)
        rows = np.nonzero(mask)[0]
        return PermGroup.from_elements(
            self.degree, (Perm(elems[r].tolist()) for r in rows)
        )

    def normalizer(self, H: "PermGroup") -> "PermGroup":
        """Normalizer of a subgroup H of this group."""
        if not H <= self:
            raise DomainError("H is not a subgroup")
        self._require_elements()
        elems = self._elements
        inv = np.argsort(elems, axis=1).astype(np.int32)
        h_keys = set(H._all_keys())
        stride = 2 * self.degree
        mask = np.ones(len(elems), dtype=bool)
        for s in H.generators:
            s_arr = np.asarray(s.images, dtype=np.int32)
            w = s_arr[elems]  # rows of s o g
            conj = np.take_along_axis(inv, w, axis=1)  # g^-1 s g
            raw = conj.astype(">u2").tobytes()
            for i in np.nonzero(mask)[0]:
                if raw[i * stride : (i + 1) * stride] not in h_keys:
                    mask[i] = False
        rows = np.nonzero(mask)[0]
        return PermGroup.from_elements(
            self.degree, (Perm(elems[r].tolist()) for r in rows)
        )

    def _all_keys(self):
        self._require_elements()
        return self._elt_keys

    def sylow_subgroup(self, p: int) -> "PermGroup":
        """A Sylow p-subgroup, grown inside iterated normalizers."""
        order = self.order
        pp = 1
        while order % p == 0:
            order //= p
            pp *= p
        S = PermGroup.trivial(self.degree)
        if pp == 1:
            return S
        while S.order < pp:
            N = self if S.order == 1 else self.normalizer(S)
            for g in self._iter_perms(N):
                u, _ = g.pprime_decomposition(p)
                if not u.is_identity() and u not in S:
                    S = PermGroup(self.degree, S.generators + [u])
                    break
            else:  # pragma: no cover - impossible while S is not Sylow
                raise RuntimeError("no extending p-element found")
        assert S.order == pp
        return S

    @staticmethod
    def _iter_perms(group: "PermGroup"):
        for row in group.elements_array().tolist():
            yield Perm(row)

    def normal_closure(self, seeds) -> "PermGroup":
        """Normal closure in this group of the subgroup generated by seeds."""
        closure = PermGroup(self.degree, ())
        frontier = []
        for s in seeds:
            if s not in closure:
                closure.add_generator(s)
                frontier.append(s)
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                c = x.conjugate(g)
                if c not in closure:
                    closure.add_generator(c)
                    frontier.append(c)
        return closure

    def derived_subgroup(self) -> "PermGroup":
        comms = []
        for a in self.generators:
            for b in self.generators:
                comms.append(a.inverse() * b.inverse() * a * b)
        return self.normal_closure(comms)

    def o_upper_p(self, p: int) -> "PermGroup":
        """O^p: the subgroup generated by all elements of order prime to p."""
        seeds = []
        for c in self.conjugacy_classes():
            _, s = c.representative.pprime_decomposition(p)
            if not s.is_identity():
                seeds.append(s)
        n = self.normal_closure(seeds)
        quotient = self.order // n.order
        while quotient % p == 0:
            quotient //= p
        assert quotient == 1, "O^p quotient must be a p-group"
        return n

    def is_p_nilpotent(self, p: int) -> bool:
        """True iff the p'-elements number |G| / |G|_p (normal p-complement)."""
        order = self.order
        pp = 1
        while order % p == 0:
            order //= p
            pp *= p
        count = sum(
            c.size for c in self.conjugacy_classes() if c.representative.order() % p
        )
        return count == self.order // pp

    def is_abelian(self) -> bool:
        return all(
            a * b == b * a for a in self.generators for b in self.generators
        )

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def intersection(self, other: "PermGroup") -> "PermGroup":
        """Subgroup intersection by filtering the smaller group's elements."""
        small, big = (self, other) if self.order <= other.order else (other, self)
        small._require_elements()
        return PermGroup.from_elements(
            self.degree,
            (g for g in self._iter_perms(small) if g in big),
        )

    def derived_series_reaches_trivial(self, max_steps: int = 40) -> bool:
        """True iff the group is solvable."""
        g = self
        for _ in range(max_steps):
            if g.order == 1:
                return True
            d = g.derived_subgroup()
            if d.order == g.order:
                return False
            g = d
        return False

    # ------------------------------------------------------------------
    # quotients and subgroup enumeration

    def coset_action(self, N: "PermGroup"):
        """Permutation action on right cosets of a normal subgroup N.

        Returns (Q, to_quotient) where Q is the image group of degree
        |G:N| and to_quotient maps an element of G to its permutation
        of the cosets.
        """
        if not N <= self:
            raise DomainError("N is not a subgroup")
        n_arr = N.elements_array()
        stride = 2 * self.degree
        key_to_index = {}
        reps = []

        def add_coset(rep: Perm) -> int:
            idx = len(reps)
            reps.append(rep)
            rows = n_arr[:, np.asarray(rep.images, dtype=np.int32)]
            raw = rows.astype(">u2").tobytes()
            for r in range(len(rows)):
                key_to_index[raw[r * stride : (r + 1) * stride]] = idx
            return idx

        add_coset(self._identity)
        pos = 0
        while pos < len(reps):
            r = reps[pos]
            for g in self.generators:
                cand = r * g
                if self._key_of(cand) not in key_to_index:
                    add_coset(cand)
            pos += 1
        n_cosets = len(reps)
        assert n_cosets == self.order // N.order

        def to_quotient(u: Perm) -> Perm:
            images = [key_to_index[self._key_of(r * u)] for r in reps]
            return Perm(images)

        Q = PermGroup(max(n_cosets, 1), [to_quotient(g) for g in self.generators])
        return Q, to_quotient

    def subgroup_classes(self, cap: int = SUBGROUP_COUNT_CAP) -> list["PermGroup"]:
        """Representatives of conjugacy classes of subgroups of a p-group.

        Exhaustive cyclic-extension enumeration; restricted to p-groups,
        which is all the fusion machinery needs.
        """
        order = self.order
        if order > SUBGROUP_ENUM_ORDER_CAP:
            raise CapacityError(
                f"group order {order} exceeds the subgroup enumeration bound "
                f"{SUBGROUP_ENUM_ORDER_CAP}"
            )
        # closure computations scale with order * degree; refuse up front
        # rather than churning toward the subgroup-count cap
        if order * self.degree > SUBGROUP_ENUM_WORK_CAP:
            raise CapacityError(
                f"subgroup enumeration work bound exceeded: "
                f"order {order} * degree {self.degree} > {SUBGROUP_ENUM_WORK_CAP}"
            )
        p = None
        n = order
        for q in range(2, n + 1):
            if n % q == 0:
                p = q
                break
        if p is not None and not self.is_p_group(p):
            raise DomainError("subgroup enumeration is only supported for p-groups")
        self._require_elements()
        perms = {self._key_of(g): g for g in self._iter_perms(self)}
        id_key = self._key_of(self._identity)

        def close_set(base_keys: frozenset, extra: Perm):
            """Element set of <base, extra>, or None when it exceeds order."""
            elems = dict.fromkeys(base_keys)
            elems[self._key_of(extra)] = None
            frontier = list(elems)
            gens = [perms[k] for k in base_keys if k != id_key] + [extra]
            while frontier:
                k = frontier.pop()
                x = perms[k]
                for g in gens:
                    y = x * g
                    yk = self._key_of(y)
                    if yk not in elems:
                        elems[yk] = None
                        frontier.append(yk)
                        if len(elems) > order:  # pragma: no cover
                            return None
            return frozenset(elems)

        trivial = frozenset([id_key])
        layers = [[trivial]]
        seen = {trivial}
        all_subgroups = [trivial]
        gen_of = {trivial: []}
        # layer 1: cyclic subgroups of order p
        layer = []
        for key, g in perms.items():
            if g.order() == p:
                sub = frozenset(self._key_of(g**k) for k in range(p))
                if sub not in seen:
                    seen.add(sub)
                    layer.append(sub)
                    all_subgroups.append(sub)
                    gen_of[sub] = [g]
        layers.append(sorted(layer, key=sorted))
        size = p
        while size < order:
            next_layer = []
            for sub in layers[-1]:
                sub_gens = gen_of[sub]
                # candidates normalize sub and drop into it under p-th power
                for key, x in perms.items():
                    if key in sub:
                        continue
                    if self._key_of(x**p) not in sub:
                        continue
                    if any(
                        self._key_of(h.conjugate(x)) not in sub for h in sub_gens
                    ):
                        continue
                    bigger = close_set(sub, x)
                    if bigger is None or len(bigger) != size * p:
                        continue
                    if bigger not in seen:
                        seen.add(bigger)
                        next_layer.append(bigger)
                        all_subgroups.append(bigger)
                        gen_of[bigger] = sub_gens + [x]
                        if len(all_subgroups) > cap:
                            raise CapacityError(
                                f"subgroup count exceeds the cap {cap}"
                            )
            layers.append(sorted(next_layer, key=sorted))
            size *= p
        # fold into conjugacy classes under this group
        gen_list = self.generators
        assigned = set()
        reps = []
        for sub in sorted(all_subgroups, key=lambda s: (len(s), sorted(s))):
            if sub in assigned:
                continue
            orbit = {sub}
            frontier = [sub]
            while frontier:
                cur = frontier.pop()
                for g in gen_list:
                    image = frozenset(
                        self._key_of(perms[k].conjugate(g)) for k in cur
                    )
                    if image not in orbit:
                        orbit.add(image)
                        frontier.append(image)
            assigned |= orbit
            reps.append(sub)
        return [
            PermGroup.from_elements(self.degree, (perms[k] for k in sorted(sub)))
            for sub in reps
        ]
