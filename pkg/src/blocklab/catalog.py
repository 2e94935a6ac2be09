"""Named permutation groups used by the command line and the test suite.

Builders cover cyclic, dihedral, symmetric, alternating, dicyclic and
direct-product constructions plus affine actions on finite vector
spaces.  The entry `remark14` realizes the order-34992 group
V : (A4 x C4) acting on the 729 vectors of a six-dimensional space over
the 3-element field; its matrices are hard-coded and re-verified
(faithful, irreducible) at build time (see scripts/ for the derivation).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import PermGroup
from .perm import Perm, parse_cycles

__all__ = ["CatalogEntry", "CATALOG", "build_catalog_entry", "catalog_names"]


# ----------------------------------------------------------------------
# builders


def cyclic(n: int) -> PermGroup:
    return PermGroup(n, [Perm.from_cycles(n, [list(range(n))])])


def symmetric(n: int) -> PermGroup:
    gens = [Perm.from_cycles(n, [list(range(n))])]
    if n >= 2:
        gens.append(Perm.from_cycles(n, [[0, 1]]))
    return PermGroup(n, gens)


def alternating(n: int) -> PermGroup:
    gens = [Perm.from_cycles(n, [[0, 1, 2]])]
    if n >= 4:
        cycle = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Perm.from_cycles(n, [cycle]))
    return PermGroup(n, gens)


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on an n-gon."""
    rot = Perm.from_cycles(n, [list(range(n))])
    refl = Perm([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, refl])


def dicyclic(m: int) -> PermGroup:
    """Dicyclic group of order 4m (quaternion when m is a power of 2).

    Two circles of length 2m: a rotates both, b sends circle one to
    circle two by negation and returns it shifted by m.
    """
    n = 4 * m
    a = Perm.from_cycles(n, [list(range(2 * m)), list(range(2 * m, 4 * m))])
    images = list(range(n))
    for i in range(2 * m):
        images[i] = 2 * m + (-i) % (2 * m)
        images[2 * m + i] = (m - i) % (2 * m)
    b = Perm(images)
    G = PermGroup(n, [a, b])
    assert G.order == 4 * m
    return G


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the two domains."""
    d = A.degree + B.degree
    gens = []
    for g in A.generators:
        gens.append(Perm(list(g.images) + list(range(A.degree, d))))
    for g in B.generators:
        gens.append(Perm(list(range(A.degree)) + [A.degree + i for i in g.images]))
    G = PermGroup(d, gens)
    assert G.order == A.order * B.order
    return G


def affine_group(p: int, matrices, translations=None) -> PermGroup:
    """Affine maps v -> Mv + t on the vectors of F_p^n, n from the matrices."""
    mats = [np.asarray(M, dtype=np.int64) % p for M in matrices]
    n = mats[0].shape[0]
    count = p**n
    weights = p ** np.arange(n)
    digits = np.array(
        [[(i // p**k) % p for k in range(n)] for i in range(count)],
        dtype=np.int64,
    )
    gens = []
    for M in mats:
        images = (digits @ M.T % p) @ weights
        gens.append(Perm(images.tolist()))
    if translations is None:
        translations = [np.eye(n, dtype=np.int64)[0]]
    for t in translations:
        images = ((digits + np.asarray(t, dtype=np.int64)) % p) @ weights
        gens.append(Perm(images.tolist()))
    return PermGroup(count, gens)


# ----------------------------------------------------------------------
# the order-34992 group of the counterexample

# A4 acting on the sum-zero part of its natural permutation module over
# F_3 (basis f_i = e_i - e_4), tensored with the rotation plane of C4.
_A4_ROTATION = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]  # image of (1,2,3)
_A4_DOUBLE = [[0, 1, 0], [1, 0, 0], [2, 2, 2]]  # image of (1,2)(3,4)
_C4_ROTATION = [[0, 2], [1, 0]]  # order-4 rotation, det 1


def _remark14_matrices():
    I3 = np.eye(3, dtype=np.int64)
    I2 = np.eye(2, dtype=np.int64)
    return [
        np.kron(np.array(_A4_ROTATION), I2) % 3,
        np.kron(np.array(_A4_DOUBLE), I2) % 3,
        np.kron(I3, np.array(_C4_ROTATION)) % 3,
    ]


def _spin_dimension(mats, start, p):
    """Dimension of the submodule generated by the start vector."""
    n = len(start)
    stack = [np.asarray(start, dtype=np.int64) % p]

    def reduce_against(v, rows):
        v = v.copy() % p
        for row in rows:
            lead = int(np.nonzero(row)[0][0])
            if v[lead]:
                v = (v - v[lead] * row) % p
        return v

    rows = []
    while stack:
        v = reduce_against(stack.pop(), rows)
        if not v.any():
            continue
        lead = int(np.nonzero(v)[0][0])
        v = v * pow(int(v[lead]), -1, p) % p
        rows.append(v)
        rows.sort(key=lambda r: int(np.nonzero(r)[0][0]))
        # re-echelonize fully
        for i in range(len(rows)):
            for j in range(len(rows)):
                if i != j:
                    lead_j = int(np.nonzero(rows[j])[0][0])
                    if rows[i][lead_j]:
                        rows[i] = (rows[i] - rows[i][lead_j] * rows[j]) % p
        rows = [r for r in rows if r.any()]
        for M in mats:
            stack.append(M @ v % p)
    return len(rows)


def _verify_remark14_module(mats, p=3):
    """The matrix group is A4 x C4 (order 48) acting irreducibly."""
    n = mats[0].shape[0]
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes()}
    frontier = [ident]
    while frontier:
        m = frontier.pop()
        for g in mats:
            w = g @ m % p
            key = w.tobytes()
            if key not in seen:
                seen.add(key)
                frontier.append(w)
    assert len(seen) == 48, "the action must be faithful on A4 x C4"
    for start in range(1, p**n):
        vec = [(start // p**k) % p for k in range(n)]
        assert _spin_dimension(mats, vec, p) == n, "module must be irreducible"


_remark14_cache = None


def remark14_group() -> PermGroup:
    """V : (A4 x C4) of order 34992 on the 729 vectors of V."""
    global _remark14_cache
    if _remark14_cache is not None:
        return _remark14_cache
    mats = _remark14_matrices()
    _verify_remark14_module(mats)
    G = affine_group(3, mats)
    assert G.order == 34992
    _remark14_cache = G
    return G


# ----------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: object
    order: int
    primes: tuple[int, ...]
    description: str


def _sl23() -> PermGroup:
    # SL(2,3) acting on the 8 nonzero vectors of F_3^2
    return PermGroup(
        8,
        [
            parse_cycles("(1,2,3,4)(5,6,7,8)", 8),
            parse_cycles("(1,7,3,5)(2,6,4,8)", 8),
            parse_cycles("(2,7,6)(4,5,8)", 8),
        ],
    )


def _f20() -> PermGroup:
    # AGL(1,5): x -> ax + b on the 5-element field
    return PermGroup(
        5, [parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,3,5,4)", 5)]
    )


CATALOG: dict[str, CatalogEntry] = {}


def _register(name, builder, order, primes, description):
    CATALOG[name] = CatalogEntry(name, builder, order, tuple(primes), description)


_register("c6", lambda: cyclic(6), 6, (2, 3), "cyclic of order 6")
_register("c12", lambda: cyclic(12), 12, (2, 3), "cyclic of order 12")
_register("v4", lambda: direct_product(cyclic(2), cyclic(2)), 4, (2,),
          "Klein four-group")
_register("s3", lambda: symmetric(3), 6, (2, 3), "symmetric group on 3 points")
_register("d8", lambda: dihedral(4), 8, (2,), "dihedral of order 8")
_register("q8", lambda: dicyclic(2), 8, (2,), "quaternion group")
_register("d10", lambda: dihedral(5), 10, (2, 5), "dihedral of order 10")
_register("d12", lambda: dihedral(6), 12, (2, 3), "dihedral of order 12")
_register("dicyclic12", lambda: dicyclic(3), 12, (2, 3), "dicyclic of order 12")
_register("a4", lambda: alternating(4), 12, (2, 3), "alternating group on 4 points")
_register("c3xc3", lambda: direct_product(cyclic(3), cyclic(3)), 9, (3,),
          "elementary abelian of order 9")
_register("s3xc3", lambda: direct_product(symmetric(3), cyclic(3)), 18, (2, 3),
          "S3 x C3")
_register("f20", _f20, 20, (2, 5), "Frobenius group of order 20")
_register("sl23", _sl23, 24, (2, 3), "SL(2,3) on the 8 nonzero vectors")
_register("s4", lambda: symmetric(4), 24, (2, 3), "symmetric group on 4 points")
_register("a4xc4", lambda: direct_product(alternating(4), cyclic(4)), 48, (2, 3),
          "A4 x C4, the acting group of remark14")
_register("a5", lambda: alternating(5), 60, (2, 3, 5), "alternating group on 5 points")
_register("s5", lambda: symmetric(5), 120, (2, 3, 5), "symmetric group on 5 points")
_register("s6", lambda: symmetric(6), 720, (3,), "symmetric group on 6 points")
_register("remark14", remark14_group, 34992, (3,),
          "V : (A4 x C4) of order 34992 on 729 points")


def build_catalog_entry(name: str) -> PermGroup:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}")
    entry = CATALOG[name]
    G = entry.builder()
    assert G.order == entry.order, (
        f"catalog entry {name}: expected order {entry.order}, got {G.order}"
    )
    return G


def catalog_names() -> list[str]:
    return list(CATALOG)
