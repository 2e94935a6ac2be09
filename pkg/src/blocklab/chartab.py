"""Exact ordinary character tables via eigenvalue splitting mod q.

The class algebra of G is diagonalized over a prime field F_q with
q = 1 mod exp(G) and q > 2*sqrt(|G|), which is large enough to read off
degrees and character values unambiguously; the values are then lifted
exactly into Q(zeta_exp(G)) through the discrete Fourier formula for
eigenvalue multiplicities.  No floating point anywhere.
"""

from __future__ import annotations

import numpy as np
from sympy import isprime, primitive_root
from sympy.ntheory.residue_ntheory import sqrt_mod

from .cyclotomic import Cyc, rational
from .group import CapacityError, PermGroup

__all__ = [
    "CharacterTable",
    "character_table",
    "class_mult_coefficients",
    "CLASS_COUNT_CAP",
]

CLASS_COUNT_CAP = 300


# ----------------------------------------------------------------------
# linear algebra over F_q (dense, int64; q^2 * dim must fit in int64)


def _rref(mat: np.ndarray, q: int):
    """Row-reduce mat mod q in place; returns pivot column list."""
    mat %= q
    rows, cols = mat.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if mat[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        mat[r] = mat[r] * pow(int(mat[r, c]), -1, q) % q
        for i in range(rows):
            if i != r and mat[i, c]:
                mat[i] = (mat[i] - mat[i, c] * mat[r]) % q
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _nullspace(mat: np.ndarray, q: int) -> np.ndarray:
    """Columns spanning the right nullspace of mat over F_q."""
    work = mat.copy() % q
    pivots = _rref(work, q)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[fc, idx] = 1
        for r, pc in enumerate(pivots):
            basis[pc, idx] = (-work[r, fc]) % q
    return basis


def _solve_in_span(B: np.ndarray, C: np.ndarray, q: int) -> np.ndarray:
    """Solve B X = C mod q where the columns of B are independent."""
    k, d = B.shape
    aug = np.concatenate([B, C], axis=1).astype(np.int64)
    pivots = _rref(aug, q)
    assert pivots[:d] == list(range(d)), "basis columns are not independent"
    X = aug[:d, d:].copy()
    assert not np.any(aug[d:, d:] % q), "C is not in the span of B"
    return X


def _charpoly(mat: np.ndarray, q: int) -> np.ndarray:
    """Characteristic polynomial mod q, low degree first (Hessenberg)."""
    H = mat.copy() % q
    n = H.shape[0]
    for c in range(n - 2):
        piv = None
        for r in range(c + 1, n):
            if H[r, c]:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            H[[c + 1, piv]] = H[[piv, c + 1]]
            H[:, [c + 1, piv]] = H[:, [piv, c + 1]]
        inv = pow(int(H[c + 1, c]), -1, q)
        for r in range(c + 2, n):
            if H[r, c]:
                factor = H[r, c] * inv % q
                H[r] = (H[r] - factor * H[c + 1]) % q
                H[:, c + 1] = (H[:, c + 1] + factor * H[:, r]) % q
    # p_0 = 1; p_i = charpoly of leading i x i block
    polys = [np.array([1], dtype=np.int64)]
    for i in range(1, n + 1):
        # p_i = (x - H[i-1,i-1]) p_{i-1} - sum_j (prod of subdiag) H[j-1,i-1] p_{j-1}
        prev = polys[i - 1]
        term = np.zeros(i + 1, dtype=np.int64)
        term[1:] += prev
        term[:-1] -= H[i - 1, i - 1] * prev
        beta = 1
        for j in range(i - 1, 0, -1):
            beta = beta * H[j, j - 1] % q
            if H[j - 1, i - 1] and beta:
                coeff = beta * H[j - 1, i - 1] % q
                term[: j] -= coeff * polys[j - 1]
        polys.append(term % q)
    return polys[n]


def _poly_roots(coeffs: np.ndarray, q: int) -> list[int]:
    """All roots in F_q of a polynomial given low degree first."""
    xs = np.arange(q, dtype=np.int64)
    vals = np.zeros(q, dtype=np.int64)
    for c in coeffs[::-1]:
        vals = (vals * xs + int(c)) % q
    return [int(r) for r in np.nonzero(vals == 0)[0]]


# ----------------------------------------------------------------------


def _admissible_moduli(order: int, exponent: int):
    """Primes q = 1 mod exp with q > 2*sqrt(|G|) and q not dividing |G|."""
    bound = 1
    while bound * bound <= 4 * order:
        bound += 1
    q = exponent + 1
    while True:
        if q > bound and isprime(q) and order % q:
            yield q
        q += exponent


class CharacterTable:
    """The ordinary character table of a finite permutation group.

    Rows are irreducible characters (trivial character first, then by
    degree and value key); columns follow the group's conjugacy class
    order.  Values are exact cyclotomics with conductor exp(G).
    """

    def __init__(self, group: PermGroup, characters, conductor: int):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.conductor = conductor
        self.characters = characters  # list of tuples of Cyc
        self.degrees = [chi[0].as_integer() for chi in characters]
        self._inverse_class = None

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def trivial_index(self) -> int:
        return 0

    def value(self, chi_index: int, class_index: int) -> Cyc:
        return self.characters[chi_index][class_index]

    def inverse_class(self, class_index: int) -> int:
        if self._inverse_class is None:
            self._inverse_class = [
                self.group.class_index_of(c.representative.inverse())
                for c in self.classes
            ]
        return self._inverse_class[class_index]

    def inner_product(self, chi, psi) -> Cyc:
        """<chi, psi> = (1/|G|) sum |C| chi(g) conj(psi(g)); exact."""
        acc = rational(self.conductor, 0)
        for i, c in enumerate(self.classes):
            term = chi[i] * psi[self.inverse_class(i)]
            acc = acc + term * c.size
        return acc.divided_by(self.group.order)

    def central_character(self, chi_index: int):
        """omega(C) = |C| chi(g_C) / chi(1) per class; algebraic integers."""
        chi = self.characters[chi_index]
        deg = self.degrees[chi_index]
        out = []
        for i, c in enumerate(self.classes):
            w = (chi[i] * c.size).divided_by(deg)
            assert w.den == 1, "central character must be an algebraic integer"
            out.append(w)
        return tuple(out)

    def verify_orthogonality(self) -> bool:
        """First and second orthogonality relations, exactly."""
        k = self.n_classes
        order = self.group.order
        for a in range(k):
            for b in range(a, k):
                ip = self.inner_product(self.characters[a], self.characters[b])
                expect = 1 if a == b else 0
                if not (ip.is_integer() and ip.as_integer() == expect):
                    return False
        for i in range(k):
            for j in range(i, k):
                acc = rational(self.conductor, 0)
                jj = self.inverse_class(j)
                for chi in self.characters:
                    acc = acc + chi[i] * chi[jj]
                expect = order // self.classes[i].size if i == j else 0
                if not (acc.is_integer() and acc.as_integer() == expect):
                    return False
        return True

    def restrict(self, chi, subgroup_table: "CharacterTable"):
        """Values of a character of G on the classes of a subgroup."""
        out = []
        for c in subgroup_table.classes:
            idx = self.group.class_index_of(c.representative)
            out.append(chi[idx])
        return tuple(out)

    def decompose_restriction(self, chi, subgroup_table: "CharacterTable"):
        """Multiplicities of the subgroup's irreducibles in chi|_H."""
        e = self.conductor
        assert e % subgroup_table.conductor == 0
        restricted = self.restrict(chi, subgroup_table)
        mults = []
        for psi in subgroup_table.characters:
            psi_up = tuple(v.to_conductor(e) for v in psi)
            acc = rational(e, 0)
            for i, c in enumerate(subgroup_table.classes):
                j = subgroup_table.inverse_class(i)
                acc = acc + restricted[i] * psi_up[j] * c.size
            ip = acc.divided_by(subgroup_table.group.order)
            assert ip.is_integer(), "restriction multiplicity must be integral"
            mults.append(ip.as_integer())
        return mults


def character_table(group: PermGroup, cap: int = CLASS_COUNT_CAP) -> CharacterTable:
    """Compute the ordinary character table of the group.

    Tried over a deterministic sequence of admissible lifting primes; a
    split failure at one prime (never observed, kept for robustness)
    falls through to the next.
    """
    classes = group.conjugacy_classes()
    k = len(classes)
    if k > cap:
        raise CapacityError(f"class count {k} exceeds the bound {cap}")
    moduli = _admissible_moduli(group.order, group.exponent())
    last_error = None
    for _ in range(5):
        q = next(moduli)
        try:
            return _character_table_mod(group, q)
        except AssertionError as exc:  # pragma: no cover - retry path
            last_error = exc
    raise RuntimeError(  # pragma: no cover
        f"character table did not split after 5 moduli: {last_error}"
    )


def _character_table_mod(group: PermGroup, q: int) -> CharacterTable:
    classes = group.conjugacy_classes()
    k = len(classes)
    order = group.order
    e = group.exponent()

    elems = group.elements_array()
    class_of = group._class_of_row
    sizes = np.array([c.size for c in classes], dtype=np.int64)
    stride = 2 * group.degree
    index = group._elt_index

    def class_matrix(j: int) -> np.ndarray:
        """(A_j)_{ik} = structure constant a_{jik} of Cbar_j Cbar_i."""
        u = classes[j].representative
        u_arr = np.asarray(u.images, dtype=np.int32)
        prods = u_arr[elems]
        raw = prods.astype(">u2").tobytes()
        prod_class = np.fromiter(
            (
                class_of[index[raw[r * stride : (r + 1) * stride]]]
                for r in range(len(elems))
            ),
            dtype=np.int64,
            count=len(elems),
        )
        counts = np.bincount(
            class_of.astype(np.int64) * k + prod_class, minlength=k * k
        ).reshape(k, k)
        # counts[i, kk] = #{x in C_i : u_j x in C_kk} = a_{jik}|C_kk|/|C_j|
        num = counts * int(classes[j].size)
        A = num // sizes[np.newaxis, :]
        assert np.all(A * sizes[np.newaxis, :] == num), "structure constants"
        return A % q

    # split F_q^k into common eigenspaces of the class matrices
    full = np.eye(k, dtype=np.int64)
    spaces = [full]
    for j in range(1, k):
        if all(s.shape[1] == 1 for s in spaces):
            break
        A = class_matrix(j)
        new_spaces = []
        for B in spaces:
            d = B.shape[1]
            if d == 1:
                new_spaces.append(B)
                continue
            M = _solve_in_span(B, A @ B % q, q)
            roots = _poly_roots(_charpoly(M, q), q)
            if len(roots) == 1:
                new_spaces.append(B)
                continue
            for lam in sorted(roots):
                shifted = (M - lam * np.eye(d, dtype=np.int64)) % q
                ns = _nullspace(shifted, q)
                assert ns.shape[1] >= 1
                new_spaces.append(B @ ns % q)
        assert sum(s.shape[1] for s in new_spaces) == k
        spaces = new_spaces
    assert all(s.shape[1] == 1 for s in spaces), "class algebra did not split"

    # normalize eigenvectors to central characters (value 1 at the identity)
    omegas = []
    for B in spaces:
        w = B[:, 0] % q
        assert w[0] % q != 0, "eigenvector vanishes on the identity class"
        w = w * pow(int(w[0]), -1, q) % q
        omegas.append(w)

    inv_class = [
        group.class_index_of(c.representative.inverse()) for c in classes
    ]
    inv_sizes = [pow(int(s), -1, q) for s in sizes]

    # degrees from the first orthogonality relation
    degrees = []
    for w in omegas:
        s = 0
        for i in range(k):
            s = (s + w[i] * w[inv_class[i]] * inv_sizes[i]) % q
        d_sq = order % q * pow(int(s), -1, q) % q
        root = sqrt_mod(d_sq, q, all_roots=True)
        assert root, "degree squared is not a square mod q"
        small = [int(r) for r in root if 0 < int(r) < q / 2]
        assert len(small) == 1, "ambiguous degree lift"
        degrees.append(small[0])
    assert sum(d * d for d in degrees) == order, "degree sum check failed"

    # power classes pc[i][t] = class of rep_i^t for the Fourier lift
    pc = []
    for c in classes:
        rep = c.representative
        row = [0] * e
        cur = group.identity
        for t in range(e):
            row[t] = group.class_index_of(cur)
            cur = cur * rep
        pc.append(row)

    z = pow(primitive_root(q), (q - 1) // e, q)
    z_pows = [pow(z, t, q) for t in range(e)]
    z_inv_pows = [pow(z, -t % (q - 1), q) for t in range(e)]
    e_inv = pow(e, -1, q)

    characters = []
    for w, d in zip(omegas, degrees):
        # chi(g_i) mod q, then lift via eigenvalue multiplicities
        vals_q = [(d * int(w[i]) % q) * inv_sizes[i] % q for i in range(k)]
        values = []
        for i in range(k):
            powers = {}
            for s in range(e):
                m = 0
                for t in range(e):
                    m += vals_q[pc[i][t]] * z_inv_pows[s * t % e]
                m = m % q * e_inv % q
                assert m <= d, "multiplicity lift out of range"
                if m:
                    powers[s] = m
            values.append(Cyc.from_powers(e, powers))
        assert values[0].as_integer() == d
        characters.append(tuple(values))

    # deterministic row order: trivial first, then by degree and value key
    def row_key(chi):
        vals = chi[1]
        if all(v == 1 for v in vals):
            return (0, 0, ())
        return (1, chi[0], tuple((v.coeffs, v.den) for v in vals))

    indexed = sorted(zip(degrees, characters), key=row_key)
    assert all(v == 1 for v in indexed[0][1]), "trivial character missing"
    return CharacterTable(group, [chi for _, chi in indexed], e)


def class_mult_coefficients(group: PermGroup, i: int, j: int) -> list[int]:
    """Structure constants a_{ij.}: Cbar_i Cbar_j = sum_k a_{ijk} Cbar_k.

    a_{ijk} counts pairs (x, y) in C_i x C_j with xy equal to a fixed
    element of C_k.
    """
    classes = group.conjugacy_classes()
    k = len(classes)
    elems = group.elements_array()
    class_of = group._class_of_row
    stride = 2 * group.degree
    index = group._elt_index
    u_arr = np.asarray(classes[i].representative.images, dtype=np.int32)
    rows = elems[classes[j].rows]
    prods = u_arr[rows]
    raw = prods.astype(">u2").tobytes()
    counts = np.bincount(
        np.fromiter(
            (
                class_of[index[raw[r * stride : (r + 1) * stride]]]
                for r in range(len(rows))
            ),
            dtype=np.int64,
            count=len(rows),
        ),
        minlength=k,
    )
    # counts[kk] = #{y in C_j : x_i0 y in C_kk} = a_{ijk}|C_kk|/|C_i|
    out = []
    for kk in range(k):
        num = int(counts[kk]) * classes[i].size
        assert num % classes[kk].size == 0
        out.append(num // classes[kk].size)
    return out
