"""Derive the 6-dimensional module behind the catalog entry `remark14`.

The catalog hard-codes three 6x6 matrices over the 3-element field
generating a faithful irreducible action of A4 x C4.  This script
re-derives them from first principles so the hard-coded values can be
audited: A4 acts on the sum-zero quotient of its natural permutation
module (basis f_i = e_i - e_4), C4 acts by a rotation of the plane, and
the module is the tensor product.  Run from the repository root:

    python3 scripts/derive_remark14_module.py
"""

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blocklab.catalog import (  # noqa: E402
    _remark14_matrices,
    _verify_remark14_module,
    affine_group,
)

P = 3


def perm_matrix_on_sum_zero(perm4):
    """Matrix of a permutation of {0,1,2,3} on span(f_i = e_i - e_3).

    The image of f_i is e_{perm(i)} - e_{perm(3)} = f_{perm(i)} - f_{perm(3)}
    where f_3 denotes the zero vector.
    """
    M = np.zeros((3, 3), dtype=np.int64)
    for i in range(3):
        a, b = perm4[i], perm4[3]
        if a < 3:
            M[a, i] += 1
        if b < 3:
            M[b, i] -= 1
    return M % P


def main():
    # A4 generators: the 3-cycle (0,1,2) and the double transposition (0,1)(2,3)
    rot3 = perm_matrix_on_sum_zero([1, 2, 0, 3])
    double = perm_matrix_on_sum_zero([1, 0, 3, 2])
    # C4: rotation of the plane by a quarter turn
    rot4 = np.array([[0, -1], [1, 0]], dtype=np.int64) % P

    I3 = np.eye(3, dtype=np.int64)
    I2 = np.eye(2, dtype=np.int64)
    derived = [
        np.kron(rot3, I2) % P,
        np.kron(double, I2) % P,
        np.kron(I3, rot4) % P,
    ]

    hard_coded = _remark14_matrices()
    for name, d, h in zip(("A4 3-cycle", "A4 double", "C4 rotation"),
                          derived, hard_coded):
        match = np.array_equal(d, h)
        print(f"{name}: derived == hard-coded: {match}")
        print(d)
        assert match

    _verify_remark14_module(derived)
    print("matrix group order 48 (faithful) and module irreducible: verified")

    G = affine_group(P, derived)
    print(f"affine group order: {G.order}")
    assert G.order == 34992
    print("all checks passed")


if __name__ == "__main__":
    main()
