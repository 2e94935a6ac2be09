"""Exact character tables: known degrees, orthogonality, structure constants."""

import pytest

from blocklab.chartab import class_mult_coefficients
from blocklab.cyclotomic import rational

KNOWN_DEGREES = {
    "s3": [1, 1, 2],
    "c6": [1, 1, 1, 1, 1, 1],
    "v4": [1, 1, 1, 1],
    "d8": [1, 1, 1, 1, 2],
    "q8": [1, 1, 1, 1, 2],
    "d10": [1, 1, 2, 2],
    "a4": [1, 1, 1, 3],
    "dicyclic12": [1, 1, 1, 1, 2, 2],
    "sl23": [1, 1, 1, 2, 2, 2, 3],
    "s4": [1, 1, 2, 3, 3],
    "f20": [1, 1, 1, 1, 4],
    "a5": [1, 3, 3, 4, 5],
    "s5": [1, 1, 4, 4, 5, 5, 6],
    "s6": [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16],
}


@pytest.mark.parametrize("name", sorted(KNOWN_DEGREES))
def test_known_degrees(name, table):
    t = table(name)
    assert sorted(t.degrees) == sorted(KNOWN_DEGREES[name])


@pytest.mark.parametrize("name", sorted(KNOWN_DEGREES))
def test_degree_sum_and_divisibility(name, table):
    t = table(name)
    n = t.group.order
    assert sum(d * d for d in t.degrees) == n
    assert all(n % d == 0 for d in t.degrees)
    assert t.degrees[t.trivial_index] == 1
    assert all(t.value(t.trivial_index, i) == 1 for i in range(len(t.classes)))


@pytest.mark.parametrize("name", sorted(KNOWN_DEGREES))
def test_orthogonality(name, table):
    assert table(name).verify_orthogonality()


@pytest.mark.parametrize("name", ["s3", "a5", "s4", "q8"])
def test_inner_products(name, table):
    t = table(name)
    k = len(t.classes)
    for i in range(len(t.characters)):
        for j in range(len(t.characters)):
            ip = t.inner_product(t.characters[i], t.characters[j])
            assert ip == (1 if i == j else 0)
    # regular character: |G| at identity, 0 elsewhere
    reg = tuple(
        rational(t.conductor, t.group.order if c.representative.order() == 1 else 0)
        for c in t.classes
    )
    for i in range(len(t.characters)):
        assert t.inner_product(reg, t.characters[i]) == t.degrees[i]


def test_permutation_character_s3(table):
    t = table("s3")
    # natural action fixed points on classes (id, 3-cycles, transpositions)
    fix = {1: 3, 3: 0, 2: 1}
    perm_char = tuple(
        rational(t.conductor, fix[c.representative.order()]) for c in t.classes
    )
    assert t.inner_product(perm_char, t.characters[t.trivial_index]) == 1


def test_s3_table_values(table):
    t = table("s3")
    rows = sorted(tuple(str(v) for v in row) for row in t.characters)
    assert rows == sorted([
        ("1", "1", "1"),
        ("1", "1", "-1"),
        ("2", "-1", "0"),
    ])


def test_central_character_s3(table):
    t = table("s3")
    deg2 = t.degrees.index(2)
    omega = t.central_character(deg2)
    # classes ordered (identity, 3-cycles, transpositions)
    assert [v for v in omega] == [1, -1, 0]
    triv = t.central_character(t.trivial_index)
    assert [v for v in triv] == [c.size for c in t.classes]


def test_class_mult_coefficients_s3(group, table):
    G = group("s3")
    t = table("s3")
    transp = next(
        i for i, c in enumerate(t.classes) if c.representative.order() == 2
    )
    threecyc = next(
        i for i, c in enumerate(t.classes) if c.representative.order() == 3
    )
    coeffs = class_mult_coefficients(G, transp, transp)
    assert coeffs[0] == 3  # identity appears |C| times
    assert coeffs[threecyc] == 3
    assert coeffs[transp] == 0


@pytest.mark.parametrize("name", ["s3", "a4", "s4"])
def test_class_mult_counting_identity(name, group, table):
    G = group(name)
    t = table(name)
    sizes = [c.size for c in t.classes]
    for i in range(len(sizes)):
        # identity row: a_{i 0 k} = delta_{ik} picks out C_i
        coeffs = class_mult_coefficients(G, i, 0)
        assert [c for c in coeffs] == [
            1 if k == i else 0 for k in range(len(sizes))
        ]
        for j in range(len(sizes)):
            coeffs = class_mult_coefficients(G, i, j)
            assert sum(a * s for a, s in zip(coeffs, sizes)) == sizes[i] * sizes[j]


def test_restriction_s3_to_a3(group, table):
    from blocklab.catalog import alternating
    from blocklab.chartab import character_table

    t = table("s3")
    A3 = alternating(3)
    tn = character_table(A3)
    deg2 = t.degrees.index(2)
    mults = t.decompose_restriction(t.characters[deg2], tn)
    # both nontrivial linear characters of A3, once each
    assert mults[tn.trivial_index] == 0
    assert sorted(mults) == [0, 1, 1]
    # trivial restricts to trivial
    mults = t.decompose_restriction(t.characters[t.trivial_index], tn)
    assert mults[tn.trivial_index] == 1 and sum(mults) == 1


def test_class_count_cap():
    import pytest as _pytest

    from blocklab.catalog import cyclic
    from blocklab.chartab import character_table
    from blocklab.group import CapacityError

    with _pytest.raises(CapacityError):
        character_table(cyclic(12), cap=5)
