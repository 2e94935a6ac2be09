"""Finite fields and the cyclotomic-to-modular reduction map."""

import pytest
from hypothesis import given, settings, strategies as st

from blocklab.cyclotomic import rational, zeta
from blocklab.finitefield import FiniteField, ReductionMap, multiplicative_order


def test_multiplicative_order():
    assert multiplicative_order(2, 3) == 2
    assert multiplicative_order(7, 8) == 2
    assert multiplicative_order(3, 8) == 2
    assert multiplicative_order(2, 7) == 3


def test_field_degrees_match_spec():
    # e = 3, p = 2: x^2+x+1 irreducible mod 2
    assert ReductionMap(2, 3).field.degree == 2
    # e = 4, p = 2: e' = 1, m = 1
    rm = ReductionMap(2, 4)
    assert rm.eprime == 1 and rm.field.degree == 1
    # e = 8, p = 7: e' = 8, m = 2
    rm = ReductionMap(7, 8)
    assert rm.eprime == 8 and rm.field.degree == 2


@pytest.mark.parametrize("p,eprime", [(2, 3), (3, 4), (2, 15), (5, 12), (7, 8)])
def test_field_axioms(p, eprime):
    F = FiniteField(p, eprime)
    elems = list(range(min(F.size, 30)))
    for a in elems:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == F.embed_int(1)
        for b in elems[:10]:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems[:5]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,eprime", [(2, 3), (3, 4), (2, 15), (7, 8)])
def test_frobenius(p, eprime):
    F = FiniteField(p, eprime)
    for a in range(min(F.size, 40)):
        for b in range(min(F.size, 20)):
            assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))
            assert F.pow(F.mul(a, b), p) == F.mul(F.pow(a, p), F.pow(b, p))


def test_root_has_order_eprime():
    F = FiniteField(3, 8)
    r = F.root
    seen = set()
    x = F.embed_int(1)
    for _ in range(8):
        x = F.mul(x, r)
        seen.add(x)
    assert x == F.embed_int(1)
    assert len(seen) == 8


def test_reduction_examples():
    # integer 6, p = 3 -> 0
    rm = ReductionMap(3, 1)
    assert rm(rational(1, 6)) == 0
    # zeta_3 + zeta_3^2 = -1 -> 1 mod 2
    rm = ReductionMap(2, 3)
    assert rm(zeta(3, 1) + zeta(3, 2)) == rm.field.embed_int(1)
    # zeta_4 -> a square root of -1 in F_9
    rm = ReductionMap(3, 4)
    i = rm(zeta(4, 1))
    F = rm.field
    assert F.mul(i, i) == F.neg(F.embed_int(1))


def test_p_power_roots_collapse():
    rm = ReductionMap(2, 4)
    assert rm(zeta(4, 1)) == rm.field.embed_int(1)
    rm = ReductionMap(3, 9)
    assert rm(zeta(9, 1)) == rm.field.embed_int(1)


def test_p_in_denominator_rejected():
    rm = ReductionMap(2, 3)
    with pytest.raises(ValueError):
        rm(rational(3, 1, 2))


cyc12 = st.builds(
    lambda powers, c: sum((zeta(12, k % 12) for k in powers), rational(12, c)),
    st.lists(st.integers(min_value=0, max_value=11), max_size=4),
    st.integers(min_value=-6, max_value=6),
)


@settings(max_examples=60)
@given(cyc12, cyc12)
def test_reduction_is_ring_homomorphism(a, b):
    rm = ReductionMap(5, 12)
    F = rm.field
    assert rm(a + b) == F.add(rm(a), rm(b))
    assert rm(a * b) == F.mul(rm(a), rm(b))


def test_reduction_integer_roundtrip():
    rm = ReductionMap(7, 1)
    for n in range(-10, 11):
        assert rm(rational(1, n)) == rm.field.embed_int(n % 7)
