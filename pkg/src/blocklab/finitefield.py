"""Finite fields GF(p^m) and reduction of cyclotomic integers mod p.

The field is presented as F_p[x]/(f) for the lexicographically least
irreducible factor f of the e'-th cyclotomic polynomial mod p, where e'
is the p'-part of the relevant conductor.  That choice pins down one
prime above p, so every reduction in a run is through the same map and
"equal reduced values" is well defined.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from sympy import GF as _sympy_GF
from sympy import Poly, symbols
from sympy.polys.specialpolys import cyclotomic_poly

from .cyclotomic import Cyc

__all__ = ["FiniteField", "ReductionMap", "multiplicative_order"]

_x = symbols("x")

FIELD_SIZE_CAP = 2**20


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k = 1
    v = a % n
    while v != 1:
        v = v * a % n
        k += 1
    return k


@lru_cache(maxsize=None)
def _field_data(p: int, eprime: int):
    """Modulus and degree for the standard presentation of GF(p^m).

    m is the order of p modulo e'; the modulus is the lexicographically
    least (by coefficient tuple) irreducible degree-m factor of Phi_e'
    mod p.
    """
    m = multiplicative_order(p, eprime)
    poly = Poly(cyclotomic_poly(eprime, _x), _x, domain=_sympy_GF(p))
    factors = [f for f, _ in poly.factor_list()[1]]
    candidates = []
    for f in factors:
        coeffs = tuple(int(c) % p for c in f.all_coeffs())
        candidates.append(coeffs)
    chosen = min(candidates)
    assert len(chosen) == m + 1
    return m, chosen


class FiniteField:
    """GF(p^m) with log/exp multiplication tables.

    Elements are integer codes in [0, p^m): the base-p encoding of the
    coefficient vector of a residue, least significant digit first.
    """

    def __init__(self, p: int, eprime: int):
        if eprime % p == 0:
            raise ValueError("e' must be prime to p")
        self.p = p
        self.eprime = eprime
        m, modulus = _field_data(p, eprime)
        self.degree = m
        self.modulus = modulus  # monic, highest degree first
        self.size = p**m
        if self.size > FIELD_SIZE_CAP:
            raise ValueError(f"field size {self.size} exceeds {FIELD_SIZE_CAP}")
        self._build_tables()

    def _coeffs_of(self, code: int):
        p = self.p
        out = []
        for _ in range(self.degree):
            out.append(code % p)
            code //= p
        return out

    def _code_of(self, coeffs) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def _mul_poly(self, a: int, b: int) -> int:
        p = self.p
        m = self.degree
        ca = self._coeffs_of(a)
        cb = self._coeffs_of(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        mod_low = [(-int(c)) % p for c in self.modulus[1:][::-1]]  # x^m = sum
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, l in enumerate(mod_low):
                    prod[k - m + i] = (prod[k - m + i] + c * l) % p
        return self._code_of(prod[:m])

    def _build_tables(self):
        size = self.size
        # x mod f is a root of a factor of Phi_e', so it has order e'.
        self.root = (
            self._root_of_linear() if self.degree == 1 else self._code_of([0, 1])
        )
        # find a multiplicative generator deterministically
        target = size - 1
        gen = None
        for cand in range(1, size):
            if self._element_order(cand, target) == target:
                gen = cand
                break
        assert gen is not None
        log = [0] * size
        exp = [0] * target
        v = 1
        for k in range(target):
            exp[k] = v
            log[v] = k
            v = self._mul_poly(v, gen)
        assert v == 1
        self._log = log
        self._exp = exp
        self.generator = gen

    def _root_of_linear(self) -> int:
        # degree 1: modulus x - r, the root is r
        return (-self.modulus[1]) % self.p

    def _element_order(self, a: int, bound: int) -> int:
        k = 1
        v = a
        while v != 1:
            v = self._mul_poly(v, a)
            k += 1
            if k > bound:
                break
        return k

    # ------------------------------------------------------------------
    # arithmetic on codes

    def add(self, a: int, b: int) -> int:
        p = self.p
        return self._code_of(
            [(x + y) % p for x, y in zip(self._coeffs_of(a), self._coeffs_of(b))]
        )

    def neg(self, a: int) -> int:
        p = self.p
        return self._code_of([(-x) % p for x in self._coeffs_of(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n <= 0:
                raise ZeroDivisionError
            return 0
        return self._exp[(self._log[a] * n) % (self.size - 1)]

    def embed_int(self, n: int) -> int:
        return self._code_of([n % self.p])

    def root_power(self, k: int) -> int:
        """The k-th power of the chosen root of unity of order e'."""
        if self.eprime == 1:
            return self.embed_int(1)
        return self.pow(self.root, k % self.eprime)


class ReductionMap:
    """Ring homomorphism from p-local cyclotomic values to GF(p^m).

    For conductor e = p^a * e' it sends every p-power root of unity to 1
    and zeta_e to w-th power of the chosen root of order e', where
    w = (p^a)^(-1) mod e'.  Values whose denominator is divisible by p
    are outside the domain.
    """

    def __init__(self, p: int, conductor: int):
        self.p = p
        self.conductor = conductor
        eprime = conductor
        pa = 1
        while eprime % p == 0:
            eprime //= p
            pa *= p
        self.eprime = eprime
        self.field = FiniteField(p, eprime)
        self.weight = pow(pa, -1, eprime) if eprime > 1 else 0

    def __call__(self, value: Cyc) -> int:
        if value.conductor != self.conductor:
            raise ValueError(
                f"conductor mismatch: {value.conductor} vs {self.conductor}"
            )
        if value.den % self.p == 0:
            raise ValueError(f"denominator {value.den} is divisible by {self.p}")
        F = self.field
        acc = 0
        for i, c in enumerate(value.coeffs):
            if c:
                term = F.mul(
                    F.embed_int(c), F.root_power(self.weight * i)
                )
                acc = F.add(acc, term)
        if value.den != 1:
            acc = F.mul(acc, F.inv(F.embed_int(value.den)))
        return acc
