"""Exact arithmetic in cyclotomic fields Q(zeta_e).

A value is a rational linear combination of 1, z, ..., z^(phi(e)-1)
where z = exp(2*pi*i/e): integer coefficient tuple plus a positive
integer denominator, always in lowest terms.  Character values and
central characters live here; nothing is ever evaluated in floating
point except for display.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd

from sympy import Poly, symbols, totient
from sympy.polys.specialpolys import cyclotomic_poly

__all__ = ["Cyc", "zeta", "rational", "reduction_table"]

_x = symbols("x")


@lru_cache(maxsize=None)
def reduction_table(e: int):
    """Coefficient vectors of z^j, 0 <= j <= 2e, in the power basis."""
    phi = int(totient(e))
    # monic Phi_e: x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
    coeffs = Poly(cyclotomic_poly(e, _x), _x).all_coeffs()[::-1]
    lower = [-int(c) for c in coeffs[:phi]]
    table = []
    current = [1] + [0] * (phi - 1) if phi > 0 else [1]
    for _ in range(2 * e + 1):
        table.append(tuple(current))
        # multiply by x and reduce the overflowing top coefficient
        top = current[phi - 1]
        current = [0] + current[:-1]
        if top:
            current = [c + top * l for c, l in zip(current, lower)]
    return phi, tuple(table)


class Cyc:
    """An element of Q(zeta_e) for a fixed conductor e."""

    __slots__ = ("conductor", "coeffs", "den")

    def __init__(self, conductor: int, coeffs, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi, _ = reduction_table(conductor)
        coeffs = list(coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coefficients, got {len(coeffs)}")
        if den < 0:
            den = -den
            coeffs = [-c for c in coeffs]
        g = den
        for c in coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            coeffs = [c // g for c in coeffs]
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Cyc is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_powers(cls, conductor: int, power_coeffs: dict, den: int = 1):
        """Build sum_k c_k * z^k from a {power: coefficient} mapping."""
        phi, table = reduction_table(conductor)
        acc = [0] * phi
        for k, c in power_coeffs.items():
            row = table[k % conductor]
            for i in range(phi):
                acc[i] += c * row[i]
        return cls(conductor, acc, den)

    def _check(self, other: "Cyc"):
        if self.conductor != other.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            other = rational(self.conductor, other)
        self._check(other)
        d = self.den * other.den // gcd(self.den, other.den)
        a = d // self.den
        b = d // other.den
        return Cyc(
            self.conductor,
            [a * x + b * y for x, y in zip(self.coeffs, other.coeffs)],
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.conductor, [-c for c in self.coeffs], self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = rational(self.conductor, other)
        return self + (-other)

    def __rsub__(self, other):
        return rational(self.conductor, other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyc(
                self.conductor, [other * c for c in self.coeffs], self.den
            )
        self._check(other)
        phi, table = reduction_table(self.conductor)
        prod = [0] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        acc = list(prod[:phi]) + [0] * max(0, phi - len(prod))
        for k in range(phi, len(prod)):
            c = prod[k]
            if c:
                row = table[k]
                for i in range(phi):
                    acc[i] += c * row[i]
        return Cyc(self.conductor, acc, self.den * other.den)

    __rmul__ = __mul__

    def divided_by(self, n: int) -> "Cyc":
        return Cyc(self.conductor, self.coeffs, self.den * n)

    # ------------------------------------------------------------------
    # structure

    def conjugate(self) -> "Cyc":
        """Complex conjugation, z -> z^(e-1)."""
        return self.galois(self.conductor - 1)

    def galois(self, t: int) -> "Cyc":
        """The automorphism z -> z^t; t must be coprime to the conductor."""
        e = self.conductor
        if gcd(t, e) != 1:
            raise ValueError(f"{t} is not coprime to the conductor {e}")
        return Cyc.from_powers(
            e,
            {(i * t) % e: c for i, c in enumerate(self.coeffs) if c},
            self.den,
        )

    def to_conductor(self, e: int) -> "Cyc":
        """Reinterpret in Q(zeta_e) for a multiple e of the conductor."""
        if e % self.conductor:
            raise ValueError(
                f"{e} is not a multiple of the conductor {self.conductor}"
            )
        k = e // self.conductor
        return Cyc.from_powers(
            e, {i * k: c for i, c in enumerate(self.coeffs) if c}, self.den
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def as_rational(self) -> tuple[int, int]:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0], self.den

    def norm_abs_squared(self) -> "Cyc":
        """|self|^2 = self * conj(self); rational for display diagnostics."""
        return self * self.conjugate()

    def complex_value(self) -> complex:
        """Floating-point value, for plots only."""
        e = self.conductor
        z = cmath.exp(2j * cmath.pi / e)
        return sum(c * z**i for i, c in enumerate(self.coeffs)) / self.den

    # ------------------------------------------------------------------
    # comparison and display

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.den == 1 and self.coeffs[0] == other
        return (
            isinstance(other, Cyc)
            and self.conductor == other.conductor
            and self.coeffs == other.coeffs
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.conductor, self.coeffs, self.den))

    def __repr__(self):
        return f"Cyc({self.conductor}, {self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                power = "z" if i == 1 else f"z^{i}"
                sign = "-" if c < 0 else ("+" if terms else "")
                terms.append(f"{sign}{mag}{power}")
        body = "".join(terms) if terms else "0"
        if self.den != 1:
            return f"({body})/{self.den}"
        return body


def zeta(e: int, k: int = 1) -> Cyc:
    """The root of unity z^k in Q(zeta_e)."""
    return Cyc.from_powers(e, {k % e: 1})


def rational(e: int, num: int, den: int = 1) -> Cyc:
    """The rational number num/den inside Q(zeta_e)."""
    return Cyc.from_powers(e, {0: num}, den)
