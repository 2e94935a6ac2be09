"""Permutations on the points 0..n-1.

Permutations are immutable and hashable.  Points are 0-based in memory;
the 1-based convention of cycle strings in group files is handled by
``parse_cycles`` / ``format_cycles`` at the I/O boundary.
"""

from __future__ import annotations

import re
from math import gcd

__all__ = [
    "Perm",
    "parse_cycles",
    "format_cycles",
    "MalformedPermutation",
]


class MalformedPermutation(ValueError):
    """Raised when an image array is not a bijection on [0, n)."""


class Perm:
    """A permutation of 0..n-1, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                raise MalformedPermutation(f"not a bijection on [0, {n}): {images!r}")
            seen[i] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Perm":
        """Build a permutation of degree n from a list of cycles (0-based)."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (self * other)(x) = self(other(x))."""
        o = other.images
        s = self.images
        return Perm(s[o[x]] for x in range(len(s)))

    def inverse(self) -> "Perm":
        images = self.images
        inv = [0] * len(images)
        for i, j in enumerate(images):
            inv[j] = i
        return Perm(inv)

    def __invert__(self) -> "Perm":
        return self.inverse()

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        result = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Perm") -> "Perm":
        """Return g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        """Order as the lcm of cycle lengths."""
        n = 1
        for cycle in self.cycles():
            k = len(cycle)
            n = n * k // gcd(n, k)
        return n

    def cycles(self):
        """Nontrivial cycles, each starting at its minimal point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def pprime_decomposition(self, p: int) -> tuple["Perm", "Perm"]:
        """Split into commuting p-part u and p'-part s with u*s = self.

        Exponents come from the CRT decomposition of the element order.
        """
        m = self.order()
        a = 0
        while m % p == 0:
            m //= p
            a += 1
        pa = p**a
        # u = x^(m' * inv(m') mod p^a), s = x^(p^a * inv(p^a) mod m')
        if pa == 1:
            return Perm.identity(self.degree), self
        if m == 1:
            return self, Perm.identity(self.degree)
        u = self ** (m * pow(m, -1, pa))
        s = self ** (pa * pow(pa, -1, m))
        return u, s

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __repr__(self):
        return f"Perm({format_cycles(self)!r}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse a 1-based cycle string like "(1,2,3)(4,5)" into a Perm.

    Whitespace is insignificant.  "()" and the empty string denote the
    identity.
    """
    stripped = text.strip()
    consumed = 0
    cycles = []
    for match in _CYCLE_RE.finditer(stripped):
        if stripped[consumed : match.start()].strip():
            raise MalformedPermutation(f"unparsable cycle string {text!r}")
        consumed = match.end()
        body = match.group(1)
        if not body:
            continue
        points = [int(t) - 1 for t in re.split(r"\s*,\s*", body.strip())]
        if any(not 0 <= pt < degree for pt in points):
            raise MalformedPermutation(
                f"point out of range 1..{degree} in {text!r}"
            )
        if len(set(points)) != len(points):
            raise MalformedPermutation(f"repeated point in cycle {text!r}")
        cycles.append(points)
    if stripped[consumed:].strip():
        raise MalformedPermutation(f"unparsable cycle string {text!r}")
    flat = [pt for cycle in cycles for pt in cycle]
    if len(set(flat)) != len(flat):
        raise MalformedPermutation(f"cycles are not disjoint in {text!r}")
    return Perm.from_cycles(degree, cycles)


def format_cycles(perm: Perm) -> str:
    """Format as a 1-based cycle string; the identity renders as "()"."""
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(pt + 1) for pt in c) + ")" for c in cycles)
