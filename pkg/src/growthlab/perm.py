"""Permutations of {0, ..., d-1} as immutable image tuples.

Composition is left-to-right: ``(p * q)(x) == q(p(x))``, i.e. ``p`` acts
first.  Permutations print and parse in disjoint-cycle notation with
0-indexed points, e.g. ``"(0 1 2)(3 4)"``; the identity prints ``"()"``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch, NotBijective

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _check_images(images: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(x) for x in images)
    seen = [False] * len(t)
    for x in t:
        if not 0 <= x < len(t) or seen[x]:
            raise NotBijective(f"not a bijection on 0..{len(t) - 1}: {t}")
        seen[x] = True
    return t


class Permutation:
    """A bijection on {0, ..., degree-1}, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        object.__setattr__(self, "images", _check_images(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise NotBijective(f"repeated point in cycle {cycle}")
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 0 <= a < degree:
                    raise DegreeMismatch(f"point {a} out of range for degree {degree}")
                images[a] = b
        # cycles must be disjoint for the assignment above to be a bijection
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse disjoint-cycle notation, e.g. "(0 1 2)(3 4)" or "()".

        Points may be separated by spaces or commas.  The degree defaults
        to one more than the largest point mentioned.
        """
        stripped = text.strip()
        if re.sub(r"[\s,()]", "", stripped) == "" and "(" in stripped:
            return cls.identity(degree or 0)
        rest = _CYCLE_RE.sub("", stripped)
        if rest.strip():
            raise NotBijective(f"could not parse permutation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            pts = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
            if pts:
                cycles.append(pts)
        d = max((max(c) for c in cycles), default=-1) + 1
        if degree is not None:
            if d > degree:
                raise DegreeMismatch(f"point {d - 1} out of range for degree {degree}")
            d = degree
        return cls.from_cycles(d, cycles)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} != {other.degree}")
        o = other.images
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", tuple(o[x] for x in self.images))
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", tuple(inv))
        return p

    __invert__ = inverse

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return g^-1 * self * g."""
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        """Return self^-1 * other^-1 * self * other."""
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        n = 1
        for cycle in self.cycles():
            n = _lcm(n, len(cycle))
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b
