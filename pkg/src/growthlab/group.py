"""Permutation groups via deterministic base / strong-generating-set chains.

A PermGroup is immutable after construction: the stabilizer chain is
built eagerly by a deterministic Schreier-Sims (base points processed in
increasing order, no randomization), so order, membership and all
derived data are exact and reproducible.  Groups of the same degree are
compared as subgroups of the one ambient symmetric action.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import DegreeMismatch, NotASubgroup, ResourceCapExceeded
from .perm import Permutation

Row = tuple[int, ...]


def _mul(a: Row, b: Row) -> Row:
    return tuple(b[x] for x in a)


def _inv(a: Row) -> Row:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class _Level:
    __slots__ = ("point", "gens", "transversal", "orbit")

    def __init__(self, point: int, gens: list[Row]):
        # gens is non-empty; transversal[p] = u with u[point] = p
        self.point = point
        self.gens = gens
        self.transversal: dict[int, Row] = {point: tuple(range(len(gens[0])))}
        self.orbit: list[int] = [point]
        i = 0
        while i < len(self.orbit):
            p = self.orbit[i]
            u = self.transversal[p]
            for g in self.gens:
                q = g[p]
                if q not in self.transversal:
                    self.transversal[q] = _mul(u, g)
                    self.orbit.append(q)
            i += 1


class PermGroup:
    """Finite permutation group on {0, ..., degree-1}."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = (),
                 base_hint: Sequence[int] = ()):
        self.degree = int(degree)
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {self.degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._base_hint = tuple(base_hint)
        self._levels: list[_Level] = []
        self._order: int = 1
        self._cache: dict = {}
        self._build()

    # -- construction ------------------------------------------------

    def _build(self) -> None:
        strong: list[Row] = []
        for g in self.generators:
            if g.images not in strong:
                strong.append(g.images)
        while True:
            levels = self._chain(strong)
            new = self._verify_pass(levels)
            if not new:
                self._levels = levels
                break
            strong.extend(new)
        order = 1
        for lv in self._levels:
            order *= len(lv.orbit)
        self._order = order

    def _chain(self, strong: list[Row]) -> list[_Level]:
        levels: list[_Level] = []
        rest = list(strong)
        hint = list(self._base_hint)
        while rest:
            point = None
            while hint:
                h = hint.pop(0)
                if any(g[h] != h for g in rest):
                    point = h
                    break
            if point is None:
                point = min(p for g in rest for p in range(self.degree) if g[p] != p)
            levels.append(_Level(point, rest))
            rest = [g for g in rest if g[point] == point]
        return levels

    def _verify_pass(self, levels: list[_Level]) -> list[Row]:
        """Sift every Schreier generator; return the non-trivial residues."""
        ident = tuple(range(self.degree))
        fresh: list[Row] = []
        for i, lv in enumerate(levels):
            for p in lv.orbit:
                u = lv.transversal[p]
                for g in lv.gens:
                    w = _mul(u, g)
                    s = _mul(w, _inv(lv.transversal[g[p]]))
                    r = self._strip(levels, i + 1, s)
                    if r != ident and r not in fresh:
                        fresh.append(r)
            if fresh:
                return fresh
        return fresh

    @staticmethod
    def _strip(levels: list[_Level], start: int, g: Row) -> Row:
        for lv in levels[start:]:
            p = g[lv.point]
            u = lv.transversal.get(p)
            if u is None:
                return g
            g = _mul(g, _inv(u))
        return g

    # -- basic queries -----------------------------------------------

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.point for lv in self._levels)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch(f"degree {g.degree} != {self.degree}")
        r = self._strip(self._levels, 0, g.images)
        return all(i == x for i, x in enumerate(r))

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(
            Permutation(g) in other for g in self._gen_rows())

    def equals(self, other: "PermGroup") -> bool:
        return (self.order() == other.order() and self.is_subgroup_of(other))

    def _gen_rows(self) -> list[Row]:
        return [g.images for g in self.generators]

    def __repr__(self) -> str:
        return (f"PermGroup(degree={self.degree}, order={self._order}, "
                f"gens=[{', '.join(str(g) for g in self.generators)}])")

    # -- element enumeration ------------------------------------------

    def elements_matrix(self, cap: int | None = None) -> np.ndarray:
        """All elements as a lexicographically sorted uint16 matrix."""
        cap = config.ELEMENT_CAP if cap is None else cap
        if self._order > cap:
            raise ResourceCapExceeded(
                f"group order {self._order} exceeds element cap {cap}")
        key = ("elements_matrix", self._order)
        if key in self._cache:
            return self._cache[key]
        E = np.arange(self.degree, dtype=np.uint16).reshape(1, -1)
        for lv in reversed(self._levels):
            blocks = []
            for p in sorted(lv.orbit):
                u = np.array(lv.transversal[p], dtype=np.uint16)
                blocks.append(u[E])
            E = np.concatenate(blocks, axis=0)
        order = np.lexsort(E.T[::-1])
        E = np.ascontiguousarray(E[order])
        self._cache[key] = E
        return E

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """All elements, sorted by image tuple.  Guarded by the element cap."""
        E = self.elements_matrix(cap)
        return [Permutation(tuple(int(x) for x in row)) for row in E]

    def element_fingerprint(self, cap: int | None = None) -> int:
        """Hash of the sorted element encodings (canonical group identity)."""
        return hash(self.elements_matrix(cap).tobytes())

    # -- structural operators ------------------------------------------

    def subgroup(self, elems: Iterable[Permutation], check: bool = True) -> "PermGroup":
        elems = list(elems)
        if check:
            for g in elems:
                if g not in self:
                    raise NotASubgroup(f"{g} is not an element of the group")
        return PermGroup(self.degree, elems)

    def conjugate_subgroup(self, H: "PermGroup", g: Permutation) -> "PermGroup":
        if H.degree != self.degree or g.degree != self.degree:
            raise DegreeMismatch("conjugation requires matching degrees")
        return PermGroup(self.degree, [h.conjugate(g) for h in H.generators])

    def is_normal(self, H: "PermGroup") -> bool:
        if not H.is_subgroup_of(self):
            raise NotASubgroup("H is not a subgroup of G")
        return all(h.conjugate(g) in H
                   for g in self.generators for h in H.generators)

    def normal_closure(self, seed: Iterable[Permutation]) -> "PermGroup":
        """Smallest normal subgroup of G containing the given elements."""
        seed = list(seed)
        for s in seed:
            if s not in self:
                raise NotASubgroup(f"{s} is not an element of the group")
        gens = [s for s in seed if not s.is_identity()]
        N = PermGroup(self.degree, gens)
        while True:
            fresh = []
            for h in N.generators:
                for g in self.generators:
                    c = h.conjugate(g)
                    if c not in N:
                        fresh.append(c)
            if not fresh:
                return N
            gens.extend(fresh)
            N = PermGroup(self.degree, gens)

    def derived_subgroup(self) -> "PermGroup":
        """Commutator subgroup: normal closure of generator commutators."""
        if "derived" not in self._cache:
            comms = []
            for a in self.generators:
                for b in self.generators:
                    c = a.commutator(b)
                    if not c.is_identity():
                        comms.append(c)
            self._cache["derived"] = self.normal_closure(comms)
        return self._cache["derived"]

    def is_abelian(self) -> bool:
        return all(a.commutator(b).is_identity()
                   for a in self.generators for b in self.generators)

    def is_perfect(self) -> bool:
        return self.derived_subgroup().order() == self._order

    def derived_series(self) -> list["PermGroup"]:
        series = [self]
        while True:
            nxt = series[-1].derived_subgroup()
            if nxt.order() == series[-1].order():
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].is_trivial()

    def point_stabilizer(self, pt: int) -> "PermGroup":
        if not 0 <= pt < self.degree:
            raise DegreeMismatch(f"point {pt} out of range for degree {self.degree}")
        chain = PermGroup(self.degree, self.generators, base_hint=(pt,))
        if not chain._levels or chain._levels[0].point != pt:
            return PermGroup(self.degree, self.generators)  # pt fixed by all of G
        if len(chain._levels) == 1:
            return PermGroup(self.degree)
        return PermGroup(self.degree,
                         [Permutation(g) for g in chain._levels[1].gens])

    # universe-backed operators (exact, element-level; guarded by caps)

    def universe(self):
        from .universe import Universe

        if "universe" not in self._cache:
            self._cache["universe"] = Universe(self)
        return self._cache["universe"]

    def center(self) -> "PermGroup":
        u = self.universe()
        return u.subgroup_from_ids(u.center_ids())

    def normal_core(self, H: "PermGroup") -> "PermGroup":
        """Largest normal subgroup of G inside H (kernel of the coset action)."""
        return self.coset_action(H)[1]

    def coset_action(self, H: "PermGroup") -> tuple["PermGroup", "PermGroup"]:
        """Action of G on left cosets of H: (image on |G:H| points, kernel)."""
        if not H.is_subgroup_of(self):
            raise NotASubgroup("H is not a subgroup of G")
        u = self.universe()
        return u.coset_action(u.ids_of_group(H))


def direct_product(G1: PermGroup, G2: PermGroup) -> PermGroup:
    """G1 x G2 acting on the disjoint union of the two point sets."""
    d1, d2 = G1.degree, G2.degree
    gens = []
    for g in G1.generators:
        gens.append(Permutation(tuple(g.images) + tuple(range(d1, d1 + d2))))
    for g in G2.generators:
        gens.append(Permutation(tuple(range(d1)) + tuple(d1 + x for x in g.images)))
    return PermGroup(d1 + d2, gens)
