"""Abelianization growth, absolute and relative, and its structural predicates.

All values are exact integers.  Growth tables are stored sparsely at
their jump points and read densely; ab tables run over one subgroup per
conjugacy class (|H/H'| is conjugation-invariant), relative tables over
the full list of intermediate subgroups above the pinned baseline Y.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from .errors import NotASubgroup
from .group import PermGroup
from .subgroups import (full_lattice, intermediate_subgroup_ids,
                        subgroup_classes)


@dataclass
class GrowthTable:
    """A non-decreasing integer-valued function of n, stored at its jumps."""

    group: str
    kind: str                      # ab | rep | sub | ab_rel | rep_rel
    n_max: int
    jumps: dict[int, int]
    baseline: str | None = None
    _keys: list[int] = field(init=False, repr=False)
    _vals: list[int] = field(init=False, repr=False)

    def __post_init__(self):
        self._keys = sorted(self.jumps)
        self._vals = [self.jumps[k] for k in self._keys]
        assert self._keys and self._keys[0] == 1, "table must start at n = 1"
        assert all(a < b for a, b in zip(self._vals, self._vals[1:])), \
            "jump values must increase"

    def value(self, n: int) -> int:
        assert n >= 1
        return self._vals[bisect_right(self._keys, min(n, self.n_max)) - 1]

    def __call__(self, n: int) -> int:
        return self.value(n)

    def to_dict(self) -> dict:
        out = {"group": self.group, "kind": self.kind, "n_max": self.n_max,
               "jumps": {str(k): v for k, v in sorted(self.jumps.items())}}
        if self.baseline is not None:
            out["baseline"] = self.baseline
        return out


def _table_from_pairs(pairs, group: str, kind: str, n_max: int,
                      baseline: str | None = None) -> GrowthTable:
    """pairs: (n, value) observations; collapsed to jump points."""
    best: dict[int, int] = {}
    for n, v in pairs:
        if n <= n_max:
            best[n] = max(best.get(n, 0), v)
    jumps: dict[int, int] = {}
    cur = 0
    for n in sorted(best):
        if best[n] > cur:
            jumps[n] = cur = best[n]
    return GrowthTable(group, kind, n_max, jumps, baseline)


def abelianization_order(H: PermGroup) -> int:
    """|H / [H,H]|."""
    return H.order() // H.derived_subgroup().order()


def ab_growth(G: PermGroup, n_max: int | None = None) -> GrowthTable:
    """ab_n(G) = max |H/H'| over subgroups of index <= n, for n <= n_max."""
    n_max = G.order() if n_max is None else min(n_max, G.order())
    lat = subgroup_classes(G, n_max)
    pairs = [(c.index, c.abelianization_order()) for c in lat.classes]
    return _table_from_pairs(pairs, str(G), "ab", n_max)


def sub_growth(G: PermGroup, n_max: int | None = None) -> GrowthTable:
    """Sub_n(G) = number of subgroups of index <= n."""
    n_max = G.order() if n_max is None else min(n_max, G.order())
    lat = subgroup_classes(G, n_max)
    counts: dict[int, int] = {}
    for c in lat.classes:
        counts[c.index] = counts.get(c.index, 0) + c.class_length
    jumps, running = {}, 0
    for idx in sorted(counts):
        running += counts[idx]
        jumps[idx] = running
    return GrowthTable(str(G), "sub", n_max, jumps)


def largest_abelian_section(G: PermGroup) -> int:
    """ab_n at n = |G|: the size of the largest abelian section."""
    return ab_growth(G).value(G.order())


def relative_ab_order(H: PermGroup, Y: PermGroup) -> int:
    """|H / H'Y| for Y <= H; also verifies H'Y is normal in H."""
    u = H.universe()
    Y_ids = u.ids_of_group(Y)
    return _relative_ab_order_ids(u, np.arange(u.n, dtype=np.uint32),
                                  [int(g) for g in u.gen_ids], Y_ids)


def _relative_ab_order_ids(u, H_ids, H_gens, Y_ids) -> int:
    if not _subset_sorted(Y_ids, H_ids):
        raise NotASubgroup("Y is not contained in H")
    derived = u.derived_ids(H_gens)
    hy = u.closure(u.gens_for(derived) + u.gens_for(Y_ids))
    for g in H_gens:
        assert np.array_equal(u.conj_sorted(hy, g), hy), "H'Y not normal in H"
    return len(H_ids) // len(hy)


def _subset_sorted(small, big) -> bool:
    pos = np.searchsorted(big, small)
    pos = np.minimum(pos, len(big) - 1)
    return bool(np.all(big[pos] == small))


def ab_growth_rel(G: PermGroup, Y: PermGroup,
                  n_max: int | None = None) -> GrowthTable:
    """ab_n(G, Y) = max |H/H'Y| over Y <= H <= G with |G:H| <= n."""
    n_max = G.order() if n_max is None else min(n_max, G.order())
    u = G.universe()
    pairs = []
    for ids in intermediate_subgroup_ids(G, Y, n_max):
        gens = u.gens_for(ids)
        val = _relative_ab_order_ids(u, ids, gens, u.ids_of_group(Y))
        pairs.append((u.n // len(ids), val))
    return _table_from_pairs(pairs, str(G), "ab_rel", n_max, baseline=str(Y))


def is_weakly_abnormal(G: PermGroup, Y: PermGroup) -> bool:
    """True iff every H with Y <= H <= G is self-normalizing in G."""
    u = G.universe()
    for ids in intermediate_subgroup_ids(G, Y, G.order()):
        if _normalizer_order(u, ids) != len(ids):
            return False
    return True


def _normalizer_order(u, H_ids) -> int:
    """|N_G(H)| via the orbit of H under conjugation."""
    seen = {H_ids.tobytes()}
    frontier = [H_ids]
    while frontier:
        arr = frontier.pop()
        for g in u.gen_ids:
            arr2 = u.conj_sorted(arr, int(g))
            fp = arr2.tobytes()
            if fp not in seen:
                seen.add(fp)
                frontier.append(arr2)
    return u.n // len(seen)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """N_G(H), by scanning the (capped) element list."""
    u = G.universe()
    H_ids = u.ids_of_group(H)
    keep = [i for i in range(u.n)
            if np.array_equal(u.conj_sorted(H_ids, i), H_ids)]
    return u.subgroup_from_ids(np.array(keep, dtype=np.uint32))


def bab_chain_bound(G: PermGroup, H: PermGroup) -> tuple[int, int]:
    """(|H/H'|, |G:N| * |N/N'|) with N the normal core of H in G.

    The caller asserts lhs <= rhs; this is the chain
    |H/H'| = |H:H'N| |H'N:H'| <= |G:N| |N:N'|.
    """
    u = G.universe()
    H_ids = u.ids_of_group(H)
    act = u.coset_action_ids(H_ids)
    N_ids = act.kernel_ids
    lhs = len(H_ids) // len(u.derived_ids(u.gens_for(H_ids)))
    n_derived = len(u.derived_ids(u.gens_for(N_ids)))
    rhs = (u.n // len(N_ids)) * (len(N_ids) // n_derived)
    return lhs, rhs


def ab_growth_of_ids(G: PermGroup, H_ids: np.ndarray,
                     n_max: int) -> GrowthTable:
    """ab table of a subgroup given by its id-set, via the parent lattice.

    Scans the parent's full subgroup inventory for members inside H;
    |K/K'| is read off K's conjugacy class, so no re-enumeration happens.
    """
    lat = full_lattice(G)
    bits = np.zeros(G.universe().n, dtype=bool)
    bits[H_ids] = True
    packed = np.packbits(bits)
    outside = np.bitwise_and(lat.member_bits, ~packed).any(axis=1)
    pairs = []
    h_order = len(H_ids)
    for member_idx in np.nonzero(~outside)[0]:
        cls = lat.classes[int(lat.member_class[member_idx])]
        pairs.append((h_order // cls.order, cls.abelianization_order()))
    return _table_from_pairs(pairs, "<subgroup>", "ab", min(n_max, h_order))
