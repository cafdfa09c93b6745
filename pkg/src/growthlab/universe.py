"""Element-indexed arithmetic for one group under the element cap.

A Universe lists every element of a group as a row of a lexicographically
sorted matrix; the row index is the element's id.  Products are resolved
through the images on a base (a point sequence whose images determine a
group element), so a full n x n multiplication table costs one gather
per row and a subgroup is just a sorted array of uint32 ids.

Everything downstream that enumerates subgroups, cosets or normal
subgroups works in this id world.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import config, kernel
from .errors import NotASubgroup, ResourceCapExceeded
from .group import PermGroup
from .perm import Permutation

IDS = np.ndarray  # sorted uint32 arrays of element ids


class CosetAction:
    """Transitive action of G on the cosets of a subgroup."""

    def __init__(self, universe: "Universe", H_ids: IDS):
        self.universe = universe
        self.H_ids = H_ids
        u = universe
        n = u.n
        cover = np.full(n, -1, dtype=np.int64)
        reps: list[int] = [u.identity_id]
        cover[H_ids] = 0
        i = 0
        while i < len(reps):
            r = reps[i]
            for g in u.gen_ids:
                z = u.mul(r, int(g))
                if cover[z] < 0:
                    cover[u.prod_vec(H_ids, z)] = len(reps)
                    reps.append(z)
            i += 1
        self.reps = np.array(reps, dtype=np.uint32)
        self.cover = cover
        self.index = len(reps)
        core = np.sort(H_ids).astype(np.uint32)
        for r in reps:
            if len(core) == 1:
                break
            conj = np.sort(u.conj_vec(H_ids, int(r)))
            core = core[np.isin(core, conj, assume_unique=True)]
        self.kernel_ids = core

    def perm_of(self, g_id: int) -> Permutation:
        """The permutation of cosets induced by one group element."""
        u = self.universe
        return Permutation(tuple(int(x) for x in
                                 self.cover[u.prod_vec(self.reps, g_id)]))

    def image_group(self) -> PermGroup:
        return PermGroup(self.index,
                         [self.perm_of(int(g)) for g in self.universe.gen_ids])

    def kernel_group(self) -> PermGroup:
        return self.universe.subgroup_from_ids(self.kernel_ids)


class Universe:
    def __init__(self, group: PermGroup, cap: int | None = None):
        cap = config.ELEMENT_CAP if cap is None else cap
        if group.order() > cap:
            raise ResourceCapExceeded(
                f"order {group.order()} exceeds element cap {cap}")
        self.group = group
        self.n = group.order()
        self.degree = group.degree
        self.E = group.elements_matrix(cap)  # lex-sorted, so id 0 = identity
        self.identity_id = 0

        base = list(group.base)
        if not base:
            base = [0] if self.degree else []
        bits = max(1, int(self.degree - 1).bit_length())
        if bits * len(base) > 62:
            raise ResourceCapExceeded("base-image keys overflow 62 bits")
        self.base_cols = np.array(base, dtype=np.int64)
        self.weights = (1 << (bits * np.arange(len(base), dtype=np.int64)))
        keys = self.E[:, self.base_cols].astype(np.int64) @ self.weights
        self.key_order = np.argsort(keys, kind="stable").astype(np.int64)
        self.keys_sorted = keys[self.key_order]

        self.inv = self.ids_of_rows(
            np.argsort(self.E, axis=1).astype(np.uint16))
        self.gen_ids = np.unique(self.ids_of_rows(np.array(
            [g.images for g in group.generators] or
            [tuple(range(self.degree))], dtype=np.uint16)))

        self._table = None
        if self.n <= config.MULT_TABLE_MAX:
            self._table = kernel.build_mult_table(
                np.ascontiguousarray(self.E), self.base_cols, self.weights,
                self.keys_sorted, self.key_order)
        self._orders: np.ndarray | None = None

    # -- id lookup ------------------------------------------------------

    def ids_of_rows(self, rows: np.ndarray) -> IDS:
        keys = rows[:, self.base_cols].astype(np.int64) @ self.weights
        pos = np.searchsorted(self.keys_sorted, keys)
        if np.any(pos >= self.n) or np.any(self.keys_sorted[np.minimum(pos, self.n - 1)] != keys):
            raise NotASubgroup("row is not an element of this group")
        return self.key_order[pos].astype(np.uint32)

    def id_of(self, p: Permutation) -> int:
        ids = self.ids_of_rows(np.array([p.images], dtype=np.uint16))
        i = int(ids[0])
        if tuple(int(x) for x in self.E[i]) != p.images:
            raise NotASubgroup(f"{p} is not an element of this group")
        return i

    def perm_of(self, i: int) -> Permutation:
        return Permutation(tuple(int(x) for x in self.E[i]))

    def ids_of_group(self, H: PermGroup) -> IDS:
        """Sorted ids of a subgroup's elements (validates H <= G)."""
        rows = H.elements_matrix()
        ids = self.ids_of_rows(rows)
        if not np.array_equal(self.E[ids], rows):
            raise NotASubgroup("subgroup elements do not all lie in the group")
        ids = np.sort(ids)
        return ids.astype(np.uint32)

    # -- products ---------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return int(self._table[a, b])
        key = int(self.weights @ self.E[b, self.E[a, self.base_cols]].astype(np.int64))
        return int(self.key_order[np.searchsorted(self.keys_sorted, key)])

    def prod_vec(self, xs, y) -> np.ndarray:
        """ids of x*y for x over array xs, y a single id."""
        xs = np.asarray(xs)
        if self._table is not None:
            return self._table[xs, y].astype(np.uint32)
        X = self.E[xs][:, self.base_cols]
        keys = self.E[y][X].astype(np.int64) @ self.weights
        return self.key_order[np.searchsorted(self.keys_sorted, keys)].astype(np.uint32)

    def prod_vec_left(self, x, ys) -> np.ndarray:
        """ids of x*y for a single id x, y over array ys."""
        ys = np.asarray(ys)
        if self._table is not None:
            return self._table[x, ys].astype(np.uint32)
        cols = self.E[x, self.base_cols]
        keys = self.E[ys][:, cols].astype(np.int64) @ self.weights
        return self.key_order[np.searchsorted(self.keys_sorted, keys)].astype(np.uint32)

    def conj_vec(self, ids, g: int) -> np.ndarray:
        """ids of g^-1 * x * g, unsorted, aligned with input order."""
        t = self.prod_vec_left(int(self.inv[g]), ids)
        return self.prod_vec(t, g)

    def conj_sorted(self, ids: IDS, g: int) -> IDS:
        out = self.conj_vec(ids, g)
        out.sort()
        return out

    def pow(self, a: int, k: int) -> int:
        result, square = self.identity_id, a
        while k:
            if k & 1:
                result = self.mul(result, square)
            square = self.mul(square, square)
            k >>= 1
        return result

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            orders = np.empty(self.n, dtype=np.int64)
            for i in range(self.n):
                row = self.E[i]
                seen = np.zeros(self.degree, dtype=bool)
                o = 1
                for s in range(self.degree):
                    if seen[s]:
                        continue
                    length = 0
                    j = s
                    while not seen[j]:
                        seen[j] = True
                        j = int(row[j])
                        length += 1
                    o = _lcm(o, length)
                orders[i] = o
            self._orders = orders
        return self._orders

    # -- subgroup machinery ------------------------------------------------

    def closure(self, gen_ids: Iterable[int]) -> IDS:
        gen_list = [int(g) for g in gen_ids if g != self.identity_id]
        if not gen_list:
            return np.array([self.identity_id], dtype=np.uint32)
        if self._table is not None:
            return kernel.close_ids(self._table, gen_list, self.n)
        return self._closure_slow(gen_list)

    def _closure_slow(self, gen_list: list[int]) -> IDS:
        gens = np.unique(np.array(gen_list, dtype=np.int64))
        seen = np.zeros(self.n, dtype=bool)
        seen[gens] = True
        members = [gens]
        frontier = gens
        while frontier.size:
            fresh = []
            for g in gens:
                prod = self.prod_vec(frontier, int(g))
                prod = prod[~seen[prod]]
                if prod.size:
                    prod = np.unique(prod)
                    seen[prod] = True
                    fresh.append(prod.astype(np.int64))
            if not fresh:
                break
            frontier = np.unique(np.concatenate(fresh))
            members.append(frontier)
        ids = np.concatenate(members)
        ids.sort()
        return ids.astype(np.uint32)

    def gens_for(self, ids: IDS) -> list[int]:
        """Small deterministic generating set for a subgroup id-set."""
        gens: list[int] = []
        have = np.array([self.identity_id], dtype=np.uint32)
        target = len(ids)
        while len(have) < target:
            inside = np.zeros(self.n, dtype=bool)
            inside[have] = True
            nxt = int(ids[~inside[ids]][0])
            gens.append(nxt)
            have = self.closure(gens)
        return gens

    def subgroup_from_ids(self, ids: IDS) -> PermGroup:
        gens = [self.perm_of(i) for i in self.gens_for(ids)]
        return PermGroup(self.degree, gens)

    def normal_closure_ids(self, ambient_gen_ids: Sequence[int],
                           seed_ids: Iterable[int]) -> IDS:
        """ids of the normal closure of the seeds under the ambient gens."""
        gen_set = [int(s) for s in seed_ids if s != self.identity_id]
        while True:
            S = self.closure(gen_set)
            inside = np.zeros(self.n, dtype=bool)
            inside[S] = True
            fresh = []
            for s in list(gen_set):
                for g in ambient_gen_ids:
                    c = self.mul(self.mul(int(self.inv[g]), s), int(g))
                    if not inside[c]:
                        fresh.append(c)
                        inside[c] = True
            if not fresh:
                return S
            gen_set.extend(fresh)

    def derived_ids(self, sub_gen_ids: Sequence[int]) -> IDS:
        """ids of the derived subgroup of the subgroup with given gens."""
        comms = []
        for a in sub_gen_ids:
            ia = int(self.inv[a])
            for b in sub_gen_ids:
                c = self.mul(self.mul(self.mul(ia, int(self.inv[b])), int(a)), int(b))
                if c != self.identity_id:
                    comms.append(c)
        return self.normal_closure_ids(sub_gen_ids, comms)

    def center_ids(self) -> IDS:
        all_ids = np.arange(self.n, dtype=np.uint32)
        mask = np.ones(self.n, dtype=bool)
        for g in self.gen_ids:
            mask &= self.prod_vec(all_ids, int(g)) == self.prod_vec_left(int(g), all_ids)
        return all_ids[mask]

    def centralizer_mask(self, target: int) -> np.ndarray:
        all_ids = np.arange(self.n, dtype=np.uint32)
        return (self.prod_vec(all_ids, target)
                == self.prod_vec_left(target, all_ids))

    # -- cosets ----------------------------------------------------------

    def coset_action_ids(self, H_ids: IDS) -> CosetAction:
        return CosetAction(self, H_ids)

    def coset_action(self, H_ids: IDS) -> tuple[PermGroup, PermGroup]:
        act = CosetAction(self, H_ids)
        return act.image_group(), act.kernel_group()


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b
