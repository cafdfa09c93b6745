"""Complete subgroup-lattice enumeration for groups under the order cap.

The enumeration is a worklist closure over conjugacy classes of
subgroups.  Seeds: the trivial subgroup.  Step: for a class
representative H and each cyclic subgroup Z of prime-power order
("zuppo"), taken up to conjugacy under the normalizer N_G(H), form
<H, z>.  When z normalizes H the extension is a cheap union of cosets;
otherwise it is a closure BFS over the multiplication table.

Completeness, by induction on |U| over subgroups U <= G: every U is
generated by its prime-power-order elements, so U has a zuppo generator z
outside any chosen maximal subgroup M < U, and then <M, z> = U by
maximality.  M is found by induction, and replacing (M, z) by a
normalizer-orbit representative only replaces U by a conjugate.  Hence
every conjugacy class of subgroups is reached.

Results are grouped into conjugacy classes (justified downstream because
|H/H'| and friends are conjugation-invariant), sorted by
(index, order, fingerprint) for reproducible output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import config
from .errors import ResourceCapExceeded
from .group import PermGroup
from .universe import Universe


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups: representative + class data."""

    order: int
    index: int
    class_length: int
    rep_ids: np.ndarray          # canonical member, sorted element ids
    gen_ids: list[int]           # generators of rep_ids
    _universe: Universe = field(repr=False, default=None)
    _derived_order: int | None = field(repr=False, default=None)

    @property
    def is_normal(self) -> bool:
        return self.class_length == 1

    @property
    def rep(self) -> PermGroup:
        return self._universe.subgroup_from_ids(self.rep_ids)

    def fingerprint(self) -> bytes:
        return self.rep_ids.tobytes()

    def derived_order(self) -> int:
        if self._derived_order is None:
            self._derived_order = len(self._universe.derived_ids(self.gen_ids))
        return self._derived_order

    def abelianization_order(self) -> int:
        return self.order // self.derived_order()


@dataclass
class SubgroupLattice:
    """All conjugacy classes of subgroups of one group."""

    group: PermGroup
    classes: list[SubgroupClass]
    complete_up_to_index: int
    # every individual subgroup, for subset scans: packed bitsets + class ids
    member_bits: np.ndarray = field(repr=False, default=None)
    member_class: np.ndarray = field(repr=False, default=None)

    def classes_up_to(self, max_index: int) -> list[SubgroupClass]:
        return [c for c in self.classes if c.index <= max_index]

    def count_subgroups(self, n: int) -> int:
        return sum(c.class_length for c in self.classes if c.index <= n)

    def subgroup_count_total(self) -> int:
        return sum(c.class_length for c in self.classes)


def full_lattice(G: PermGroup) -> SubgroupLattice:
    """The complete lattice; cached on the group object."""
    if "lattice" not in G._cache:
        G._cache["lattice"] = _enumerate(G)
    return G._cache["lattice"]


def subgroup_classes(G: PermGroup, max_index: int) -> SubgroupLattice:
    """Conjugacy classes of subgroups of index <= max_index.

    The enumeration is bottom-up, so the full lattice is computed once
    and filtered; max_index saturates at order(G).
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    lat = full_lattice(G)
    max_index = min(max_index, G.order())
    classes = lat.classes_up_to(max_index)
    return SubgroupLattice(G, classes, max_index,
                           lat.member_bits, lat.member_class)


def count_subgroups(G: PermGroup, n: int) -> int:
    return subgroup_classes(G, min(n, G.order())).count_subgroups(n)


def _zuppos(u: Universe):
    """Cyclic subgroups of prime-power order.

    Returns (canon, zuppo_of): canon lists the minimal generator id of
    each zuppo; zuppo_of maps every prime-power element id to its zuppo
    index (-1 elsewhere).
    """
    orders = u.element_orders()
    zuppo_of = np.full(u.n, -1, dtype=np.int64)
    canon: list[int] = []
    for g in range(1, u.n):
        if zuppo_of[g] >= 0:
            continue
        o = int(orders[g])
        p = _smallest_prime_factor(o)
        if p ** _valuation(o, p) != o:
            continue  # not prime-power order
        idx = len(canon)
        canon.append(g)
        cur, t = g, 1
        while t < o:
            if t % p != 0:
                zuppo_of[cur] = idx
            cur = u.mul(cur, g)
            t += 1
        zuppo_of[g] = idx
    return np.array(canon, dtype=np.int64), zuppo_of


def _smallest_prime_factor(n: int) -> int:
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class _Enumerator:
    def __init__(self, G: PermGroup):
        if G.order() > config.ORDER_CAP:
            raise ResourceCapExceeded(
                f"subgroup enumeration capped at order {config.ORDER_CAP}, "
                f"group has order {G.order()}")
        self.G = G
        self.u = G.universe()
        self.n = self.u.n
        self.zuppo_canon, self.zuppo_of = _zuppos(self.u)
        self.fp_to_class: dict[bytes, int] = {}
        self.records: list[dict] = []
        self.member_bits: list[np.ndarray] = []
        self.member_class: list[int] = []
        self.queue: deque[int] = deque()

    def run(self) -> SubgroupLattice:
        u = self.u
        self.register(np.array([u.identity_id], dtype=np.uint32), [])
        while self.queue:
            self.process(self.queue.popleft())
        classes = []
        for rec in self.records:
            classes.append(SubgroupClass(
                order=rec["order"], index=self.n // rec["order"],
                class_length=rec["class_length"], rep_ids=rec["canon_ids"],
                gen_ids=rec["gens"], _universe=u))
        order_map = sorted(range(len(classes)), key=lambda i: (
            classes[i].index, classes[i].order, classes[i].fingerprint()))
        renumber = {old: new for new, old in enumerate(order_map)}
        classes = [classes[i] for i in order_map]
        member_class = np.array([renumber[c] for c in self.member_class],
                                dtype=np.int32)
        member_bits = (np.stack(self.member_bits, axis=0)
                       if self.member_bits else
                       np.zeros((0, (self.n + 7) // 8), dtype=np.uint8))
        return SubgroupLattice(self.G, classes, self.G.order(),
                               member_bits, member_class)

    def register(self, ids: np.ndarray, gens: list[int]) -> None:
        """Record a new subgroup class: expand its conjugation orbit."""
        fp = ids.tobytes()
        if fp in self.fp_to_class:
            return
        u = self.u
        cls = len(self.records)
        nodes = [ids]
        trans = [u.identity_id]
        fp_of = {fp: 0}
        stab_gens: list[int] = []
        stab_seen: set[int] = set()
        i = 0
        while i < len(nodes):
            arr, t = nodes[i], trans[i]
            for g in u.gen_ids:
                arr2 = u.conj_sorted(arr, int(g))
                fp2 = arr2.tobytes()
                tg = u.mul(t, int(g))
                j = fp_of.get(fp2)
                if j is None:
                    fp_of[fp2] = len(nodes)
                    nodes.append(arr2)
                    trans.append(tg)
                else:
                    s = u.mul(tg, int(u.inv[trans[j]]))
                    if s != u.identity_id and s not in stab_seen:
                        stab_seen.add(s)
                        stab_gens.append(s)
            i += 1
        canon_pos = min(range(len(nodes)), key=lambda ix: nodes[ix].tobytes())
        for fp2, pos in fp_of.items():
            self.fp_to_class[fp2] = cls
            bits = np.zeros(self.n, dtype=bool)
            bits[nodes[pos]] = True
            self.member_bits.append(np.packbits(bits))
            self.member_class.append(cls)
        self.records.append({
            "work_ids": ids, "canon_ids": nodes[canon_pos],
            "order": len(ids), "class_length": len(nodes),
            "gens": gens, "stab_gens": stab_gens,
        })
        self.queue.append(cls)

    def process(self, cls: int) -> None:
        u, rec = self.u, self.records[cls]
        H = rec["work_ids"]
        in_H = np.zeros(self.n, dtype=bool)
        in_H[H] = True
        # normalizer, grown from H-gens plus the orbit's Schreier generators
        norm_order = self.n // rec["class_length"]
        norm_gens = list(rec["gens"])
        N = u.closure(norm_gens) if norm_gens else \
            np.array([u.identity_id], dtype=np.uint32)
        for s in rec["stab_gens"]:
            if len(N) == norm_order:
                break
            if not _in_sorted(N, s):
                norm_gens.append(s)
                N = u.closure(norm_gens)
        assert len(N) == norm_order, "normalizer reconstruction failed"
        in_N = np.zeros(self.n, dtype=bool)
        in_N[N] = True

        candidates = [int(z) for z in self.zuppo_canon if not in_H[z]]
        for z in self._orbit_reps(candidates, norm_gens):
            if in_N[z]:
                ids = self._coset_union(H, in_H, z)
            else:
                ids = u.closure(rec["gens"] + [z])
            self.register(ids, rec["gens"] + [z])

    def _orbit_reps(self, candidates: list[int], norm_gens: list[int]) -> list[int]:
        """Zuppo candidates up to conjugacy under the normalizer."""
        if not norm_gens:
            return candidates
        u = self.u
        cand_set = set(candidates)
        reps = []
        seen: set[int] = set()
        for z in candidates:
            if z in seen:
                continue
            reps.append(z)
            frontier = [z]
            seen.add(z)
            while frontier:
                x = frontier.pop()
                for g in norm_gens:
                    c = u.mul(u.mul(int(u.inv[g]), x), g)
                    zi = self.zuppo_of[c]
                    assert zi >= 0
                    c_canon = int(self.zuppo_canon[zi])
                    if c_canon in cand_set and c_canon not in seen:
                        seen.add(c_canon)
                        frontier.append(c_canon)
        return reps

    def _coset_union(self, H: np.ndarray, in_H: np.ndarray, z: int) -> np.ndarray:
        """<H, z> = union of cosets H z^t when z normalizes H."""
        u = self.u
        parts = [H]
        covered = in_H.copy()
        zp = z
        while not covered[zp]:
            coset = u.prod_vec(H, zp)
            covered[coset] = True
            parts.append(coset.astype(np.uint32))
            zp = u.mul(zp, z)
        ids = np.concatenate(parts)
        ids.sort()
        return ids.astype(np.uint32)


def _in_sorted(arr: np.ndarray, x: int) -> bool:
    pos = np.searchsorted(arr, x)
    return pos < len(arr) and arr[pos] == x


def _enumerate(G: PermGroup) -> SubgroupLattice:
    return _Enumerator(G).run()


# -- derived queries ----------------------------------------------------


def normal_subgroup_ids(G: PermGroup) -> list[np.ndarray]:
    """Sorted id-sets of all normal subgroups.

    Normal subgroups are joins of normal closures of conjugacy classes:
    starting from the trivial group, repeatedly adjoin the class of one
    element and take the normal closure, deduplicating by fingerprint.
    """
    if "normal_ids" in G._cache:
        return G._cache["normal_ids"]
    u = G.universe()
    class_reps = _element_class_reps(u)
    gen_ids = [int(g) for g in u.gen_ids]
    trivial = np.array([u.identity_id], dtype=np.uint32)
    found = {trivial.tobytes(): (trivial, [])}
    queue = deque([trivial.tobytes()])
    while queue:
        ids, gens = found[queue.popleft()]
        inside = np.zeros(u.n, dtype=bool)
        inside[ids] = True
        for rep in class_reps:
            if inside[rep]:
                continue
            bigger = u.normal_closure_ids(gen_ids, gens + [rep])
            fp = bigger.tobytes()
            if fp not in found:
                found[fp] = (bigger, gens + [rep])
                queue.append(fp)
    out = sorted((ids for ids, _ in found.values()),
                 key=lambda a: (len(a), a.tobytes()))
    G._cache["normal_ids"] = out
    return out


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    u = G.universe()
    return [u.subgroup_from_ids(ids) for ids in normal_subgroup_ids(G)]


def min_abelian_normal_index(G: PermGroup) -> int:
    """Minimum of |G:A| over abelian normal subgroups A (A=1 included)."""
    u = G.universe()
    best = G.order()
    for ids in normal_subgroup_ids(G):
        gens = u.gens_for(ids)
        if all(u.mul(a, b) == u.mul(b, a) for a in gens for b in gens):
            best = min(best, G.order() // len(ids))
    return best


def _element_class_reps(u: Universe) -> list[int]:
    """Minimal id per conjugacy class of elements, increasing."""
    assigned = np.zeros(u.n, dtype=bool)
    reps = []
    for i in range(u.n):
        if assigned[i]:
            continue
        reps.append(i)
        frontier = np.array([i], dtype=np.uint32)
        assigned[i] = True
        while frontier.size:
            nxt = []
            for g in u.gen_ids:
                c = u.conj_vec(frontier, int(g))
                fresh = c[~assigned[c]]
                if fresh.size:
                    fresh = np.unique(fresh)
                    assigned[fresh] = True
                    nxt.append(fresh)
            frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.uint32)
    return reps


def intermediate_subgroup_ids(G: PermGroup, Y: PermGroup,
                              max_index: int) -> list[np.ndarray]:
    """Id-sets of all H with Y <= H <= G and |G:H| <= max_index.

    Breadth-first closure upward from Y: each known H is extended by one
    element per (H,H)-double coset.  No conjugacy quotienting: the
    relative definitions pin Y.  For Y = 1 the answer is by definition
    the expansion of the subgroup lattice into individual subgroups, and
    is read off the lattice directly.
    """
    u = G.universe()
    Y_ids = u.ids_of_group(Y)
    if len(Y_ids) == 1:
        lat = full_lattice(G)
        out = []
        for row in lat.member_bits:
            ids = np.nonzero(np.unpackbits(row, count=u.n))[0].astype(np.uint32)
            if u.n // len(ids) <= max_index:
                out.append(ids)
        out.sort(key=lambda a: (u.n // len(a), a.tobytes()))
        return out
    return _intermediate_ids_bfs(u, Y_ids, max_index)


def _intermediate_ids_bfs(u, Y_ids: np.ndarray, max_index: int) -> list[np.ndarray]:
    found: dict[bytes, tuple[np.ndarray, list[int]]] = {}
    start_gens = u.gens_for(Y_ids)
    found[Y_ids.tobytes()] = (Y_ids, start_gens)
    queue = deque([Y_ids.tobytes()])
    while queue:
        H, gens = found[queue.popleft()]
        covered = np.zeros(u.n, dtype=bool)
        covered[H] = True
        for g in range(u.n):
            if covered[g]:
                continue
            Hg = u.prod_vec(H, g)
            for x in Hg:
                covered[u.prod_vec_left(int(x), H)] = True
            bigger = u.closure(gens + [g])
            fp = bigger.tobytes()
            if fp not in found:
                found[fp] = (bigger, gens + [g])
                queue.append(fp)
    out = [ids for ids, _ in found.values() if u.n // len(ids) <= max_index]
    out.sort(key=lambda a: (u.n // len(a), a.tobytes()))
    return out


def intermediate_subgroups(G: PermGroup, Y: PermGroup,
                           max_index: int) -> list[PermGroup]:
    u = G.universe()
    return [u.subgroup_from_ids(ids)
            for ids in intermediate_subgroup_ids(G, Y, max_index)]
