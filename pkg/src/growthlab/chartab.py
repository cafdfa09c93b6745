"""Exact character tables and everything derived from them.

Conjugacy classes are found by orbit BFS over the full element list
(vectorized row composition; feasible well beyond the subgroup caps).
Character tables use the Dixon-Schneider method: the class-algebra
eigenvalue problem is solved modulo a deterministic prime
p = 1 (mod exponent), p > 2*sqrt(|G|), and eigenvalue residues are
lifted to exact cyclotomic values by counting eigenvalue multiplicities
against a fixed primitive e-th root of unity mod p.  All reported
values are exact integers / cyclotomic integers; inner products are
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import config
from .cyclotomic import Cyclo, CycloRing
from .errors import GrowthLabError, NotASubgroup, ResourceCapExceeded
from .group import PermGroup
from .growth import GrowthTable, _table_from_pairs
from .perm import Permutation
from .subgroups import full_lattice
from .util import log2_bounds


# -- conjugacy classes ---------------------------------------------------


class ConjugacyClasses:
    """Complete class data: reps (minimal encodings), sizes, membership."""

    def __init__(self, G: PermGroup, cap: int | None = None):
        cap = config.ORDER_CAP if cap is None else cap
        if G.order() > min(cap, config.CLASS_ITER_CAP):
            raise ResourceCapExceeded(
                f"class enumeration capped at {min(cap, config.CLASS_ITER_CAP)}, "
                f"group has order {G.order()}")
        self.group = G
        n = G.order()
        E = G.elements_matrix(cap=max(cap, config.ELEMENT_CAP))
        self.E = E
        base = list(G.base) or [0]
        bits = max(1, int(G.degree - 1).bit_length())
        if bits * len(base) > 62:
            raise ResourceCapExceeded("base-image keys overflow 62 bits")
        self._cols = np.array(base, dtype=np.int64)
        self._w = 1 << (bits * np.arange(len(base), dtype=np.int64))
        keys = E[:, self._cols].astype(np.int64) @ self._w
        self._key_order = np.argsort(keys, kind="stable")
        self._keys_sorted = keys[self._key_order]

        gen_rows = [np.array(g.images, dtype=np.uint16) for g in G.generators]
        inv_rows = [np.argsort(r).astype(np.uint16) for r in gen_rows]
        class_of = np.full(n, -1, dtype=np.int32)
        members: list[np.ndarray] = []
        for i in range(n):
            if class_of[i] >= 0:
                continue
            cls = len(members)
            class_of[i] = cls
            got = [np.array([i], dtype=np.int64)]
            frontier = E[i:i + 1]
            while frontier.shape[0]:
                fresh = []
                for g, gi in zip(gen_rows, inv_rows):
                    conj = g[frontier[:, gi]]
                    pos = self._positions(conj)
                    new = pos[class_of[pos] < 0]
                    if new.size:
                        new = np.unique(new)
                        class_of[new] = cls
                        fresh.append(new)
                if fresh:
                    nxt = np.unique(np.concatenate(fresh))
                    got.append(nxt)
                    frontier = E[nxt]
                else:
                    frontier = E[:0]
            members.append(np.sort(np.concatenate(got)).astype(np.int64))
        self.class_of_pos = class_of
        self.members = members
        self.sizes = [len(m) for m in members]
        self.reps = [Permutation(tuple(int(x) for x in E[m[0]])) for m in members]
        self.rep_orders = [r.order() for r in self.reps]
        self.k = len(members)
        self._power_classes: dict[int, list[int]] = {}

    def _positions(self, rows: np.ndarray) -> np.ndarray:
        keys = rows[:, self._cols].astype(np.int64) @ self._w
        return self._key_order[np.searchsorted(self._keys_sorted, keys)]

    def class_of(self, g: Permutation) -> int:
        pos = int(self._positions(np.array([g.images], dtype=np.uint16))[0])
        if tuple(int(x) for x in self.E[pos]) != g.images:
            raise NotASubgroup(f"{g} is not an element of the group")
        return int(self.class_of_pos[pos])

    def power_classes(self, l: int) -> list[int]:
        """Classes of rep_l^t for t = 0 .. order(rep_l)-1."""
        if l not in self._power_classes:
            rep = self.reps[l]
            out, cur = [], Permutation.identity(rep.degree)
            for _ in range(self.rep_orders[l]):
                out.append(self.class_of(cur))
                cur = cur * rep
            self._power_classes[l] = out
        return self._power_classes[l]

    def inverse_class(self, l: int) -> int:
        m = self.rep_orders[l]
        return self.power_classes(l)[(m - 1) % m]

    def exponent(self) -> int:
        e = 1
        for o in self.rep_orders:
            e = e // gcd(e, o) * o
        return e


def conjugacy_classes(G: PermGroup, cap: int | None = None) -> ConjugacyClasses:
    key = ("classes",)
    if key not in G._cache:
        G._cache[key] = ConjugacyClasses(G, cap)
    return G._cache[key]


def class_count(G: PermGroup, cap: int | None = None) -> int:
    """k(G), the number of conjugacy classes."""
    return conjugacy_classes(G, cap).k


# -- modular linear algebra (tiny dense systems over F_p) -----------------


def _det_mod(A: np.ndarray, p: int) -> int:
    A = A.copy() % p
    s = A.shape[0]
    det = 1
    for c in range(s):
        piv = next((r for r in range(c, s) if A[r, c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            det = -det
        det = det * int(A[c, c]) % p
        inv = pow(int(A[c, c]), p - 2, p)
        for r in range(c + 1, s):
            if A[r, c]:
                A[r] = (A[r] - int(A[r, c]) * inv * A[c]) % p
    return det % p


def _eigenvalues_mod(R: np.ndarray, p: int) -> list[int]:
    """All eigenvalues of R over F_p, via char poly + full root scan."""
    s = R.shape[0]
    pts = list(range(s + 1))
    vals = [_det_mod(t * np.eye(s, dtype=np.int64) - R, p) for t in pts]
    coeffs = _lagrange_coeffs(pts, vals, p)          # degree s, monic
    lam = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * lam + int(c)) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _lagrange_coeffs(pts: list[int], vals: list[int], p: int) -> list[int]:
    s = len(pts) - 1
    coeffs = [0] * (s + 1)
    for i, (xi, yi) in enumerate(zip(pts, vals)):
        num = [1]
        den = 1
        for j, xj in enumerate(pts):
            if j == i:
                continue
            num = _poly_mul_mod(num, [-xj % p, 1], p)
            den = den * (xi - xj) % p
        scale = yi * pow(den % p, p - 2, p) % p
        for d, c in enumerate(num):
            coeffs[d] = (coeffs[d] + scale * c) % p
    return coeffs


def _poly_mul_mod(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _column_echelon(V: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Column-reduce V mod p so V[pivots, :] is the identity."""
    V = V.copy() % p
    k, s = V.shape
    pivots: list[int] = []
    col = 0
    for r in range(k):
        if col == s:
            break
        j = next((j for j in range(col, s) if V[r, j] % p), None)
        if j is None:
            continue
        if j != col:
            V[:, [col, j]] = V[:, [j, col]]
        V[:, col] = V[:, col] * pow(int(V[r, col]), p - 2, p) % p
        for j2 in range(s):
            if j2 != col and V[r, j2]:
                V[:, j2] = (V[:, j2] - int(V[r, j2]) * V[:, col]) % p
        pivots.append(r)
        col += 1
    assert col == s, "dependent columns in eigenspace basis"
    return V, pivots


def _nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning ker(A) over F_p."""
    A = A.copy() % p
    s = A.shape[0]
    pivcols: list[int] = []
    r = 0
    for c in range(s):
        piv = next((i for i in range(r, s) if A[i, c] % p), None)
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        for i in range(s):
            if i != r and A[i, c]:
                A[i] = (A[i] - int(A[i, c]) * A[r]) % p
        pivcols.append(c)
        r += 1
    free = [c for c in range(s) if c not in pivcols]
    basis = np.zeros((s, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        basis[f, t] = 1
        for i, c in enumerate(pivcols):
            basis[c, t] = (-int(A[i, f])) % p
    return basis


# -- the Dixon-Schneider table -------------------------------------------


@dataclass
class ClassFunction:
    """Exact class function: one cyclotomic value per conjugacy class."""

    group: PermGroup
    values: list[Cyclo]

    def degree(self) -> Cyclo:
        return self.values[0]

    def __eq__(self, other) -> bool:
        return (self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))


class CharacterTable:
    def __init__(self, G: PermGroup, classes: ConjugacyClasses):
        self.group = G
        self.classes = classes
        self.order = G.order()
        self.e = classes.exponent()
        self.ring = CycloRing(self.e)
        self.p = self._choose_prime()
        self._class_mats: dict[int, np.ndarray] = {}
        omegas = self._split_eigenspaces()
        self.degrees, self.chars = self._lift(omegas)

    # deterministic prime: smallest p = 1 (mod e) exceeding both 2*sqrt(|G|)
    # and k (root scans interpolate through k+1 points)
    def _choose_prime(self) -> int:
        e, k = self.e, self.classes.k
        floor_bound = max(2 * isqrt(self.order) + 1, k + 1, 3)
        t = 1
        while t < 1_000_000:
            p = e * t + 1
            if p >= floor_bound and _is_prime(p):
                return p
            t += 1
        raise GrowthLabError("no Dixon prime found below search bound")

    def _class_matrix(self, i: int) -> np.ndarray:
        """N with N[j, l] = #{x in C_i : x^-1 * rep_l in C_j}, mod p."""
        if i not in self._class_mats:
            cl = self.classes
            INV = np.argsort(cl.E[cl.members[i]], axis=1).astype(np.uint16)
            k = cl.k
            cols = []
            for l in range(k):
                z = cl.E[cl.members[l][0]]
                pos = cl._positions(z[INV])
                cols.append(np.bincount(cl.class_of_pos[pos], minlength=k))
            self._class_mats[i] = np.stack(cols, axis=1).astype(np.int64) % self.p
        return self._class_mats[i]

    def _split_eigenspaces(self) -> list[np.ndarray]:
        k, p = self.classes.k, self.p
        spaces = [(np.eye(k, dtype=np.int64), list(range(k)))]
        for i in range(1, k):
            if all(V.shape[1] == 1 for V, _ in spaces):
                break
            M = self._class_matrix(i)
            nxt = []
            for V, piv in spaces:
                s = V.shape[1]
                if s == 1:
                    nxt.append((V, piv))
                    continue
                R = (M @ V % p)[piv, :]
                dims = 0
                for lam in _eigenvalues_mod(R, p):
                    B = _nullspace((R - lam * np.eye(s, dtype=np.int64)) % p, p)
                    if B.shape[1] == 0:
                        continue
                    W = V @ B % p
                    nxt.append(_column_echelon(W, p))
                    dims += B.shape[1]
                assert dims == s, "class matrix not semisimple (internal error)"
            spaces = nxt
        assert all(V.shape[1] == 1 for V, _ in spaces), \
            "eigenspaces not fully split (internal error)"
        omegas = []
        for V, _ in spaces:
            v = V[:, 0] % self.p
            assert v[0] % self.p, "central character vanishes on the identity"
            omegas.append(v * pow(int(v[0]), self.p - 2, self.p) % self.p)
        return omegas

    def _lift(self, omegas: list[np.ndarray]):
        cl, p, e = self.classes, self.p, self.e
        inv_sizes = [pow(s, p - 2, p) for s in cl.sizes]
        w = pow(_primitive_root(p), (p - 1) // e, p)
        chars: list[tuple[int, list[Cyclo]]] = []
        for om in omegas:
            t = sum(int(om[l]) * int(om[cl.inverse_class(l)]) * inv_sizes[l]
                    for l in range(cl.k)) % p
            dsq = self.order * pow(t, p - 2, p) % p
            d = next((d for d in range(1, isqrt(self.order) + 1)
                      if d * d % p == dsq), None)
            assert d is not None, "degree recovery failed"
            residues = [d * int(om[l]) * inv_sizes[l] % p for l in range(cl.k)]
            values = []
            for l in range(cl.k):
                m = cl.rep_orders[l]
                wm = pow(w, e // m, p)
                pc = cl.power_classes(l)
                minv = pow(m, p - 2, p)
                vec = np.zeros(self.ring.phi, dtype=np.int64)
                total = 0
                for j in range(m):
                    c = sum(residues[pc[t_]] * pow(wm, (-j * t_) % (p - 1), p)
                            for t_ in range(m)) * minv % p
                    assert c <= d, "eigenvalue multiplicity exceeds degree"
                    total += c
                    if c:
                        vec += c * self.ring.power[(j * (e // m)) % e]
                assert total == d, "eigenvalue multiplicities do not sum to degree"
                values.append(Cyclo(self.ring, vec))
            chars.append((d, values))
        chars.sort(key=lambda dv: (dv[0], [tuple(int(x) for x in v.vec)
                                           for v in dv[1]]))
        return [d for d, _ in chars], [v for _, v in chars]

    # -- exact derived data -------------------------------------------

    @property
    def k(self) -> int:
        return self.classes.k

    def irr(self, i: int) -> ClassFunction:
        return ClassFunction(self.group, self.chars[i])

    def inner_times_order(self, f: ClassFunction, g: ClassFunction) -> Cyclo:
        """|G| * <f, g> as an exact cyclotomic integer."""
        # restricted functions may live in a larger ring than the table's
        e = self.e
        for v in (*f.values, *g.values):
            e = e // gcd(e, v.ring.e) * v.ring.e
        ring = CycloRing(e)
        fv = _to_ring(f.values, ring)
        gv = _to_ring(g.values, ring)
        acc = ring.zero()
        for size, a, b in zip(self.classes.sizes, fv, gv):
            acc = acc + size * (a * b.conj())
        return acc

    def multiplicity(self, f: ClassFunction, i: int) -> int:
        """<f, chi_i> as an exact non-negative integer."""
        val = self.inner_times_order(f, self.irr(i))
        n = val.as_int()
        assert n % self.order == 0, "inner product is not integral"
        return n // self.order

    def check_orthogonality(self) -> bool:
        for i in range(self.k):
            for j in range(i, self.k):
                want = self.order if i == j else 0
                if not self.inner_times_order(self.irr(i), self.irr(j)) == want:
                    return False
        return True

    def sum_of_squares(self) -> int:
        return sum(d * d for d in self.degrees)

    def rep_growth(self, n_max: int | None = None) -> GrowthTable:
        n_max = self.order if n_max is None else min(n_max, self.order)
        pairs = [(d, sum(1 for d2 in self.degrees if d2 <= d))
                 for d in sorted(set(self.degrees))]
        return _table_from_pairs(pairs, str(self.group), "rep", n_max)

    def zeta(self, t: int) -> Fraction:
        """Witten zeta value: sum over irreducibles of degree^-t."""
        assert t >= 1
        return sum((Fraction(1, d ** t) for d in self.degrees), Fraction(0))

    def min_nontrivial_degree(self) -> int | None:
        """Smallest degree over non-trivial irreducibles (None if G = 1)."""
        degs = []
        one = self.ring.from_int(1)
        for i in range(self.k):
            if self.degrees[i] == 1 and all(v == one for v in self.chars[i]):
                continue
            degs.append(self.degrees[i])
        return min(degs) if degs else None

    def kernel_classes(self, i: int) -> list[int]:
        """Classes on which chi_i equals its degree (the kernel of chi_i)."""
        d = self.ring.from_int(self.degrees[i])
        return [l for l in range(self.k) if self.chars[i][l] == d]


def character_table(G: PermGroup, cap: int | None = None) -> CharacterTable:
    if "chartab" not in G._cache:
        G._cache["chartab"] = CharacterTable(G, conjugacy_classes(G, cap))
    return G._cache["chartab"]


def _to_ring(values: list[Cyclo], ring: CycloRing) -> list[Cyclo]:
    return [_convert(v, ring) for v in values]


def _convert(x: Cyclo, ring: CycloRing) -> Cyclo:
    if x.ring is ring:
        return x
    assert ring.e % x.ring.e == 0, "no embedding between cyclotomic rings"
    step = ring.e // x.ring.e
    vec = np.zeros(ring.phi, dtype=np.int64)
    for j, c in enumerate(x.vec):
        if c:
            vec += int(c) * ring.power[(j * step) % ring.e]
    return Cyclo(ring, vec)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac = []
    m = p - 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            fac.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        fac.append(m)
    for r in range(2, p):
        if all(pow(r, (p - 1) // q, p) != 1 for q in fac):
            return r
    raise GrowthLabError("no primitive root found")


# -- class functions built from actions -----------------------------------


def trivial_character(G: PermGroup) -> ClassFunction:
    tab = character_table(G)
    one = tab.ring.from_int(1)
    return ClassFunction(G, [one] * tab.k)


def regular_character(G: PermGroup) -> ClassFunction:
    tab = character_table(G)
    vals = [tab.ring.from_int(G.order())] + [tab.ring.zero()] * (tab.k - 1)
    return ClassFunction(G, vals)


def permutation_character(G: PermGroup, Y: PermGroup) -> ClassFunction:
    """g -> number of fixed cosets of G/Y; equals the induced trivial character."""
    tab = character_table(G)
    u = G.universe()
    act = u.coset_action_ids(u.ids_of_group(Y))
    vals = []
    for rep in tab.classes.reps:
        perm = act.perm_of(u.id_of(rep))
        fixed = sum(1 for i, x in enumerate(perm.images) if i == x)
        vals.append(tab.ring.from_int(fixed))
    return ClassFunction(G, vals)


def restrict(chi: ClassFunction, H: PermGroup) -> ClassFunction:
    """Restriction of a class function of G to a subgroup H."""
    G = chi.group
    tabG = character_table(G)
    clH = conjugacy_classes(H)
    vals = [chi.values[tabG.classes.class_of(rep)] for rep in clH.reps]
    return ClassFunction(H, vals)


def induce(chi: ClassFunction, G: PermGroup) -> ClassFunction:
    """Induction of a class function of H <= G up to G."""
    H = chi.group
    if not H.is_subgroup_of(G):
        raise NotASubgroup("induction requires H <= G")
    tabG = character_table(G)
    clG, clH = tabG.classes, conjugacy_classes(H)
    hvals = _to_ring(chi.values, tabG.ring)
    zero = tabG.ring.zero()
    vals = [zero] * clG.k
    for j, rep in enumerate(clH.reps):
        c = clG.class_of(rep)
        # |C_G(g)| / |C_H(h)| is an integer by Lagrange
        num = G.order() * clH.sizes[j]
        den = H.order() * clG.sizes[c]
        assert num % den == 0
        vals[c] = vals[c] + (num // den) * hvals[j]
    return ClassFunction(G, vals)


def linear_characters(H: PermGroup) -> list[ClassFunction]:
    """The |H/H'| degree-one characters, lifted from the abelian quotient."""
    tab = character_table(H)
    u = H.universe()
    derived = u.derived_ids([int(g) for g in u.gen_ids])
    act = u.coset_action_ids(derived.astype(np.uint32))
    Q = act.image_group()
    tabQ = character_table(Q)
    images = [tabQ.classes.class_of(act.perm_of(u.id_of(rep)))
              for rep in tab.classes.reps]
    out = []
    for i in range(tabQ.k):
        assert tabQ.degrees[i] == 1
        vals = [_convert(tabQ.chars[i][c], tab.ring) for c in images]
        out.append(ClassFunction(H, vals))
    out.sort(key=lambda f: [tuple(int(x) for x in v.vec) for v in f.values])
    return out


def is_monomial(G: PermGroup) -> bool:
    """True iff every irreducible is induced from a linear character.

    Exhaustive search: subgroup classes by increasing index, linear
    characters in deterministic order, early exit per irreducible.
    """
    tab = character_table(G)
    lat = full_lattice(G)
    by_index: dict[int, list] = {}
    for c in lat.classes:
        by_index.setdefault(c.index, []).append(c)
    for i in range(tab.k):
        d = tab.degrees[i]
        if d == 1:
            continue
        chi = tab.irr(i)
        found = False
        for cls in by_index.get(d, []):
            H = cls.rep
            for lam in linear_characters(H):
                if induce(lam, G) == chi:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


# -- representation growth -------------------------------------------------


def rep_growth(G: PermGroup, n_max: int | None = None) -> GrowthTable:
    """Rep_n(G): irreducibles of degree <= n (all have finite image here)."""
    return character_table(G).rep_growth(n_max)


def constituents(G: PermGroup, Y: PermGroup) -> list[tuple[int, int]]:
    """(degree, multiplicity) for each irreducible constituent of (1_Y)^G."""
    tab = character_table(G)
    pc = permutation_character(G, Y)
    out = []
    for i in range(tab.k):
        m = tab.multiplicity(pc, i)
        if m:
            out.append((tab.degrees[i], m))
    return sorted(out)


def rep_growth_rel(G: PermGroup, Y: PermGroup,
                   n_max: int | None = None) -> GrowthTable:
    """Rep_n(G, Y): irreducibles with a non-zero Y-fixed vector, degree <= n."""
    n_max = G.order() if n_max is None else min(n_max, G.order())
    degs = [d for d, _ in constituents(G, Y)]
    pairs = [(d, sum(1 for d2 in degs if d2 <= d)) for d in sorted(set(degs))]
    return _table_from_pairs(pairs, str(G), "rep_rel", n_max, baseline=str(Y))


def zeta(G: PermGroup, t: int, cap: int | None = None) -> Fraction:
    return character_table(G, cap).zeta(t)


def quasirandomness_eps(G: PermGroup) -> Fraction:
    """Certified lower bound on max eps with dim(pi) >= |G|^eps for all
    non-trivial irreducibles; exactly 0 when a non-trivial linear
    character exists.  (The true value log2(dmin)/log2|G| is irrational
    in general; exact checks downstream use the integer pair instead.)
    """
    if G.order() == 1:
        raise GrowthLabError("quasirandomness undefined for the trivial group")
    dmin = character_table(G).min_nontrivial_degree()
    if dmin == 1:
        return Fraction(0)
    lo_num, _ = log2_bounds(dmin, 40)
    _, hi_den = log2_bounds(G.order(), 40)
    return lo_num / hi_den
