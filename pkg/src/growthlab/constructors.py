"""Constructors for the named group families, as explicit permutation groups.

Covers symmetric/alternating groups, cyclic and dihedral groups acting on
m points, PSL(2,q) on the projective line, the permutational wreath
product (C_p)^k x| Alt(k) on p*k points, the zero-sum ("deleted") module
semidirect product V_k x| Alt(k) acting affinely on the p^(k-1) vectors of
V_k, and direct products on disjoint point sets.

Each family comes with a closed-form order that the test suite checks
against the strong-generating-set order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product

from . import config
from .errors import CorpusParseError, ResourceCapExceeded
from .group import PermGroup, direct_product
from .perm import Permutation

KINDS = ("sym", "alt", "cyclic", "dihedral", "psl2", "wreath", "deleted", "product")


@dataclass(frozen=True)
class GroupSpec:
    """Parsed text form of a constructible group, e.g. ``deleted 3 5``."""

    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["GroupSpec", ...] = field(default=())

    def __str__(self) -> str:
        if self.kind == "product":
            return "product " + " ; ".join(str(f) for f in self.factors)
        return " ".join([self.kind] + [str(p) for p in self.params])

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        text = text.strip()
        if text.startswith("product"):
            body = text[len("product"):].strip()
            parts = [p.strip() for p in body.split(";")]
            if len(parts) < 2 or any(not p for p in parts):
                raise CorpusParseError(f"product needs >= 2 factors: {text!r}")
            factors = tuple(cls.parse(p) for p in parts)
            if any(f.kind == "product" for f in factors):
                raise CorpusParseError(f"nested products are not supported: {text!r}")
            return cls("product", (), factors)
        toks = text.split()
        if not toks or toks[0] not in KINDS:
            raise CorpusParseError(f"unknown group spec {text!r}")
        try:
            params = tuple(int(t) for t in toks[1:])
        except ValueError:
            raise CorpusParseError(f"bad parameters in {text!r}") from None
        return cls(toks[0], params)

    def build(self) -> PermGroup:
        return build_group(self)


def build_group(spec: GroupSpec) -> PermGroup:
    if spec.kind == "product":
        G = spec.factors[0].build()
        for f in spec.factors[1:]:
            G = direct_product(G, f.build())
        return G
    builders = {
        "sym": symmetric, "alt": alternating, "cyclic": cyclic,
        "dihedral": dihedral, "psl2": psl2, "wreath": wreath_cyc_alt,
        "deleted": deleted_semidirect,
    }
    try:
        return builders[spec.kind](*spec.params)
    except TypeError:
        raise CorpusParseError(
            f"wrong parameter count for {spec.kind}: {spec.params}") from None


def symmetric(k: int) -> PermGroup:
    """Sym(k) in its natural action; order k!."""
    if k < 1:
        raise CorpusParseError(f"sym needs k >= 1, got {k}")
    gens = []
    if k >= 2:
        gens.append(Permutation.from_cycles(k, [(0, 1)]))
    if k >= 3:
        gens.append(Permutation.from_cycles(k, [tuple(range(k))]))
    return PermGroup(k, gens)


def alternating(k: int) -> PermGroup:
    """Alt(k) in its natural action; order k!/2 for k >= 2."""
    if k < 1:
        raise CorpusParseError(f"alt needs k >= 1, got {k}")
    gens = []
    if k >= 3:
        gens.append(Permutation.from_cycles(k, [(0, 1, 2)]))
    if k >= 4:
        long = tuple(range(k)) if k % 2 == 1 else tuple(range(1, k))
        gens.append(Permutation.from_cycles(k, [long]))
    return PermGroup(k, gens)


def cyclic(m: int) -> PermGroup:
    """C_m acting regularly on m points."""
    if m < 1:
        raise CorpusParseError(f"cyclic needs m >= 1, got {m}")
    if m == 1:
        return PermGroup(1)
    return PermGroup(m, [Permutation.from_cycles(m, [tuple(range(m))])])


def dihedral(m: int) -> PermGroup:
    """D_2m acting on the m-gon; order 2m."""
    if m < 3:
        raise CorpusParseError(f"dihedral needs m >= 3, got {m}")
    rot = Permutation.from_cycles(m, [tuple(range(m))])
    refl = Permutation([(-i) % m for i in range(m)])
    return PermGroup(m, [rot, refl])


def psl2(q: int) -> PermGroup:
    """PSL(2,q) on the q+1 points of the projective line, q an odd prime.

    Points 0..q-1 are the affine line, point q is infinity; generators are
    x -> x+1 and x -> -1/x.  Order q(q^2-1)/2.  Restricted to q <= 13 to
    keep character tables and subgroup scans inside the runtime budget.
    """
    if q < 5 or q > 13 or not _is_prime(q) or q % 2 == 0:
        raise CorpusParseError(f"psl2 needs an odd prime 5 <= q <= 13, got {q}")
    inf = q
    t = [((x + 1) % q) for x in range(q)] + [inf]
    s = [0] * (q + 1)
    s[0], s[inf] = inf, 0
    for x in range(1, q):
        s[x] = (-pow(x, q - 2, q)) % q
    return PermGroup(q + 1, [Permutation(t), Permutation(s)])


def wreath_cyc_alt(p: int, k: int) -> PermGroup:
    """(C_p)^k x| Alt(k), imprimitive on k blocks of p points; order p^k * k!/2."""
    if not _is_prime(p):
        raise CorpusParseError(f"wreath needs p prime, got {p}")
    if k < 3:
        raise CorpusParseError(f"wreath needs k >= 3, got {k}")
    if p * k > 10_000:
        raise ResourceCapExceeded(f"wreath degree {p * k} too large")
    degree = p * k
    rot0 = Permutation.from_cycles(degree, [tuple(range(p))])
    gens = [rot0]
    for a in _alt_gen_cycles(k):
        images = list(range(degree))
        for block in range(k):
            for j in range(p):
                images[block * p + j] = a[block] * p + j
        gens.append(Permutation(images))
    return PermGroup(degree, gens)


def deleted_semidirect(p: int, k: int) -> PermGroup:
    """V_k x| Alt(k) with V_k the zero-sum submodule of (F_p)^k.

    Acts on the p^(k-1) vectors of V_k: translations by V_k plus Alt(k)
    permuting coordinates.  Vectors are enumerated in lexicographic order
    of their coordinate tuples, which fixes all permutation encodings.
    Order p^(k-1) * k!/2.
    """
    if not _is_prime(p):
        raise CorpusParseError(f"deleted needs p prime, got {p}")
    if k < 3:
        raise CorpusParseError(f"deleted needs k >= 3, got {k}")
    n_points = p ** (k - 1)
    if n_points > config.ELEMENT_CAP:
        raise ResourceCapExceeded(
            f"deleted module has {n_points} points, above the element cap")
    vectors = [v for v in iter_product(range(p), repeat=k) if sum(v) % p == 0]
    index = {v: i for i, v in enumerate(vectors)}
    assert len(vectors) == n_points

    # translation by e_0 - e_1 (its Alt(k)-conjugates span V_k for k >= 3)
    w = (1, p - 1) + (0,) * (k - 2)
    trans = Permutation([index[tuple((vi + wi) % p for vi, wi in zip(v, w))]
                         for v in vectors])
    gens = [trans]
    for a in _alt_gen_cycles(k):
        inv = [0] * k
        for i, x in enumerate(a):
            inv[x] = i
        gens.append(Permutation([index[tuple(v[inv[i]] for i in range(k))]
                                 for v in vectors]))
    return PermGroup(n_points, gens)


def point_stabilizer(G: PermGroup, pt: int) -> PermGroup:
    """Stabilizer of a point, via the stabilizer chain."""
    return G.point_stabilizer(pt)


def _alt_gen_cycles(k: int) -> list[tuple[int, ...]]:
    """Image tuples of the standard two generators of Alt(k), k >= 3."""
    gens = []
    three = list(range(k))
    three[0], three[1], three[2] = 1, 2, 0
    gens.append(tuple(three))
    if k >= 4:
        if k % 2 == 1:
            long = tuple(list(range(1, k)) + [0])
        else:
            long = tuple([0] + list(range(2, k)) + [1])
        gens.append(long)
    return gens


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


__all__ = [
    "GroupSpec", "build_group", "symmetric", "alternating", "cyclic",
    "dihedral", "psl2", "wreath_cyc_alt", "deleted_semidirect",
    "point_stabilizer", "direct_product",
]
