"""Exact arithmetic in Z[zeta_e], the ring of integers of Q(zeta_e).

Elements are integer coordinate vectors over the power basis
1, z, ..., z^(phi(e)-1) with z = exp(2*pi*i/e); products reduce modulo
the e-th cyclotomic polynomial, so representations are canonical and
equality is vector equality.  Character values and their inner products
stay in this ring (scaled by the group order), which keeps every
downstream identity an exact integer statement.
"""

from __future__ import annotations

from functools import lru_cache
import numpy as np


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, constant term first."""
    if e == 1:
        return (-1, 1)
    # divide x^e - 1 by the Phi_d for proper divisors d of e
    f = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            f = _poly_divexact(f, list(cyclotomic_poly(d)))
    return tuple(f)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, den[dn])
        assert r == 0, "non-exact cyclotomic division"
        out[i - dn] = q
        for j, dj in enumerate(den):
            num[i - dn + j] -= q * dj
    assert all(c == 0 for c in num), "non-exact cyclotomic division"
    return out


class CycloRing:
    """Reduction data for Z[zeta_e]; one instance per exponent e."""

    _instances: dict[int, "CycloRing"] = {}

    def __new__(cls, e: int):
        if e not in cls._instances:
            inst = super().__new__(cls)
            inst._init(e)
            cls._instances[e] = inst
        return cls._instances[e]

    def _init(self, e: int) -> None:
        self.e = e
        phi_poly = cyclotomic_poly(e)
        self.phi = len(phi_poly) - 1
        d = self.phi
        # rows for x^(d+t) mod Phi_e, t = 0..d-2
        top = np.array(phi_poly[:d], dtype=np.int64)
        rows = np.empty((max(d - 1, 0), d), dtype=np.int64)
        cur = -top  # x^d
        for t in range(d - 1):
            rows[t] = cur
            nxt = np.roll(cur, 1)
            lead = cur[d - 1]
            nxt[0] = 0
            nxt -= lead * top
            cur = nxt
        self.red_rows = rows
        # power[t] = x^t mod Phi_e for t = 0..e-1
        power = np.zeros((e, d), dtype=np.int64)
        v = np.zeros(d, dtype=np.int64)
        v[0] = 1
        for t in range(e):
            power[t] = v
            nxt = np.roll(v, 1)
            lead = v[d - 1]
            nxt[0] = 0
            nxt = nxt - lead * top
            v = nxt
        self.power = power
        self.conj_mat = np.stack(
            [power[(e - j) % e] for j in range(d)], axis=0)

    def reduce_product(self, w: np.ndarray) -> np.ndarray:
        d = self.phi
        if len(w) <= d:
            out = np.zeros(d, dtype=np.int64)
            out[:len(w)] = w
            return out
        return w[:d] + w[d:] @ self.red_rows[:len(w) - d]

    def zero(self) -> "Cyclo":
        return Cyclo(self, np.zeros(self.phi, dtype=np.int64))

    def from_int(self, c: int) -> "Cyclo":
        v = np.zeros(self.phi, dtype=np.int64)
        v[0] = c
        return Cyclo(self, v)

    def root(self, m: int, j: int = 1) -> "Cyclo":
        """zeta_m^j as an element of Z[zeta_e]; m must divide e."""
        assert self.e % m == 0, f"{m} does not divide exponent {self.e}"
        t = (j % m) * (self.e // m)
        return Cyclo(self, self.power[t].copy())


class Cyclo:
    """An element of Z[zeta_e] in reduced power-basis coordinates."""

    __slots__ = ("ring", "vec")

    def __init__(self, ring: CycloRing, vec: np.ndarray):
        self.ring = ring
        self.vec = vec

    def __add__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(self.ring, self.vec + other.vec)

    def __sub__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(self.ring, self.vec - other.vec)

    # int64 headroom: |coeff| < 2^20 on both factors keeps the convolution
    # plus reduction far below 2^63 (phi <= 2^9, reduction rows <= 2)
    _MUL_GUARD = 1 << 20

    def __mul__(self, other) -> "Cyclo":
        if isinstance(other, int):
            return Cyclo(self.ring, self.vec * other)
        assert (abs(self.vec).max(initial=0) < self._MUL_GUARD
                and abs(other.vec).max(initial=0) < self._MUL_GUARD), \
            "cyclotomic product would risk int64 overflow"
        w = np.convolve(self.vec, other.vec)
        return Cyclo(self.ring, self.ring.reduce_product(w))

    __rmul__ = __mul__

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.ring, -self.vec)

    def conj(self) -> "Cyclo":
        """Complex conjugate (zeta -> zeta^-1)."""
        return Cyclo(self.ring, self.vec @ self.ring.conj_mat)

    def norm_squared(self) -> "Cyclo":
        return self * self.conj()

    def is_zero(self) -> bool:
        return not self.vec.any()

    def is_int(self) -> bool:
        return not self.vec[1:].any()

    def as_int(self) -> int:
        assert self.is_int(), f"not a rational integer: {self.vec}"
        return int(self.vec[0])

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_int() and int(self.vec[0]) == other
        return self.ring is other.ring and np.array_equal(self.vec, other.vec)

    def __hash__(self) -> int:
        return hash((self.ring.e, self.vec.tobytes()))

    def __repr__(self) -> str:
        if self.is_int():
            return str(int(self.vec[0]))
        terms = [f"{c}*z{self.ring.e}^{j}" for j, c in enumerate(self.vec) if c]
        return " + ".join(terms)
