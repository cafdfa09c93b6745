from hypothesis import given, strategies as st

from growthlab.cyclotomic import Cyclo, CycloRing, cyclotomic_poly


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    # degree is Euler phi
    assert len(cyclotomic_poly(60)) - 1 == 16
    assert len(cyclotomic_poly(1260)) - 1 == 288


def test_root_orders():
    for e in (6, 12, 30):
        r = CycloRing(e)
        z = r.root(e)
        acc = r.from_int(1)
        for k in range(1, e + 1):
            acc = acc * z
            if k < e:
                assert not acc == 1
        assert acc == 1


def test_root_sums_vanish():
    for e in (4, 6, 12, 30):
        r = CycloRing(e)
        s = r.zero()
        for j in range(e):
            s = s + r.root(e, j)
        assert s.is_zero()


def test_conjugation_is_inverse():
    r = CycloRing(12)
    for j in range(12):
        z = r.root(12, j)
        assert z * z.conj() == 1
        assert z.conj() == r.root(12, (12 - j) % 12)


def test_subring_embedding():
    r = CycloRing(12)
    # zeta_3 inside Q(zeta_12), satisfies 1 + z + z^2 = 0
    z3 = r.root(3)
    assert (r.from_int(1) + z3 + z3 * z3).is_zero()
    # zeta_4 squared is -1
    z4 = r.root(4)
    assert z4 * z4 == r.from_int(-1)


def test_rational_detection():
    r = CycloRing(8)
    z = r.root(8)
    w = z * z.conj() * r.from_int(7)
    assert w.is_int() and w.as_int() == 7
    assert not z.is_int()


ints = st.integers(min_value=-30, max_value=30)


@given(st.lists(ints, min_size=4, max_size=4),
       st.lists(ints, min_size=4, max_size=4),
       st.lists(ints, min_size=4, max_size=4))
def test_ring_axioms_in_q8(a, b, c):
    import numpy as np
    r = CycloRing(8)  # phi(8) = 4
    x = Cyclo(r, np.array(a, dtype=np.int64))
    y = Cyclo(r, np.array(b, dtype=np.int64))
    z = Cyclo(r, np.array(c, dtype=np.int64))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).conj() == x.conj() * y.conj()


def test_norm_of_gaussian_integer():
    r = CycloRing(4)
    import numpy as np
    x = Cyclo(r, np.array([3, 2], dtype=np.int64))  # 3 + 2i
    assert x.norm_squared() == 13
