import pytest

import oracle
from growthlab import (PermGroup, Permutation, ab_growth,
                       ab_growth_rel, abelianization_order, alternating,
                       bab_chain_bound, cyclic, deleted_semidirect, dihedral,
                       is_weakly_abnormal, largest_abelian_section,
                       relative_ab_order, sub_growth, symmetric)
from growthlab.errors import NotASubgroup
from growthlab.growth import GrowthTable


def test_abelianization_order_examples():
    assert abelianization_order(symmetric(3)) == 2
    assert abelianization_order(cyclic(12)) == 12
    assert abelianization_order(alternating(5)) == 1


def test_ab_growth_examples():
    t = ab_growth(symmetric(3))
    assert t(1) == 2 and t(2) == 3 and t(6) == 3
    t4 = ab_growth(symmetric(4))
    assert t4(3) == 4
    tc = ab_growth(cyclic(30))
    assert all(tc(n) == 30 for n in (1, 7, 30))


@pytest.mark.parametrize("G", [symmetric(3), symmetric(4), alternating(4),
                               dihedral(5), cyclic(12)],
                         ids=lambda G: f"order{G.order()}")
def test_ab_growth_bruteforce(G):
    brute = oracle.ab_growth(G.degree, [g.images for g in G.generators],
                             G.order())
    t = ab_growth(G)
    assert all(t(n) == brute[n] for n in brute)


def test_growth_table_monotone_and_dense_read():
    t = ab_growth(symmetric(4))
    values = [t(n) for n in range(1, 25)]
    assert values == sorted(values)
    assert t(10 ** 9) == t(24)


def test_growth_table_requires_start_at_1():
    with pytest.raises(AssertionError):
        GrowthTable("g", "ab", 5, {2: 3})


def test_largest_abelian_section():
    assert largest_abelian_section(symmetric(4)) == 4
    assert largest_abelian_section(cyclic(30)) == 30
    assert largest_abelian_section(deleted_semidirect(3, 5)) >= 81


def test_relative_ab_order():
    D10 = dihedral(5)
    Y = D10.point_stabilizer(0)
    assert relative_ab_order(D10, Y) == 1
    C6 = cyclic(6)
    Y2 = C6.subgroup([p for p in C6.elements() if p.order() == 2])
    assert relative_ab_order(C6, Y2) == 3
    # trivial Y reduces to the absolute abelianization
    triv = PermGroup(6)
    assert relative_ab_order(C6, triv) == 6
    with pytest.raises(NotASubgroup):
        relative_ab_order(alternating(4),
                          PermGroup(4, [Permutation.parse("(0 1)", 4)]))


def test_ab_growth_rel_examples():
    for k in (4, 5, 6):
        G = symmetric(k)
        t = ab_growth_rel(G, G.point_stabilizer(0))
        assert all(t(n) == 1 for n in range(1, G.order() + 1))
    for p in (3, 5, 7):
        G = dihedral(p)
        t = ab_growth_rel(G, G.point_stabilizer(0))
        assert all(t(n) == 1 for n in range(1, 2 * p + 1))
    # trivial baseline coincides with the absolute table
    G = symmetric(4)
    t_rel = ab_growth_rel(G, PermGroup(4))
    t_abs = ab_growth(G)
    assert all(t_rel(n) == t_abs(n) for n in range(1, 25))


def test_weak_abnormality():
    D14 = dihedral(7)
    assert is_weakly_abnormal(D14, D14.point_stabilizer(0))
    S4 = symmetric(4)
    assert is_weakly_abnormal(S4, S4)  # Y = G
    S3 = symmetric(3)
    assert not is_weakly_abnormal(S3, S3.derived_subgroup())  # normal proper


def test_weak_abnormal_iff_flat_rel_table():
    cases = [(dihedral(7), dihedral(7).point_stabilizer(0)),
             (symmetric(4), symmetric(4).point_stabilizer(0)),
             (symmetric(3), symmetric(3).derived_subgroup()),
             (cyclic(6), PermGroup(6))]
    for G, Y in cases:
        flat = all(ab_growth_rel(G, Y)(n) == 1 for n in range(1, G.order() + 1))
        assert is_weakly_abnormal(G, Y) == flat


def test_bab_chain():
    S4 = symmetric(4)
    D8 = S4.subgroup([Permutation.parse("(0 1 2 3)", 4),
                      Permutation.parse("(0 2)", 4)])
    assert bab_chain_bound(S4, D8) == (4, 24)
    S3 = symmetric(3)
    assert bab_chain_bound(S3, S3.subgroup([Permutation.parse("(0 1)", 3)])) \
        == (2, 6)
    # H normal: N = H, bound reads |H/H'| <= |G:H| * |H/H'|
    A4 = S4.derived_subgroup()
    lhs, rhs = bab_chain_bound(S4, A4)
    assert lhs == 3 and rhs == 2 * 3


def test_hereditary_spot_checks():
    # ab_n(H) <= ab_{|G:H| n}(G) and ab_n(G) <= |G:H| ab_n(H)
    G = symmetric(4)
    for H in (G.point_stabilizer(0), G.derived_subgroup()):
        idx = G.order() // H.order()
        tG, tH = ab_growth(G), ab_growth(H)
        for n in range(1, H.order() + 1):
            assert tH(n) <= tG(idx * n)
        for n in range(1, G.order() + 1):
            assert tG(n) <= idx * tH(n)


def test_sub_growth():
    t = sub_growth(symmetric(3))
    assert t(1) == 1 and t(2) == 2 and t(3) == 5 and t(6) == 6
    t5 = sub_growth(symmetric(5))
    assert t5(120) == 156


def test_quotient_monotone():
    # ab_n(G/N) <= ab_n(G) through the coset action
    G = symmetric(4)
    img, _ = G.coset_action(G.normal_closure(
        [Permutation.parse("(0 1)(2 3)", 4)]))
    tq, tg = ab_growth(img), ab_growth(G)
    for n in range(1, 25):
        assert tq(n) <= tg(n)
