from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

import oracle
from growthlab import (PermGroup, Permutation, alternating, character_table,
                       class_count, conjugacy_classes, cyclic, dihedral,
                       deleted_semidirect, induce, is_monomial,
                       linear_characters, permutation_character, psl2,
                       quasirandomness_eps, rep_growth, rep_growth_rel,
                       restrict, symmetric, wreath_cyc_alt, zeta)
from growthlab.chartab import constituents, regular_character, trivial_character
from growthlab.errors import ResourceCapExceeded


def test_conjugacy_classes_s3():
    cl = conjugacy_classes(symmetric(3))
    assert cl.k == 3
    assert sorted(cl.sizes) == [1, 2, 3]
    assert cl.sizes[0] == 1 and cl.reps[0].is_identity()


def test_conjugacy_classes_match_oracle():
    for G in (symmetric(4), alternating(5), dihedral(7), cyclic(12),
              deleted_semidirect(2, 3)):
        k = oracle.conjugacy_class_count(G.degree,
                                         [g.images for g in G.generators])
        assert conjugacy_classes(G).k == k
        assert sum(conjugacy_classes(G).sizes) == G.order()


@settings(max_examples=15, deadline=None)
@given(st.lists(st.permutations(list(range(6))), min_size=1, max_size=2))
def test_class_count_random_vs_oracle(gen_images):
    G = PermGroup(6, [Permutation(p) for p in gen_images])
    assume(G.order() <= 360)
    want = oracle.conjugacy_class_count(G.degree,
                                        [g.images for g in G.generators])
    assert class_count(G) == want
    tab = character_table(G)
    assert tab.sum_of_squares() == G.order()


def test_class_count_examples():
    assert class_count(symmetric(5)) == 7
    assert class_count(alternating(5)) == 5
    assert class_count(cyclic(12)) == 12


def test_class_of():
    G = symmetric(4)
    cl = conjugacy_classes(G)
    for i, rep in enumerate(cl.reps):
        for g in G.generators:
            assert cl.class_of(rep.conjugate(g)) == i


def test_degrees_s3_dihedral_cyclic():
    assert sorted(character_table(symmetric(3)).degrees) == [1, 1, 2]
    for p in (5, 7, 11, 13):
        degs = sorted(character_table(dihedral(p)).degrees)
        assert degs == [1, 1] + [2] * ((p - 1) // 2)
    assert character_table(cyclic(12)).degrees == [1] * 12


def test_degrees_a5_s4():
    assert sorted(character_table(alternating(5)).degrees) == [1, 3, 3, 4, 5]
    assert sorted(character_table(symmetric(4)).degrees) == [1, 1, 2, 3, 3]


def test_degree_lists_bigger_groups():
    # regression pins; each list satisfies sum d^2 = |G| with k(G) entries
    want = {
        ("sym", 6): [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16],
        ("alt", 6): [1, 5, 5, 8, 8, 9, 10],
        ("alt", 7): [1, 6, 10, 10, 14, 14, 15, 21, 35],
        ("psl2", 7): [1, 3, 3, 6, 7, 8],
        ("psl2", 11): [1, 5, 5, 10, 10, 11, 12, 12],
        ("psl2", 13): [1, 7, 7, 12, 12, 12, 13, 14, 14],
    }
    builders = {"sym": symmetric, "alt": alternating, "psl2": psl2}
    for (kind, k), degrees in want.items():
        G = builders[kind](k)
        assert sorted(character_table(G).degrees) == degrees, (kind, k)
        assert sum(d * d for d in degrees) == G.order()


def test_orthogonality_and_sum_of_squares():
    for G in (symmetric(3), symmetric(4), alternating(5), dihedral(13),
              psl2(7), cyclic(30), deleted_semidirect(2, 4)):
        tab = character_table(G)
        assert tab.sum_of_squares() == G.order()
        assert tab.check_orthogonality()


def test_linear_character_count_is_abelianization():
    for G in (symmetric(3), symmetric(4), alternating(4), cyclic(12),
              dihedral(7), wreath_cyc_alt(2, 3)):
        lams = linear_characters(G)
        want = G.order() // G.derived_subgroup().order()
        assert len(lams) == want
        assert sum(1 for d in character_table(G).degrees if d == 1) == want


def test_rep_growth():
    t = rep_growth(symmetric(3))
    assert t(1) == 2 and t(2) == 3
    ta = rep_growth(alternating(5))
    assert ta(1) == 1 and ta(3) == 3 and ta(4) == 4 and ta(5) == 5
    # Rep_1(G) = |G/G'|
    for G in (symmetric(4), dihedral(11), cyclic(6)):
        assert rep_growth(G)(1) == G.order() // G.derived_subgroup().order()


def test_zeta_values():
    assert zeta(alternating(5), 3) == Fraction(237103, 216000)
    assert zeta(PermGroup(3), 5) == 1
    for G in (symmetric(3), alternating(4)):
        assert zeta(G, 2) > 1


def test_permutation_character():
    G = symmetric(4)
    Y = G.point_stabilizer(0)
    pc = permutation_character(G, Y)
    assert pc.values[0] == 4  # degree = number of cosets
    tab = character_table(G)
    mults = [tab.multiplicity(pc, i) for i in range(tab.k)]
    got = sorted(tab.degrees[i] for i, m in enumerate(mults) if m)
    assert got == [1, 3] and all(m in (0, 1) for m in mults)
    # Y = G: trivial character; Y = 1: regular character
    assert permutation_character(G, G) == trivial_character(G)
    assert permutation_character(G, PermGroup(4)) == regular_character(G)


def test_induce_restrict():
    S3 = symmetric(3)
    A3 = S3.derived_subgroup()
    lams = linear_characters(A3)
    tab = character_table(S3)
    ind = [induce(l, S3) for l in lams]
    deg2 = next(tab.irr(i) for i in range(3) if tab.degrees[i] == 2)
    assert sum(1 for f in ind if f == deg2) == 2  # both nontrivial linears
    assert induce(trivial_character(A3), S3) == permutation_character(S3, A3)
    # restriction to the whole group is the identity
    assert restrict(tab.irr(2), S3) == tab.irr(2)


def test_frobenius_reciprocity():
    G = symmetric(4)
    H = G.derived_subgroup()
    tabG, tabH = character_table(G), character_table(H)
    for i in range(tabH.k):
        for j in range(tabG.k):
            lhs = tabG.multiplicity(induce(tabH.irr(i), G), j)
            val = tabH.inner_times_order(tabH.irr(i), restrict(tabG.irr(j), H))
            assert val.as_int() % H.order() == 0
            assert lhs == val.as_int() // H.order()


def test_monomial():
    assert is_monomial(symmetric(4)) is True
    assert is_monomial(alternating(5)) is False
    assert is_monomial(cyclic(30)) is True
    assert is_monomial(dihedral(7)) is True
    assert is_monomial(alternating(4)) is True


def test_quasirandomness():
    assert quasirandomness_eps(symmetric(4)) == 0
    eps = quasirandomness_eps(alternating(5))
    assert Fraction(26, 100) < eps < Fraction(27, 100)
    eps7 = quasirandomness_eps(psl2(7))
    assert Fraction(21, 100) < eps7 < Fraction(22, 100)


def test_rel_rep_growth_dihedral():
    for p in (3, 5, 7, 11, 13):
        G = dihedral(p)
        Y = G.point_stabilizer(0)
        cons = constituents(G, Y)
        assert cons == [(1, 1)] + [(2, 1)] * ((p - 1) // 2)
        t = rep_growth_rel(G, Y)
        assert t(1) == 1 and t(2) == 1 + (p - 1) // 2


def test_rel_rep_growth_sym():
    for k in (4, 5, 6):
        G = symmetric(k)
        t = rep_growth_rel(G, G.point_stabilizer(0))
        assert t(G.order()) == 2
        assert constituents(G, G.point_stabilizer(0)) == [(1, 1), (k - 1, 1)]
    # Y = 1: everything has a fixed vector
    G = symmetric(4)
    t = rep_growth_rel(G, PermGroup(4))
    ta = rep_growth(G)
    assert all(t(n) == ta(n) for n in range(1, 25))


def test_table_cap():
    with pytest.raises(ResourceCapExceeded):
        character_table(symmetric(8))  # order 40320 > default cap


def test_kernel_classes():
    G = symmetric(4)
    tab = character_table(G)
    for i in range(tab.k):
        kcls = tab.kernel_classes(i)
        ker_order = sum(tab.classes.sizes[l] for l in kcls)
        assert G.order() % ker_order == 0
    # the sign character has kernel A4 (order 12)
    sign = next(i for i in range(tab.k)
                if tab.degrees[i] == 1 and tab.irr(i) != trivial_character(G))
    assert sum(tab.classes.sizes[l] for l in tab.kernel_classes(sign)) == 12
