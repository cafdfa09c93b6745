"""growthlab: exact abelianization / representation growth for finite groups.

Core objects: Permutation, PermGroup (deterministic strong generating
sets), subgroup lattices, exact character tables, growth tables, and a
corpus verification harness exposed through the ``growthlab`` CLI.
"""

from .perm import Permutation
from .group import PermGroup, direct_product
from .constructors import (GroupSpec, symmetric, alternating, cyclic,
                           dihedral, psl2, wreath_cyc_alt,
                           deleted_semidirect, point_stabilizer)
from .subgroups import (SubgroupClass, SubgroupLattice, subgroup_classes,
                        count_subgroups, intermediate_subgroups,
                        normal_subgroups, min_abelian_normal_index)
from .growth import (GrowthTable, abelianization_order, ab_growth,
                     ab_growth_rel, sub_growth, largest_abelian_section,
                     relative_ab_order, is_weakly_abnormal, bab_chain_bound)
from .chartab import (ConjugacyClasses, CharacterTable, ClassFunction,
                      conjugacy_classes, character_table, class_count,
                      permutation_character, induce, restrict,
                      linear_characters, is_monomial, rep_growth,
                      rep_growth_rel, zeta, quasirandomness_eps)
from .kernel import KERNEL

__all__ = [
    "Permutation", "PermGroup", "direct_product", "GroupSpec",
    "symmetric", "alternating", "cyclic", "dihedral", "psl2",
    "wreath_cyc_alt", "deleted_semidirect", "point_stabilizer",
    "SubgroupClass", "SubgroupLattice", "subgroup_classes",
    "count_subgroups", "intermediate_subgroups", "normal_subgroups",
    "min_abelian_normal_index", "GrowthTable", "abelianization_order",
    "ab_growth", "ab_growth_rel", "sub_growth", "largest_abelian_section",
    "relative_ab_order", "is_weakly_abnormal", "bab_chain_bound",
    "ConjugacyClasses", "CharacterTable", "ClassFunction",
    "conjugacy_classes", "character_table", "class_count",
    "permutation_character", "induce", "restrict", "linear_characters",
    "is_monomial", "rep_growth", "rep_growth_rel", "zeta",
    "quasirandomness_eps", "KERNEL",
]

__version__ = "0.1.0"
