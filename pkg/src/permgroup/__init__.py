"""Finite permutation groups: closure, orbits, stabilizers, cosets, quotients."""

from .action import GroupAction
from .dsl import parse_group
from .group import (GroupTable, PermutationGroup, alternating_group, block_stabilizer,
                    conjugacy_classes, conjugate_subgroup, cosets, cyclic_group,
                    dihedral_group, generate_group, group_table, normalizer, orbits,
                    quotient_table, subgroup, symmetric_group, tables_isomorphic,
                    trivial_group)
from .permutation import DisjointSet, Permutation, SetPartition, set_partitions
