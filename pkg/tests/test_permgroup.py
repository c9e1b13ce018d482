"""Tests for permutations, set partitions and permutation groups."""

import pytest

from src.permgroup.action import GroupAction
from src.permgroup.dsl import parse_group, split_generators
from src.permgroup.group import (alternating_group, block_stabilizer, conjugacy_classes,
                                 conjugate_subgroup, cosets, cyclic_group, dihedral_group,
                                 generate_group, group_table, normalizer, orbits, quotient_table,
                                 subgroup, tables_isomorphic, trivial_group)
from src.permgroup.permutation import DisjointSet, Permutation, SetPartition, set_partitions
from src.utils.errors import SizeLimitError, ValidationError
from src.config.yaml_loader import Budgets


def perm(text, degree):
    return Permutation.parse(text, degree)


class TestPermutation:
    def test_composition_applies_right_factor_first(self):
        assert perm("(1 2)", 3) * perm("(2 3)", 3) == perm("(1 2 3)", 3)

    def test_inverse_and_identity(self):
        c = perm("(1 2 3)", 3)
        assert c.inverse() == perm("(1 3 2)", 3)
        assert (c * c.inverse()).is_identity()

    def test_notation(self):
        c = perm("(1 2 3)", 3)
        assert str(c) == "(1 2 3)"
        assert c.one_line() == "231"
        assert str(Permutation.identity(3)) == "()"
        assert Permutation.from_one_line([2, 3, 1]) == c

    def test_cycle_type_order_sign(self):
        p = perm("(1 2)(3 4)", 4)
        assert p.cycle_type() == (2, 2)
        assert p.order() == 2
        assert p.sign() == 1
        assert perm("(1 2)", 4).sign() == -1
        assert perm("(1 2 3)(4 5)", 5).order() == 6

    def test_parse_accepts_commas(self):
        assert perm("(1,2)(3,4)", 4) == perm("(1 2)(3 4)", 4)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValidationError):
            Permutation((0, 0, 1))

    def test_rejects_repeated_point(self):
        with pytest.raises(ValidationError):
            Permutation.from_cycles([(1, 2), (2, 3)], 3)

    def test_rejects_out_of_range_point(self):
        with pytest.raises(ValidationError):
            perm("(1 4)", 3)

    def test_degree_mismatch(self):
        with pytest.raises(ValidationError):
            perm("(1 2)", 2) * perm("(1 2)", 3)


class TestSetPartition:
    def test_parse_normalizes_block_order(self):
        a = SetPartition.parse("{3}{1,2}")
        assert a == SetPartition.parse("{1,2}{3}")
        assert str(a) == "{1,2}{3}"
        assert a.shape() == (2, 1)
        assert a.num_blocks == 2

    def test_join_and_refines(self):
        a = SetPartition.parse("{1,2}{3}{4}")
        b = SetPartition.parse("{1}{2}{3,4}")
        assert a.join(b) == SetPartition.parse("{1,2}{3,4}")
        assert a.refines(a.join(b))
        assert not a.join(b).refines(a)
        assert SetPartition.discrete(4).refines(a)

    def test_apply_moves_blocks(self):
        moved = SetPartition.parse("{1,2}{3}").apply(perm("(1 3)", 3))
        assert moved == SetPartition.parse("{1}{2,3}")

    def test_from_blocks_requires_cover(self):
        with pytest.raises(ValidationError):
            SetPartition.from_blocks([[0, 1]], 3)
        with pytest.raises(ValidationError):
            SetPartition.parse("{1,2}{2}")

    @pytest.mark.parametrize("degree,count", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_set_partition_counts(self, degree, count):
        parts = list(set_partitions(degree))
        assert len(parts) == count
        assert len(set(parts)) == count

    def test_disjoint_set(self):
        finder = DisjointSet(4)
        assert finder.union(0, 2)
        assert not finder.union(2, 0)
        assert finder.partition() == SetPartition.parse("{1,3}{2}{4}")


class TestGroups:
    @pytest.mark.parametrize("factory,degree,order", [
        (cyclic_group, 5, 5), (dihedral_group, 4, 8), (alternating_group, 4, 12), (cyclic_group, 1, 1),
    ])
    def test_named_orders(self, factory, degree, order):
        assert factory(degree).order == order

    def test_symmetric_orders(self, s1, s2, s3, s4):
        assert [g.order for g in (s1, s2, s3, s4)] == [1, 2, 6, 24]
        assert s4.is_symmetric()
        assert not cyclic_group(4).is_symmetric()

    def test_closure_respects_cap(self):
        with pytest.raises(SizeLimitError):
            generate_group(5, [perm("(1 2)", 5), perm("(1 2 3 4 5)", 5)], Budgets(group_order_cap=50))

    def test_generator_degree_checked(self):
        with pytest.raises(ValidationError):
            generate_group(3, [perm("(1 2)", 2)])

    def test_orbits(self, s3):
        assert orbits(s3) == SetPartition.full(3)
        assert orbits(trivial_group(3)) == SetPartition.discrete(3)
        assert orbits(generate_group(4, [perm("(1 2)", 4)])) == SetPartition.parse("{1,2}{3}{4}")

    def test_block_stabilizer(self, s3, s4):
        assert block_stabilizer(s3, SetPartition.parse("{1,2}{3}")).order == 2
        assert block_stabilizer(s4, SetPartition.parse("{1,2}{3,4}")).order == 4

    def test_normalizer(self, s3):
        c3 = subgroup(s3, cyclic_group(3).elements)
        assert normalizer(s3, c3).order == 6
        swap = subgroup(s3, [Permutation.identity(3), perm("(1 2)", 3)])
        assert normalizer(s3, swap) == swap

    def test_conjugate_subgroup(self, s3):
        swap = subgroup(s3, [Permutation.identity(3), perm("(1 2)", 3)])
        moved = conjugate_subgroup(s3, swap, perm("(2 3)", 3))
        assert perm("(1 3)", 3) in moved

    def test_cosets(self, s3):
        swap = subgroup(s3, [Permutation.identity(3), perm("(1 2)", 3)])
        left = cosets(s3, swap, "left")
        right = cosets(s3, swap, "right")
        assert len(left) == len(right) == 3
        assert left[0].is_identity() and right[0].is_identity()
        with pytest.raises(ValidationError):
            cosets(s3, swap, "middle")

    def test_subgroup_containment_checked(self, s3):
        with pytest.raises(ValidationError):
            cosets(s3, cyclic_group(4), "left")

    def test_quotient_table(self, s3):
        a3 = subgroup(s3, alternating_group(3).elements)
        table = quotient_table(s3, a3)
        assert table.order == 2
        assert table.is_group()
        assert all(table.lookup[g] == table.lookup[g * h] for g in s3.elements for h in a3.elements)

    def test_quotient_requires_normal(self, s3):
        swap = subgroup(s3, [Permutation.identity(3), perm("(1 2)", 3)])
        with pytest.raises(ValidationError):
            quotient_table(s3, swap)

    def test_group_table_inverse_and_order(self):
        table = group_table(cyclic_group(4))
        assert table.is_group()
        assert sorted(table.element_order(i) for i in range(4)) == [1, 2, 4, 4]
        assert all(table.multiply(i, table.inverse(i)) == table.identity_index for i in range(4))

    def test_conjugacy_classes(self, s3, s4):
        assert [len(c) for c in conjugacy_classes(s3)] == [1, 3, 2]
        assert sorted(len(c) for c in conjugacy_classes(s4)) == [1, 3, 6, 6, 8]
        assert sorted(len(c) for c in group_table(s4).conjugacy_classes()) == [1, 3, 6, 6, 8]

    def test_tables_isomorphic(self, s2, s3):
        a3 = subgroup(s3, alternating_group(3).elements)
        assert tables_isomorphic(group_table(s2), quotient_table(s3, a3))
        klein = generate_group(4, [perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)])
        assert klein.order == 4
        assert not tables_isomorphic(group_table(cyclic_group(4)), group_table(klein))
        assert tables_isomorphic(group_table(s3), group_table(dihedral_group(3)))


class TestGroupAction:
    def test_trivial_action_kernel(self):
        gens = [perm("(1 2)", 3), perm("(1 2 3)", 3)]
        action = GroupAction.from_generators(3, gens, [Permutation.identity(1)] * 2)
        assert action.kernel().order == 6
        assert action.action_image().order == 1

    def test_cyclic_onto_swap(self):
        action = GroupAction.from_generators(4, [perm("(1 2 3 4)", 4)], [perm("(1 2)", 2)])
        assert action.kernel().order == 2
        assert action.action_image().order == 2
        assert action.mapping()[perm("(1 3)(2 4)", 4)].is_identity()

    def test_rejects_non_homomorphism(self):
        with pytest.raises(ValidationError):
            GroupAction.from_generators(3, [perm("(1 2 3)", 3)], [perm("(1 2)", 2)])

    def test_natural_action_is_faithful(self, s3):
        assert GroupAction.natural(s3).kernel().order == 1


class TestGroupDsl:
    @pytest.mark.parametrize("text,degree,order", [
        ("S3", 3, 6), ("s4", 4, 24), ("C4", 4, 4), ("D5", 5, 10), ("A4", 4, 12),
        ("(1 2)(3 4); (1 3)", 4, 8), ("(1 2 3), (1 2)", 3, 6), ("(1 2)@4", 4, 2),
    ])
    def test_parse_group(self, text, degree, order):
        group = parse_group(text)
        assert (group.degree, group.order) == (degree, order)

    def test_split_generators(self):
        assert split_generators("(1,2),(3,4);(1 3)") == ["(1,2)", "(3,4)", "(1 3)"]

    @pytest.mark.parametrize("text", ["X3", "(1 2", "1 2)", "", "(1 2)@x", "S0"])
    def test_parse_errors(self, text):
        with pytest.raises(ValidationError):
            parse_group(text)
