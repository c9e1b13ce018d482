"""Tests for factorpower elements, enumeration, membership and Green structure."""

import pytest

from src.config.yaml_loader import Budgets
from src.factorpower.element import (FpElement, canonical_from_subset, identity_class, multiply,
                                     saturate, star, unit_class)
from src.factorpower.enumeration import enumerate_fp, idempotent_census, unit_census
from src.factorpower.membership import is_member
from src.factorpower.relation_io import (element_from_relation, element_to_relation,
                                         format_relation_text, parse_relation_text,
                                         relation_from_json, relation_to_json)
from src.factorpower.structure import (TraceZero, dclass_of, dclasses, faithful_group,
                                       green_related, idempotents, is_inverse_trace,
                                       trace_product, units_and_kernel)
from src.permgroup.action import GroupAction
from src.permgroup.group import cyclic_group, symmetric_group
from src.permgroup.permutation import Permutation, SetPartition
from src.utils.errors import SizeLimitError, ValidationError


def perm(text, degree=3):
    return Permutation.parse(text, degree)


class TestElement:
    def test_canonical_classes(self, s3):
        assert str(identity_class(s3)) == "{1}{2}{3}"
        assert str(canonical_from_subset(s3, s3.elements)) == "{1,2,3}{1,2,3}{1,2,3}"
        assert str(unit_class(s3, perm("(1 2 3)"))) == "{2}{3}{1}"

    def test_empty_subset_rejected(self, s3):
        with pytest.raises(ValidationError):
            canonical_from_subset(s3, [])

    def test_units_multiply_like_the_group(self, s3):
        for g in s3.elements:
            for h in s3.elements:
                assert unit_class(s3, g) * unit_class(s3, h) == unit_class(s3, g * h)

    def test_translations_are_unit_products(self, s3, fp_s3):
        sigma = perm("(1 2 3)")
        u = unit_class(s3, sigma)
        for a in fp_s3[::5]:
            assert a.left_translate(sigma) == u * a
            assert a.right_translate(sigma) == a * u

    def test_product_of_subsets(self, s3):
        a = [Permutation.identity(3), perm("(1 2)")]
        b = [perm("(2 3)")]
        products = [x * y for x in a for y in b]
        assert multiply(s3, canonical_from_subset(s3, a), canonical_from_subset(s3, b)) == \
            canonical_from_subset(s3, products)

    def test_saturate(self, s3):
        a = canonical_from_subset(s3, [Permutation.identity(3), perm("(1 2)")])
        assert sorted(saturate(s3, a)) == sorted([Permutation.identity(3), perm("(1 2)")])
        full = canonical_from_subset(s3, [Permutation.identity(3), perm("(1 2 3)"), perm("(1 3 2)")])
        assert len(saturate(s3, full)) == 6

    def test_star(self, s3, fp_s3):
        assert star(s3, unit_class(s3, perm("(1 2 3)"))) == unit_class(s3, perm("(1 3 2)"))
        for a in fp_s3:
            assert star(s3, star(s3, a)) == a

    def test_key_and_columns(self):
        a = FpElement.from_sets([[0, 1], [0], [2]])
        assert FpElement.from_key(3, a.key) == a
        assert a.column(0) == (0, 1)
        assert str(a) == "{1,2}{1}{3}"
        assert not a.is_unit_shaped()

    def test_column_validation(self):
        with pytest.raises(ValidationError):
            FpElement(2, (0, 1))
        with pytest.raises(ValidationError):
            FpElement(2, (1,))
        with pytest.raises(ValidationError):
            FpElement(2, (4, 1))

    def test_degree_mismatch(self, s2, s3):
        with pytest.raises(ValidationError):
            multiply(s3, identity_class(s2), identity_class(s3))


class TestEnumeration:
    def test_sizes(self, s1, fp_s2, fp_s3, c3):
        assert len(enumerate_fp(s1)) == 1
        assert len(fp_s2) == 3
        assert len(fp_s3) == 49
        assert len(enumerate_fp(c3)) == 7

    def test_sorted_and_distinct(self, fp_s3):
        assert fp_s3 == sorted(set(fp_s3))

    def test_closed_under_product(self, fp_s3):
        members = set(fp_s3)
        assert all(a * b in members for a in fp_s3 for b in fp_s3)

    def test_worker_pool_agrees(self, s3, fp_s3):
        assert enumerate_fp(s3, workers=2) == fp_s3

    def test_budget(self, s4):
        with pytest.raises(SizeLimitError):
            enumerate_fp(s4, Budgets(enumerate_cap=6))

    def test_idempotent_census(self, s2, s3, fp_s2, fp_s3):
        for group, elements in ((s2, fp_s2), (s3, fp_s3)):
            census = idempotent_census(group, elements)
            assert set(census) == {e.element for e in idempotents(group)}

    def test_unit_census(self, s3, fp_s3):
        units = unit_census(s3, fp_s3)
        assert sorted(units) == sorted(unit_class(s3, g) for g in s3.elements)

    def test_four_points_and_census(self, s4):
        elements = enumerate_fp(s4)
        assert len(elements) == 7443
        census = set(idempotent_census(s4, elements))
        assert len(census) == 15
        assert census == {e.element for e in idempotents(s4)}


class TestMembership:
    def test_example_relation(self, s3):
        relation = parse_relation_text("110/100/001")
        assert not is_member(s3, relation)

    def test_union_of_permutation_matrices(self, s3):
        assert is_member(s3, parse_relation_text("110/110/001"))
        assert is_member(s3, parse_relation_text("111/111/111"))

    def test_empty_row(self, s3):
        assert not is_member(s3, parse_relation_text("110/000/001"))

    def test_agrees_with_enumeration(self, s3, c3, fp_s3):
        for group, elements in ((s3, fp_s3), (c3, enumerate_fp(c3))):
            for a in elements:
                assert is_member(group, element_to_relation(a))
        # on C_3 the identity and a transposition together are not a class
        assert not is_member(c3, parse_relation_text("110/110/001"))

    def test_shape_checked(self, s3):
        with pytest.raises(ValidationError):
            is_member(s3, [[True, False], [False, True]])


class TestRelationIO:
    def test_text_format(self):
        relation = parse_relation_text("110/100/001")
        assert relation[0] == [True, True, False]
        assert format_relation_text(relation) == "110/100/001"

    def test_json_format(self):
        relation = relation_from_json("[[1, 2], [1], [3]]")
        assert relation == parse_relation_text("110/100/001")
        assert relation_to_json(relation) == "[[1, 2], [1], [3]]"

    def test_element_conversion(self):
        a = element_from_relation(parse_relation_text("110/100/001"))
        assert str(a) == "{1,2}{1}{3}"
        assert format_relation_text(element_to_relation(a)) == "110/100/001"

    @pytest.mark.parametrize("text", ["12/01", "10/011", "abc"])
    def test_text_errors(self, text):
        with pytest.raises(ValidationError):
            parse_relation_text(text)

    @pytest.mark.parametrize("text", ["{", "[1, 2]", "[[4], [1], [2]]"])
    def test_json_errors(self, text):
        with pytest.raises(ValidationError):
            relation_from_json(text)


class TestIdempotents:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 15)])
    def test_symmetric_counts(self, n, count):
        assert len(idempotents(symmetric_group(n))) == count

    def test_cyclic(self, c3):
        found = idempotents(c3)
        assert [str(e.partition) for e in found] == ["{1,2,3}", "{1}{2}{3}"]

    def test_order_and_subgroups(self, s3):
        found = idempotents(s3)
        assert [str(e.partition) for e in found] == ["{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"]
        assert [e.subgroup.order for e in found] == [6, 2, 2, 2, 1]
        assert [str(e.shape) for e in found] == ["3", "2,1", "2,1", "2,1", "1,1,1"]
        assert all(e.element * e.element == e.element for e in found)


class TestGreenStructure:
    def test_green_relations_via_translations(self, s3, fp_s3):
        a = canonical_from_subset(s3, [Permutation.identity(3), perm("(1 2)")])
        sigma = perm("(1 3)")
        assert green_related(s3, a.left_translate(sigma), a, "L")
        assert green_related(s3, a.right_translate(sigma), a, "R")
        assert green_related(s3, a, a, "H")
        assert not green_related(s3, a, identity_class(s3), "D")

    def test_unknown_relation(self, s3):
        with pytest.raises(ValidationError):
            green_related(s3, identity_class(s3), identity_class(s3), "Q")

    def test_dclasses_of_s3(self, s3):
        found = dclasses(s3)
        assert [str(d.shape) for d in found] == ["3", "2,1", "1,1,1"]
        assert [d.k for d in found] == [1, 3, 1]
        assert [d.maximal_subgroup.order for d in found] == [1, 1, 6]
        assert [len(d.members) for d in found] == [1, 9, 6]
        assert found[1].conjugators[0].is_identity()

    def test_dclasses_of_s4(self, s4):
        found = dclasses(s4)
        assert [str(d.shape) for d in found] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
        assert [d.k for d in found] == [1, 4, 3, 6, 1]
        assert [d.maximal_subgroup.order for d in found] == [1, 1, 2, 2, 24]
        assert sum(d.k ** 2 * d.maximal_subgroup.order for d in found) == 131

    def test_green_classes_inside_dclass(self, s3):
        d = dclasses(s3)[1]
        e = d.apex.element
        assert len(d.lclass(e)) == 3
        assert len(d.rclass(e)) == 3
        assert d.hclass(e) == frozenset([e])
        assert e in d
        assert identity_class(s3) not in d

    def test_trace_product(self, s3):
        d = dclasses(s3)[1]
        e, f = d.idempotents[0].element, d.idempotents[1].element
        assert trace_product(d, e, e) == e
        assert trace_product(d, e, f) is TraceZero.ZERO
        with pytest.raises(ValidationError):
            trace_product(d, e, identity_class(s3))

    def test_inverse_traces(self, s3, s4):
        assert all(is_inverse_trace(d) for d in dclasses(s3))
        assert all(is_inverse_trace(d) for d in dclasses(s4))

    def test_dclass_of_idempotent(self, s3):
        info = idempotents(s3)[2]
        d = dclass_of(s3, info)
        assert info.partition in [e.partition for e in d.idempotents]


class TestUnitsAndKernel:
    def test_faithful(self, s3):
        units, kernel = units_and_kernel(s3)
        assert units.order == 6
        assert kernel.order == 1

    def test_trivial_action(self):
        action = GroupAction.from_generators(3, [perm("(1 2)"), perm("(1 2 3)")], [Permutation.identity(1)] * 2)
        units, kernel = units_and_kernel(action)
        assert kernel.order == 6
        assert units.order == 1
        assert faithful_group(action).order == 1

    def test_cyclic_action_on_two_points(self):
        action = GroupAction.from_generators(4, [perm("(1 2 3 4)", 4)], [perm("(1 2)", 2)])
        units, kernel = units_and_kernel(action)
        assert kernel.order == 2
        assert units.order == 2
        image = faithful_group(action)
        assert image.degree == 2 and image.order == 2
        assert idempotents(image)[0].partition == SetPartition.full(2)

    def test_group_passes_through(self):
        group = cyclic_group(3)
        assert faithful_group(group) is group
