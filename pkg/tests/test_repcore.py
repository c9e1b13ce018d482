"""Tests for V_H, the simple modules, intertwiners and invariant forms."""

import json

import numpy as np
import pytest

from src.config.yaml_loader import Budgets
from src.factorpower.element import unit_class
from src.permgroup.group import cyclic_group, group_table
from src.repcore.domain import random_elements, semigroup_domain
from src.repcore.group_irreps import group_irreps
from src.repcore.intertwiner import decompose, multiplicity
from src.repcore.matrix_rep import EXACT, FLOAT, direct_sum, dual, rep_to_json, tensor
from src.repcore.simple_modules import SimpleModuleBuilder, jacobson_accounting
from src.repcore.unitary import dual_check, unitarize
from src.utils.errors import SizeLimitError, ValidationError


class TestDescriptors:
    def test_s3_dimensions(self, builder_s3):
        dims = sorted(d.dimension for d in builder_s3.descriptors())
        assert dims == [1, 1, 1, 2, 3]

    def test_s3_texts(self, builder_s3):
        texts = [d.text for d in builder_s3.descriptors()]
        assert "2,1@1:1;2:1" in texts
        assert "1,1,1@1:2,1" in texts

    def test_resolve(self, builder_s3):
        desc = builder_s3.resolve("1,1,1@1:2,1")
        assert desc.dimension == 2
        assert builder_s3.resolve("2,1@trivial").dimension == 3
        assert builder_s3.resolve("{1,3}{2}@trivial") == builder_s3.resolve("2,1@trivial")

    @pytest.mark.parametrize("text", ["2,1", "2,2@trivial", "1,1,1@1:2", "{1,2}{3}@1:1,1"])
    def test_resolve_errors(self, builder_s3, text):
        with pytest.raises(ValidationError):
            builder_s3.resolve(text)

    def test_cyclic_group_uses_numeric_irreducibles(self, c3):
        builder = SimpleModuleBuilder(c3)
        assert [str(d) for d in builder.descriptors()] == ["3@0", "1,1,1@0", "1,1,1@1", "1,1,1@2"]
        assert all(d.dimension == 1 for d in builder.descriptors())


class TestSimpleModules:
    def test_build_is_multiplicative(self, builder_s3, fp_s3):
        for desc in builder_s3.descriptors():
            rep = builder_s3.build_simple(desc, verify=False)
            assert rep.dimension == desc.dimension
            pairs = [(a, b) for a in fp_s3[::4] for b in fp_s3[::3]]
            assert rep.is_multiplicative(pairs, lambda x, y: x * y)

    def test_units_act_by_the_induced_character(self, builder_s3):
        assert all(builder_s3.restriction_check(d) for d in builder_s3.descriptors())

    def test_apex_idempotent_acts_nonzero(self, builder_s3):
        for desc in builder_s3.descriptors():
            rep = builder_s3.build_simple(desc)
            assert np.any(rep.matrix(desc.dclass.apex.element) != 0)

    def test_lower_idempotents_act_by_zero(self, builder_s3):
        desc = builder_s3.resolve("2,1@trivial")
        rep = builder_s3.build_simple(desc)
        full = builder_s3.dclasses[0].apex.element
        assert np.all(rep.matrix(full) == 0)

    def test_float_mode_agrees(self, builder_s3, fp_s3):
        desc = builder_s3.resolve("1,1,1@1:2,1")
        exact = builder_s3.build_simple(desc, EXACT)
        floating = builder_s3.build_simple(desc, FLOAT)
        for a in fp_s3[::7]:
            assert np.allclose(floating.matrix(a), exact.as_float().matrix(a))

    def test_jacobson_accounting(self, s2, s3):
        for group, total in ((s2, 3), (s3, 16)):
            accounting = jacobson_accounting(group)
            assert accounting.holds
            assert accounting.structure_side == total

    @pytest.mark.slow
    def test_jacobson_accounting_s4(self, builder_s4):
        accounting = builder_s4.jacobson_accounting()
        assert accounting.holds
        assert accounting.fstar_side == 131

    def test_domain_budget(self, s4):
        builder = SimpleModuleBuilder(s4, Budgets(enumerate_cap=6))
        desc = builder.resolve("4@trivial")
        with pytest.raises(SizeLimitError):
            builder.build_simple(desc)

    def test_reduced_domain(self, s4):
        domain = semigroup_domain(s4)
        assert not domain.complete
        assert unit_class(s4, s4.elements[5]) in domain.elements


class TestVBimodule:
    def test_actions_commute(self, builder_s3, fp_s3):
        d = builder_s3.find_dclass("1,1,1")
        left, right = builder_s3.vbimodule(d)
        assert left.dimension == 6
        for s in fp_s3[::6]:
            for q in range(6):
                assert np.array_equal(left.matrix(s).dot(right.matrix(q)), right.matrix(q).dot(left.matrix(s)))

    def test_left_module_decomposition(self, builder_s3):
        d = builder_s3.find_dclass("2,1")
        left, _ = builder_s3.vbimodule(d)
        result = decompose(left, builder_s3)
        assert [(str(desc), m) for desc, m in result.nonzero()] == [("2,1@1:1;2:1", 1)]

    def test_regular_part_over_the_units(self, builder_s3):
        d = builder_s3.find_dclass("1,1,1")
        left, _ = builder_s3.vbimodule(d)
        result = decompose(left, builder_s3)
        assert {str(desc): m for desc, m in result.nonzero()} == {
            "1,1,1@1:3": 1, "1,1,1@1:2,1": 2, "1,1,1@1:1,1,1": 1}


class TestIntertwiners:
    def test_simple_has_multiplicity_one(self, builder_s3):
        for desc in builder_s3.descriptors():
            rep = builder_s3.build_simple(desc)
            assert multiplicity(rep, rep) == 1

    def test_distinct_simples_do_not_intertwine(self, builder_s3):
        a = builder_s3.build_simple(builder_s3.resolve("1,1,1@1:3"))
        b = builder_s3.build_simple(builder_s3.resolve("1,1,1@1:1,1,1"))
        assert multiplicity(a, b) == 0
        assert multiplicity(a, direct_sum(a, b)) == 1

    def test_tensor_accounting(self, builder_s3):
        descs = builder_s3.descriptors()
        for left in descs[::2]:
            for right in descs:
                product = tensor(builder_s3.build_simple(left), builder_s3.build_simple(right))
                result = decompose(product, builder_s3)
                assert result.accounted == left.dimension * right.dimension

    def test_tensor_with_trivial_apex(self, builder_s3):
        bottom = builder_s3.build_simple(builder_s3.resolve("2,1@trivial"))
        top = builder_s3.build_simple(builder_s3.resolve("3@trivial"))
        result = decompose(tensor(top, bottom), builder_s3)
        assert [(str(d), m) for d, m in result.nonzero()] == [("2,1@1:1;2:1", 1)]

    def test_exact_and_float_agree(self, builder_s2):
        descs = builder_s2.descriptors()
        a = builder_s2.build_simple(descs[-1])
        product = tensor(a, a)
        floating = decompose(product, builder_s2)
        exact = decompose(product, builder_s2, exact=True)
        assert [m for _, m in floating.entries] == [m for _, m in exact.entries]

    def test_domains_must_match(self, builder_s2, builder_s3):
        a = builder_s2.build_simple(builder_s2.descriptors()[0])
        b = builder_s3.build_simple(builder_s3.descriptors()[0])
        with pytest.raises(ValidationError):
            multiplicity(a, b)


class TestForms:
    def test_unitarize_every_simple(self, builder_s3):
        for desc in builder_s3.descriptors():
            form = unitarize(builder_s3.build_simple(desc))
            assert form.residual <= 1e-9
            assert form.min_eigenvalue > 0

    def test_dual_on_symmetric_groups(self, builder_s3):
        assert all(dual_check(builder_s3.build_simple(d)) for d in builder_s3.descriptors())

    def test_dual_detects_complex_characters(self, c3):
        builder = SimpleModuleBuilder(c3)
        assert dual_check(builder.build_simple(builder.resolve("1,1,1@0")))
        assert not dual_check(builder.build_simple(builder.resolve("1,1,1@1")))

    def test_dual_is_a_representation(self, builder_s3, fp_s3):
        rep = dual(builder_s3.build_simple(builder_s3.resolve("1,1,1@1:2,1")))
        pairs = [(a, b) for a in fp_s3[::5] for b in fp_s3[::4]]
        assert rep.is_multiplicative(pairs, lambda x, y: x * y)

    def test_every_simple_of_four_points(self, builder_s4):
        descriptors = builder_s4.descriptors()
        assert len(descriptors) == 11
        for desc in descriptors:
            assert builder_s4.restriction_check(desc), desc
            assert dual_check(builder_s4.build_simple(desc, EXACT, verify=False)), desc


class TestGroupIrreps:
    def test_cyclic(self):
        irreps = group_irreps(group_table(cyclic_group(3)))
        assert [i.dimension for i in irreps] == [1, 1, 1]
        assert irreps[0].character == pytest.approx((1, 1, 1))

    def test_symmetric(self, s3):
        irreps = group_irreps(group_table(s3))
        assert sorted(i.dimension for i in irreps) == [1, 1, 2]
        for irrep in irreps:
            m = irrep.matrix(1)
            assert np.allclose(m.conj().T @ m, np.eye(irrep.dimension))


class TestSerialization:
    def test_rep_to_json(self, builder_s2, fp_s2):
        rep = builder_s2.build_simple(builder_s2.descriptors()[0])
        payload = json.loads(rep_to_json(rep))
        assert payload["schema"] == 1
        assert payload["mode"] == EXACT
        assert set(payload["matrices"]) == {str(a) for a in fp_s2}
        assert all(entry in ("0/1", "1/1") for m in payload["matrices"].values() for row in m for entry in row)

    def test_random_elements_are_reproducible(self, s3):
        assert random_elements(s3, 5, seed=3) == random_elements(s3, 5, seed=3)
