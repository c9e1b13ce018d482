"""Tests for partitions, characters, Kostka numbers and induced multiplicities."""

import pytest
from sympy import Rational

from src.config.yaml_loader import Budgets
from src.permgroup.permutation import SetPartition
from src.symfunc.characters import (ClassFunction, block_permuting_order, character_table,
                                    cycle_representative, foulkes_check, induced_multiplicity, kostka,
                                    mn_character, permutation_character, set_partition_character,
                                    specht_dim, uniform_set_partitions)
from src.symfunc.partitions import (IntegerPartition, MultiPartition, centralizer_order, class_size,
                                    consecutive_partition, multipartitions, partitions,
                                    set_partition_shape)
from src.utils.errors import SizeLimitError, ValidationError

P = IntegerPartition.parse


class TestIntegerPartition:
    def test_parse_and_print(self):
        assert P("4,2,1").parts == (4, 2, 1)
        assert str(P("4,2,1")) == "4,2,1"
        assert P("").size == 0
        assert str(P("0")) == "0"

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValidationError):
            P("1,2")
        with pytest.raises(ValidationError):
            P("a,b")

    def test_partitions_order(self):
        assert [str(p) for p in partitions(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
        assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_conjugate_and_hooks(self):
        assert P("3,1").conjugate() == P("2,1,1")
        assert P("2,1").hook_lengths() == [[3, 1], [1]]

    def test_multiplicities(self):
        assert P("2,1,1").multiplicities() == (2, 1, 0, 0)
        assert set_partition_shape(SetPartition.parse("{1,2}{3}{4}")) == P("2,1,1")

    def test_class_sizes(self):
        assert class_size(P("2,1")) == 3
        assert class_size(P("2,2")) == 3
        assert centralizer_order(P("2,2")) == 8
        assert sum(class_size(p) for p in partitions(5)) == 120

    def test_consecutive_partition(self):
        assert consecutive_partition(P("2,1")) == SetPartition.parse("{1,2}{3}")
        assert str(consecutive_partition(P("3,2,2"))) == "{1,2,3}{4,5}{6,7}"


class TestMultiPartition:
    def test_parse_and_print(self):
        l = MultiPartition.parse("1:2,1;2:1", 5)
        assert str(l) == "1:2,1;2:1"
        assert l.k == (3, 1, 0, 0, 0)
        assert l.matches((3, 1, 0, 0, 0))

    def test_trivial(self):
        assert str(MultiPartition.trivial((3, 1))) == "1:3;2:1"

    @pytest.mark.parametrize("text", ["1:2;1:1", "7:1", "x:1", "12"])
    def test_parse_errors(self, text):
        with pytest.raises(ValidationError):
            MultiPartition.parse(text, 5)

    def test_multipartitions(self):
        assert len(list(multipartitions((2, 1)))) == 2
        assert len(list(multipartitions((4, 0, 0, 0)))) == 5
        assert len(list(multipartitions((2, 2)))) == 4


class TestCharacters:
    @pytest.mark.parametrize("shape,cycle,value", [
        ("2,1", "1,1,1", 2), ("2,1", "2,1", 0), ("2,1", "3", -1),
        ("2,2", "2,2", 2), ("2,2", "4", 0), ("2,2", "3,1", -1),
        ("1,1,1", "2,1", -1), ("3,2,1", "1,1,1,1,1,1", 16),
    ])
    def test_murnaghan_nakayama(self, shape, cycle, value):
        assert mn_character(P(shape), P(cycle)) == value

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            mn_character(P("2,1"), P("2,2"))

    @pytest.mark.parametrize("shape,dim", [("3,2,1", 16), ("2,2", 2), ("4,1", 4), ("5", 1), ("3,3", 5)])
    def test_specht_dim(self, shape, dim):
        assert specht_dim(P(shape)) == dim

    @pytest.mark.parametrize("lam,mu,value", [
        ("2,1", "1,1,1", 2), ("3,1", "2,2", 1), ("2,2", "2,1,1", 1), ("3", "1,1,1", 1),
        ("2,1", "3", 0), ("3,2", "2,2,1", 2), ("4,2", "2,2,2", 3),
    ])
    def test_kostka(self, lam, mu, value):
        assert kostka(P(lam), P(mu)) == value

    def test_kostka_of_discrete_content_is_dimension(self):
        for lam in partitions(5):
            assert kostka(lam, P("1,1,1,1,1")) == specht_dim(lam)

    def test_permutation_character(self):
        assert permutation_character(P("2,1"), P("1,1,1")) == 3
        assert permutation_character(P("2,1"), P("3")) == 0
        assert permutation_character(P("2,1"), P("2,1")) == 1
        assert permutation_character(P("2,2"), P("2,2")) == 2

    def test_character_table(self):
        table = character_table(3)
        assert list(table.index) == ["3", "2,1", "1,1,1"]
        assert table.loc["2,1", "1,1,1"] == 2
        assert table.loc["1,1,1", "2,1"] == -1
        assert (character_table(5)["1,1,1,1,1"] > 0).all()

    def test_class_function_inner_products(self):
        chi = ClassFunction.irreducible([P("2,1")])
        assert chi.inner(chi) == 1
        perm = ClassFunction.of_permutation_module(P("2,1"))
        assert perm.inner(chi) == 1
        assert perm.inner(ClassFunction.irreducible([P("1,1,1")])) == 0
        assert (chi + chi).degree() == 4
        product = ClassFunction.irreducible([P("2"), P("1,1")])
        assert product.group_order == 4
        assert product.inner(product) == Rational(1)

    def test_inner_rejects_different_groups(self):
        with pytest.raises(ValidationError):
            ClassFunction.irreducible([P("2")]).inner(ClassFunction.irreducible([P("3")]))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_kostka_expands_permutation_characters(self, n):
        shapes = partitions(n)
        for mu in shapes:
            for nu in shapes:
                total = sum(kostka(lam, mu) * mn_character(lam, nu) for lam in shapes)
                assert total == permutation_character(mu, nu)

    def test_cycle_representative(self):
        g = cycle_representative(P("3,2,1"))
        assert g.cycle_type() == (3, 2, 1)
        assert str(g) == "(1 2 3)(4 5)"


class TestInducedMultiplicity:
    def test_block_permuting_order(self):
        assert block_permuting_order((0, 0, 2)) == 72
        assert block_permuting_order((1, 1)) == 2

    def test_discrete_partition_gives_label(self):
        rho = SetPartition.discrete(3)
        l = MultiPartition.parse("1:2,1", 3)
        values = {str(lam): induced_multiplicity(lam, rho, l) for lam in partitions(3)}
        assert values == {"3": 0, "2,1": 1, "1,1,1": 0}

    def test_full_partition_gives_trivial(self):
        rho = SetPartition.full(4)
        l = MultiPartition.trivial(set_partition_shape(rho).multiplicities())
        assert [induced_multiplicity(lam, rho, l) for lam in partitions(4)] == [1, 0, 0, 0, 0]

    def test_weighted_sum_is_kostka(self):
        for mu in partitions(5):
            rho = consecutive_partition(mu)
            for lam in partitions(5):
                total = 0
                for l in multipartitions(mu.multiplicities()):
                    weight = 1
                    for c in l.components:
                        weight *= specht_dim(c)
                    total += weight * induced_multiplicity(lam, rho, l)
                assert total == kostka(lam, mu)

    def test_sign_label_on_pairs(self):
        rho = SetPartition.parse("{1,2}{3,4}")
        trivial = MultiPartition.trivial((0, 2, 0, 0))
        sign = MultiPartition.parse("2:1,1", 4)
        assert [induced_multiplicity(lam, rho, trivial) for lam in partitions(4)] == [1, 0, 1, 0, 0]
        assert [induced_multiplicity(lam, rho, sign) for lam in partitions(4)] == [0, 1, 0, 0, 0]

    def test_validation(self):
        rho = SetPartition.parse("{1,2}{3}")
        with pytest.raises(ValidationError):
            induced_multiplicity(P("2,2"), rho, MultiPartition.trivial((1, 1)))
        with pytest.raises(ValidationError):
            induced_multiplicity(P("2,1"), rho, MultiPartition.trivial((3, 0, 0)))

    def test_wreath_budget(self):
        rho = SetPartition.parse("{1,2}{3,4}{5,6}")
        with pytest.raises(SizeLimitError):
            induced_multiplicity(P("6"), rho, MultiPartition.trivial((0, 3, 0, 0, 0, 0)), Budgets(wreath_budget=10))


class TestFoulkes:
    def test_two_blocks_of_three(self):
        report = foulkes_check(2, 3)
        assert report.verdict
        assert [str(s) for s in report.support("km")] == ["6", "4,2"]
        assert [str(s) for s in report.support("mk")] == ["6", "4,2", "2,2,2"]

    def test_two_blocks_of_four(self):
        report = foulkes_check(2, 4)
        assert report.verdict
        assert [str(s) for s in report.support("km")] == ["8", "6,2", "4,4"]
        assert [str(s) for s in report.support("mk")] == ["8", "6,2", "4,4", "4,2,2", "2,2,2,2"]

    def test_requires_k_below_m(self):
        with pytest.raises(ValidationError):
            foulkes_check(3, 2)

    def test_size_budget(self):
        with pytest.raises(SizeLimitError):
            foulkes_check(2, 3, Budgets(foulkes_max_n=5))

    @pytest.mark.parametrize("k,m,count", [(2, 3, 10), (3, 2, 15), (2, 2, 3), (1, 4, 1)])
    def test_uniform_set_partitions(self, k, m, count):
        found = list(uniform_set_partitions(k, m))
        assert len(found) == len(set(found)) == count
        assert all(rho.shape() == (m,) * k for rho in found)

    def test_multiplicities_match_permutation_characters(self):
        report = foulkes_check(2, 3)
        chi_km = set_partition_character(2, 3)
        chi_mk = set_partition_character(3, 2)
        assert chi_km.degree() == 10
        for row in report.rows:
            irreducible = ClassFunction.irreducible([row.shape])
            assert irreducible.inner(chi_km) == row.mult_km
            assert irreducible.inner(chi_mk) == row.mult_mk
