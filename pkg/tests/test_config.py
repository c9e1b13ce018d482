"""Tests for budget resolution."""

import pytest

from src.config.yaml_loader import Budgets, YAMLBudgetLoader, get_budgets, set_budgets
from src.utils.errors import ValidationError


class TestBudgets:
    def test_defaults(self):
        budgets = Budgets()
        assert budgets.enumerate_cap == 24
        assert budgets.tolerance == 1e-9
        budgets.validate()

    def test_overrides_are_converted(self):
        budgets = Budgets().with_overrides({"enumerate_cap": "6", "tolerance": "1e-6"})
        assert budgets.enumerate_cap == 6
        assert budgets.tolerance == 1e-6

    @pytest.mark.parametrize("overrides", [{"nope": 1}, {"enumerate_cap": "x"}, {"fstar_max_n": 0}])
    def test_bad_overrides(self, overrides):
        with pytest.raises(ValidationError):
            Budgets().with_overrides(overrides)

    def test_active_budgets(self):
        custom = Budgets(enumerate_cap=7)
        set_budgets(custom)
        assert get_budgets() is custom


class TestYAMLBudgetLoader:
    def test_missing_file_gives_defaults(self, tmp_path):
        assert YAMLBudgetLoader(str(tmp_path)).load(use_env=False) == Budgets()

    def test_file_values(self, tmp_path):
        (tmp_path / "budgets.yaml").write_text("budgets:\n  enumerate_cap: 12\n  specht_max_n: 5\n")
        budgets = YAMLBudgetLoader(str(tmp_path)).load(use_env=False)
        assert budgets.enumerate_cap == 12
        assert budgets.specht_max_n == 5
        assert budgets.fstar_max_n == Budgets().fstar_max_n

    def test_environment_wins_over_file(self, tmp_path, monkeypatch):
        (tmp_path / "budgets.yaml").write_text("budgets:\n  enumerate_cap: 12\n")
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("FPLAB_ENUMERATE_CAP", "3")
        monkeypatch.setenv("FPLAB_UNRELATED", "x")
        assert YAMLBudgetLoader(str(tmp_path)).load().enumerate_cap == 3

    @pytest.mark.parametrize("content", ["- 1\n- 2\n", "budgets: 5\n", "budgets:\n  enumerate_cap: -1\n"])
    def test_malformed_files(self, tmp_path, content):
        (tmp_path / "budgets.yaml").write_text(content)
        with pytest.raises(ValidationError):
            YAMLBudgetLoader(str(tmp_path)).load(use_env=False)

    def test_shipped_file_matches_defaults(self):
        assert YAMLBudgetLoader("config").load(use_env=False) == Budgets()
