"""
YAML budget loader for fplab.

Budgets bound every exhaustive sweep in the toolkit. They are resolved from the
dataclass defaults, then ``config/budgets.yaml``, then ``FPLAB_*`` environment
variables (a ``.env`` file is honoured), then explicit CLI overrides.
"""

import os
from dataclasses import dataclass, fields, replace, asdict
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml
from dotenv import load_dotenv
from loguru import logger

from ..utils.errors import ValidationError

ENV_PREFIX = "FPLAB_"


@dataclass(frozen=True)
class Budgets:
    """Size limits and tolerances used across the toolkit."""
    group_order_cap: int = 100_000
    enumerate_cap: int = 24
    specht_max_n: int = 8
    fstar_max_n: int = 7
    foulkes_max_n: int = 12
    wreath_budget: int = 1_000_000
    correspondence_max_n: int = 4
    exact_domain_limit: int = 6
    random_check_count: int = 1000
    closure_check_limit: int = 2000
    tolerance: float = 1e-9
    rank_tolerance: float = 1e-6

    def with_overrides(self, overrides: Mapping[str, Any]) -> "Budgets":
        """
        Return a copy with some budgets replaced.

        Args:
            overrides: Mapping from budget key to new (possibly string) value

        Returns:
            New validated Budgets instance

        Raises:
            ValidationError: If a key is unknown or a value is not positive
        """
        known = {f.name: f.type for f in fields(self)}
        converted: Dict[str, Any] = {}
        for key, raw in overrides.items():
            if key not in known:
                raise ValidationError(f"unknown budget '{key}'; known: {sorted(known)}")
            caster = float if self._is_float(key) else int
            try:
                converted[key] = caster(raw)
            except (TypeError, ValueError) as e:
                raise ValidationError(f"budget '{key}' must be numeric, got {raw!r}") from e
        result = replace(self, **converted)
        result.validate()
        return result

    def validate(self) -> None:
        """Raise ValidationError unless every budget is positive."""
        bad = [key for key, value in asdict(self).items() if not value > 0]
        if bad:
            raise ValidationError(f"budgets must be positive: {bad}")

    @staticmethod
    def _is_float(key: str) -> bool:
        return key in ("tolerance", "rank_tolerance")


class YAMLBudgetLoader:
    """Loads budget files and applies environment overrides."""

    def __init__(self, config_dir: str = "config"):
        """
        Initialize YAML loader.

        Args:
            config_dir: Directory containing ``budgets.yaml``
        """
        self.config_dir = Path(config_dir)
        self.logger = logger.bind(name=self.__class__.__name__)

    def load(self, file_name: str = "budgets.yaml", use_env: bool = True) -> Budgets:
        """
        Load budgets from YAML and the environment.

        Args:
            file_name: Budget file inside the config directory
            use_env: Whether ``FPLAB_*`` variables are applied

        Returns:
            Resolved budgets

        Raises:
            ValidationError: If the file or an override is malformed
        """
        budgets = Budgets()
        yaml_path = self.config_dir / file_name

        try:
            if yaml_path.exists():
                with open(yaml_path, 'r', encoding='utf-8') as file:
                    document = yaml.safe_load(file) or {}
                self._validate_document(document, yaml_path)
                budgets = budgets.with_overrides(document.get('budgets', {}))
                self.logger.info(f"Loaded budgets from {yaml_path}")

            if use_env:
                env_overrides = self._read_environment()
                if env_overrides:
                    budgets = budgets.with_overrides(env_overrides)
                    self.logger.info(f"Applied {len(env_overrides)} environment budget overrides")

            return budgets

        except Exception as e:
            self.logger.error(f"Error loading budgets: {str(e)}")
            raise

    def _validate_document(self, document: Any, path: Path) -> None:
        """
        Validate the budget file structure.

        Raises:
            ValidationError: If the structure is invalid
        """
        if not isinstance(document, dict):
            raise ValidationError(f"{path} must contain a mapping")
        section = document.get('budgets', {})
        if not isinstance(section, dict):
            raise ValidationError(f"{path}: 'budgets' must be a mapping")

    def _read_environment(self) -> Dict[str, str]:
        load_dotenv(override=False)
        names = {f.name for f in fields(Budgets)}
        overrides = {}
        for variable, value in os.environ.items():
            if not variable.startswith(ENV_PREFIX):
                continue
            key = variable[len(ENV_PREFIX):].lower()
            if key in names:
                overrides[key] = value
        return overrides


_active: Optional[Budgets] = None


def get_budgets() -> Budgets:
    """Return the process-wide budgets, loading them on first use."""
    global _active
    if _active is None:
        _active = YAMLBudgetLoader().load()
    return _active


def set_budgets(budgets: Optional[Budgets]) -> None:
    """Install budgets for the process (``None`` forces a reload)."""
    global _active
    _active = budgets
