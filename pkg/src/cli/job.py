"""
Job configuration for one command-line invocation.
"""

from argparse import Namespace
from dataclasses import dataclass, field, fields
from typing import Dict, List, Optional

from ..utils.errors import ValidationError
from ..utils.table_handler import FORMATS

REQUIRED = {
    "enumerate": ("group",),
    "idempotents": ("group",),
    "dclasses": ("group",),
    "simples": ("group",),
    "multiplicity": ("lam", "rho"),
    "mult-table": ("rho",),
    "foulkes": ("k", "m"),
    "fstar": ("n",),
    "correspond": ("n",),
    "unitarize": ("group", "shape"),
    "tensor": ("group", "left", "right"),
    "verify": (),
}

COMMANDS = tuple(REQUIRED)


@dataclass
class JobConfig:
    """Everything a command needs; identical configs give identical reports."""
    command: str
    group: Optional[str] = None
    n: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    lam: Optional[str] = None
    rho: Optional[str] = None
    label: str = "trivial"
    shape: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None
    output_format: str = "tsv"
    budget_overrides: Dict[str, str] = field(default_factory=dict)
    workers: int = 1
    seed: int = 0
    dump: bool = False
    brute_force: bool = False
    exact: bool = False
    thorough: bool = False
    checks: Optional[List[str]] = None
    progress: bool = False
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    config_dir: str = "config"

    def validate(self) -> None:
        """
        Check the command and its required options.

        Raises:
            ValidationError: If the config cannot be run
        """
        if self.command not in REQUIRED:
            raise ValidationError(f"unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.output_format not in FORMATS:
            raise ValidationError(f"format must be one of {FORMATS}")
        missing = [name for name in REQUIRED[self.command] if getattr(self, name) in (None, "")]
        if missing:
            raise ValidationError(f"'{self.command}' needs {', '.join('--' + m for m in missing)}")
        if self.workers < 1:
            raise ValidationError("workers must be at least 1")
        if self.seed < 0:
            raise ValidationError("seed must be non-negative")
        for name in ("n", "k", "m"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValidationError(f"--{name} must be positive")

    @classmethod
    def from_namespace(cls, args: Namespace) -> "JobConfig":
        """Build from parsed arguments; ``--budget key=value`` pairs become overrides."""
        overrides = {}
        for item in getattr(args, "budget", None) or []:
            key, sep, value = item.partition("=")
            if not sep or not key.strip():
                raise ValidationError(f"--budget expects key=value, got {item!r}")
            overrides[key.strip()] = value.strip()
        values = {f.name: getattr(args, f.name) for f in fields(cls)
                  if f.name != "budget_overrides" and hasattr(args, f.name)}
        config = cls(budget_overrides=overrides, **values)
        config.validate()
        return config
