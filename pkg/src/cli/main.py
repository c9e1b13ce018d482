"""
fplab command line.

Reports go to stdout; logs go to stderr. Exit codes: 0 success, 1 failed
verification or inconsistent results, 2 usage or validation errors, 3 a
configured budget was exceeded.
"""

import argparse
import sys
from typing import List, Optional, TextIO

from ..config.yaml_loader import Budgets, YAMLBudgetLoader, set_budgets
from ..utils.errors import (FplabError, InconsistencyError, NumericalError, SizeLimitError,
                            ValidationError)
from ..utils.logger import setup_logger
from ..utils.table_handler import FORMATS, TableHandler
from .commands import HANDLERS
from .job import JobConfig

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=FORMATS, default="tsv",
                        help="report format")
    parser.add_argument("--budget", action="append", metavar="KEY=VALUE",
                        help="override a budget (repeatable)")
    parser.add_argument("--workers", type=int, default=1, help="worker processes for enumeration")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled and numerical checks")
    parser.add_argument("--progress", action="store_true", help="show progress bars on stderr")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="stderr log level")
    parser.add_argument("--log-file", help="also log to this file")
    parser.add_argument("--config-dir", default="config", help="directory holding budgets.yaml")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fplab",
        description="Factorpower semigroups of permutation groups and their simple modules.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, help_text: str, group: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if group:
            p.add_argument("--group", required=True,
                           help="S<n>, C<n>, D<n>, A<n> or generators such as '(1 2);(1 2 3)'")
        _add_common(p)
        return p

    p = command("enumerate", "count (and optionally list) the elements of FP+(G)", group=True)
    p.add_argument("--dump", action="store_true", help="list every element")
    command("idempotents", "idempotents with their orbit-maximal subgroups", group=True)
    command("dclasses", "regular D-classes with the dimensions of their simple modules", group=True)
    command("simples", "every simple module L(H, X) with its dimension", group=True)

    p = command("multiplicity", "multiplicity of a Specht module in an induced module")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 4,2")
    p.add_argument("--rho", required=True, help="set partition '{1,2}{3}' or block shape '2,1'")
    p.add_argument("--l", dest="label", default="trivial", help="multipartition '1:2,1;2:1' or 'trivial'")

    p = command("mult-table", "multiplicities for every partition and every label")
    p.add_argument("--rho", required=True, help="set partition or block shape")

    p = command("foulkes", "compare k blocks of size m with m blocks of size k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = command("fstar", "D-class structure of F*_n and its dimension identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute-force", action="store_true", help="check the formulas by enumeration")

    p = command("correspond", "match D-classes of FP+(S_n) with those of F*_n")
    p.add_argument("--n", type=int, required=True)

    p = command("unitarize", "invariant Hermitian form of a simple module", group=True)
    p.add_argument("--shape", required=True, help="D-class shape or idempotent partition")
    p.add_argument("--label", default="trivial", help="simple module of the maximal subgroup")

    p = command("tensor", "decompose the tensor product of two simple modules", group=True)
    p.add_argument("--left", required=True, help="descriptor 'shape@label'")
    p.add_argument("--right", required=True, help="descriptor 'shape@label'")
    p.add_argument("--exact", action="store_true", help="rational intertwiner computation")

    p = command("verify", "run the invariant suite")
    p.add_argument("--thorough", action="store_true", help="larger Kostka and Foulkes cases")
    p.add_argument("--check", dest="checks", action="append", help="run only this check (repeatable)")
    return parser


class FplabCLI:
    """Command-line application: configuration, dispatch and exit codes."""

    def __init__(self, stdout: Optional[TextIO] = None):
        """
        Initialize the application.

        Args:
            stdout: Report stream; ``sys.stdout`` when omitted
        """
        self.stdout = stdout or sys.stdout
        self.parser = build_parser()
        self.logger = setup_logger().bind(name=self.__class__.__name__)

    def parse(self, argv: Optional[List[str]] = None) -> JobConfig:
        return JobConfig.from_namespace(self.parser.parse_args(argv))

    def resolve_budgets(self, config: JobConfig) -> Budgets:
        budgets = YAMLBudgetLoader(config.config_dir).load().with_overrides(config.budget_overrides)
        set_budgets(budgets)
        return budgets

    def run(self, config: JobConfig) -> int:
        """
        Execute one job and write its report.

        Returns:
            Process exit code
        """
        setup_logger(config.log_level, config.log_file)
        try:
            budgets = self.resolve_budgets(config)
            self.logger.info(f"running '{config.command}'")
            report = HANDLERS[config.command](config, budgets)
            text = TableHandler(config.output_format).render(config.command, report.rows, report.notes,
                                                             report.columns)
            self.stdout.write(text)
            self.stdout.flush()
            return report.status
        except ValidationError as e:
            self.logger.error(f"invalid input: {str(e)}")
            return EXIT_USAGE
        except SizeLimitError as e:
            self.logger.error(str(e))
            return EXIT_BUDGET
        except (InconsistencyError, NumericalError) as e:
            self.logger.error(f"check failed: {str(e)}")
            return EXIT_FAILED
        except FplabError as e:
            self.logger.error(f"{type(e).__name__}: {str(e)}")
            return EXIT_FAILED

    def main(self, argv: Optional[List[str]] = None) -> int:
        try:
            config = self.parse(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE
        except ValidationError as e:
            self.parser.print_usage(sys.stderr)
            sys.stderr.write(f"fplab: error: {str(e)}\n")
            return EXIT_USAGE
        return self.run(config)


def main(argv: Optional[List[str]] = None) -> int:
    return FplabCLI().main(argv)
