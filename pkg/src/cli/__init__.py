"""Command-line orchestration for fplab."""

from .commands import HANDLERS, CommandReport
from .job import COMMANDS, JobConfig
from .main import FplabCLI, build_parser, main
