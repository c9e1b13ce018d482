"""
Logging configuration for fplab.

Reports go to stdout, so log records only ever reach stderr or a file.
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

STDERR_FORMAT = ("<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
                 "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan> | <level>{message}</level>")
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} | {message}"


def setup_logger(log_level: str = "WARNING", log_file: Optional[str] = None) -> logger:
    """
    Replace every sink by a stderr sink and, optionally, a rotating log file.

    Args:
        log_level: DEBUG, INFO, WARNING or ERROR
        log_file: Path of an extra log file, rotated at 10 MB and zipped

    Returns:
        The configured logger
    """
    level = log_level.upper()
    logger.remove()
    logger.configure(extra={"name": "fplab"})
    logger.add(sys.stderr, level=level, format=STDERR_FORMAT, colorize=sys.stderr.isatty())
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(log_file, level=level, format=FILE_FORMAT, rotation="10 MB", compression="zip")
    return logger


def get_logger(name: str) -> logger:
    """Logger whose records carry ``name`` as their component."""
    return logger.bind(name=name)
