"""
fplab - command-line entry point.

Usage: ``python app.py <command> [options]``; see ``python app.py --help``.
"""

import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
