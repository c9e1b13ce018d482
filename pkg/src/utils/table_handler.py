"""
Tabular report output for the fplab command line.
"""

import json
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from loguru import logger

from .errors import ValidationError

SCHEMA_VERSION = 1
FORMATS = ("tsv", "json")


class TableHandler:
    """Renders report rows as TSV or versioned JSON."""

    def __init__(self, output_format: str = "tsv"):
        """
        Initialize table handler.

        Args:
            output_format: ``"tsv"`` or ``"json"``
        """
        if output_format not in FORMATS:
            raise ValidationError(f"output format must be one of {FORMATS}, got {output_format!r}")
        self.output_format = output_format
        self.logger = logger.bind(name=self.__class__.__name__)

    def to_frame(self, rows: List[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> pd.DataFrame:
        """
        Build a DataFrame with a stable column order.

        Args:
            rows: One dictionary per row
            columns: Column order; taken from the first row when omitted
        """
        if columns is None:
            columns = list(rows[0].keys()) if rows else []
        return pd.DataFrame(rows, columns=list(columns))

    def render(self, command: str, rows: List[Dict[str, Any]], notes: Optional[List[str]] = None,
               columns: Optional[Sequence[str]] = None) -> str:
        """
        Serialise a report.

        TSV output has a header row and ends with the notes as ``# `` lines.
        JSON output is ``{"schema", "command", "rows", "notes"}`` with sorted keys.
        """
        notes = list(notes or [])
        df = self.to_frame(rows, columns)
        self.logger.debug(f"rendering {len(df)} rows for '{command}' as {self.output_format}")
        if self.output_format == "json":
            payload = {
                "schema": SCHEMA_VERSION,
                "command": command,
                "rows": json.loads(df.to_json(orient="records")),
                "notes": notes,
            }
            return json.dumps(payload, sort_keys=True, indent=2, default=str) + "\n"
        text = df.to_csv(sep="\t", index=False, lineterminator="\n") if len(df.columns) else ""
        return text + "".join(f"# {note}\n" for note in notes)
