"""CSV and JSON emission for sweep tables and filter results"""
import json
import sys
from pathlib import Path
from typing import Any, Optional

import numpy as np
import pandas as pd

from ..utils.logger import setup_logger

logger = setup_logger(__name__)

INSUFFICIENT = "insufficient"
SIGNIFICANT_DIGITS = 12


class ReportGenerator:
    """
    Writes result tables and records

    Numbers are rendered with 12 significant digits and '.' decimals so that
    identical runs give byte-identical files.
    """

    @staticmethod
    def format_value(value: Any) -> str:
        """Render one cell; strings such as the "insufficient" sentinel pass through"""
        if isinstance(value, str):
            return value
        if isinstance(value, (bool, np.bool_)):
            return str(bool(value)).lower()
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        return f"{float(value):.{SIGNIFICANT_DIGITS}g}"

    @staticmethod
    def to_csv_text(table: pd.DataFrame) -> str:
        """
        Format a DataFrame as CSV text

        Args:
            table: Result table, one row per grid point

        Returns:
            CSV with a header row and '\\n' line endings
        """
        formatted = table.apply(lambda column: column.map(ReportGenerator.format_value))
        return formatted.to_csv(index=False, lineterminator="\n")

    @staticmethod
    def to_json_text(payload: Any) -> str:
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @staticmethod
    def emit(text: str, output: Optional[str] = None) -> Optional[Path]:
        """
        Write text to a file, or to stdout when no path is given

        Args:
            text: Rendered CSV or JSON
            output: Destination path

        Returns:
            Path written, None for stdout
        """
        if output is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return None

        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
        return path

    @staticmethod
    def write_csv(table: pd.DataFrame, output: Optional[str] = None) -> Optional[Path]:
        return ReportGenerator.emit(ReportGenerator.to_csv_text(table), output)

    @staticmethod
    def write_json(payload: Any, output: Optional[str] = None) -> Optional[Path]:
        return ReportGenerator.emit(ReportGenerator.to_json_text(payload), output)
