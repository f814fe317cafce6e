"""
Report emitters: JSON through pydantic, CSV through pandas, aligned text through tabulate.
"""

import pandas as pd
from tabulate import tabulate

from src.cli.config import Report
from src.constants import OutputFormat


def render(report: Report, fmt: OutputFormat) -> str:
    """
    Serialises a report; the output ends without a trailing newline
    """
    if fmt == OutputFormat.JSON:
        return report.model_dump_json(indent=2)
    rows = report.table()
    if fmt == OutputFormat.CSV:
        return pd.DataFrame(rows, dtype=str).to_csv(index=False, lineterminator="\n").rstrip("\n")
    title = f"{report.version} {report.command}"
    return title + "\n" + tabulate(rows, headers="keys", tablefmt="github")
