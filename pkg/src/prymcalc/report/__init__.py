"""Paper report: recompute published values and diff them against the expected table."""

from prymcalc.report.checks import CHECKS, build_paper_report, compute_check
from prymcalc.report.table import get_table_path, load_expected_table

__all__ = [
    "CHECKS",
    "build_paper_report",
    "compute_check",
    "get_table_path",
    "load_expected_table",
]
