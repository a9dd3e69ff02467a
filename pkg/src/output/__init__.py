"""Output module - JSON reports and rich tables."""

from src.output.render import OutputProcessor
from src.output.report import REPORT_SCHEMA, ReportDocument, emit_report, graph_summary

__all__ = [
    "OutputProcessor",
    "REPORT_SCHEMA",
    "ReportDocument",
    "emit_report",
    "graph_summary",
]
