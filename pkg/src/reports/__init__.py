"""CSV and JSON report generation"""
from .csv_report import INSUFFICIENT, ReportGenerator

__all__ = ["INSUFFICIENT", "ReportGenerator"]
