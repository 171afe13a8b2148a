"""Services module"""
from .figure_service import FigureService, log_grid
from .crosscheck_service import CrosscheckReport, CrosscheckService
from .filter_service import FilterService

__all__ = [
    "FigureService",
    "log_grid",
    "CrosscheckReport",
    "CrosscheckService",
    "FilterService",
]
