"""Command-line interface"""
from .main import build_parser, main, run
from .run_config import Command, RunConfig

__all__ = ["build_parser", "main", "run", "Command", "RunConfig"]
