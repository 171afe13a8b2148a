"""Utility modules"""
from .config import Config, Settings
from .logger import setup_logger, logger
from .cache import SimpleCache, kraus_cache
from . import exceptions

__all__ = ["Config", "Settings", "setup_logger", "logger", "SimpleCache", "kraus_cache", "exceptions"]
