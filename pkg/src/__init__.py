"""Unambiguous quantum state filtering and loss sensing"""

__version__ = "1.0.0"
