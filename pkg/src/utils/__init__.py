"""Utility functions."""

from src.utils.files import atomic_write_text, read_input_file
from src.utils.log import is_verbose, log, set_verbose

__all__ = [
    "atomic_write_text",
    "read_input_file",
    "is_verbose",
    "log",
    "set_verbose",
]
