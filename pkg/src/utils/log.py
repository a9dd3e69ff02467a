"""Timestamped stderr diagnostics, kept off stdout so results stay parseable."""

from __future__ import annotations

import sys
import time

_verbose = False


def set_verbose(enabled: bool) -> None:
    global _verbose
    _verbose = enabled


def is_verbose() -> bool:
    return _verbose


def log(component: str, msg: str) -> None:
    """Log to stderr when verbose output is enabled."""
    if not _verbose:
        return
    timestamp = time.strftime("%H:%M:%S")
    print(f"[{timestamp}] [{component}] {msg}", file=sys.stderr, flush=True)
