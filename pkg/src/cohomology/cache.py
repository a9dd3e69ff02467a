"""Persistent cache of essential tables keyed by canonical graph code.

The file is JSON Lines: a versioned header, then one ``{"key", "value"}``
record per line. Records are only ever appended, a torn last line is skipped
on load, and a header with another version discards the whole file.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from src.utils.files import atomic_write_text
from src.utils.log import log

CACHE_FORMAT = "liegraph.cache"
CACHE_VERSION = 2
CACHE_FILENAME = "tables.jsonl"
CACHE_DIR_ENV = "LIEGRAPH_CACHE_DIR"
DEFAULT_CACHE_DIR = Path("~/.cache/liegraph")


def _log(msg: str) -> None:
    log("cache", msg)


def resolve_cache_dir(configured: Optional[str] = None) -> Path:
    """Cache directory: ``$LIEGRAPH_CACHE_DIR``, then ``configured``, then the default."""
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        return Path(env).expanduser()
    if configured:
        return Path(configured).expanduser()
    return DEFAULT_CACHE_DIR.expanduser()


@dataclass
class CacheStats:
    """Lookup statistics."""
    hits: int = 0
    misses: int = 0
    writes: int = 0

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


class TableCache:
    """Key-value store for computed tables.

    Safe for concurrent use from threads in one process; inserts are
    idempotent, so racing writers of the same key are harmless.

    Example:
        cache = TableCache(Path("/tmp/liegraph"))
        cache.put("Bw", "essential", {"dims": [0, 0, 2, 1]})
        cache.get("Bw", "essential")
    """

    def __init__(self, directory: Optional[Path] = None, enabled: bool = True):
        """Initialize the cache.

        Args:
            directory: Directory holding the cache file (resolved if omitted)
            enabled: When False every lookup misses and nothing is written
        """
        self.enabled = enabled
        self.path = (directory or resolve_cache_dir()) / CACHE_FILENAME
        self.stats = CacheStats()
        self._entries: Dict[str, Any] = {}
        self._lock = threading.Lock()
        self._loaded = False

    @staticmethod
    def key(code: str, kind: str) -> str:
        return f"{kind}:{code}"

    # -------------------------------------------------------------------------
    # Lookup
    # -------------------------------------------------------------------------

    def get(self, code: str, kind: str) -> Optional[Any]:
        """Cached value or None."""
        if not self.enabled:
            return None
        with self._lock:
            self._ensure_loaded()
            value = self._entries.get(self.key(code, kind))
            if value is None:
                self.stats.misses += 1
            else:
                self.stats.hits += 1
            return value

    def put(self, code: str, kind: str, value: Any) -> None:
        """Store ``value`` unless the key is already present."""
        if not self.enabled:
            return
        key = self.key(code, kind)
        with self._lock:
            self._ensure_loaded()
            if key in self._entries:
                return
            self._entries[key] = value
            try:
                with open(self.path, "a", encoding="utf-8") as f:
                    f.write(json.dumps({"key": key, "value": value}, separators=(",", ":")) + "\n")
                self.stats.writes += 1
            except OSError as e:
                _log(f"Write failed, keeping entry in memory only: {e}")

    def __len__(self) -> int:
        with self._lock:
            self._ensure_loaded()
            return len(self._entries)

    def clear(self) -> None:
        """Drop every entry, on disk too."""
        with self._lock:
            self._entries.clear()
            self._loaded = True
            self._write_header()

    # -------------------------------------------------------------------------
    # File handling
    # -------------------------------------------------------------------------

    def _header(self) -> str:
        return json.dumps({"format": CACHE_FORMAT, "version": CACHE_VERSION}) + "\n"

    def _write_header(self) -> None:
        try:
            atomic_write_text(self.path, self._header())
        except OSError as e:
            _log(f"Cannot initialise {self.path}: {e}")

    def _ensure_loaded(self) -> None:
        if self._loaded:
            return
        self._loaded = True
        if not self.path.exists():
            self._write_header()
            return

        with open(self.path, encoding="utf-8", errors="replace") as f:
            text = f.read()
        lines = text.splitlines()
        if text and not text.endswith("\n"):
            # Terminate a torn record so the next append starts on its own line.
            with open(self.path, "a", encoding="utf-8") as f:
                f.write("\n")
        try:
            header = json.loads(lines[0]) if lines else {}
        except json.JSONDecodeError:
            header = {}
        if not isinstance(header, dict):
            header = {}
        if header.get("format") != CACHE_FORMAT or header.get("version") != CACHE_VERSION:
            _log(f"Discarding {self.path}: header {header!r} does not match version {CACHE_VERSION}")
            self._write_header()
            return

        skipped = 0
        for line in lines[1:]:
            try:
                record = json.loads(line)
                self._entries[record["key"]] = record["value"]
            except (json.JSONDecodeError, KeyError, TypeError):
                skipped += 1
        _log(f"Loaded {len(self._entries)} entries from {self.path} ({skipped} skipped)")
