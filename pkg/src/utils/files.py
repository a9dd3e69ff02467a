"""Input files for graph and clique specs, and atomic writes for the table cache."""

from __future__ import annotations

from pathlib import Path

# Graph files are graph6 lines or edge lists; anything bigger is a mistake.
MAX_INPUT_BYTES = 16 * 1024 * 1024


def read_input_file(path: Path, max_size: int = MAX_INPUT_BYTES) -> str:
    """Read a graph or clique input file as UTF-8 text.

    Raises:
        FileNotFoundError: The path does not exist.
        ValueError: Not a regular file, larger than ``max_size``, or not text.
    """
    if not path.is_file():
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        raise ValueError(f"Not a file: {path}")

    size = path.stat().st_size
    if size > max_size:
        raise ValueError(f"File too large: {size} bytes (max {max_size})")

    data = path.read_bytes()
    if b"\0" in data[:4096]:
        raise ValueError("File appears to be binary")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ValueError(f"Not UTF-8 text at byte {e.start}") from e


def atomic_write_text(path: Path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary sibling and rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)
