"""Atomic writes and environment overrides shared by the command line."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

ENV_OUTPUT_DIR = "COVERAGEABILITY_OUTPUT_DIR"
ENV_THREADS = "COVERAGEABILITY_THREADS"


def write_atomic(path, text: str) -> Path:
    """Write UTF-8 text with LF endings via a temp file and rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def output_path(p) -> Path:
    """Relative output paths resolve under the env output directory when set."""
    p = Path(p)
    base = os.environ.get(ENV_OUTPUT_DIR)
    if base and not p.is_absolute():
        return Path(base) / p
    return p


def thread_count(default: int = 1) -> int:
    raw = os.environ.get(ENV_THREADS)
    if not raw:
        return default
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_THREADS} must be an integer, got {raw!r}") from None
    return max(1, n)
