"""JSON catalog files and the on-disk cache behind the CLI.

A catalog is ``{schema_version, N, group, kind, payload, tool_version,
timestamp}``. Serialisation is canonical (sorted keys, fixed indent), and the
cache stores the exact bytes written, so a cached rerun reproduces them.
"""
from __future__ import annotations

import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from . import __version__

SCHEMA_VERSION = 1
KINDS = ("class_table", "fixed_points", "orbit_catalog", "spectra_census")
DEFAULT_CACHE_DIR = ".ppo-cache"


def timestamp() -> str:
    """UTC ISO time; honours SOURCE_DATE_EPOCH for reproducible builds."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = datetime.fromtimestamp(int(epoch), timezone.utc) if epoch else datetime.now(timezone.utc)
    return when.replace(microsecond=0).isoformat()


def make_catalog(N: int, group: str, kind: str, payload) -> dict:
    if kind not in KINDS:
        raise ValueError(f"unknown catalog kind {kind!r}")
    return {
        "schema_version": SCHEMA_VERSION,
        "N": N,
        "group": group,
        "kind": kind,
        "payload": payload,
        "tool_version": __version__,
        "timestamp": timestamp(),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def validate(doc: dict) -> None:
    missing = {"schema_version", "N", "group", "kind", "payload", "tool_version", "timestamp"} - set(doc)
    if missing:
        raise ValueError(f"catalog lacks fields {sorted(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc['schema_version']}")
    if doc["kind"] not in KINDS:
        raise ValueError(f"unknown catalog kind {doc['kind']!r}")


def cache_path(cache_dir, kind: str, N: int, group: str, extra: str = "") -> Path:
    tag = f"-{extra}" if extra else ""
    return Path(cache_dir) / f"{kind}-N{N}-{group}{tag}-v{__version__}.json"


def cached_text(path: Path, build: Callable[[], dict]) -> tuple[str, bool]:
    """Return (text, hit). On a miss the catalog is built and written."""
    if path.is_file():
        return path.read_text(), True
    text = dumps(build())
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(text)
    tmp.replace(path)
    return text, False
