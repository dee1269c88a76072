"""Checksummed JSON cache files with single-writer atomic replacement."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .errors import CacheCorruptionError


def checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def write_json_atomic(path: Path, payload: dict) -> None:
    """Write ``payload`` plus a ``checksum`` field; readers never see a partial file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = dict(payload)
    data["checksum"] = checksum(payload)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json_checked(path: Path, fmt: str, version: int) -> dict:
    """Load a cache file, verifying format tag, version and checksum."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise CacheCorruptionError(f"unreadable cache file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise CacheCorruptionError(f"{path}: cache root is not an object")
    stored = data.pop("checksum", None)
    if data.get("format") != fmt or data.get("version") != version:
        raise CacheCorruptionError(f"{path}: unknown format/version tag")
    if stored != checksum(data):
        raise CacheCorruptionError(f"{path}: checksum mismatch")
    return data
