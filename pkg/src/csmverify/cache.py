"""Versioned, checksummed on-disk table cache.

Payloads are canonical JSON (sorted keys, fixed separators) wrapped in an
envelope carrying the format version and a sha256 checksum.  Files under
the size threshold are stored as plain JSON; larger ones switch to a
length-prefixed binary container with a zlib-compressed JSON body.  A
version mismatch silently forces a recompute; a checksum mismatch raises
CacheCorrupt so the caller can warn and recompute.
"""

from __future__ import annotations

import hashlib
import json
import os
import struct
import zlib
from pathlib import Path

from .errors import CacheCorrupt

FORMAT_VERSION = 1
PLAIN_JSON_LIMIT = 10 * 1024 * 1024
_MAGIC = b"CSMV"

ENV_CACHE_DIR = "CSMVERIFY_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "csmverify"


def canonical_json_bytes(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def payload_checksum(payload: dict) -> str:
    return hashlib.sha256(canonical_json_bytes(payload)).hexdigest()


class TableCache:
    """One directory of cached tables, keyed by (series, rank, kind)."""

    def __init__(self, root: Path | str):
        self.root = Path(root)

    def _path(self, series: str, rank: int, kind: str) -> Path:
        return self.root / f"{series}{rank}" / f"{kind}-v{FORMAT_VERSION}"

    def store(self, series: str, rank: int, kind: str, payload: dict) -> Path:
        """Write the payload; returns the file path actually written."""
        envelope = {
            "format_version": FORMAT_VERSION,
            "kind": kind,
            "series": series,
            "rank": rank,
            "checksum": payload_checksum(payload),
            "payload": payload,
        }
        data = canonical_json_bytes(envelope)
        base = self._path(series, rank, kind)
        base.parent.mkdir(parents=True, exist_ok=True)
        json_path = base.with_suffix(".json")
        bin_path = base.with_suffix(".bin")
        if len(data) <= PLAIN_JSON_LIMIT:
            json_path.write_bytes(data)
            bin_path.unlink(missing_ok=True)
            return json_path
        body = zlib.compress(data, 6)
        with open(bin_path, "wb") as fh:
            fh.write(_MAGIC)
            fh.write(struct.pack("<I", FORMAT_VERSION))
            fh.write(struct.pack("<Q", len(body)))
            fh.write(body)
        json_path.unlink(missing_ok=True)
        return bin_path

    def load(self, series: str, rank: int, kind: str) -> dict | None:
        """Payload, or None when absent or written by another format
        version (recompute, never silent reuse).  Raises CacheCorrupt on a
        checksum or container failure."""
        base = self._path(series, rank, kind)
        json_path = base.with_suffix(".json")
        bin_path = base.with_suffix(".bin")
        if json_path.exists():
            data = json_path.read_bytes()
        elif bin_path.exists():
            raw = bin_path.read_bytes()
            if raw[:4] != _MAGIC:
                raise CacheCorrupt(f"{bin_path}: bad magic")
            (version,) = struct.unpack("<I", raw[4:8])
            if version != FORMAT_VERSION:
                return None
            (length,) = struct.unpack("<Q", raw[8:16])
            body = raw[16:16 + length]
            if len(body) != length:
                raise CacheCorrupt(f"{bin_path}: truncated body")
            try:
                data = zlib.decompress(body)
            except zlib.error as exc:
                raise CacheCorrupt(f"{bin_path}: {exc}") from exc
        else:
            return None
        try:
            envelope = json.loads(data)
        except json.JSONDecodeError as exc:
            raise CacheCorrupt(f"{base}: not valid JSON") from exc
        if envelope.get("format_version") != FORMAT_VERSION:
            return None
        payload = envelope.get("payload")
        if payload is None or payload_checksum(payload) != envelope.get("checksum"):
            raise CacheCorrupt(f"{base}: checksum mismatch")
        return payload

    def checksum(self, series: str, rank: int, kind: str) -> str | None:
        try:
            payload = self.load(series, rank, kind)
        except CacheCorrupt:
            return None
        return payload_checksum(payload) if payload is not None else None
