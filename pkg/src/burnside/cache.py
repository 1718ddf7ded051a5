"""Persistent cache for expensive intermediates.

Entries are keyed by a content hash of the defining data (multiplication
tables, computation kind, parameters) plus a format version, never by
group labels, so identical inputs share entries across jobs while
same-named but different groups cannot collide.  Writes are atomic
(write-temp-then-rename), so independent processes may share a cache
directory.

A cache is activated per process with :func:`configure`; when none is
active every lookup falls through to recomputation.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Callable

FORMAT_VERSION = 1

_ACTIVE: "CacheStore | None" = None
_CLEARERS: list[Callable[[], None]] = []


class CacheStore:
    """A directory of JSON payloads addressed by content hash."""

    def __init__(self, directory: str | Path) -> None:
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, kind: str, key_obj) -> Path:
        blob = json.dumps(
            {"kind": kind, "key": key_obj, "version": FORMAT_VERSION},
            sort_keys=True,
            separators=(",", ":"),
        ).encode()
        digest = hashlib.sha256(blob).hexdigest()
        return self.directory / f"{kind}-{digest}.json"

    def get(self, kind: str, key_obj):
        path = self._path(kind, key_obj)
        if not path.exists():
            return None
        payload = json.loads(path.read_text(encoding="utf-8"))
        if payload.get("version") != FORMAT_VERSION:
            return None
        return payload["data"]

    def put(self, kind: str, key_obj, data) -> None:
        path = self._path(kind, key_obj)
        body = json.dumps(
            {"version": FORMAT_VERSION, "kind": kind, "data": data},
            sort_keys=True,
            separators=(",", ":"),
        )
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(body)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def configure(store: CacheStore | None) -> None:
    global _ACTIVE
    _ACTIVE = store


def active_store() -> CacheStore | None:
    return _ACTIVE


@contextmanager
def using(store: CacheStore | None):
    previous = _ACTIVE
    configure(store)
    try:
        yield store
    finally:
        configure(previous)


def fetch_or_compute(kind: str, key_obj, compute: Callable[[], object]):
    """Disk-backed memoization; a plain call when no store is active."""
    store = _ACTIVE
    if store is None:
        return compute()
    hit = store.get(kind, key_obj)
    if hit is not None:
        return hit
    data = compute()
    store.put(kind, key_obj, data)
    return data


def register_clearer(fn: Callable[[], None]) -> None:
    _CLEARERS.append(fn)


def clear_memory_caches() -> None:
    """Drop all in-process memoization (cache-transparency testing)."""
    for fn in _CLEARERS:
        fn()
