"""Persistent content-addressed cache for Betti tables and summaries.

One JSON file per key under a version-tagged directory; writes go through a
temporary file and an atomic rename, so concurrent workers and interrupted
runs cannot corrupt entries.  A version bump retires every old entry by
switching directories.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path


class DiskCache:
    def __init__(self, root, version):
        self.root = Path(root)
        self.dir = self.root / f"v{version}"
        self.dir.mkdir(parents=True, exist_ok=True)
        manifest = self.root / "manifest.json"
        if not manifest.exists():
            self._atomic_write(manifest, {"schema": 1, "version": version})

    def _path(self, key):
        h = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.dir / f"{h}.json"

    def get(self, key):
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None

    def put(self, key, value):
        self._atomic_write(self._path(key), value)

    def _atomic_write(self, path, value):
        tmp = path.with_suffix(f".tmp.{os.getpid()}")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, path)
