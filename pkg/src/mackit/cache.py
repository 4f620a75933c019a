"""On-disk cache of computed expansions.

One JSON file per (family, weight). Each file records a schema version and
the library version; a file with either one different is ignored and
rewritten on the next store.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Callable

from . import __version__
from .partitions import Partition
from .symfun import SymFunc

SCHEMA_VERSION = 1
ENV_VAR = "MACKIT_CACHE"


def default_directory() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "mackit"


def _key(lam: Partition) -> str:
    return ",".join(map(str, lam))


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_directory()

    def _path(self, family: str, weight: int) -> Path:
        return self.directory / f"{family}-{weight}.json"

    def _load(self, family: str, weight: int) -> dict:
        path = self._path(family, weight)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return {}
        if data.get("schema_version") != SCHEMA_VERSION or data.get("library_version") != __version__:
            return {}
        if data.get("family") != family or data.get("weight") != weight:
            return {}
        return data.get("entries", {})

    def get(self, family: str, lam) -> SymFunc | None:
        lam = Partition(lam)
        entry = self._load(family, sum(lam)).get(_key(lam))
        return SymFunc.from_json(entry) if entry is not None else None

    def put(self, family: str, lam, value: SymFunc) -> None:
        lam = Partition(lam)
        weight = sum(lam)
        entries = self._load(family, weight)
        entries[_key(lam)] = value.to_json()
        payload = {
            "schema_version": SCHEMA_VERSION,
            "library_version": __version__,
            "family": family,
            "weight": weight,
            "entries": dict(sorted(entries.items())),
        }
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, self._path(family, weight))

    def fetch(self, family: str, lam, compute: Callable[[], SymFunc]) -> SymFunc:
        hit = self.get(family, lam)
        if hit is not None:
            return hit
        value = compute()
        try:
            self.put(family, lam, value)
        except OSError:
            pass  # an unwritable cache only costs recomputation
        return value

    def files(self) -> list[Path]:
        if not self.directory.is_dir():
            return []
        return sorted(self.directory.glob("*-*.json"))

    def clear(self) -> int:
        removed = 0
        for path in self.files():
            path.unlink()
            removed += 1
        return removed

    def stats(self) -> dict:
        files = []
        for path in self.files():
            family, _, weight = path.stem.rpartition("-")
            entries = len(self._load(family, int(weight))) if weight.isdigit() else 0
            files.append({"file": path.name, "entries": entries, "bytes": path.stat().st_size})
        return {
            "directory": str(self.directory),
            "files": files,
            "total_entries": sum(f["entries"] for f in files),
            "total_bytes": sum(f["bytes"] for f in files),
        }
