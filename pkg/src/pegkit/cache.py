"""Append-only JSONL cache of computed invariants.

Records are keyed by ``(graph hash, invariant, version)``; a bump of
``CACHE_VERSION`` silently retires old entries.  Corrupt lines are skipped
with a warning rather than aborting.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

CACHE_VERSION = 1
DEFAULT_PATH = Path.home() / ".cache" / "pegkit" / "invariants.jsonl"

log = logging.getLogger(__name__)


def default_path() -> Path:
    env = os.environ.get("PEGKIT_CACHE")
    return Path(env) if env else DEFAULT_PATH


class InvariantCache:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_path()
        self._entries: dict[tuple[str, str, int], dict] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    key = (rec["hash"], rec["invariant"], int(rec["version"]))
                    payload = rec["result"]
                except (ValueError, KeyError, TypeError):
                    log.warning("skipping corrupt cache line %d in %s", lineno, self.path)
                    continue
                self._entries[key] = payload

    def get(self, graph_hash: str, invariant: str) -> dict | None:
        return self._entries.get((graph_hash, invariant, CACHE_VERSION))

    def put(self, graph_hash: str, invariant: str, result: dict) -> None:
        key = (graph_hash, invariant, CACHE_VERSION)
        self._entries[key] = result
        self.path.parent.mkdir(parents=True, exist_ok=True)
        rec = {"hash": graph_hash, "invariant": invariant, "version": CACHE_VERSION, "result": result}
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    def __len__(self) -> int:
        return len(self._entries)
