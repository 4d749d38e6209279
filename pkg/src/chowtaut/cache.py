"""Persistent cache for graded-dimension computations.

A single JSON file maps keys (d, b, m, codim, sign configuration) to the
computed dimension plus the engine version that produced it.  Writes are
atomic (write to a sibling temp file, then replace), so concurrent readers
never see a torn file.
"""

from __future__ import annotations

import json
import os
import tempfile

from . import __version__
from .ring import RingParams, TautRing

ENV_VAR = "CHOWTAUT_CACHE_DIR"


def default_cache_dir() -> str:
    if os.environ.get(ENV_VAR):
        return os.environ[ENV_VAR]
    base = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
    return os.path.join(base, "chowtaut")


def cache_key(p: RingParams, c: int) -> str:
    return f"d={p.d};b={p.b};m={p.m};c={c};{p.sign_tag()}"


class DimensionCache:
    def __init__(self, directory: str | None = None):
        self.directory = directory or default_cache_dir()
        self.path = os.path.join(self.directory, "dims.json")
        self._data: dict[str, dict] | None = None

    def _load(self) -> dict[str, dict]:
        if self._data is None:
            try:
                with open(self.path, encoding="utf-8") as fh:
                    self._data = json.load(fh)
            except (FileNotFoundError, json.JSONDecodeError):
                self._data = {}
        return self._data

    def _flush(self) -> None:
        os.makedirs(self.directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(self._data, fh, sort_keys=True, indent=0)
            os.replace(tmp, self.path)
        except BaseException:
            os.unlink(tmp)
            raise

    def get(self, p: RingParams, c: int) -> int | None:
        entry = self._load().get(cache_key(p, c))
        return None if entry is None else entry["value"]

    def put(self, p: RingParams, c: int, value: int) -> None:
        data = self._load()
        data[cache_key(p, c)] = {"value": value, "engine": __version__}
        self._flush()

    def get_or_compute(self, ring: TautRing, c: int) -> int:
        cached = self.get(ring.p, c)
        if cached is not None:
            return cached
        value = ring.graded_dimension(c)
        self.put(ring.p, c, value)
        return value
