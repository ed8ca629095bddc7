"""
Persistent Kostka-Foulkes cache stored as JSON lines:

    {"lam": [2, 1], "mu": [1, 1, 1], "kf": [[1, "1/1"], [2, "1/1"]]}

The cache is a pure memo: presence or absence never changes a computed value.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass
from typing import Optional

from .partitions import Partition
from .qarith import QLaurent
from .tableaux import _kostka_foulkes

log = logging.getLogger(__name__)

ENV_VAR = "DELTAQ_CACHE"


@dataclass(frozen=True)
class KFCacheEntry:
    lam: Partition
    mu: Partition
    kf: QLaurent

    def to_json(self) -> dict:
        return {"lam": list(self.lam), "mu": list(self.mu), "kf": self.kf.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "KFCacheEntry":
        lam, mu = Partition(data["lam"]), Partition(data["mu"])
        if lam.size != mu.size:
            raise ValueError("lam and mu have different sizes")
        return cls(lam, mu, QLaurent.from_json(data["kf"]))


class KFCache(dict):
    """
    ``{(lam, mu): QLaurent}`` with load/store bookkeeping. When ``paranoid``
    is set, loaded entries are recomputed on first use and replaced if wrong.
    """

    def __init__(self, paranoid: bool = False):
        super().__init__()
        self.paranoid = paranoid
        self.loaded = 0
        self.rejected = 0
        self.mismatched = 0
        self._unverified: set = set()

    def get(self, key, default=None):
        value = super().get(key, default)
        if value is not None and key in self._unverified:
            self._unverified.discard(key)
            fresh = _kostka_foulkes(*key)
            if fresh != value:
                log.warning("cache entry K_%s,%s was %s, recomputed %s",
                            list(key[0]), list(key[1]), value, fresh)
                self.mismatched += 1
                self[key] = fresh
                value = fresh
        return value

    def stats(self) -> dict:
        return {"loaded": self.loaded, "rejected": self.rejected,
                "mismatched": self.mismatched, "entries": len(self)}


def kf_cache_load(path: str, paranoid: bool = False) -> KFCache:
    cache = KFCache(paranoid=paranoid)
    if not os.path.exists(path):
        return cache
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read cache {path}: {exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                entry = KFCacheEntry.from_json(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping corrupt cache line (%s)", path, lineno, exc)
                cache.rejected += 1
                continue
            key = (entry.lam, entry.mu)
            cache[key] = entry.kf
            if paranoid:
                cache._unverified.add(key)
            cache.loaded += 1
    return cache


def kf_cache_store(path: str, cache: dict) -> None:
    """Write every entry, sorted by key, via a temp file and an atomic rename."""
    directory = os.path.dirname(os.path.abspath(path))
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(prefix=".kfcache-", dir=directory)
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            for (lam, mu) in sorted(cache, key=lambda k: (sum(k[0]), k[0], k[1])):
                entry = KFCacheEntry(Partition(lam), Partition(mu), dict.__getitem__(cache, (lam, mu)))
                fh.write(json.dumps(entry.to_json(), separators=(",", ":")) + "\n")
        os.replace(tmp, path)
    except OSError as exc:
        if tmp is not None and os.path.exists(tmp):
            os.unlink(tmp)
        raise OSError(f"cannot write cache {path}: {exc}") from exc


def resolve_cache_path(flag: Optional[str]) -> Optional[str]:
    return flag or os.environ.get(ENV_VAR) or None
