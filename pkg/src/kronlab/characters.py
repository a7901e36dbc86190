"""Symmetric group characters via the Murnaghan-Nakayama rule.

Values are memoized in-process.  When ``KRONLAB_CACHE_DIR`` is set, every
top-level value is also appended to ``characters.txt`` in that directory
as ``<shape>;<cycle type>;<value>`` and reloaded by later processes.
"""

from __future__ import annotations

import math
import os
import threading
from collections import Counter
from functools import lru_cache
from pathlib import Path

from .partition import Partition, format_partition, parse, weight

CACHE_ENV = "KRONLAB_CACHE_DIR"
CACHE_FILE = "characters.txt"


class WeightMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return ()
    return _partitions(n, n)


def partitions_up_to(n: int):
    for m in range(n + 1):
        yield from enumerate_partitions(m)


@lru_cache(maxsize=None)
def z_order(rho: Partition) -> int:
    """Centralizer order: prod over i of i^m_i * m_i!."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(rho: Partition) -> int:
    return math.factorial(weight(rho)) // z_order(rho)


def sign(rho: Partition) -> int:
    return -1 if (weight(rho) - len(rho)) % 2 else 1


@lru_cache(maxsize=None)
def _rim_hooks(shape: Partition, k: int) -> tuple:
    """All (shape minus a k-rim hook, sign) pairs, using beta numbers."""
    n = len(shape)
    betas = [shape[i] + n - 1 - i for i in range(n)]
    present = set(betas)
    out = []
    for b in betas:
        t = b - k
        if t < 0 or t in present:
            continue
        between = sum(1 for x in betas if t < x < b)
        new = sorted([x for x in betas if x != b] + [t], reverse=True)
        parts = tuple(x - (n - 1 - i) for i, x in enumerate(new))
        parts = tuple(x for x in parts if x > 0)
        out.append((parts, -1 if between % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(shape: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for smaller, sgn in _rim_hooks(shape, k):
        total += sgn * _mn(smaller, rest)
    return total


class CharacterCache:
    """Memo of top-level character values with optional text-file backing."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self._memo: dict = {}
        self._lock = threading.Lock()
        self._path = Path(directory) / CACHE_FILE if directory else None
        if self._path is not None:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            self._load()

    @property
    def path(self):
        return self._path

    def _load(self):
        if not self._path.exists():
            return
        with open(self._path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                lam, rho, value = line.split(";")
                self._memo[(parse(lam), parse(rho))] = int(value)

    def get(self, lam: Partition, rho: Partition) -> int:
        key = (lam, rho)
        value = self._memo.get(key)
        if value is not None:
            return value
        value = _mn(lam, rho)
        self._memo[key] = value
        if self._path is not None:
            record = f"{format_partition(lam, '')};{format_partition(rho, '')};{value}\n"
            with self._lock, open(self._path, "a", encoding="utf-8") as fh:
                fh.write(record)
        return value

    def __len__(self):
        return len(self._memo)

    def __contains__(self, key):
        return key in self._memo


_default_cache: CharacterCache | None = None
_default_lock = threading.Lock()


def default_cache() -> CharacterCache:
    global _default_cache
    with _default_lock:
        if _default_cache is None:
            _default_cache = CharacterCache(os.environ.get(CACHE_ENV) or None)
        return _default_cache


def reset_default_cache():
    """Forget the process-wide cache (re-reads the environment next time)."""
    global _default_cache
    with _default_lock:
        _default_cache = None


def character_value(lam: Partition, rho: Partition) -> int:
    """The irreducible character chi^lam evaluated on cycle type rho."""
    lam, rho = tuple(lam), tuple(rho)
    if weight(lam) != weight(rho):
        raise WeightMismatch(f"|{lam}| != |{rho}|")
    return default_cache().get(lam, rho)


def character_column(lam: Partition) -> list:
    """Values of chi^lam on every cycle type, in enumerate_partitions order."""
    return [character_value(lam, rho) for rho in enumerate_partitions(weight(lam))]
