"""Irreducible characters of S_n by the Murnaghan-Nakayama rule.

Single values come from recursive border-strip removal with a bounded
memo. Full tables are filled bottom-up: the column of cycle type ``mu``
in the S_m table is a signed combination of the column ``mu[1:]`` of the
S_{m - mu_1} table, one term per border strip of size ``mu_1``. That
combination is the hot loop and lives in :mod:`symcoef._accel`.
"""
from __future__ import annotations

import csv
import io
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, isqrt

import numpy as np

from . import _accel
from .errors import DomainError
from .partitions import (
    ClassData,
    Partition,
    class_size,
    encode,
    gen_partitions,
    has_distinct_odd_parts,
    is_even_class,
    is_self_conjugate,
    partition_index,
)

DEFAULT_MEMO_LIMIT = 1 << 20


def border_strips(lam: tuple[int, ...], r: int) -> list[tuple[Partition, int]]:
    """All ways to remove a border strip of size ``r`` from ``lam``.

    Returns ``(remaining shape, height)`` pairs. Uses the beta-set picture:
    a strip of size r is a bead sliding from b to b - r onto an empty
    position, and its height is the number of beads it jumps over.
    """
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    out = []
    for i, b in enumerate(beta):
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beta if t < c < b)
        moved = sorted(beta[:i] + [t] + beta[i + 1:], reverse=True)
        parts = [moved[k] - (length - 1 - k) for k in range(length)]
        out.append((Partition(p for p in parts if p > 0), height))
    return out


class _LRUMemo:
    """Thread-safe LRU map; concurrent duplicate inserts are harmless."""

    def __init__(self, limit: int):
        self.limit = limit
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = self.misses = 0

    def get(self, key):
        with self._lock:
            try:
                value = self._data[key]
            except KeyError:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.limit:
                self._data.popitem(last=False)

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0


_memo = _LRUMemo(DEFAULT_MEMO_LIMIT)


def set_memo_limit(limit: int) -> None:
    """Bound the number of cached ``(shape, remaining cycle type)`` entries."""
    global _memo
    _memo = _LRUMemo(max(1, int(limit)))


def memo_stats() -> dict[str, int]:
    return {"entries": len(_memo), "limit": _memo.limit, "hits": _memo.hits, "misses": _memo.misses}


def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    rest = mu[1:]
    total = 0
    for shape, height in border_strips(lam, mu[0]):
        value = _mn(shape, rest)
        total += -value if height & 1 else value
    _memo.put(key, total)
    return total


def mn_character(lam, mu) -> int:
    """Character value chi^lam at a permutation of cycle type ``mu``.

    Cycles are stripped largest first, so the memo keys on the sorted tail.
    """
    lam = Partition(lam)
    mu = Partition.from_parts(mu)
    if lam.size != mu.size:
        raise DomainError(f"incompatible sizes: |{encode(lam)}| != |{encode(mu)}|")
    return _mn(lam, tuple(mu))


# ---------------------------------------------------------------- tables


def _int64_safe(n: int) -> bool:
    # |chi| <= sqrt(n!) and each accumulated entry sums at most n such terms
    return (n + 1) * isqrt(factorial(n)) < 2**62


@lru_cache(maxsize=None)
def _strip_edges(m: int, r: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sparse signed map from S_{m-r} rows to S_m rows for strips of size r."""
    target_index = partition_index(m - r)
    rows, targets, signs = [], [], []
    for i, lam in enumerate(gen_partitions(m)):
        for shape, height in border_strips(lam, r):
            rows.append(i)
            targets.append(target_index[shape])
            signs.append(-1 if height & 1 else 1)
    return (
        np.asarray(rows, dtype=np.int64),
        np.asarray(targets, dtype=np.int64),
        np.asarray(signs, dtype=np.int64),
    )


@lru_cache(maxsize=None)
def _column_groups(m: int) -> tuple[tuple[int, np.ndarray, np.ndarray], ...]:
    """Columns of the S_m table grouped by largest cycle ``r``, with sources."""
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for j, mu in enumerate(gen_partitions(m)):
        r = mu[0]
        cols, prev = groups.setdefault(r, ([], []))
        cols.append(j)
        prev.append(partition_index(m - r)[Partition(mu[1:])])
    return tuple(
        (r, np.asarray(c, dtype=np.int64), np.asarray(p, dtype=np.int64))
        for r, (c, p) in sorted(groups.items())
    )


_tables: dict[tuple[int, bool], np.ndarray] = {}
_tables_lock = threading.RLock()


def raw_table(n: int, use_numba: bool | None = None) -> np.ndarray:
    """Character values as an array; rows and columns in canonical order.

    ``int64`` while values provably fit, ``object`` (Python ints) beyond.
    Tables for every size below ``n`` are built and cached on the way.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if use_numba is None:
        use_numba = _accel.HAVE_NUMBA
    key = (n, bool(use_numba))
    with _tables_lock:
        cached = _tables.get(key)
        if cached is not None:
            return cached
        if n == 0:
            table = np.ones((1, 1), dtype=np.int64)
        else:
            dtype = np.int64 if _int64_safe(n) else object
            p = len(gen_partitions(n))
            table = np.zeros((p, p), dtype=dtype)
            for r, cols, prev_cols in _column_groups(n):
                prev = raw_table(n - r, use_numba)
                if dtype is object and prev.dtype != object:
                    prev = prev.astype(object)
                rows, targets, signs = _strip_edges(n, r)
                if dtype is object:
                    signs = signs.astype(object)
                _accel.fill_columns(table, prev, rows, targets, signs, cols, prev_cols, use_numba)
        table.setflags(write=False)
        _tables[key] = table
        return table


def clear_table_cache() -> None:
    with _tables_lock:
        _tables.clear()


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: tuple[Partition, ...]
    columns: tuple[Partition, ...]
    values: np.ndarray = field(repr=False)
    classes: tuple[ClassData, ...] = field(repr=False)

    def __call__(self, lam, mu) -> int:
        idx = partition_index(self.n)
        return int(self.values[idx[Partition(lam)], idx[Partition.from_parts(mu)]])

    def row(self, lam) -> list[int]:
        return [int(v) for v in self.values[partition_index(self.n)[Partition(lam)]]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda\\mu"] + [encode(mu) for mu in self.columns])
        for lam, vals in zip(self.rows, self.values):
            writer.writerow([encode(lam)] + [int(v) for v in vals])
        return buf.getvalue()


def character_table(n: int, use_numba: bool | None = None) -> CharacterTable:
    parts = gen_partitions(n)
    return CharacterTable(
        n=n,
        rows=parts,
        columns=parts,
        values=raw_table(n, use_numba),
        classes=tuple(ClassData(mu) for mu in parts),
    )


def character_row(lam, n: int | None = None) -> list[int]:
    """One row of the table; uses the cached table when it is cheap."""
    lam = Partition(lam)
    n = lam.size if n is None else n
    if n <= TABLE_ROW_LIMIT:
        return [int(v) for v in raw_table(n)[partition_index(n)[lam]]]
    return [_mn(lam, tuple(mu)) for mu in gen_partitions(n)]


# Full tables up to this size are cheap in memory (p(26) = 2436).
TABLE_ROW_LIMIT = 26


# -------------------------------------------------------------- intervals


@dataclass(frozen=True)
class IntervalReport:
    n: int
    value_set: frozenset[int] = field(repr=False)
    longest_run: tuple[int, int]
    run_through_zero: tuple[int, int] | None

    @property
    def l_n(self) -> int:
        lo, hi = self.longest_run
        return hi - lo + 1

    def to_json(self, include_values: bool = True) -> dict:
        doc = {
            "n": self.n,
            "l_n": self.l_n,
            "longest_run": list(self.longest_run),
            "run_through_zero": list(self.run_through_zero) if self.run_through_zero else None,
        }
        if include_values:
            doc["value_set"] = sorted(self.value_set)
        return doc


def maximal_runs(values) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers, in increasing order."""
    runs: list[tuple[int, int]] = []
    for v in sorted(set(values)):
        if runs and v == runs[-1][1] + 1:
            runs[-1] = (runs[-1][0], v)
        else:
            runs.append((v, v))
    return runs


def char_interval(n: int) -> IntervalReport:
    """Value set of all chi^lam(mu), lam, mu |- n, and its consecutive runs.

    Ties for the longest run go to the run with the smallest values.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    values = frozenset(int(v) for v in np.unique(raw_table(n)))
    runs = maximal_runs(values)
    longest = max(runs, key=lambda run: (run[1] - run[0], -run[0]))
    through_zero = next((run for run in runs if run[0] <= 0 <= run[1]), None)
    return IntervalReport(n, values, longest, through_zero)


# ------------------------------------------------------------- A_n values


def an_character(lam, mu) -> int:
    """Irreducible A_n character restricted from chi^lam at class ``mu``.

    Only the integral case is supported: ``lam`` not self-conjugate and
    ``mu`` an even class that does not split in A_n.
    """
    lam = Partition(lam)
    mu = Partition.from_parts(mu)
    if lam.size != mu.size:
        raise DomainError(f"incompatible sizes: |{encode(lam)}| != |{encode(mu)}|")
    if is_self_conjugate(lam):
        raise DomainError("split restriction, non-integral values out of scope")
    if not is_even_class(mu):
        raise DomainError("not an A_n class")
    if has_distinct_odd_parts(mu):
        raise DomainError("class splits in A_n")
    return mn_character(lam, mu)


def dimension(lam) -> int:
    lam = Partition(lam)
    return mn_character(lam, (1,) * lam.size)


__all__ = [
    "CharacterTable",
    "IntervalReport",
    "an_character",
    "border_strips",
    "char_interval",
    "character_row",
    "character_table",
    "class_size",
    "dimension",
    "maximal_runs",
    "memo_stats",
    "mn_character",
    "raw_table",
    "set_memo_limit",
]
