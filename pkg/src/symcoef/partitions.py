"""Integer partitions and conjugacy-class data for the symmetric groups."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions compare as tuples, so they hash, sort and serve as cache
    keys. The empty tuple is the unique partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition, dropping zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def encode(self) -> str:
        return encode(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def parse(text: str) -> Partition:
    """Parse the comma-separated encoding; ``-`` is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def encode(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


def _gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def gen_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically decreasing order.

    ``(n)`` comes first and ``(1^n)`` last.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _gen(n, n))


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict[Partition, int]:
    """Position of each partition of ``n`` in the canonical order."""
    return {lam: i for i, lam in enumerate(gen_partitions(n))}


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def z_factor(mu: Iterable[int]) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Iterable[int]) -> int:
    """Number of permutations of cycle type ``mu`` (exact)."""
    mu = tuple(mu)
    return factorial(sum(mu)) // z_factor(mu)


class ClassData(tuple):
    """``(cycle_type, class_size)`` pair for one conjugacy class."""

    __slots__ = ()

    def __new__(cls, cycle_type: Partition) -> "ClassData":
        cycle_type = Partition(cycle_type)
        return super().__new__(cls, (cycle_type, class_size(cycle_type)))

    @property
    def cycle_type(self) -> Partition:
        return self[0]

    @property
    def class_size(self) -> int:
        return self[1]


@lru_cache(maxsize=None)
def class_sizes(n: int) -> tuple[int, ...]:
    """Class sizes of S_n aligned with :func:`gen_partitions`."""
    return tuple(class_size(mu) for mu in gen_partitions(n))


def is_self_conjugate(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return conjugate(lam) == lam


def has_distinct_odd_parts(mu: Iterable[int]) -> bool:
    mu = tuple(mu)
    return all(p % 2 == 1 for p in mu) and len(set(mu)) == len(mu)


def is_even_class(mu: Iterable[int]) -> bool:
    """True when permutations of cycle type ``mu`` are even."""
    mu = tuple(mu)
    return (sum(mu) - len(mu)) % 2 == 0


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """Dominance order ``lam >= mu`` for partitions of the same size."""
    lam, mu = tuple(lam), tuple(mu)
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """Young diagram containment ``inner ⊆ outer``."""
    outer, inner = tuple(outer), tuple(inner)
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))
