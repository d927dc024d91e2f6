"""Kronecker coefficients and their stable limits under Murnaghan padding."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .characters import character_row
from .errors import ConsistencyError, DomainError, StabilizationError
from .partitions import Partition, class_sizes, encode

DEFAULT_NMAX = 40


def kronecker(lam, mu, nu) -> int:
    """Multiplicity of V_nu in V_lam (x) V_mu, via the class-weighted character sum."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        raise DomainError(
            f"incompatible sizes: {encode(lam)}, {encode(mu)}, {encode(nu)} must all have the same size"
        )
    a, b, c = character_row(lam), character_row(mu), character_row(nu)
    total = sum(size * x * y * z for size, x, y, z in zip(class_sizes(n), a, b, c))
    g, rem = divmod(total, factorial(n))
    if rem:
        raise ConsistencyError(f"class sum {total} not divisible by {n}!")
    return g


@dataclass(frozen=True)
class PaddedPartition:
    base: Partition
    N: int
    value: Partition


def pad(lam, N: int) -> PaddedPartition:
    """``lam[N] = (N - |lam|, lam_1, lam_2, ...)``."""
    lam = Partition(lam)
    first = N - lam.size
    if first < (lam[0] if lam else 0):
        raise DomainError(
            f"N={N} too small for {encode(lam)}: first part would violate monotonicity"
        )
    return PaddedPartition(lam, N, Partition(((first,) if first else ()) + tuple(lam)))


def min_padding(lam) -> int:
    lam = Partition(lam)
    return lam.size + (lam[0] if lam else 0)


@dataclass(frozen=True)
class StableResult:
    value: int
    stabilized_at_N: int
    history: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {"value": self.value, "stabilized_at_N": self.stabilized_at_N}


def stable_kronecker(lam, mu, nu, nmax: int = DEFAULT_NMAX) -> StableResult:
    """Stable Kronecker coefficient, detected empirically.

    Evaluates g(lam[N], mu[N], nu[N]) for N = N0, N0 + 1, ... and stops at
    the first two consecutive equal values. ``stabilized_at_N`` is the
    first N of that pair. Agreement is a heuristic, not a proof of
    stability.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    N = max(min_padding(lam), min_padding(mu), min_padding(nu))
    history: list[tuple[int, int]] = []
    prev = None
    while N <= nmax:
        value = kronecker(pad(lam, N).value, pad(mu, N).value, pad(nu, N).value)
        history.append((N, value))
        if prev is not None and value == prev:
            return StableResult(value, N - 1, tuple(history))
        prev = value
        N += 1
    raise StabilizationError(f"stabilization not detected below N_max={nmax}")
