"""Verified witnesses that every target value occurs, and infinitely often.

Each constructor builds an index tuple from an explicit family, recomputes
the coefficient with the corresponding evaluator, and refuses to return a
witness whose value differs from the target.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count
from typing import Iterator

import numpy as np

from .characters import an_character, mn_character, raw_table
from .errors import ConsistencyError, DomainError
from .kronecker import DEFAULT_NMAX, kronecker, min_padding, pad, stable_kronecker
from .partitions import (
    Partition,
    class_sizes,
    contains,
    encode,
    gen_partitions,
    has_distinct_odd_parts,
    is_even_class,
    is_self_conjugate,
)
from .tableaux import SkewShape, kostka, kostka_as_lr, lr_coefficient, skew_schur_expansion

FAMILIES = ("character", "an_character", "kostka", "lr", "kronecker")


@dataclass(frozen=True)
class Witness:
    family: str
    target: int
    data: tuple[Partition, ...]
    verified_value: int
    params: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "target": self.target,
            "data": [encode(p) for p in self.data],
            "verified_value": self.verified_value,
            "params": self.params,
        }


def evaluate(family: str, data) -> int:
    """Recompute the coefficient named by ``family`` at ``data``."""
    if family == "character":
        return mn_character(*data)
    if family == "an_character":
        return an_character(*data)
    if family == "kostka":
        return kostka(*data)
    if family == "lr":
        return lr_coefficient(*data)
    if family == "kronecker":
        return kronecker(*data)
    raise DomainError(f"unknown family {family!r}")


def _verified(family: str, target: int, data, **params) -> Witness:
    data = tuple(Partition(p) for p in data)
    value = evaluate(family, data)
    if value != target:
        raise ConsistencyError(f"{family} witness {data} evaluates to {value}, not {target}")
    return Witness(family, target, data, value, params)


def _hook(first: int, ones: int) -> Partition:
    return Partition((first,) + (1,) * ones)


def negative_class(n: int, k: int) -> Partition:
    """Cycle type with chi^(2,1^{n-2}) = -k, for k in [1, n-5] or k = n-3."""
    if not (1 <= k <= n - 5 or k == n - 3):
        raise DomainError(f"k={k} outside [1, n-5] U {{n-3}} for n={n}")
    if (k - n) % 2:
        return _hook(n - k - 1, k + 1)
    # parts may need sorting when n - k - 4 < 3 (the k = n - 6 case)
    return Partition.from_parts((n - k - 4, 3) + (1,) * (k + 1))


def char_witness(z: int, j: int = 0) -> Witness:
    """S_n character witness for the integer ``z``; distinct ``j`` give distinct n.

    z >= 0 uses the defining character chi^(n-1,1) = (#fixed points) - 1;
    z < 0 uses chi^(2,1^{n-2}) on the parity-dependent classes.
    """
    if j < 0:
        raise DomainError("index j must be nonnegative")
    if z >= 0:
        n = z + 3 + j
        lam, mu = Partition((n - 1, 1)), _hook(n - z - 1, z + 1)
    else:
        k = -z
        n = k + 5 + j
        lam, mu = Partition((2,) + (1,) * (n - 2)), negative_class(n, k)
    return _verified("character", z, (lam, mu), n=n, j=j)


def _an_valid(lam, mu) -> bool:
    return not is_self_conjugate(lam) and is_even_class(mu) and not has_distinct_odd_parts(mu)


def _an_search(z: int) -> Iterator[tuple[Partition, Partition]]:
    for n in count(1):
        table = raw_table(n)
        parts = gen_partitions(n)
        valid_cols = [b for b, mu in enumerate(parts) if is_even_class(mu) and not has_distinct_odd_parts(mu)]
        for a, lam in enumerate(parts):
            if is_self_conjugate(lam):
                continue
            for b in valid_cols:
                if table[a, b] == z:
                    yield lam, parts[b]


def an_witness(z: int, j: int = 0, search_limit: int = 40) -> Witness:
    """A_n character witness (restriction of a non-self-conjugate chi^lam).

    z >= -1 uses chi^(n-1,1) on explicit even, non-split classes. Negative
    values below -1 never come from the defining character on even
    classes, so z <= -2 takes the j-th hit of an exhaustive scan ordered by
    n, then lam, then mu in canonical order.
    """
    if j < 0:
        raise DomainError("index j must be nonnegative")
    if z >= 1:
        n = z + 4 + 2 * j
        data = (Partition((n - 1, 1)), _hook(3 + 2 * j, z + 1))
    elif z == 0:
        n = 5 + 2 * j
        data = (Partition((n - 1, 1)), Partition.from_parts((n - 3, 2, 1)))
    elif z == -1:
        n = 4 + 2 * j
        data = (Partition((n - 1, 1)), Partition.from_parts((n - 2, 2)))
    else:
        hits = _an_search(z)
        for _ in range(j):
            next(hits)
        data = next(hits)
        n = data[0].size
        if n > search_limit:
            raise DomainError(f"no A_n witness for {z} found with n <= {search_limit}")
    assert _an_valid(*data)
    return _verified("an_character", z, data, n=n, j=j)


def kostka_witness(k: int, j: int = 1) -> Witness:
    """K_{(1+j, 1^{k-1}), (j, 1^k)} = k for j >= 1; k = 0 uses a dominance failure."""
    if k < 0:
        raise DomainError("Kostka targets are nonnegative")
    if j < 1:
        raise DomainError("Kostka witness index j must be at least 1")
    if k == 0:
        data = (Partition((1,) * (j + 1)), Partition((j + 1,)))
    else:
        data = (_hook(1 + j, k - 1), _hook(j, k))
    return _verified("kostka", k, data, j=j)


def lr_witness(k: int, j: int = 1) -> Witness:
    """Kostka witness pushed through the tail-sum embedding K = c^tau_{sigma, lam}."""
    base = kostka_witness(k, j)
    lam, mu = base.data
    sigma, tau = kostka_as_lr(lam, mu)
    return _verified("lr", k, (sigma, lam, tau), j=j, kostka=[encode(lam), encode(mu)])


def _lr_padding_order() -> Iterator[tuple[int, tuple[Partition, Partition, Partition], int]]:
    """LR triples with nonzero coefficient, ordered by padding size.

    Order: N0 = |nu| + nu_1, then |nu|, then nu, lam, mu canonically.
    """
    for bound in count(0):
        for size in range(bound + 1):
            for nu in gen_partitions(size):
                if size + (nu[0] if nu else 0) != bound:
                    continue
                for lam_size in range(size + 1):
                    for lam in gen_partitions(lam_size):
                        if not contains(nu, lam):
                            continue
                        for mu, c in skew_schur_expansion(SkewShape(nu, lam)).items():
                            yield bound, (lam, mu, nu), c


@lru_cache(maxsize=None)
def minimal_lr_triple(k: int) -> tuple[Partition, Partition, Partition]:
    """The first LR triple with coefficient k >= 1 in the padding order."""
    if k < 1:
        raise DomainError("minimal_lr_triple needs k >= 1")
    for _, triple, c in _lr_padding_order():
        if c == k:
            return triple
    raise AssertionError("unreachable")


def kron_witness(k: int, j: int = 0, nmax: int = DEFAULT_NMAX) -> Witness:
    """Kronecker witness: an LR triple with value k padded into the stable range.

    Pads at N = (stabilization N) + j, so distinct j give distinct triples.
    """
    if k < 0:
        raise DomainError("Kronecker targets are nonnegative")
    if j < 0:
        raise DomainError("index j must be nonnegative")
    if k == 0:
        triple = lr_witness(0, j + 1).data
    else:
        triple = minimal_lr_triple(k)
    if lr_coefficient(*triple) != k:
        raise ConsistencyError("base LR triple has the wrong value")
    stable = stable_kronecker(*triple, nmax=nmax)
    N = stable.stabilized_at_N + j
    padded = tuple(pad(p, N).value for p in triple)
    return _verified(
        "kronecker",
        k,
        padded,
        j=j,
        N=N,
        stabilized_at_N=stable.stabilized_at_N,
        base=[encode(p) for p in triple],
    )


def witness(family: str, value: int, index: int | None = None) -> Witness:
    """Dispatch to the family's constructor (index defaults to its smallest valid value)."""
    if family == "character":
        return char_witness(value, 0 if index is None else index)
    if family == "an_character":
        return an_witness(value, 0 if index is None else index)
    if family == "kostka":
        return kostka_witness(value, 1 if index is None else index)
    if family == "lr":
        return lr_witness(value, 1 if index is None else index)
    if family == "kronecker":
        return kron_witness(value, 0 if index is None else index)
    raise DomainError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


# ------------------------------------------------------------- value classes


def lr_triples_in_order() -> Iterator[tuple[tuple[Partition, Partition, Partition], int]]:
    """Every triple with |lam| + |mu| = |nu| and its LR coefficient.

    Well-ordering: |nu|, then |lam|, then lam, mu, nu in canonical order.
    """
    for n in count(0):
        for a in range(n + 1):
            nus = gen_partitions(n)
            for lam in gen_partitions(a):
                expansions = {
                    nu: skew_schur_expansion(SkewShape(nu, lam)) if contains(nu, lam) else {}
                    for nu in nus
                }
                for mu in gen_partitions(n - a):
                    for nu in nus:
                        yield (lam, mu, nu), expansions[nu].get(mu, 0)


def _kron_block(n: int) -> np.ndarray:
    """All Kronecker coefficients of S_n as an object array indexed canonically."""
    table = raw_table(n).astype(object)
    sizes = np.array(class_sizes(n), dtype=object)
    fact = int(np.prod(np.arange(1, n + 1, dtype=object))) if n else 1
    p = table.shape[0]
    out = np.empty((p, p, p), dtype=object)
    for a in range(p):
        for b in range(p):
            weights = sizes * table[a] * table[b]
            sums = table.dot(weights)
            for c in range(p):
                g, rem = divmod(sums[c], fact)
                if rem:
                    raise ConsistencyError("class sum not divisible by n!")
                out[a, b, c] = g
    return out


def kron_triples_in_order() -> Iterator[tuple[tuple[Partition, Partition, Partition], int]]:
    """Every triple of partitions of a common n with its Kronecker coefficient.

    Well-ordering: n, then lam, mu, nu in canonical order.
    """
    for n in count(0):
        parts = gen_partitions(n)
        block = _kron_block(n)
        p = len(parts)
        for a in range(p):
            for b in range(p):
                for c in range(p):
                    yield (parts[a], parts[b], parts[c]), int(block[a, b, c])


def enumerate_value_class(family: str, k: int, limit: int) -> list[tuple[Partition, Partition, Partition]]:
    """First ``limit`` members of LR_k or Kron_k in the documented well-ordering."""
    if family == "lr":
        stream = lr_triples_in_order()
    elif family == "kronecker":
        stream = kron_triples_in_order()
    else:
        raise DomainError("value classes are defined for the lr and kronecker families")
    if k < 0:
        return []
    out = []
    if limit <= 0:
        return out
    for triple, value in stream:
        if value == k:
            out.append(triple)
            if len(out) >= limit:
                break
    return out


def paired_value_classes(k: int, limit: int) -> list[tuple[tuple, tuple]]:
    """Finite fragment of a value-preserving pairing of LR_k with Kron_k (i-th with i-th)."""
    return list(zip(enumerate_value_class("lr", k, limit), enumerate_value_class("kronecker", k, limit)))
