"""Semistandard and Littlewood-Richardson tableaux by backtracking.

All enumerators share one filler that visits the cells of a skew shape
row by row, top to bottom, and right to left inside each row. That is the
reverse reading order, so the lattice-word condition of the LR rule can
be checked incrementally as entries are placed.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .partitions import Partition, contains, dominates, encode, gen_partitions


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise DomainError(f"{encode(self.inner)} is not contained in {encode(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_bounds(self) -> list[tuple[int, int]]:
        """Half-open column range ``[start, stop)`` of each row."""
        inner = tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))
        return [(a, b) for a, b in zip(inner, self.outer)]

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, (a, b) in enumerate(self.row_bounds()) for c in range(a, b)]

    def __str__(self) -> str:
        return f"{encode(self.outer)}/{encode(self.inner)}"


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def content(self) -> Counter:
        return Counter(v for row in self.rows for v in row)

    def encode(self) -> str:
        """Rows joined by ``/``; entries comma-separated, ``.`` for inner cells."""
        inner = tuple(self.shape.inner) + (0,) * len(self.rows)
        return "/".join(
            ",".join(["."] * inner[r] + [str(v) for v in row]) for r, row in enumerate(self.rows)
        )


def _fill(
    shape: SkewShape,
    max_entry: int,
    content: tuple[int, ...] | None = None,
    lattice: bool = False,
) -> Iterator[list[list[int]]]:
    """Yield semistandard fillings as lists of rows (skew cells only).

    With ``content`` the number of each entry is fixed; with ``lattice`` the
    reverse reading word must be a lattice word.
    """
    bounds = shape.row_bounds()
    order = [(r, c) for r, (a, b) in enumerate(bounds) for c in range(b - 1, a - 1, -1)]
    if not order:
        yield [[] for _ in bounds]
        return
    in_shape = {cell for cell in order}
    below = {}
    for r, c in order:
        d = 0
        while (r + d + 1, c) in in_shape:
            d += 1
        below[(r, c)] = d
    grid: dict[tuple[int, int], int] = {}
    remaining = list(content) if content is not None else None
    used = [0] * (max_entry + 2)
    total = len(order)

    def rec(pos: int):
        if pos == total:
            yield [[grid[(r, c)] for c in range(a, b)] for r, (a, b) in enumerate(bounds)]
            return
        r, c = order[pos]
        lo = grid[(r - 1, c)] + 1 if (r - 1, c) in grid else 1
        hi = min(grid.get((r, c + 1), max_entry), max_entry - below[(r, c)])
        for v in range(lo, hi + 1):
            if remaining is not None and remaining[v - 1] == 0:
                continue
            if lattice and v > 1 and used[v] >= used[v - 1]:
                continue
            grid[(r, c)] = v
            used[v] += 1
            if remaining is not None:
                remaining[v - 1] -= 1
            yield from rec(pos + 1)
            if remaining is not None:
                remaining[v - 1] += 1
            used[v] -= 1
            del grid[(r, c)]

    yield from rec(0)


def _as_tableau(shape: SkewShape, rows) -> Tableau:
    return Tableau(shape, tuple(tuple(row) for row in rows))


def _check_content(shape: SkewShape, content) -> Partition:
    content = Partition(content)
    if shape.size != content.size:
        raise DomainError(f"shape {shape} has {shape.size} cells but content sums to {content.size}")
    return content


def count_ssyt(shape: SkewShape, content) -> int:
    """Number of semistandard fillings of ``shape`` with the given content."""
    content = _check_content(shape, content)
    if not content:
        return 1
    return sum(1 for _ in _fill(shape, len(content), tuple(content)))


def list_ssyt(shape: SkewShape, content, limit: int | None = None) -> list[Tableau]:
    content = _check_content(shape, content)
    out = []
    for rows in _fill(shape, len(content), tuple(content)):
        if limit is not None and len(out) >= limit:
            break
        out.append(_as_tableau(shape, rows))
    return out


def kostka(lam, mu) -> int:
    """Kostka number: semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise DomainError(f"incompatible sizes: |{encode(lam)}| != |{encode(mu)}|")
    if not dominates(lam, mu):
        return 0
    return count_ssyt(SkewShape(lam), mu)


def _lr_zero(lam, mu, nu) -> bool:
    return not contains(nu, lam) or not contains(nu, mu)


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient by the lattice-word rule.

    Counts semistandard fillings of ``nu/lam`` with content ``mu`` whose
    reverse reading word is a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size:
        raise DomainError(
            f"incompatible sizes: |{encode(lam)}| + |{encode(mu)}| != |{encode(nu)}|"
        )
    if _lr_zero(lam, mu, nu):
        return 0
    if not mu:
        return 1
    return sum(1 for _ in _fill(SkewShape(nu, lam), len(mu), tuple(mu), lattice=True))


def list_lr_tableaux(lam, mu, nu, limit: int | None = None) -> list[Tableau]:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size:
        raise DomainError("incompatible sizes")
    if _lr_zero(lam, mu, nu):
        return []
    shape = SkewShape(nu, lam)
    out = []
    for rows in _fill(shape, max(len(mu), 1), tuple(mu), lattice=True):
        if limit is not None and len(out) >= limit:
            break
        out.append(_as_tableau(shape, rows))
    return out


def kostka_as_lr(lam, mu) -> tuple[Partition, Partition]:
    """Tail-sum partitions ``(sigma, tau)`` with K(lam, mu) = c^tau_{sigma, lam}.

    ``tau_i = mu_i + mu_{i+1} + ...`` and ``sigma_i = mu_{i+1} + ...``.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise DomainError(f"incompatible sizes: |{encode(lam)}| != |{encode(mu)}|")
    tails = [sum(mu[i:]) for i in range(len(mu))]
    return Partition(tails[1:]), Partition(tails)


def skew_schur_expansion(shape: SkewShape) -> dict[Partition, int]:
    """Nonzero Schur coefficients of the skew Schur function of ``shape``.

    One pass over all lattice fillings, tallied by content.
    """
    tally: Counter = Counter()
    n = shape.size
    for rows in _fill(shape, max(n, 1), None, lattice=True):
        counts = Counter(v for row in rows for v in row)
        tally[Partition(counts[i] for i in range(1, len(counts) + 1))] += 1
    if n == 0:
        return {Partition(): 1}
    return dict(sorted(tally.items(), reverse=True))


def schur_polynomial(lam, nvars: int) -> dict[tuple[int, ...], int]:
    """Schur polynomial in ``nvars`` variables as exponent-vector -> coefficient.

    Generating function of semistandard tableaux with entries at most
    ``nvars``; exponent vectors carry no trailing zeros.
    """
    lam = Partition(lam)
    poly: Counter = Counter()
    if len(lam) > nvars:
        return {}
    for rows in _fill(SkewShape(lam), nvars):
        counts = Counter(v for row in rows for v in row)
        expo = [counts[i] for i in range(1, nvars + 1)]
        while expo and expo[-1] == 0:
            expo.pop()
        poly[tuple(expo)] += 1
    return dict(poly)


def lr_expansion(lam, mu) -> dict[Partition, int]:
    """Product s_lam * s_mu in the Schur basis (nonzero terms)."""
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for nu in gen_partitions(lam.size + mu.size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out
