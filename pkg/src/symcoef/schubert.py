"""Schubert polynomials, Schubert structure constants and Stanley symmetric functions."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConsistencyError, DomainError, StabilizationError
from .partitions import Partition
from .polynomial import IntPolynomial
from .tableaux import SkewShape, schur_polynomial


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, one_line: Iterable[int] = ()) -> "Permutation":
        one_line = tuple(int(v) for v in one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise DomainError(f"not a permutation: {one_line}")
        return super().__new__(cls, one_line)

    @classmethod
    def identity(cls, n: int = 0) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def from_code(cls, code: Sequence[int]) -> "Permutation":
        """Inverse of :meth:`code`; the result has no trailing fixed points."""
        code = list(code)
        n = max((i + c + 1 for i, c in enumerate(code)), default=0)
        available = list(range(1, n + 1))
        one_line = []
        for i in range(n):
            c = code[i] if i < len(code) else 0
            if c >= len(available):
                raise DomainError(f"invalid Lehmer code {code}")
            one_line.append(available.pop(c))
        return cls(one_line).trimmed()

    def __call__(self, i: int) -> int:
        return self[i - 1] if i <= len(self) else i

    @property
    def length(self) -> int:
        return sum(self.code())

    def code(self) -> tuple[int, ...]:
        """Lehmer code ``c_i = #{j > i : w(j) < w(i)}`` without trailing zeros."""
        c = [sum(1 for b in self[i + 1:] if b < a) for i, a in enumerate(self)]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def descents(self) -> list[int]:
        return [i + 1 for i in range(len(self) - 1) if self[i] > self[i + 1]]

    def trimmed(self) -> "Permutation":
        """Drop trailing fixed points, the canonical representative in S_infinity."""
        k = len(self)
        while k and self[k - 1] == k:
            k -= 1
        return tuple.__new__(Permutation, self[:k])

    def extended(self, n: int) -> "Permutation":
        return Permutation(tuple(self) + tuple(range(len(self) + 1, n + 1)))

    def times_one(self) -> "Permutation":
        """``w x 1``: the image of w in the next symmetric group."""
        return self.extended(len(self) + 1)

    def shift(self, m: int) -> "Permutation":
        """``1^m x w``: fix 1..m and send m + i to w(i) + m."""
        return Permutation(tuple(range(1, m + 1)) + tuple(v + m for v in self))

    def right_mul_simple(self, i: int) -> "Permutation":
        """``w s_i``: swap the entries in positions i and i + 1."""
        w = list(self.extended(max(len(self), i + 1)))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def is_grassmannian(self) -> bool:
        return len(self.descents()) <= 1

    def avoids_321(self) -> bool:
        # no entry has both a larger entry before it and a smaller one after it
        n = len(self)
        for j in range(n):
            if any(self[i] > self[j] for i in range(j)) and any(self[k] < self[j] for k in range(j + 1, n)):
                return False
        return True

    def encode(self) -> str:
        """Comma-separated one-line notation; ``-`` for the empty permutation."""
        return ",".join(map(str, self)) or "-"

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if text in ("", "-"):
        return Permutation()
    try:
        return Permutation(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


# --------------------------------------------------------- divided differences


def divided_difference(f: IntPolynomial, i: int) -> IntPolynomial:
    return f.divided_difference(i)


def _up_to_dominant(w: Permutation) -> tuple[Permutation, list[int]]:
    """Climb from w by right multiplication at ascents until the code is dominant.

    Returns the dominant permutation D and the indices used, so that
    S_w = d_{i_1} d_{i_2} ... d_{i_r} S_D with ``i_1`` the first index climbed.
    """
    steps = []
    n = len(w)
    while True:
        code = list(w.code()) + [0] * n
        i = next((i for i in range(n - 1) if code[i] < code[i + 1]), None)
        if i is None:
            return w, steps
        w = w.right_mul_simple(i + 1)
        steps.append(i + 1)


def _dominant_to_longest(d: Permutation, n: int) -> list[int]:
    """Climb from dominant d to w0 in S_n through dominant permutations."""
    steps = []
    w = d.extended(n)
    while True:
        asc = next((i for i in range(1, n) if w[i - 1] < w[i]), None)
        if asc is None:
            return steps
        w = w.right_mul_simple(asc)
        steps.append(asc)


def schubert_path(w: Permutation) -> list[int]:
    """Divided-difference indices taking S_{w0} to S_w, in application order.

    w0 is the longest element of the smallest S_n containing w. The path
    first descends through dominant permutations, whose Schubert
    polynomials are single monomials, before the general part.
    """
    w = Permutation(w).trimmed()
    n = max(len(w), 1)
    dom, tail = _up_to_dominant(w.extended(n))
    head = _dominant_to_longest(dom, n)
    return list(reversed(head)) + list(reversed(tail))


def schubert_from_word(n: int, word: Sequence[int]) -> IntPolynomial:
    """Apply ``d_{word[0]}``, then ``d_{word[1]}``, ... to S_{w0} for S_n."""
    f = IntPolynomial.monomial(range(n - 1, 0, -1))
    for i in word:
        f = f.divided_difference(i)
    return f


@lru_cache(maxsize=4096)
def _schubert(w: Permutation) -> IntPolynomial:
    return schubert_from_word(max(len(w), 1), schubert_path(w))


def schubert_poly(w) -> IntPolynomial:
    """Schubert polynomial of ``w`` by divided differences from the longest element."""
    return _schubert(Permutation(w).trimmed())


def random_path(w: Permutation, rng) -> list[int]:
    """A random divided-difference path from w0 down to ``w`` (ascents chosen at random)."""
    w = Permutation(w)
    n = max(len(w), 1)
    u = w.extended(n)
    steps = []
    while True:
        ascents = [i for i in range(1, n) if u[i - 1] < u[i]]
        if not ascents:
            break
        i = rng.choice(ascents)
        u = u.right_mul_simple(i)
        steps.append(i)
    return list(reversed(steps))


def monomial_coefficient(w, exponent: Iterable[int]) -> int:
    return schubert_poly(w).coefficient(exponent)


# ------------------------------------------------------------ basis expansion


def expand_in_schubert_basis(f: IntPolynomial, max_steps: int = 1_000_000) -> dict[Permutation, int]:
    """Coefficients of ``f`` in the Schubert basis.

    Repeatedly reads the lex-minimal exponent vector (x1 heaviest) as a
    Lehmer code and subtracts the matching Schubert polynomial; x^code(w)
    is the lex-minimal monomial of S_w, so the frontier strictly advances.
    """
    out: dict[Permutation, int] = {}
    rest = f
    for _ in range(max_steps):
        if not rest:
            return dict(sorted(out.items()))
        expo, coef = rest.lex_min()
        w = Permutation.from_code(expo)
        out[w] = out.get(w, 0) + coef
        rest = rest - schubert_poly(w) * coef
    raise ConsistencyError("Schubert expansion exceeded its step budget")


def schubert_structure_constant(u, v, w) -> int:
    """Coefficient of S_w in S_u * S_v."""
    u, v, w = (Permutation(x).trimmed() for x in (u, v, w))
    if w.length != u.length + v.length:
        return 0
    return expand_in_schubert_basis(schubert_poly(u) * schubert_poly(v)).get(w, 0)


def schubert_product(u, v) -> dict[Permutation, int]:
    return expand_in_schubert_basis(schubert_poly(u) * schubert_poly(v))


# ----------------------------------------------------- Grassmannian and Schur


def grassmannian_to_schur(w) -> tuple[int, Partition]:
    """Descent position d and shape lam with S_w = s_lam(x_1..x_d).

    The identity returns ``(0, ())``.
    """
    w = Permutation(w)
    des = w.descents()
    if len(des) > 1:
        raise DomainError("not Grassmannian")
    if not des:
        return 0, Partition()
    d = des[0]
    return d, Partition(p for p in (w[i - 1] - i for i in range(d, 0, -1)) if p)


def grassmannian_from_shape(lam, d: int) -> Permutation:
    """Grassmannian permutation with descent at d (or identity) for shape lam."""
    lam = Partition(lam)
    if len(lam) > d:
        raise DomainError("shape has more rows than the descent position")
    code = [0] * (d - len(lam)) + list(reversed(lam))
    return Permutation.from_code(code)


def schur_expansion(f: IntPolynomial, nvars: int) -> dict[Partition, int]:
    """Expand a symmetric polynomial in ``nvars`` variables into Schur polynomials.

    Leading-monomial subtraction: the lex-maximal exponent of a symmetric
    polynomial is a partition, and s_lam has x^lam as its lex-maximal term.
    """
    out: dict[Partition, int] = {}
    rest = f
    while rest:
        expo, coef = rest.lex_max()
        if any(a < b for a, b in zip(expo, expo[1:])) or len(expo) > nvars:
            raise DomainError("polynomial is not symmetric in the given variables")
        lam = Partition(expo)
        out[lam] = out.get(lam, 0) + coef
        rest = rest - IntPolynomial(schur_polynomial(lam, nvars)) * coef
    return dict(sorted(out.items(), reverse=True))


def stanley_stabilization(w, m_max: int | None = None) -> tuple[dict[Partition, int], int]:
    """Schur expansion of the Stanley symmetric function and the m where it settled.

    Truncates S_{1^m x w} to ``k = length(w)`` variables for m = k, k+1, ...
    and stops at the first two consecutive equal expansions.
    """
    w = Permutation(w).trimmed()
    k = w.length
    if k == 0:
        return {Partition(): 1}, 0
    if m_max is None:
        m_max = 2 * k + 1
    prev = None
    for m in range(k, m_max + 1):
        current = schur_expansion(schubert_poly(w.shift(m)).restrict(k), k)
        if current == prev:
            return current, m - 1
        prev = current
    raise StabilizationError(f"Stanley expansion did not stabilize for m <= {m_max}")


def stanley_expansion(w, m_max: int | None = None) -> dict[Partition, int]:
    return stanley_stabilization(w, m_max)[0]


# --------------------------------------------------------- 321-avoiding shapes


def rothe_diagram(w) -> list[tuple[int, int]]:
    """Cells ``(i, w(j))`` with ``i < j`` and ``w(i) > w(j)``."""
    w = Permutation(w)
    return [
        (i + 1, w[j])
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    ]


def skew_shape_of_321_avoiding(w) -> SkewShape:
    """A skew shape nu/lam whose skew Schur function is the Stanley function of w.

    Compress the Rothe diagram (drop empty rows and columns) and read its
    rows bottom to top. For 321-avoiding w every compressed row is an
    interval and the intervals move weakly left, which is a skew shape.
    """
    w = Permutation(w)
    if not w.avoids_321():
        raise DomainError("permutation contains the pattern 321")
    cells = rothe_diagram(w)
    if not cells:
        return SkewShape(Partition(), Partition())
    rows = sorted({r for r, _ in cells})
    cols = sorted({c for _, c in cells})
    col_index = {c: k for k, c in enumerate(cols)}
    intervals = []
    for r in reversed(rows):
        row_cols = sorted(col_index[c] for rr, c in cells if rr == r)
        if row_cols != list(range(row_cols[0], row_cols[-1] + 1)):
            raise ConsistencyError(f"row {r} of the diagram of {w.encode()} is not an interval")
        intervals.append((row_cols[0], row_cols[-1] + 1))
    outer = [b for _, b in intervals]
    inner = [a for a, _ in intervals]
    if any(x < y for x, y in zip(outer, outer[1:])) or any(x < y for x, y in zip(inner, inner[1:])):
        raise ConsistencyError(f"diagram of {w.encode()} is not a skew shape")
    return SkewShape(Partition(outer), Partition(p for p in inner if p))
