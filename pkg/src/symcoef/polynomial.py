"""Sparse multivariate polynomials with exact integer coefficients."""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .errors import ConsistencyError

Exponent = tuple[int, ...]


def _trim(expo: Iterable[int]) -> Exponent:
    expo = list(expo)
    while expo and expo[-1] == 0:
        expo.pop()
    return tuple(expo)


class IntPolynomial:
    """Polynomial in x1, x2, ... stored as ``{exponent vector: coefficient}``.

    Exponent vectors carry no trailing zeros and zero coefficients are
    never stored, so equal polynomials have equal term maps.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Exponent, int] = defaultdict(int)
        for expo, coef in (terms or {}).items():
            acc[_trim(expo)] += coef
        self.terms: dict[Exponent, int] = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, expo: Iterable[int], coef: int = 1) -> "IntPolynomial":
        return cls({tuple(expo): coef})

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls({(): 1})

    @classmethod
    def variable(cls, i: int) -> "IntPolynomial":
        """The variable ``x_i`` (1-based)."""
        return cls({(0,) * (i - 1) + (1,): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial({(): other})
        return isinstance(other, IntPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial._raw(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial._raw({e: c * other for e, c in self.terms.items()})
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if len(e1) < len(e2):
                    e1p, e2p = e1 + (0,) * (len(e2) - len(e1)), e2
                else:
                    e1p, e2p = e1, e2 + (0,) * (len(e1) - len(e2))
                out[tuple(a + b for a, b in zip(e1p, e2p))] += c1 * c2
        return IntPolynomial._raw(out)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "IntPolynomial":
        # terms already trimmed; only zero coefficients need dropping
        poly = cls.__new__(cls)
        poly.terms = {e: c for e, c in terms.items() if c}
        return poly

    def coefficient(self, expo: Iterable[int]) -> int:
        return self.terms.get(_trim(expo), 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def restrict(self, k: int) -> "IntPolynomial":
        """Set ``x_j = 0`` for every ``j > k``."""
        return IntPolynomial._raw({e: c for e, c in self.terms.items() if len(e) <= k})

    def swap(self, i: int) -> "IntPolynomial":
        """Apply the simple transposition exchanging ``x_i`` and ``x_{i+1}``."""
        out = {}
        for e, c in self.terms.items():
            e = list(e) + [0] * max(0, i + 1 - len(e))
            e[i - 1], e[i] = e[i], e[i - 1]
            out[_trim(e)] = c
        return IntPolynomial._raw(out)

    def divided_difference(self, i: int, verify: bool = False) -> "IntPolynomial":
        return divided_difference(self, i, verify)

    def lex_min(self) -> tuple[Exponent, int]:
        e = min(self.terms)
        return e, self.terms[e]

    def lex_max(self) -> tuple[Exponent, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in decreasing lex order (x1 heaviest)."""
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = " ".join(f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}" for i, a in enumerate(e) if a)
            pieces.append(f"{c} * {mono}" if mono else f"{c}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.terms!r})"

    def to_json(self) -> list[list]:
        return [[list(e), c] for e, c in self.sorted_terms()]


def divided_difference(f: IntPolynomial, i: int, verify: bool = False) -> IntPolynomial:
    """``(f - s_i f) / (x_i - x_{i+1})`` computed exactly.

    Monomials pair with their images under ``s_i``. For a pair with
    exponents ``p > q`` in positions ``i, i+1`` the quotient of
    ``x_i^p x_{i+1}^q - x_i^q x_{i+1}^p`` is the explicit geometric sum
    ``sum_t x_i^{p-1-t} x_{i+1}^{q+t}``, so no long division is involved.
    """
    if i < 1:
        raise ValueError("divided difference index must be positive")
    out: dict[Exponent, int] = defaultdict(int)
    for e, c in f.terms.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        sign = 1
        if p < q:
            p, q, sign = q, p, -1
        # linear in f: each monomial contributes c * d_i(x^e) on its own
        for t in range(p - q):
            e[i - 1], e[i] = p - 1 - t, q + t
            out[_trim(e)] += sign * c
    result = IntPolynomial._raw(dict(out))
    if verify:
        lhs = (IntPolynomial.variable(i) - IntPolynomial.variable(i + 1)) * result
        if lhs != f - f.swap(i):
            raise ConsistencyError(f"divided difference d_{i} is not exact")
    return result
