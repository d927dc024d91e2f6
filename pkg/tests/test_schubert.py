import random

import pytest
from hypothesis import given, settings, strategies as st

from symcoef.errors import DomainError
from symcoef.polynomial import IntPolynomial
from symcoef.schubert import (
    Permutation,
    all_permutations,
    expand_in_schubert_basis,
    grassmannian_from_shape,
    grassmannian_to_schur,
    monomial_coefficient,
    parse_permutation,
    random_path,
    rothe_diagram,
    schubert_from_word,
    schubert_poly,
    schubert_structure_constant,
    skew_shape_of_321_avoiding,
    stanley_expansion,
    stanley_stabilization,
)
from symcoef.tableaux import SkewShape, lr_coefficient, schur_polynomial, skew_schur_expansion

P = Permutation
X1, X2 = IntPolynomial.variable(1), IntPolynomial.variable(2)


def test_permutation_basics():
    w = P((3, 1, 4, 2))
    assert w.code() == (2, 0, 1)
    assert w.length == 3
    assert w.descents() == [1, 3]
    assert P.from_code(w.code()) == w
    assert P((2, 1, 3)).trimmed() == (2, 1)
    assert P((2, 1)).times_one() == (2, 1, 3)
    assert P((2, 1)).shift(2) == (1, 2, 4, 3)
    assert P((1, 2)).trimmed().encode() == "-"
    with pytest.raises(DomainError):
        P((1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_code_determines_permutation(n):
    seen = {}
    for w in all_permutations(n):
        assert P.from_code(w.code()) == w.trimmed()
        seen.setdefault(w.code(), w)
    assert len(seen) == len(all_permutations(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_code_stable_under_times_one(n):
    for w in all_permutations(n)[:: max(1, n)]:
        assert w.code() == w.times_one().code()


def test_parse_round_trip():
    for text in ("2,1,4,3", "-", "1"):
        assert parse_permutation(parse_permutation(text).encode()) == parse_permutation(text)


def test_examples():
    assert schubert_poly(P((1, 2, 3))) == IntPolynomial.one()
    assert schubert_poly(P((3, 2, 1))) == X1 * X1 * X2
    assert schubert_poly(P((1, 3, 2))) == X1 + X2
    assert schubert_poly(P((2, 1))) == X1


@pytest.mark.parametrize("n", range(1, 7))
def test_longest_element_is_staircase(n):
    assert schubert_poly(P.longest(n)) == IntPolynomial.monomial(range(n - 1, 0, -1))


@pytest.mark.parametrize("n", range(1, 6))
def test_positivity_homogeneity_stability(n):
    for w in all_permutations(n):
        f = schubert_poly(w)
        assert all(c > 0 for c in f.terms.values())
        assert f.degrees() == {w.length}
        assert f == schubert_poly(w.times_one())
        assert f.lex_min()[0] == w.code()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_path_independence(n):
    rng = random.Random(n)
    for w in all_permutations(n):
        if w.length > 6:
            continue
        reference = schubert_poly(w)
        for _ in range(2):
            assert schubert_from_word(n, random_path(w, rng)) == reference


def test_monomial_coefficient():
    assert monomial_coefficient(P.longest(4), (3, 2, 1)) == 1
    assert monomial_coefficient(P((1, 3, 2)), (1,)) == 1
    assert monomial_coefficient(P((1, 3, 2)), (0, 1)) == 1
    assert monomial_coefficient(P((1, 3, 2)), (1, 1)) == 0


def test_expansion_examples():
    f = X1 * X1 + X1 * X2
    assert expand_in_schubert_basis(f) == {P((2, 3, 1)): 1, P((3, 1, 2)): 1}
    assert expand_in_schubert_basis(X1 * (X1 + X2)) == expand_in_schubert_basis(f)
    w = P((2, 4, 1, 3))
    assert expand_in_schubert_basis(schubert_poly(w)) == {w: 1}


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.sampled_from(all_permutations(4)), st.integers(min_value=-4, max_value=4), max_size=5))
def test_expansion_round_trip(coeffs):
    f = IntPolynomial()
    for w, c in coeffs.items():
        f = f + schubert_poly(w) * c
    expected = {w.trimmed(): c for w, c in coeffs.items() if c}
    assert expand_in_schubert_basis(f) == expected


def test_structure_constants():
    assert schubert_structure_constant((2, 1, 3), (2, 1, 3), (3, 1, 2)) == 1
    assert schubert_structure_constant((2, 1, 3), (2, 1, 3), (2, 3, 1)) == 0
    assert schubert_structure_constant((2, 1, 3), (1, 3, 2), (2, 3, 1)) == 1
    assert schubert_structure_constant((1, 3, 2), (1, 3, 2), (3, 1, 2)) == 0
    for u in all_permutations(3):
        assert schubert_structure_constant(u, (), u) == 1


def test_structure_constants_nonnegative_s4():
    perms = all_permutations(4)
    from symcoef.schubert import schubert_product

    for u in perms:
        for v in perms:
            assert all(c >= 0 for c in schubert_product(u, v).values())


def test_grassmannian_examples():
    assert grassmannian_to_schur(P((1, 2, 3))) == (0, ())
    assert grassmannian_to_schur(P((1, 3, 2))) == (2, (1,))
    assert grassmannian_to_schur(P((3, 1, 2))) == (1, (2,))
    with pytest.raises(DomainError, match="not Grassmannian"):
        grassmannian_to_schur(P((3, 2, 1)))


@pytest.mark.parametrize("n", range(2, 7))
def test_grassmannian_equals_schur(n):
    for w in all_permutations(n):
        if not w.is_grassmannian():
            continue
        d, lam = grassmannian_to_schur(w)
        if d == 0:
            assert schubert_poly(w) == IntPolynomial.one()
            continue
        assert schubert_poly(w) == IntPolynomial(schur_polynomial(lam, d))
        assert grassmannian_from_shape(lam, d) == w.trimmed()


def test_grassmannian_structure_constants_are_lr():
    rng = random.Random(7)
    for d in (2, 3):
        perms = [w for w in all_permutations(5) if w.descents() in ([], [d])]
        for _ in range(60):
            u, v, w = rng.choice(perms), rng.choice(perms), rng.choice(perms)
            lu, lv, lw = (grassmannian_to_schur(x)[1] for x in (u, v, w))
            c = schubert_structure_constant(u, v, w)
            if lu.size + lv.size == lw.size:
                assert c == lr_coefficient(lu, lv, lw)
            else:
                assert c == 0


def test_stanley_examples():
    assert stanley_expansion(P((2, 1, 3))) == {(1,): 1}
    assert stanley_expansion(P((2, 1, 4, 3))) == {(2,): 1, (1, 1): 1}
    assert stanley_expansion(P((2, 3, 1))) == {(1, 1): 1}
    assert stanley_expansion(P(())) == {(): 1}
    _, m = stanley_stabilization(P((2, 1, 4, 3)))
    assert m >= 2


@pytest.mark.parametrize("n", range(2, 6))
def test_stanley_of_grassmannian_is_single_schur(n):
    for w in all_permutations(n):
        if w.is_grassmannian() and w.length:
            _, lam = grassmannian_to_schur(w)
            assert stanley_expansion(w) == {lam: 1}


def test_skew_shape_examples():
    assert skew_shape_of_321_avoiding(P((2, 1, 3))) == SkewShape((1,))
    shape = skew_shape_of_321_avoiding(P((2, 1, 4, 3)))
    assert shape == SkewShape((2, 1), (1,))
    assert skew_shape_of_321_avoiding(P((2, 3, 1))) == SkewShape((1, 1))
    with pytest.raises(DomainError):
        skew_shape_of_321_avoiding(P((3, 2, 1)))


def test_rothe_diagram_size_is_length():
    for w in all_permutations(5):
        assert len(rothe_diagram(w)) == w.length


def test_skew_shape_matches_stanley_s6():
    for w in all_permutations(6):
        if w.avoids_321() and w.length <= 7:
            shape = skew_shape_of_321_avoiding(w)
            assert skew_schur_expansion(shape) == stanley_expansion(w)


@pytest.mark.slow
def test_skew_shape_matches_stanley_s6_long():
    for w in all_permutations(6):
        if w.avoids_321() and w.length > 7:
            assert skew_schur_expansion(skew_shape_of_321_avoiding(w)) == stanley_expansion(w)
