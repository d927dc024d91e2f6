import pytest

from symcoef.characters import mn_character
from symcoef.errors import DomainError
from symcoef.partitions import Partition
from symcoef.tableaux import lr_coefficient
from symcoef.witnesses import (
    an_witness,
    char_witness,
    enumerate_value_class,
    evaluate,
    kostka_witness,
    kron_triples_in_order,
    kron_witness,
    lr_triples_in_order,
    lr_witness,
    minimal_lr_triple,
    negative_class,
    paired_value_classes,
    witness,
)


def test_char_witness_examples():
    w = char_witness(2, 0)
    assert w.data == ((4, 1), (2, 1, 1, 1)) and w.verified_value == 2
    w = char_witness(0, 0)
    assert w.data == ((2, 1), (2, 1))
    w = char_witness(-1, 0)
    assert w.data == ((2, 1, 1, 1, 1), (4, 1, 1)) and w.verified_value == -1


@pytest.mark.parametrize("n", range(5, 16))
def test_negative_classes_are_partitions(n):
    for k in list(range(1, n - 4)) + [n - 3]:
        mu = negative_class(n, k)
        assert mu.size == n and list(mu) == sorted(mu, reverse=True)
        assert mn_character((2,) + (1,) * (n - 2), mu) == -k


def test_negative_class_domain():
    with pytest.raises(DomainError):
        negative_class(9, 5)  # k = n - 4 is not covered


def test_kostka_and_lr_examples():
    assert kostka_witness(3, 1).data == ((2, 1, 1), (1, 1, 1, 1))
    assert kostka_witness(1, 5).data == ((6,), (5, 1))
    assert kostka_witness(0, 1).data == ((1, 1), (2,))
    w = lr_witness(2, 1)
    assert w.data == ((2, 1), (2, 1), (3, 2, 1)) and w.verified_value == 2
    w = lr_witness(1, 1)
    assert w.data == ((1,), (2,), (2, 1))
    assert lr_witness(0, 1).verified_value == 0
    with pytest.raises(DomainError):
        kostka_witness(2, 0)


def test_kron_witness_examples():
    w = kron_witness(2, 0)
    assert w.params["base"] == ["2,1", "2,1", "3,2,1"]
    assert w.verified_value == 2
    assert kron_witness(0, 0).verified_value == 0
    assert kron_witness(1, 1).verified_value == 1


def test_minimal_lr_triple():
    assert minimal_lr_triple(1) == ((), (), ())
    assert minimal_lr_triple(2) == ((2, 1), (2, 1), (3, 2, 1))
    assert lr_coefficient(*minimal_lr_triple(3)) == 3


@pytest.mark.parametrize("family,targets,indices", [
    ("character", range(-8, 9), (0, 1, 2, 3)),
    ("an_character", range(-8, 9), (0, 1, 2, 3)),
    ("kostka", range(0, 9), (1, 2, 3, 4)),
    ("lr", range(0, 9), (1, 2, 3)),
])
def test_witnesses_verify_and_differ(family, targets, indices):
    for z in targets:
        seen = set()
        for j in indices:
            w = witness(family, z, j)
            assert w.verified_value == z == evaluate(family, w.data)
            seen.add(w.data)
        assert len(seen) == len(indices)


def test_an_witness_preconditions():
    from symcoef.partitions import has_distinct_odd_parts, is_even_class, is_self_conjugate

    for z in range(-6, 7):
        lam, mu = an_witness(z, 1).data
        assert not is_self_conjugate(lam) and is_even_class(mu) and not has_distinct_odd_parts(mu)


def test_witness_json():
    doc = char_witness(-3, 1).to_json()
    assert set(doc) == {"family", "target", "data", "verified_value", "params"}
    assert doc["verified_value"] == -3


def test_unknown_family():
    with pytest.raises(DomainError):
        witness("schur", 1)


def test_value_class_examples():
    assert enumerate_value_class("lr", 1, 1) == [((), (), ())]
    assert enumerate_value_class("kronecker", 1, 1) == [((), (), ())]
    triples = enumerate_value_class("lr", 2, 3)
    assert len(set(triples)) == 3
    assert all(lr_coefficient(*t) == 2 for t in triples)


def _position(order, triple):
    for i, (t, _) in enumerate(order):
        if t == triple:
            return i


def test_value_class_streams_are_ordered_and_distinct():
    for family, stream_fn in (("lr", lr_triples_in_order), ("kronecker", kron_triples_in_order)):
        for k in (0, 1, 2):
            triples = enumerate_value_class(family, k, 6)
            assert len(set(triples)) == len(triples) == 6
            assert all(evaluate(family, t) == k for t in triples)
        stream = stream_fn()
        prefix = [next(stream) for _ in range(400)]
        keys = [t for t, _ in prefix]
        assert len(set(keys)) == len(keys)


def test_pairing_fragment():
    pairs = paired_value_classes(1, 4)
    assert len(pairs) == 4
    for lr_triple, kron_triple in pairs:
        assert lr_coefficient(*lr_triple) == evaluate("kronecker", kron_triple) == 1
