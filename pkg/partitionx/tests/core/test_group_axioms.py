from hypothesis import given

from partitionx import *
from partitionx.testing.strategies import overpartitions, partitions
from partitionx.testing.testutil import (
    compare_overpartitions,
    seeded_overpartitions,
    seeded_pairs
)


@given(overpartitions(), overpartitions(), overpartitions())
def test_associativity(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(overpartitions(), overpartitions())
def test_commutativity(a, b):
    assert a * b == b * a


@given(overpartitions())
def test_identity(a):
    assert multiply(a, EMPTY) == a
    assert multiply(EMPTY, a) == a


@given(overpartitions())
def test_inverse(a):
    assert multiply(a, inverse(a)) == EMPTY
    assert inverse(inverse(a)) == a


@given(overpartitions(), overpartitions())
def test_canonical_product(a, b):
    compare_overpartitions(a * b, Overpartition(dict(a * b)))


@given(partitions(), partitions())
def test_partitions_closed(a, b):
    c = multiply(a, b)
    assert c.is_partition()
    assert multiply_partitions(a, b) == c


@given(overpartitions())
def test_rational_form_roundtrip(a):
    num, den = to_rational_form(a)
    assert not set(num) & set(den)
    assert from_rational_form(num, den) == a
    assert multiply(num, inverse(den)) == a


@given(overpartitions())
def test_text_roundtrip(a):
    assert parse(format_text(a)) == a
    assert overline_list_parse(overline_list_format(a)) == a


@given(overpartitions(), overpartitions())
def test_power_law(a, b):
    assert a ** 2 * a ** -3 == inverse(a)
    assert (a * b) ** 2 == a ** 2 * b ** 2


def test_group_axioms_on_seeded_samples():
    pairs = list(seeded_pairs(10_000, seed=1))
    for (a, b), (c, _) in zip(pairs, pairs[1:]):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * inverse(a) == EMPTY
        assert a * EMPTY == a


def test_seeded_samples_are_reproducible():
    assert list(seeded_overpartitions(50, seed=3)) == list(
        seeded_overpartitions(50, seed=3))
