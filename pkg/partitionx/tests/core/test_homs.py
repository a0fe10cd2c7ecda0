import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from partitionx import *
from partitionx.testing.strategies import overpartitions, subgroup_specs
from partitionx.testing.testutil import seeded_pairs

SIZE = SubgroupSpec.size_kernel()
LENGTH = SubgroupSpec.length_kernel()


@pytest.mark.parametrize(
    "literal, size, length, norm",
    [
        ["<>", 0, 0, 1],
        ["<1^2 2^3 3^-1>", 5, 4, Fraction(8, 3)],
        ["<1^2 2^-3 3^1>", -1, 0, Fraction(3, 8)],
        ["<5^-4>", -20, -4, Fraction(1, 625)],
        ["<2^3>", 6, 3, 8],
        ["<2^1 4^-1>", -2, 0, Fraction(1, 2)]
    ]
)
def test_statistics(literal, size, length, norm):
    assert oversize(literal) == size
    assert overlength(literal) == length
    assert overnorm(literal) == norm


def test_multiplicity_of():
    assert multiplicity_of(2, "<1^2 2^-3 3^1>") == -3
    assert multiplicity_of(7, "<>") == 0
    with pytest.raises(ValueError):
        multiplicity_of(0, "<>")


def test_overnorm_extends_partition_norm():
    a = Partition("<2^2 3^1 6^1>")
    assert overnorm(a) == partition_norm(a) == 72


@given(overpartitions(), overpartitions())
def test_statistics_are_homomorphisms(a, b):
    assert oversize(a * b) == oversize(a) + oversize(b)
    assert overlength(a * b) == overlength(a) + overlength(b)
    assert overnorm(a * b) == overnorm(a) * overnorm(b)
    assert multiplicity_of(3, a * b) == (
        multiplicity_of(3, a) + multiplicity_of(3, b))
    assert oversize(inverse(a)) == -oversize(a)


@given(overpartitions())
def test_statistics_on_partitions(a):
    num, den = to_rational_form(a)
    assert oversize(num) == num.size
    assert overlength(num) == num.length
    assert oversize(a) == num.size - den.size
    assert overlength(a) == num.length - den.length


def test_rational_form_identities_mixed_signs():
    a = parse("<1^2 2^-3 3^1 7^-2>")
    num, den = to_rational_form(a)
    assert (num.size, den.size) == (5, 20)
    assert (num.length, den.length) == (3, 5)
    assert oversize(a) == num.size - den.size == -15
    assert overlength(a) == num.length - den.length == -2
    assert overnorm(a) == Fraction(
        partition_norm(num), partition_norm(den)) == Fraction(3, 392)


def test_homomorphisms_on_sampled_pairs():
    S = {1, 3}
    for a, b in seeded_pairs(1000, seed=5):
        ab = a * b
        assert oversize(ab) == oversize(a) + oversize(b)
        assert overlength(ab) == overlength(a) + overlength(b)
        assert overnorm(ab) == overnorm(a) * overnorm(b)
        for k in (1, 3, 40):
            assert multiplicity_of(k, ab) == (
                multiplicity_of(k, a) + multiplicity_of(k, b))
        assert delete_parts_in(S, ab) == (
            delete_parts_in(S, a) * delete_parts_in(S, b))
        assert overlength_mod(5, ab) == (
            overlength_mod(5, a) + overlength_mod(5, b)) % 5

        num, den = to_rational_form(a)
        assert oversize(a) == num.size - den.size
        assert overlength(a) == num.length - den.length


def test_stats_report():
    report = stats("<1^2 2^3 3^-1>")
    assert report == {
        "oversize": 5,
        "overlength": 4,
        "overnorm": Fraction(8, 3),
        "size": 11,
        "length": 6,
        "numerator_size": 8,
        "denominator_size": 3,
        "numerator_length": 5,
        "denominator_length": 1,
        "multiplicities": {1: 2, 2: 3, 3: -1}
    }


def test_stats_of_identity():
    report = stats(EMPTY)
    assert report["overnorm"] == 1
    assert report["multiplicities"] == {}
    assert all(report[k] == 0 for k in report
               if k not in ("overnorm", "multiplicities"))


class TestSubgroupSpec:

    @pytest.mark.parametrize(
        "args, kwargs",
        [
            [("foo",), {}],
            [("parts-in",), {}],
            [("parts-in",), {"S": []}],
            [("parts-avoiding",), {"S": [0, 1]}],
            [("length-mod",), {"m": 0}],
            [("length-mod",), {"m": True}],
            [("length-mod",), {}]
        ]
    )
    def test_invalid(self, args, kwargs):
        with pytest.raises(SubgroupSpecError):
            SubgroupSpec(*args, **kwargs)

    def test_from_args(self):
        assert SubgroupSpec.from_args("parts-in", "1,3") == (
            SubgroupSpec.parts_in({1, 3}))
        assert SubgroupSpec.from_args("length-mod", "5") == (
            SubgroupSpec.length_mod(5))
        assert SubgroupSpec.from_args("size-kernel") == SIZE
        with pytest.raises(SubgroupSpecError):
            SubgroupSpec.from_args("length-mod", "x")
        with pytest.raises(SubgroupSpecError):
            SubgroupSpec.from_args("parts-avoiding", None)

    def test_json(self):
        g = SubgroupSpec.parts_avoiding([3, 1])
        assert g.to_json() == {"kind": "parts-avoiding", "S": [1, 3]}
        assert SubgroupSpec.from_json(g.to_json()) == g
        assert SIZE.to_json() == {"kind": "size-kernel"}
        assert SubgroupSpec.length_mod(5).to_json() == {
            "kind": "length-mod", "m": 5}
        with pytest.raises(SubgroupSpecError):
            SubgroupSpec.from_json({"S": [1]})

    def test_repr(self):
        assert repr(SubgroupSpec.parts_in({3, 1})) == (
            "SubgroupSpec('parts-in', S=[1, 3])")
        assert repr(SIZE) == "SubgroupSpec('size-kernel')"


@pytest.mark.parametrize(
    "literal, g, expected",
    [
        ["<1^2 2^-1>", SIZE, True],
        ["<1^1>", SIZE, False],
        ["<1^2 2^-1 5^1>", LENGTH, False],
        ["<1^2 2^-1 5^-1>", LENGTH, True],
        ["<2^1 3^1>", SubgroupSpec.parts_avoiding({1, 2}), False],
        ["<3^-1 4^1>", SubgroupSpec.parts_avoiding({1, 2}), True],
        ["<1^-3 3^2>", SubgroupSpec.parts_in({1, 3}), True],
        ["<1^-3 2^2>", SubgroupSpec.parts_in({1, 3}), False],
        ["<2^7 4^-2>", SubgroupSpec.length_mod(5), True],
        ["<2^7>", SubgroupSpec.length_mod(5), False]
    ]
)
def test_is_member(literal, g, expected):
    assert is_member(literal, g) is expected


@given(subgroup_specs())
def test_identity_in_every_subgroup(g):
    assert is_member(EMPTY, g)
    image = quotient_image(EMPTY, g)
    assert image == 0 or image == EMPTY


def _odd(i):
    return i % 2 == 1


def test_is_member_where():
    odd = _odd
    assert is_member_where("<1^1 3^-2 9^1>", odd)
    assert not is_member_where("<1^1 2^1>", odd)
    assert is_member_where("<2^1 4^-1>", odd, avoiding=True)
    assert is_member_where(EMPTY, odd, avoiding=True)


def test_delete_parts():
    assert delete_parts_in({2}, "<1^2 2^-3 3^1>") == parse("<1^2 3^1>")
    assert delete_parts_in({1, 5}, EMPTY) == EMPTY
    assert delete_parts_where(
        lambda i: i % 2 == 0, "<1^2 2^-3 4^1 5^-1>") == parse("<1^2 5^-1>")
    with pytest.raises(ValueError):
        delete_parts_in({0}, "<1^1>")


def test_overlength_mod():
    assert overlength_mod(3, "<5^-4>") == 2
    assert overlength_mod(7, EMPTY) == 0
    assert overlength_mod(1, "<1^3 2^-8>") == 0
    with pytest.raises(ValueError):
        overlength_mod(0, "<1^1>")


def test_same_coset():
    a = parse("<1^2 2^-3 3^1>")
    assert same_coset(a, a, SIZE)
    assert same_coset("<1^1>", "<2^1>", LENGTH)
    assert not same_coset("<1^1>", "<2^1>", SIZE)


@pytest.mark.parametrize(
    "literal, g, expected",
    [
        ["<1^2 2^3 3^-1>", SIZE, 5],
        ["<1^2 2^3 3^-1>", LENGTH, 4],
        ["<5^-4>", SubgroupSpec.length_mod(3), 2],
        ["<1^2 2^-3 3^1>", SubgroupSpec.parts_in({2}),
         Overpartition("<1^2 3^1>")],
        ["<1^2 2^-3 3^1>", SubgroupSpec.parts_avoiding({2}),
         Overpartition("<2^-3>")]
    ]
)
def test_quotient_image(literal, g, expected):
    assert quotient_image(literal, g) == expected


FIRST_ISOMORPHISM_SPECS = [
    SIZE,
    LENGTH,
    SubgroupSpec.parts_in({1, 3}),
    SubgroupSpec.parts_avoiding({1, 3}),
    SubgroupSpec.length_mod(5)
]


def _image_product(x, y, g):
    if g.kind == "length-mod":
        return (x + y) % g.m
    return x * y if isinstance(x, Overpartition) else x + y


@pytest.mark.parametrize("g", FIRST_ISOMORPHISM_SPECS, ids=repr)
def test_first_isomorphism(g):
    for a, b in seeded_pairs(1000, seed=11):
        image_a, image_b = quotient_image(a, g), quotient_image(b, g)
        assert same_coset(a, b, g) == (image_a == image_b)
        assert is_member(a, g) == (
            image_a == quotient_image(EMPTY, g))
        assert quotient_image(a * b, g) == _image_product(
            image_a, image_b, g)


@pytest.mark.parametrize("g", FIRST_ISOMORPHISM_SPECS, ids=repr)
def test_coset_representative(g):
    for a, _ in seeded_pairs(100, seed=12, max_part=6, max_mult=3):
        image = quotient_image(a, g)
        rep = coset_representative(image, g)
        assert quotient_image(rep, g) == image
        assert same_coset(a, rep, g)


def test_coset_representative_values():
    assert coset_representative(-3, SIZE) == parse("<1^-3>")
    assert coset_representative(0, LENGTH) == EMPTY
    assert coset_representative(7, SubgroupSpec.length_mod(5)) == parse(
        "<1^2>")
    with pytest.raises(ValueError):
        coset_representative("<1^1>", SIZE)
    with pytest.raises(ValueError):
        coset_representative("<1^1>", SubgroupSpec.parts_in({1}))


def test_small_overpartitions_partitioned_into_cosets():
    g = SubgroupSpec.length_mod(3)
    values = [a for n in range(5) for a in overpartitions_of(n)]
    classes = {}
    for a in values:
        classes.setdefault(quotient_image(a, g), []).append(a)
    assert set(classes) == {0, 1, 2}
    for members in classes.values():
        for a, b in itertools.combinations(members, 2):
            assert same_coset(a, b, g)


def _member_part(a, g):
    # a times the inverse of its coset representative lies in g
    rep = coset_representative(quotient_image(a, g), g)
    return a * inverse(rep)


@given(subgroup_specs(max_part=40), overpartitions(max_part=40),
       overpartitions(max_part=40))
def test_subgroups_closed(g, a, b):
    x, y = _member_part(a, g), _member_part(b, g)
    assert is_member(x, g) and is_member(y, g)
    assert is_member(x * y, g)
    assert is_member(inverse(x), g)
    assert is_member(x / y, g)


@given(subgroup_specs(max_part=40), overpartitions(max_part=40),
       overpartitions(max_part=40), overpartitions(max_part=40))
def test_same_coset_is_equivalence(g, a, b, c):
    assert same_coset(a, a, g)
    assert same_coset(a, b, g) == same_coset(b, a, g)
    if same_coset(a, b, g) and same_coset(b, c, g):
        assert same_coset(a, c, g)

    # elements of one coset built from a
    b2 = a * _member_part(b, g)
    c2 = b2 * _member_part(c, g)
    assert same_coset(a, b2, g) and same_coset(b2, a, g)
    assert same_coset(b2, c2, g) and same_coset(a, c2, g)


@pytest.mark.parametrize("g", FIRST_ISOMORPHISM_SPECS, ids=repr)
def test_same_coset_on_sampled_triples(g):
    samples = list(seeded_pairs(1000, seed=21))
    for (a, b), (c, _) in zip(samples, samples[1:]):
        assert same_coset(a, b, g) == same_coset(b, a, g)
        if same_coset(a, b, g) and same_coset(b, c, g):
            assert same_coset(a, c, g)
        x, y = _member_part(a, g), _member_part(c, g)
        assert is_member(x * y, g) and is_member(inverse(x), g)
        assert same_coset(b, b * x, g)
