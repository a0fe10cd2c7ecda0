import json
from fractions import Fraction

import pytest

from partitionx import *
from partitionx import serialize


def test_encode():
    assert serialize.encode(parse("<1^2 2^-3>")) == {"1": 2, "2": -3}
    assert serialize.encode(Fraction(20, 27)) == "20/27"
    assert serialize.encode(2 ** 70) == str(2 ** 70)
    assert serialize.encode(True) is True
    assert serialize.encode(SubgroupSpec.length_mod(5)) == {
        "kind": "length-mod", "m": 5}
    assert serialize.encode([EMPTY, {"a": 1}]) == [{}, {"a": "1"}]


def test_loads():
    assert serialize.loads_overpartition(
        serialize.dumps(parse("<1^2 2^-3 3^1>"))) == parse("<1^2 2^-3 3^1>")
    g = SubgroupSpec.parts_in({1, 3})
    assert serialize.loads_subgroup(serialize.dumps(g)) == g
    assert serialize.loads_rational(
        serialize.dumps(Fraction(2, 3))) == Fraction(2, 3)


def test_loads_invalid():
    with pytest.raises(NonCanonicalError):
        serialize.loads_overpartition('{"1": 0}')
    with pytest.raises(NonCanonicalError):
        serialize.loads_overpartition('[1, 2]')
    with pytest.raises(SubgroupSpecError):
        serialize.loads_subgroup('{"kind": "length-mod", "m": 0}')


def test_stats_roundtrip():
    a = parse("<1^2 2^3 3^-1>")
    obj = serialize.stats_to_json(stats(a), overpartition=a)
    assert obj["overpartition"] == "<1^2 2^3 3^-1>"
    assert obj["oversize"] == 5
    assert obj["overlength"] == 4
    assert obj["overnorm"] == "8/3"
    assert obj["multiplicities"] == {"1": 2, "2": 3, "3": -1}
    assert serialize.stats_from_json(json.loads(json.dumps(obj))) == stats(a)


def test_lattice_to_json():
    obj = serialize.lattice_to_json(lattice_levels(1, 2))
    assert obj["max_part"] == 2
    assert obj["levels"] == [
        [{"partition": "<>", "supernorm": "1"}],
        [{"partition": "<1^1>", "supernorm": "2"},
         {"partition": "<2^1>", "supernorm": "3"}]
    ]
    assert obj["edges"] == [["<>", "<1^1>"], ["<>", "<2^1>"]]
    assert obj["partitionx_version"] == list(VERSION)


def test_rows_to_json():
    rows = verify_partition_count(1)
    assert serialize.rows_to_json(rows) == [
        {"n": 0, "formula": "1", "bruteforce": "1", "match": True},
        {"n": 1, "formula": "1", "bruteforce": "1", "match": True}
    ]
