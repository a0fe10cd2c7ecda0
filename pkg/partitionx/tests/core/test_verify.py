import pytest

import partitionx as px
from partitionx.core import verify
from partitionx.testing.testutil import compare_rows


@pytest.mark.parametrize(
    "func, n_max",
    [
        [px.verify_corteel, 20],
        [px.verify_partition_count, 30],
        [px.verify_overpartition_count, 12]
    ]
)
def test_identities(func, n_max):
    rows = func(n_max, strict=True)
    assert [row.n for row in rows] == list(range(n_max + 1))
    compare_rows(rows)


def test_corteel_rows():
    assert px.verify_corteel(2) == [
        (0, 1, 1, True), (1, 0, 0, True), (2, 2, 2, True)]


def test_isomorphism():
    rows = px.verify_isomorphism(200, seed=7)
    compare_rows(rows)
    assert rows == px.verify_isomorphism(200, seed=7)
    assert all(row.formula == row.bruteforce for row in rows)
    assert px.verify_isomorphism(0) == []


def test_strict_mismatch(monkeypatch):
    monkeypatch.setattr(verify, "partition_count", lambda n: n)
    rows = px.verify_partition_count(3)
    assert [row.match for row in rows] == [False, True, True, True]
    with pytest.raises(px.VerificationError):
        px.verify_partition_count(3, strict=True)


@pytest.mark.parametrize("n_max", [-1, 2.5, None])
def test_invalid_range(n_max):
    with pytest.raises(ValueError):
        px.verify_corteel(n_max)
    with pytest.raises(ValueError):
        px.verify_isomorphism(n_max)


def test_verifiers():
    assert set(verify.VERIFIERS) == set(verify.IDENTITIES)
