import io

from partitionx import overpartitions_of, partition_count, verify_corteel
from partitionx.io.pandasio import (
    count_table,
    read_count_table,
    rows_to_frame,
    stream_table,
    to_csv
)


def test_count_table():
    frame = count_table(partition_count, 5)
    assert list(frame.columns) == ["n", "value"]
    assert list(frame["value"]) == [1, 1, 2, 3, 5, 7]
    assert to_csv(frame) == "n,value\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n"


def test_big_values_stay_exact():
    frame = count_table(partition_count, 500, n_min=499)
    text = to_csv(frame)
    assert str(partition_count(500)) in text
    back = read_count_table(io.StringIO(text))
    assert list(back["value"]) == [partition_count(499), partition_count(500)]
    assert type(back["value"][1]) is int


def test_rows_to_frame():
    frame = rows_to_frame(verify_corteel(2))
    assert to_csv(frame) == (
        "n,formula,bruteforce,match\n"
        "0,1,1,True\n"
        "1,0,0,True\n"
        "2,2,2,True\n"
    )


def test_to_csv_path(tmp_path):
    path = tmp_path / "counts.csv"
    assert to_csv(count_table(partition_count, 2), path) is None
    assert path.read_text() == "n,value\n0,1\n1,1\n2,2\n"


def test_stream_table():
    frame = stream_table(overpartitions_of(1), 1)
    assert list(frame.columns) == ["n", "overpartition"]
    assert sorted(frame["overpartition"]) == ["<1^-1>", "<1^1>"]
    assert to_csv(stream_table([], 0)) == "n,overpartition\n"
