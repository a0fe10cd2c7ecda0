# Copyright (c) 2023-2024 partitionx developers

# This library is free software: you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation version 3.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library.  If not, see <http://www.gnu.org/licenses/>.

"""Tabular output through pandas

Counting results become :class:`pandas.DataFrame` objects with
``object`` dtype so that arbitrary-precision integers are kept exact.
"""
import pandas as pd

from partitionx.core.overpartition import format_text


def count_table(function, n_max, n_min=0):
    """DataFrame with columns ``n`` and ``value = function(n)``"""
    ns = list(range(n_min, n_max + 1))
    return pd.DataFrame(
        {"n": ns, "value": [function(n) for n in ns]}, dtype=object)


def stream_table(values, n):
    """DataFrame with columns ``n`` and ``overpartition`` in ``<...>`` text"""
    texts = [format_text(v) for v in values]
    return pd.DataFrame(
        {"n": [n] * len(texts), "overpartition": texts},
        columns=["n", "overpartition"], dtype=object)


def rows_to_frame(rows):
    """DataFrame of :class:`~partitionx.core.verify.VerificationRow` records"""
    return pd.DataFrame.from_records(
        [tuple(row) for row in rows],
        columns=["n", "formula", "bruteforce", "match"]
    ).astype(object)


def to_csv(frame, path_or_buf=None):
    """Write ``frame`` as CSV without the index, return text if no path"""
    return frame.to_csv(path_or_buf, index=False)


def read_count_table(path_or_buf):
    """Read a table written by :func:`to_csv` keeping integers exact"""
    frame = pd.read_csv(path_or_buf, dtype=str)
    return frame.apply(lambda col: col.map(int)).astype(object)
