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

"""JSON forms of partitionx values

========================  =================================================
value                     JSON
========================  =================================================
overpartition             object of decimal part strings to multiplicities
rational                  ``"num/den"`` string, ``"n"`` for integers
big integer               decimal string
subgroup spec             ``{"kind": ..., "S": [...], "m": ...}``
statistics report         object with named fields
========================  =================================================
"""
import json
from fractions import Fraction

import partitionx
from partitionx.core.homs import SubgroupSpec
from partitionx.core.overpartition import (
    BaseMultiplicities,
    format_text,
    from_json_obj,
    to_json_obj
)
from partitionx.core.supernorm import format_rational, parse_rational


def encode(value):
    """Convert a partitionx value into a JSON-compatible object"""
    if isinstance(value, BaseMultiplicities):
        return to_json_obj(value)
    elif isinstance(value, SubgroupSpec):
        return value.to_json()
    elif isinstance(value, Fraction):
        return format_rational(value)
    elif isinstance(value, bool) or value is None:
        return value
    elif isinstance(value, int):
        return str(value)
    elif isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    elif isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    else:
        return value


def dumps(value, **kwargs):
    return json.dumps(encode(value), **kwargs)


def loads_overpartition(text):
    return from_json_obj(json.loads(text))


def loads_subgroup(text):
    return SubgroupSpec.from_json(json.loads(text))


def loads_rational(text):
    return parse_rational(json.loads(text))


def stats_to_json(report, overpartition=None):
    """JSON object of a report made by :func:`~partitionx.core.homs.stats`

    Signed statistics stay JSON integers; the overnorm becomes a
    ``"num/den"`` string and multiplicities an overpartition object.
    """
    result = {}
    if overpartition is not None:
        result["overpartition"] = format_text(overpartition)
    for key, value in report.items():
        if key == "overnorm":
            result[key] = format_rational(value)
        elif key == "multiplicities":
            result[key] = {str(k): v for k, v in value.items()}
        else:
            result[key] = value
    return result


def stats_from_json(obj):
    """Inverse of :func:`stats_to_json`"""
    result = {}
    for key, value in obj.items():
        if key == "overpartition":
            continue
        elif key == "overnorm":
            result[key] = parse_rational(value)
        elif key == "multiplicities":
            result[key] = {int(k): v for k, v in value.items()}
        else:
            result[key] = value
    return result


def lattice_to_json(lattice):
    """Nodes and edges of a lattice, supernorms as decimal strings"""
    return {
        "partitionx_version": list(partitionx.VERSION),
        "max_part": lattice.max_part,
        "levels": [
            [{"partition": format_text(node),
              "supernorm": str(lattice.supernorm(node))} for node in level]
            for level in lattice.levels()
        ],
        "edges": [
            [format_text(u), format_text(v)] for u, v in lattice.sorted_edges()
        ]
    }


def rows_to_json(rows):
    """List of objects from verification rows; big integers as strings"""
    return [
        {"n": row.n,
         "formula": encode(row.formula),
         "bruteforce": encode(row.bruteforce),
         "match": row.match}
        for row in rows
    ]
