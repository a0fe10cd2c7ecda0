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

"""Seeded random overpartitions

Samplers take a :class:`random.Random` instance so that runs with a
fixed seed are reproducible.
"""
import random

from partitionx.core.overpartition import Partition, Overpartition


def _sample_parts(rng, max_part, max_distinct):
    count = rng.randint(0, min(max_distinct, max_part))
    return rng.sample(range(1, max_part + 1), count)


def random_partition(rng=None, max_part=40, max_mult=5, max_distinct=8):
    """Random partition with parts up to ``max_part``

    At most ``max_distinct`` distinct parts, multiplicities
    in ``1..max_mult``.
    """
    rng = rng or random.Random()
    return Partition._from_canonical({
        part: rng.randint(1, max_mult)
        for part in _sample_parts(rng, max_part, max_distinct)
    })


def random_overpartition(rng=None, max_part=40, max_mult=5, max_distinct=8):
    """Random overpartition with parts up to ``max_part``

    At most ``max_distinct`` distinct parts, multiplicities
    in ``-max_mult..max_mult`` excluding 0.
    """
    rng = rng or random.Random()
    data = {}
    for part in _sample_parts(rng, max_part, max_distinct):
        mult = rng.randint(1, max_mult)
        data[part] = -mult if rng.random() < 0.5 else mult
    return Overpartition._from_canonical(data)
