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

"""Exhaustive generators and counting functions

Generators are lazy: :func:`partitions_of` keeps a single working array
and yields each partition as it is reached.
"""
import itertools
from collections import Counter

from partitionx.core import pxsys
from partitionx.core.lattice import PartitionLattice
from partitionx.core.overpartition import (
    Partition,
    Overpartition,
    EMPTY_PARTITION,
    to_partition
)
from partitionx.core.supernorm import supernorm
from partitionx.core.util import ceil_half, check_positive_int, is_int


def pentagonal(j):
    """The ``j``-th generalized pentagonal number, 1, 2, 5, 7, 12, 15, ...

    ``k(3k-1)/2`` for ``j = 2k-1`` and ``k(3k+1)/2`` for ``j = 2k``.
    """
    j = check_positive_int(j, "j")
    k = ceil_half(j)
    if j % 2:
        return k * (3 * k - 1) // 2
    return k * (3 * k + 1) // 2


def pentagonal_upto(n):
    """Yield ``(j, pentagonal(j))`` while ``pentagonal(j) <= n``"""
    for j in itertools.count(1):
        value = pentagonal(j)
        if value > n:
            return
        yield j, value


def partition_count(n):
    """Number of partitions of ``n``, 0 for negative ``n``"""
    return pxsys.partition_counts[n]


def overpartition_count(n):
    """Number of overpartitions of ``n``, 0 for negative ``n``"""
    return pxsys.overpartition_counts[n]


def _check_n(n):
    if not is_int(n) or n < 0:
        raise ValueError("n must be a nonnegative integer, got %r" % (n,))
    return int(n)


def _descending_part_lists(n):
    """Part lists of ``n`` in descending lexicographic order

    Zoghbi and Stojmenovic's ZS1 algorithm. The yielded list is reused
    between steps.
    """
    if n == 0:
        yield []
        return

    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield x[1:m + 1]
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield x[1:m + 1]


def partitions_of(n):
    """Yield the partitions of ``n``

    Partitions come in descending lexicographic order of their part lists,
    e.g. ``4``, ``3+1``, ``2+2``, ``2+1+1``, ``1+1+1+1``.
    """
    n = _check_n(n)
    for parts in _descending_part_lists(n):
        yield Partition._from_canonical(Counter(parts))


def overpartitions_from(partition):
    """Yield the ``2**d`` overpartitions of a partition with ``d`` distinct parts

    The partition itself comes first. Overline choices run over the
    distinct parts in ascending order, the smallest part varying slowest.
    """
    partition = to_partition(partition)
    parts = partition.parts
    for flags in itertools.product((False, True), repeat=len(parts)):
        yield Overpartition._from_canonical({
            part: -partition[part] if flag else partition[part]
            for part, flag in zip(parts, flags)
        })


def overpartitions_of(n):
    """Yield every overpartition whose parts sum to ``n``

    Each partition of ``n``, in the order of :func:`partitions_of`,
    is followed through its overlined variants.
    """
    for partition in partitions_of(n):
        yield from overpartitions_from(partition)


def count_size_kernel_pairs_bruteforce(n):
    """Count ordered pairs of partitions of ``n`` with disjoint parts

    Pairs are enumerated over the supports of the partitions of ``n``,
    each support weighted by the number of partitions having it.
    """
    supports = Counter(
        frozenset(parts) for parts in _descending_part_lists(_check_n(n)))
    return sum(
        count_a * count_b
        for (a, count_a), (b, count_b) in itertools.product(
            supports.items(), repeat=2)
        if a.isdisjoint(b)
    )


def count_size_kernel_pairs_formula(n):
    """Pentagonal sum ``p(n)^2 - p(n-1)^2 - p(n-2)^2 + p(n-5)^2 + ...``

    The ``j``-th shifted term has sign ``(-1)**ceil(j/2)``; the sum stops
    at the last generalized pentagonal number not above ``n``.
    """
    n = _check_n(n)
    total = partition_count(n) ** 2
    for j, value in pentagonal_upto(n):
        term = partition_count(n - value) ** 2
        total += -term if ceil_half(j) % 2 else term
    return total


def lattice_levels(depth, max_part=3):
    """Partitions of length up to ``depth`` with parts up to ``max_part``

    Returns a :class:`~partitionx.core.lattice.PartitionLattice`
    whose nodes carry their level and supernorm. Each edge joins
    a partition to its product with a single part.
    """
    if not is_int(depth) or depth < 0:
        raise ValueError("depth must be a nonnegative integer")
    max_part = check_positive_int(max_part, "max_part")

    lattice = PartitionLattice(max_part=max_part)
    lattice.add_partition(EMPTY_PARTITION, 0, 1)
    level = [EMPTY_PARTITION]
    generators = [Partition._from_canonical({i: 1})
                  for i in range(1, max_part + 1)]

    for k in range(1, depth + 1):
        upper = {}
        for node in level:
            for gen in generators:
                child = node * gen
                if child not in upper:
                    upper[child] = supernorm(child)
                    lattice.add_partition(child, k, upper[child])
                lattice.add_edge(node, child, part=gen.parts[0])
        level = list(upper)

    return lattice
