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

import numbers


def is_positive_int(value):
    """True if ``value`` is an integer (not a bool) greater than 0."""
    return (
        isinstance(value, numbers.Integral)
        and not isinstance(value, bool)
        and value > 0
    )


def is_int(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def check_positive_int(value, name):
    if not is_positive_int(value):
        raise ValueError("%s must be a positive integer, got %r" % (name, value))
    return int(value)


def ceil_half(j):
    """Return the ceiling of ``j / 2`` for an integer ``j``.

    >>> [ceil_half(j) for j in range(1, 7)]
    [1, 1, 2, 2, 3, 3]
    """
    return -(-j // 2)


def to_part_set(parts, name="S"):
    """Return a frozenset of positive integers from ``parts``.

    Raises ValueError if any element is not a positive integer.
    """
    result = frozenset(parts)
    for p in result:
        if not is_positive_int(p):
            raise ValueError(
                "%s must contain positive integers only, got %r" % (name, p))
    return result
