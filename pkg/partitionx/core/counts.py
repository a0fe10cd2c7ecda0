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

"""Memoized counting tables shared through the system object"""
import threading

from partitionx.core.util import is_int


class CountTable:
    """Memoized sequence ``values[n]`` for ``n >= 0``, 0 for ``n < 0``

    Subclasses define :meth:`_next_value`. Growth happens under a lock and
    the extended tuple is published in one assignment.
    """
    initial = (1,)

    def __init__(self):
        self._values = tuple(self.initial)
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def __getitem__(self, n):
        if not is_int(n):
            raise TypeError("index must be an integer, got %r" % (n,))
        if n < 0:
            return 0
        if n >= len(self._values):
            self._grow(n)
        return self._values[n]

    def _grow(self, n):
        with self._lock:
            values = list(self._values)
            while len(values) <= n:
                values.append(self._next_value(values, len(values)))
            if len(values) > len(self._values):
                self._values = tuple(values)

    @staticmethod
    def _get(values, n):
        return values[n] if n >= 0 else 0

    def _next_value(self, values, n):
        raise NotImplementedError


class PartitionCountTable(CountTable):
    """``p(n)`` by Euler's pentagonal recurrence

    p(n) = sum over k >= 1 of (-1)**(k+1) * (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))
    """

    def _next_value(self, values, n):
        total = 0
        k = 1
        while True:
            first = n - k * (3 * k - 1) // 2
            if first < 0:
                break
            term = self._get(values, first) + self._get(values, first - k)
            total += term if k % 2 else -term
            k += 1
        return total


class OverpartitionCountTable(CountTable):
    """Number of overpartitions of ``n``

    Gauss's identity prod (1-q^i)/(1+q^i) = sum (-1)^k q^(k^2) gives
    pbar(n) = 2 * sum over k >= 1 of (-1)**(k+1) * pbar(n - k**2).
    """

    def _next_value(self, values, n):
        total = 0
        k = 1
        while k * k <= n:
            term = values[n - k * k]
            total += term if k % 2 else -term
            k += 1
        return 2 * total
