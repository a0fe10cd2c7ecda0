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

import math
import threading
from bisect import bisect_right

from partitionx.core.errors import NotPrimeError
from partitionx.core.util import check_positive_int


class PrimeTable:
    """Growable table of primes, 1-indexed with ``p_1 = 2``

    The table is extended on demand by a segmented sieve.
    Growth happens under a lock and is published by replacing a single
    state tuple, so readers never see a partially grown table.

    Args:
        segment: Number of integers sieved per segment.
    """
    default_segment = 1 << 16

    def __init__(self, segment=None):
        self.segment = segment or self.default_segment
        primes = (2, 3, 5, 7, 11, 13)
        # (primes, index of each prime, sieved bound)
        self._state = (primes, {p: i for i, p in enumerate(primes, 1)}, 14)
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._state[0])

    @property
    def limit(self):
        """Every prime below ``limit`` is in the table"""
        return self._state[2]

    def _sieve_to(self, bound):
        """Extend the table to hold every prime below ``bound``"""
        with self._lock:
            primes, index, limit = self._state
            if bound <= limit:
                return

            found = list(primes)
            while limit < bound:
                # Segments never exceed limit**2, so the base primes
                # are already in the table.
                hi = min(bound, limit + self.segment, limit * limit)
                sieve = bytearray(b"\x01") * (hi - limit)
                for p in found:
                    if p * p >= hi:
                        break
                    start = max(p * p, -(-limit // p) * p)
                    sieve[start - limit::p] = bytes(
                        len(range(start - limit, hi - limit, p)))
                found.extend(
                    limit + i for i, flag in enumerate(sieve) if flag)
                limit = hi

            new_index = dict(index)
            new_index.update(
                (p, i) for i, p in enumerate(
                    found[len(primes):], len(primes) + 1))
            self._state = (tuple(found), new_index, limit)

    def nth_prime(self, i):
        """Return the ``i``-th prime"""
        i = check_positive_int(i, "index")
        while i > len(self._state[0]):
            # Upper bound of p_i for i >= 6
            estimate = int(i * (math.log(i) + math.log(math.log(i)))) + 1
            self._sieve_to(max(estimate, 2 * self.limit))
        return self._state[0][i - 1]

    def prime_index(self, p):
        """Return ``i`` such that ``p`` is the ``i``-th prime

        Raises:
            NotPrimeError: if ``p`` is not a prime.
        """
        p = check_positive_int(p, "p")
        if p >= self.limit:
            self._sieve_to(max(p + 1, 2 * self.limit))
        try:
            return self._state[1][p]
        except KeyError:
            raise NotPrimeError("%s is not a prime" % p) from None

    def is_prime(self, n):
        if n < 2:
            return False
        try:
            self.prime_index(n)
        except NotPrimeError:
            return False
        return True

    def primes_up_to(self, n):
        """Tuple of primes less than or equal to ``n``"""
        if n >= self.limit:
            self._sieve_to(n + 1)
        primes = self._state[0]
        return primes[:bisect_right(primes, n)]

    def iter_primes(self):
        """Iterate primes ascending, growing the table as needed"""
        i = 1
        while True:
            yield self.nth_prime(i)
            i += 1
