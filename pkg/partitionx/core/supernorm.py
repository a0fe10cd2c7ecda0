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

"""Supernorm maps between partitions and positive integers

The supernorm sends ``<1^m_1 2^m_2 ...>`` to ``p_1^m_1 p_2^m_2 ...``
with ``p_i`` the ``i``-th prime. It is a monoid isomorphism from the
partitions onto the positive integers, and extends to a group isomorphism
from the overpartitions onto the positive rationals.

Rationals are :class:`fractions.Fraction`, always in lowest terms.
"""
import re
from fractions import Fraction
from numbers import Rational

from partitionx.core import pxsys
from partitionx.core.errors import ParseError, PartitionError
from partitionx.core.overpartition import (
    Partition,
    Overpartition,
    to_partition,
    to_overpartition
)
from partitionx.core.util import is_int


def nth_prime(i):
    """Return the ``i``-th prime, ``nth_prime(1) == 2``"""
    return pxsys.primes.nth_prime(i)


def prime_index(p):
    """Return ``i`` with ``nth_prime(i) == p``

    Raises:
        NotPrimeError: if ``p`` is composite.
    """
    return pxsys.primes.prime_index(p)


def _prime_power_product(items):
    result = 1
    for part, mult in items:
        result *= nth_prime(part) ** mult
    return result


def _warn_parts(a):
    if a:
        pxsys.warn_large_part(a.parts[-1])


def supernorm(a):
    """Supernorm of a partition, ``prod p_i ** m_i``

    >>> supernorm(Partition("<1^1 2^1 3^1>"))
    30
    """
    a = to_partition(a)
    _warn_parts(a)
    return _prime_power_product(a.items())


def supernorm_over(a):
    """Supernorm of an overpartition as a positive :class:`Fraction`

    >>> supernorm_over(Overpartition("<1^2 2^-3 3^1>"))
    Fraction(20, 27)
    """
    a = to_overpartition(a)
    _warn_parts(a)
    numerator = _prime_power_product(
        (i, m) for i, m in a.items() if m > 0)
    denominator = _prime_power_product(
        (i, -m) for i, m in a.items() if m < 0)
    return Fraction(numerator, denominator)


def _factor(n):
    """Dict of prime index to exponent of a positive integer ``n``"""
    primes = pxsys.primes
    result = {}
    i = 1
    while n > 1:
        p = primes.nth_prime(i)
        if p * p > n:
            # n is now a prime
            index = primes.prime_index(n)
            pxsys.warn_large_part(index)
            result[index] = result.get(index, 0) + 1
            break
        if n % p == 0:
            exp = 0
            while n % p == 0:
                n //= p
                exp += 1
            result[i] = exp
        i += 1

    return result


def factor_to_partition(n):
    """Partition whose supernorm is ``n``

    >>> factor_to_partition(75)
    Partition('<2^1 3^2>')
    """
    if isinstance(n, Rational) and not is_int(n) and n.denominator == 1:
        n = n.numerator
    if not is_int(n) or n < 1:
        raise PartitionError("expected a positive integer, got %r" % (n,))
    return Partition._from_canonical(_factor(int(n)))


def factor_to_overpartition(q):
    """Overpartition whose supernorm is the positive rational ``q``

    ``q`` may be an int, a :class:`Fraction` or a ``"num/den"`` string.

    >>> factor_to_overpartition(Fraction(20, 27))
    Overpartition('<1^2 2^-3 3^1>')
    """
    if isinstance(q, str):
        q = parse_rational(q)
    if not isinstance(q, Rational) or isinstance(q, bool):
        raise PartitionError("expected a positive rational, got %r" % (q,))
    q = Fraction(q)
    if q <= 0:
        raise PartitionError("expected a positive rational, got %s" % q)

    data = _factor(q.numerator)
    data.update((i, -m) for i, m in _factor(q.denominator).items())
    return Overpartition._from_canonical(data)


_RATIONAL = re.compile(r"([0-9]+)(?:/([0-9]+))?$")


def parse_rational(text):
    """Parse ``"num/den"`` or ``"n"`` into a positive :class:`Fraction`"""
    m = _RATIONAL.match(text.strip())
    if not m:
        raise ParseError("expected num/den", text, 0)
    numerator = int(m.group(1))
    denominator = int(m.group(2)) if m.group(2) is not None else 1
    if numerator == 0 or denominator == 0:
        raise ParseError("expected a positive rational", text, 0)
    return Fraction(numerator, denominator)


def format_rational(q):
    """Format a rational as ``"num/den"`` in lowest terms, ``"n"`` if whole"""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)
