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

"""
partitionx errors & warnings
"""


class PartitionError(ValueError):
    """Base class of errors raised by partitionx operations."""


class ParseError(PartitionError):
    """Error raised when a text literal does not conform to its grammar.

    Attributes:
        text: The text being parsed.
        position: 0-based column where parsing failed.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(
            "%s at position %d in %r" % (message, position, text))


class NonCanonicalError(PartitionError):
    """Error raised when a value would break a canonical form.

    Zero multiplicities, nonpositive parts, duplicated part keys,
    overlapping rational-form supports and misplaced overlines
    all raise this error.
    """


class NotPrimeError(PartitionError):
    """Error raised when a prime index is requested for a composite."""


class SubgroupSpecError(PartitionError):
    """Error raised when a subgroup descriptor is invalid."""


class LimitExceededError(PartitionError):
    """
    Error raised when a request exceeds the limits
    set by :func:`~partitionx.set_verify_limit` or
    :func:`~partitionx.set_lattice_limits`.
    """


class VerificationError(AssertionError):
    """Error raised when a self-contained oracle disagrees with a formula."""


class LargePartWarning(UserWarning):
    """Warning issued when a part exceeds the configured warning threshold.

    Supernorm and factorization costs grow with the prime
    indexed by the largest part.
    """


class LimitWarning(UserWarning):
    """Warning issued when a runtime limit is raised above its default."""
