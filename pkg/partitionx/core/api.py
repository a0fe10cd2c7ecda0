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

"""partitionx core API functions.

Functions and classes listed here are available directly in
``partitionx`` module, either by::

    import partitionx as px

or by::

    from partitionx import *

"""
from partitionx.core import pxsys as _system
from partitionx.core.errors import (
    PartitionError,
    ParseError,
    NonCanonicalError,
    NotPrimeError,
    SubgroupSpecError,
    LimitExceededError,
    VerificationError,
    LargePartWarning,
    LimitWarning
)
from partitionx.core.overpartition import (
    Partition,
    Overpartition,
    RationalForm,
    EMPTY,
    EMPTY_PARTITION,
    multiply_partitions,
    multiply,
    product,
    inverse,
    power,
    to_overpartition,
    to_partition,
    divides,
    quotient_partition,
    to_rational_form,
    from_rational_form,
    overline_list_decode,
    overline_list_encode,
    overline_list_parse,
    overline_list_format,
    parse,
    parse_any,
    format_text,
    to_json_obj,
    from_json_obj
)
from partitionx.core.primes import PrimeTable
from partitionx.core.supernorm import (
    nth_prime,
    prime_index,
    supernorm,
    supernorm_over,
    factor_to_partition,
    factor_to_overpartition,
    parse_rational,
    format_rational
)
from partitionx.core.homs import (
    SubgroupSpec,
    oversize,
    overlength,
    overnorm,
    partition_norm,
    multiplicity_of,
    delete_parts_in,
    delete_parts_where,
    overlength_mod,
    is_member,
    is_member_where,
    same_coset,
    quotient_image,
    coset_representative,
    stats
)
from partitionx.core.enumerate import (
    pentagonal,
    partition_count,
    overpartition_count,
    partitions_of,
    overpartitions_of,
    overpartitions_from,
    count_size_kernel_pairs_bruteforce,
    count_size_kernel_pairs_formula,
    lattice_levels
)
from partitionx.core.lattice import PartitionLattice
from partitionx.core.verify import (
    VerificationRow,
    verify_corteel,
    verify_partition_count,
    verify_overpartition_count,
    verify_isomorphism
)


def configure_python():
    """Install the compact warning formatter of partitionx.

    This function is called implicitly when importing partitionx.
    To restore the Python settings, call :py:func:`restore_python`
    """
    _system.configure_python()


def restore_python():
    """Restore the warning formatter to the state before importing partitionx."""
    _system.restore_python()


def set_part_warning(limit=10_000):
    """Set the part value above which :class:`LargePartWarning` is issued.

    Args:
        limit: A positive integer.
    """
    _system.set_part_warning(limit)


def get_part_warning():
    """Returns the part value above which a warning is issued"""
    return _system.part_warning


def set_verify_limit(identity, n_max):
    """Set the largest range accepted by a verification.

    Args:
        identity: One of ``"corteel"``, ``"pn"``, ``"overcount"``
            and ``"isomorphism"``.
        n_max: The largest ``n``, or the largest number of samples
            for ``"isomorphism"``.
    """
    _system.set_verify_limit(identity, n_max)


def get_verify_limit(identity):
    """Returns the largest range accepted by a verification"""
    return _system.verify_limits[identity]


def set_lattice_limits(depth=10, max_part=12):
    """Set the largest depth and max part accepted by the ``lattice`` command"""
    _system.set_lattice_limits(depth, max_part)


def get_lattice_limits():
    """Returns the tuple of the largest depth and max part"""
    return _system.lattice_limits
