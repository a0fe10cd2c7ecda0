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

"""Self-contained checks of the counting identities and the supernorm

Each ``verify_*`` function returns a list of :class:`VerificationRow`
and, with ``strict=True``, raises
:class:`~partitionx.core.errors.VerificationError` on the first mismatch.
"""
import random
from collections import namedtuple

from partitionx.core import pxsys
from partitionx.core.enumerate import (
    count_size_kernel_pairs_bruteforce,
    count_size_kernel_pairs_formula,
    overpartition_count,
    overpartitions_of,
    partition_count,
    partitions_of
)
from partitionx.core.errors import VerificationError
from partitionx.core.overpartition import format_text, inverse
from partitionx.core.sampling import random_overpartition
from partitionx.core.supernorm import (
    factor_to_overpartition,
    supernorm_over
)

VerificationRow = namedtuple(
    "VerificationRow", ["n", "formula", "bruteforce", "match"])

IDENTITIES = ("corteel", "pn", "overcount", "isomorphism")


def _check(rows, identity, strict):
    if strict:
        for row in rows:
            if not row.match:
                raise VerificationError(
                    "%s mismatch at n=%s: %s != %s"
                    % (identity, row.n, row.formula, row.bruteforce))
    return rows


def _range(identity, n_max):
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError("n_max must be a nonnegative integer")
    pxsys.check_verify_limit(identity, n_max)
    return range(n_max + 1)


def _count(iterable):
    return sum(1 for _ in iterable)


def verify_corteel(n_max, strict=False):
    """Pentagonal sum against brute force for ``0 <= n <= n_max``"""
    rows = []
    for n in _range("corteel", n_max):
        formula = count_size_kernel_pairs_formula(n)
        bruteforce = count_size_kernel_pairs_bruteforce(n)
        rows.append(VerificationRow(n, formula, bruteforce,
                                    formula == bruteforce))
    return _check(rows, "corteel", strict)


def verify_partition_count(n_max, strict=False):
    """Pentagonal recurrence against enumeration for ``0 <= n <= n_max``"""
    rows = []
    for n in _range("pn", n_max):
        formula = partition_count(n)
        bruteforce = _count(partitions_of(n))
        rows.append(VerificationRow(n, formula, bruteforce,
                                    formula == bruteforce))
    return _check(rows, "pn", strict)


def verify_overpartition_count(n_max, strict=False):
    """Overpartition counts against enumeration for ``0 <= n <= n_max``"""
    rows = []
    for n in _range("overcount", n_max):
        formula = overpartition_count(n)
        bruteforce = _count(overpartitions_of(n))
        rows.append(VerificationRow(n, formula, bruteforce,
                                    formula == bruteforce))
    return _check(rows, "overcount", strict)


def verify_isomorphism(samples, seed=0, strict=False):
    """Sampled supernorm round-trips and homomorphism checks

    Row ``n`` draws ``a`` and ``b`` from a generator seeded by ``seed``.
    ``formula`` is ``a`` and ``bruteforce`` is the overpartition factored
    back from its supernorm. ``match`` also requires the product and
    inverse laws to hold for the pair.
    """
    if not isinstance(samples, int) or samples < 0:
        raise ValueError("samples must be a nonnegative integer")
    pxsys.check_verify_limit("isomorphism", samples)
    rng = random.Random(seed)
    rows = []
    for n in range(samples):
        a = random_overpartition(rng)
        b = random_overpartition(rng)
        q = supernorm_over(a)
        back = factor_to_overpartition(q)
        match = (
            back == a
            and supernorm_over(a * b) == q * supernorm_over(b)
            and supernorm_over(inverse(a)) == 1 / q
        )
        rows.append(VerificationRow(
            n, format_text(a), format_text(back), match))
    return _check(rows, "isomorphism", strict)


VERIFIERS = {
    "corteel": verify_corteel,
    "pn": verify_partition_count,
    "overcount": verify_overpartition_count,
    "isomorphism": verify_isomorphism
}
