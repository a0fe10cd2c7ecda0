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

import sys
import warnings

from partitionx.core.counts import PartitionCountTable, OverpartitionCountTable
from partitionx.core.errors import (
    LargePartWarning,
    LimitExceededError,
    LimitWarning
)
from partitionx.core.primes import PrimeTable
from partitionx.core.util import check_positive_int, is_int


def custom_showwarning(
    message, category, filename="", lineno=-1, file=None, line=None
):
    """Hook to override default showwarning.

    https://stackoverflow.com/questions/2187269/python-print-only-the-message-on-warnings
    """

    if file is None:
        file = sys.stderr
        if file is None:
            # sys.stderr is None when run with pythonw.exe:
            # warnings get lost
            return
    text = "%s: %s\n" % (category.__name__, message)
    try:
        file.write(text)
    except OSError:
        # the file (probably stderr) is invalid - this warning gets lost.
        pass


class System:
    """Process-wide state of partitionx

    Holds the shared prime table, the memoized counting tables and the
    runtime limits. A single instance ``pxsys`` is created on import.
    """

    orig_settings = {
        "showwarning": warnings.showwarning
    }

    default_part_warning = 10_000

    default_verify_limits = {
        "corteel": 40,
        "pn": 50,
        "overcount": 20,
        "isomorphism": 100_000
    }

    default_lattice_limits = (10, 12)

    def __init__(self):

        self.configure_python()
        self.primes = PrimeTable()
        self.partition_counts = PartitionCountTable()
        self.overpartition_counts = OverpartitionCountTable()
        self.part_warning = self.default_part_warning
        self.verify_limits = dict(self.default_verify_limits)
        self.lattice_limits = self.default_lattice_limits

    def configure_python(self):
        """Install the compact warning formatter"""
        warnings.showwarning = custom_showwarning

    def restore_python(self):
        """Restore Python settings to the original states"""
        orig = self.orig_settings

        if "showwarning" in orig:
            warnings.showwarning = orig["showwarning"]

    # ----- Limits

    def set_part_warning(self, limit):
        self.part_warning = check_positive_int(limit, "limit")

    def warn_large_part(self, part):
        if part > self.part_warning:
            warnings.warn(
                "part %s exceeds %s; supernorm cost grows with the %s-th prime"
                % (part, self.part_warning, part),
                LargePartWarning
            )

    def set_verify_limit(self, identity, n_max):
        if identity not in self.verify_limits:
            raise ValueError("unknown identity '%s'" % identity)
        if not is_int(n_max) or n_max < 0:
            raise ValueError("n_max must be a nonnegative integer")
        if n_max > self.default_verify_limits[identity]:
            warnings.warn(
                "%s verification limit raised to %s above its default %s"
                % (identity, n_max, self.default_verify_limits[identity]),
                LimitWarning
            )
        self.verify_limits[identity] = int(n_max)

    def check_verify_limit(self, identity, n_max):
        limit = self.verify_limits[identity]
        if n_max > limit:
            raise LimitExceededError(
                "%s verification is limited to %s, got %s"
                % (identity, limit, n_max))

    def set_lattice_limits(self, depth, max_part):
        if not is_int(depth) or depth < 0:
            raise ValueError("depth must be a nonnegative integer")
        self.lattice_limits = (int(depth), check_positive_int(
            max_part, "max_part"))
        if any(x > y for x, y in
               zip(self.lattice_limits, self.default_lattice_limits)):
            warnings.warn(
                "lattice limits raised to %s above the defaults %s"
                % (self.lattice_limits, self.default_lattice_limits),
                LimitWarning
            )

    def check_lattice_limits(self, depth, max_part):
        max_depth, max_max_part = self.lattice_limits
        if depth > max_depth or max_part > max_max_part:
            raise LimitExceededError(
                "lattice is limited to depth %s and max part %s, "
                "got depth %s and max part %s"
                % (max_depth, max_max_part, depth, max_part))


pxsys = System()
