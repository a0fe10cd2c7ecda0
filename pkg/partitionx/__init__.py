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

"""Multiplicative group theory of partitions and overpartitions.

Attributes defined in the top level module are those of
:mod:`partitionx.core.api`.
"""

VERSION = (0, 1, 0)
__version__ = ".".join([str(x) for x in VERSION])
from partitionx.core.api import *  # must come after __version__ assignment.
