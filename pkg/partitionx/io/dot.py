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

"""Graphviz DOT output of partition lattices

After writing a lattice to ``lattice.gv``, run::

    dot -Tpng -O lattice.gv

to plot it. Edges point upward, from a partition to its multiples.
"""


def _quote(text):
    return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')


def lattice_to_dot(lattice, name="lattice"):
    """Return DOT text of a :class:`~partitionx.core.lattice.PartitionLattice`

    Each node is labelled with its partition and its supernorm.
    Nodes of the same level share a rank.
    """
    lines = ["digraph %s {" % name]
    lines.append("\trankdir=BT;")
    lines.append("\tnode [shape=plaintext];")
    for level in lattice.levels():
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for node in level:
            # \n in a DOT label is a line break
            lines.append("\t\t%s [label=\"%s\\n%d\"];" % (
                _quote(str(node)), node, lattice.supernorm(node)))
        lines.append("\t}")
    for u, v in lattice.sorted_edges():
        lines.append("\t%s -> %s;" % (_quote(str(u)), _quote(str(v))))
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(lattice, path, name="lattice"):
    with open(path, "w", encoding="utf-8") as f:
        f.write(lattice_to_dot(lattice, name))
