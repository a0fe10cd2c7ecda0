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

import networkx as nx


class PartitionLattice(nx.DiGraph):
    """Directed graph of partitions ordered by multiset inclusion

    Nodes are :class:`~partitionx.core.overpartition.Partition` objects
    with ``level`` (the length) and ``supernorm`` attributes.
    An edge ``u -> v`` means ``v`` is ``u`` times a single part,
    stored in the ``part`` edge attribute.
    """

    def __init__(self, incoming_graph_data=None, max_part=None, **attr):
        super().__init__(incoming_graph_data, **attr)
        if max_part is not None:
            self.graph["max_part"] = max_part

    @property
    def max_part(self):
        return self.graph.get("max_part")

    @property
    def depth(self):
        return max((d["level"] for _, d in self.nodes(data=True)), default=-1)

    def add_partition(self, partition, level, supernorm):
        self.add_node(partition, level=level, supernorm=supernorm)

    def levels(self):
        """List of levels, each a list of nodes sorted by supernorm"""
        result = [[] for _ in range(self.depth + 1)]
        for node, data in self.nodes(data=True):
            result[data["level"]].append(node)
        for level in result:
            level.sort(key=self.supernorm)
        return result

    def supernorm(self, node):
        return self.nodes[node]["supernorm"]

    def labels(self):
        """Dict of nodes to supernorms"""
        return dict(self.nodes(data="supernorm"))

    def divisors(self, node):
        """Nodes included in ``node`` as multisets, ``node`` excluded"""
        return nx.ancestors(self, node)

    def multiples(self, node):
        """Nodes including ``node`` as multisets, ``node`` excluded"""
        return nx.descendants(self, node)

    def sorted_edges(self):
        """Edges ordered by the supernorms of their ends"""
        return sorted(
            self.edges,
            key=lambda e: (self.supernorm(e[0]), self.supernorm(e[1])))

    def edges_respect_divisibility(self):
        """True if every edge goes from a supernorm to one of its multiples"""
        return all(
            self.supernorm(v) % self.supernorm(u) == 0 for u, v in self.edges)
