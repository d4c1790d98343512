# -*- coding: utf-8 -*-
# Copyright 2023-2024 The rrrpy developers
#
# This file is part of rrrpy.
#
# rrrpy is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# rrrpy is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with rrrpy. If not, see <http://www.gnu.org/licenses/>.

"""Maximum bipartite matching that can be extended as edges and
vertices are added.

The phase structure follows the Hopcroft-Karp algorithm: a
breadth-first search layers the graph from the free left vertices and
depth-first searches add vertex-disjoint shortest augmenting paths.
Unlike a from-scratch run, :meth:`Matching.maximize` starts from the
current matching.
"""

from collections import deque
from typing import List, Optional, Sequence, Set, Tuple

# Index of the "no partner" vertex
NIL = -1


class BipartiteGraph:
    """Bipartite graph with sequentially indexed left and right
    vertices.
    """

    def __init__(
        self,
        n_left: int,
        n_right: int,
        edges: Sequence[Tuple[int, int]] = (),
    ):
        self.adj_left: List[List[int]] = [[] for _ in range(n_left)]
        self.adj_right: List[List[int]] = [[] for _ in range(n_right)]
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n_left(self) -> int:
        return len(self.adj_left)

    @property
    def n_right(self) -> int:
        return len(self.adj_right)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, vs in enumerate(self.adj_left) for v in vs]

    def add_edge(self, u: int, v: int):
        if not (0 <= u < self.n_left and 0 <= v < self.n_right):
            raise ValueError(f"Edge {(u, v)} has a vertex out of range.")
        if v not in self.adj_left[u]:
            self.adj_left[u].append(v)
            self.adj_right[v].append(u)

    def add_left_vertex(self, neighbors: Sequence[int] = ()) -> int:
        """Add a left vertex joined to `neighbors` and return its index."""
        self.adj_left.append([])
        u = self.n_left - 1
        for v in neighbors:
            self.add_edge(u, v)
        return u

    def transposed(self) -> "BipartiteGraph":
        """The same graph with left and right sides swapped."""
        return BipartiteGraph(
            self.n_right, self.n_left, [(v, u) for u, v in self.edges]
        )

    def copy(self) -> "BipartiteGraph":
        return BipartiteGraph(self.n_left, self.n_right, self.edges)


class Matching:
    """A matching in a :class:`BipartiteGraph`.

    Parameters
    ----------
    graph
        The graph. It may grow after the matching is created, as long as
        :meth:`maximize` or :meth:`augment_from` is called afterwards.
    pairs
        Initial matched pairs (left, right).
    """

    def __init__(
        self,
        graph: BipartiteGraph,
        pairs: Sequence[Tuple[int, int]] = (),
    ):
        self.graph = graph
        self.match_left: List[int] = []
        self.match_right: List[int] = []
        self._grow()
        for u, v in pairs:
            if v not in graph.adj_left[u]:
                raise ValueError(f"Pair {(u, v)} is not an edge.")
            if self.match_left[u] != NIL or self.match_right[v] != NIL:
                raise ValueError(f"Pair {(u, v)} shares a vertex.")
            self.match_left[u], self.match_right[v] = v, u

    def _grow(self):
        self.match_left += [NIL] * (self.graph.n_left - len(self.match_left))
        self.match_right += [NIL] * (self.graph.n_right - len(self.match_right))

    @property
    def size(self) -> int:
        return sum(v != NIL for v in self.match_left)

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in enumerate(self.match_left) if v != NIL]

    def copy(self) -> "Matching":
        return Matching(self.graph.copy(), self.pairs)

    def transposed(self) -> "Matching":
        """The matching in the transposed graph."""
        return Matching(self.graph.transposed(), [(v, u) for u, v in self.pairs])

    def _layer(self) -> Tuple[dict, bool]:
        inf_dist = self.graph.n_left + 1
        dist = {}
        queue = deque()
        for u in range(self.graph.n_left):
            if self.match_left[u] == NIL:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf_dist
        dist[NIL] = inf_dist
        while queue:
            u = queue.popleft()
            if dist[u] < dist[NIL]:
                for v in self.graph.adj_left[u]:
                    w = self.match_right[v]
                    if dist[w] == inf_dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
        return dist, dist[NIL] != inf_dist

    def _add_path(self, u: int, dist: dict) -> bool:
        if u == NIL:
            return True
        for v in self.graph.adj_left[u]:
            w = self.match_right[v]
            if dist[w] == dist[u] + 1 and self._add_path(w, dist):
                self.match_right[v] = u
                self.match_left[u] = v
                return True
        # Do not visit the same vertex twice in a phase
        dist[u] = self.graph.n_left + 1
        return False

    def maximize(self) -> int:
        """Grow the matching to maximum size by Hopcroft-Karp phases and
        return the size.
        """
        self._grow()
        while True:
            dist, found = self._layer()
            if not found:
                break
            for u in range(self.graph.n_left):
                if self.match_left[u] == NIL:
                    self._add_path(u, dist)
        return self.size

    def augment_from(self, u: int) -> bool:
        """Search one augmenting path from the free left vertex `u` by
        breadth-first search and flip it. Return whether one was found.
        """
        self._grow()
        if self.match_left[u] != NIL:
            return False
        visited = {u}
        via = {}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for v in self.graph.adj_left[x]:
                if v in via:
                    continue
                via[v] = x
                w = self.match_right[v]
                if w == NIL:
                    # Flip the path ending at v
                    while v is not None:
                        x = via[v]
                        previous = self.match_left[x]
                        self.match_left[x], self.match_right[v] = v, x
                        v = previous if previous != NIL else None
                    return True
                if w not in visited:
                    visited.add(w)
                    queue.append(w)
        return False

    def minimum_vertex_cover(self) -> Tuple[Set[int], Set[int]]:
        """Minimum vertex cover (left, right) of a maximum matching, by
        König's theorem.
        """
        reached_left, reached_right = set(), set()
        queue = deque(u for u, v in enumerate(self.match_left) if v == NIL)
        reached_left.update(queue)
        while queue:
            u = queue.popleft()
            for v in self.graph.adj_left[u]:
                if v not in reached_right and self.match_left[u] != v:
                    reached_right.add(v)
                    w = self.match_right[v]
                    if w != NIL and w not in reached_left:
                        reached_left.add(w)
                        queue.append(w)
        left = set(range(self.graph.n_left)) - reached_left
        return left, reached_right


def maximum_matching(graph: BipartiteGraph, pairs: Optional[Sequence] = None) -> Matching:
    """Maximum matching of `graph`, starting from `pairs` if given."""
    matching = Matching(graph, pairs or ())
    matching.maximize()
    return matching
