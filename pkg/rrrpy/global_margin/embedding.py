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

"""Edge-space embedding of k-regular graphs.

Embedding every vertex as the indicator vector of its incident edges
turns a properly k-colored k-regular graph into a k-label dataset whose
closest pairs of different labels are exactly the graph's edges. This
is the construction showing that optimal global margin certification
with k >= 3 labels is NP-hard.
"""

from typing import Dict, Hashable, Optional, Sequence, Tuple

import networkx as nx

from rrrpy.core import (
    BadColoringError,
    LabeledDataset,
    LabeledPoint,
    NotRegularError,
)

# Strategies tried before falling back to backtracking
_GREEDY_STRATEGIES = (
    "largest_first",
    "smallest_last",
    "saturation_largest_first",
    "independent_set",
    "connected_sequential_bfs",
)


def check_coloring(graph: nx.Graph, k: int, coloring: Dict[Hashable, Hashable]):
    """Raise :class:`~rrrpy.core.BadColoringError` unless `coloring` is
    a proper coloring of `graph` with at most `k` colors.
    """
    missing = [v for v in graph.nodes if v not in coloring]
    if missing:
        raise BadColoringError(f"Vertices {missing} have no color.")
    n_colors = len({coloring[v] for v in graph.nodes})
    if n_colors > k:
        raise BadColoringError(f"Coloring uses {n_colors} colors, at most {k} allowed.")
    for u, v in graph.edges:
        if coloring[u] == coloring[v]:
            raise BadColoringError(f"Adjacent vertices {u} and {v} share a color.")


def k_coloring(graph: nx.Graph, k: int) -> Dict[Hashable, int]:
    """Proper coloring of `graph` with at most `k` colors.

    Greedy strategies from networkx are tried first, then an exhaustive
    search in order of decreasing degree.
    """
    for strategy in _GREEDY_STRATEGIES:
        coloring = nx.coloring.greedy_color(graph, strategy=strategy)
        if len(set(coloring.values())) <= k:
            return coloring

    order = sorted(graph.nodes, key=graph.degree, reverse=True)
    coloring = {}

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {coloring[u] for u in graph.neighbors(v) if u in coloring}
        for color in range(k):
            if color not in used:
                coloring[v] = color
                if assign(i + 1):
                    return True
                del coloring[v]
        return False

    if not assign(0):
        raise BadColoringError(f"Graph has no proper coloring with {k} colors.")
    return coloring


def embed_k_regular(
    graph: nx.Graph,
    k: int,
    coloring: Optional[Dict[Hashable, Hashable]] = None,
    edge_order: Optional[Sequence[Tuple[Hashable, Hashable]]] = None,
) -> LabeledDataset:
    """Embed a k-regular graph into the space of its edges.

    Parameters
    ----------
    graph
        Simple k-regular graph.
    k
        Degree and number of colors, at least 3.
    coloring
        Proper coloring with at most k colors, vertex to color. If not
        given, one is computed with :func:`k_coloring`.
    edge_order
        Order of the edges, i.e. of the coordinates. Default is the
        order of ``graph.edges``.

    Returns
    -------
    LabeledDataset
        One point per vertex, in ``graph.nodes`` order, with 0/1
        coordinates marking incident edges and the vertex color as
        label. The L1 distance is 2k - 2 between adjacent vertices and
        2k between non-adjacent ones.

    Examples
    --------
    >>> import networkx as nx
    >>> g = nx.petersen_graph()
    >>> s = embed_k_regular(g, 3)
    >>> s.dimension
    15
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, not {k}.")
    if graph.is_directed() or nx.number_of_selfloops(graph) > 0:
        raise NotRegularError("Graph must be simple and undirected.")
    degrees = {d for _, d in graph.degree}
    if degrees != {k}:
        raise NotRegularError(f"Graph is not {k}-regular, degrees are {sorted(degrees)}.")
    if coloring is None:
        coloring = k_coloring(graph, k)
    check_coloring(graph, k, coloring)

    if edge_order is None:
        edge_order = list(graph.edges)
    index = {}
    for i, (u, v) in enumerate(edge_order):
        if not graph.has_edge(u, v):
            raise ValueError(f"{(u, v)} is not an edge of the graph.")
        index[frozenset((u, v))] = i
    if len(index) != graph.number_of_edges() or len(edge_order) != len(index):
        raise ValueError("Edge order must list every edge exactly once.")

    points = []
    for v in graph.nodes:
        x = [0] * len(index)
        for u in graph.neighbors(v):
            x[index[frozenset((u, v))]] = 1
        points.append(LabeledPoint(tuple(x), coloring[v]))
    alphabet = sorted({coloring[v] for v in graph.nodes}, key=str)
    return LabeledDataset(points, alphabet=alphabet, dimension=len(index))
