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

"""Read and write support for undirected graphs in edge-list files."""

from typing import Callable, Optional

import networkx as nx


# Plugin characteristics
# ----------------------
format_name = "edgelist"
description = "Read/write support for graphs as whitespace-separated edge lists."
full_support = False
# Recognised file extension
file_extensions = ["edgelist", "edges"]
default_extension = 0
# Writing capabilities
writes = True
writes_type = nx.Graph


def _node_type(lines) -> Callable:
    tokens = [t for line in lines for t in line.split()[:2]]
    try:
        [int(t) for t in tokens]
    except ValueError:
        return str
    return int


def file_reader(
    filename: str, nodetype: Optional[Callable] = None, **kwargs
) -> nx.Graph:
    """Read an undirected graph from an edge-list file.

    The order of the edges in the file is stored as
    ``graph.graph["edge_order"]``.

    Parameters
    ----------
    filename
        Full file path of the edge list.
    nodetype
        Convert node names with this. Default is int if all names are
        integers, else str.
    kwargs :
        Keyword arguments passed to :func:`networkx.parse_edgelist`.

    Returns
    -------
    networkx.Graph
    """
    with open(filename) as f:
        lines = [
            line.split("#")[0].strip() for line in f if line.split("#")[0].strip()
        ]
    if nodetype is None:
        nodetype = _node_type(lines)
    try:
        graph = nx.parse_edgelist(lines, nodetype=nodetype, data=False, **kwargs)
        order = [
            next(iter(nx.parse_edgelist([line], nodetype=nodetype, data=False).edges))
            for line in lines
        ]
    except (TypeError, ValueError, StopIteration) as e:
        raise ValueError(f"Could not read '{filename}': {e}")
    graph.graph["edge_order"] = order
    return graph


def file_writer(filename: str, graph: nx.Graph):
    """Write a graph as an edge list without edge data."""
    nx.write_edgelist(graph, filename, data=False)
