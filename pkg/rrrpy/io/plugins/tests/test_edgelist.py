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

import os

import networkx as nx
import pytest

from rrrpy.io.plugins import edgelist


def write(tmp_dir, text, name="graph.edgelist"):
    file_path = os.path.join(tmp_dir, name)
    with open(file_path, "w") as f:
        f.write(text)
    return file_path


class TestEdgelist:
    def test_read_keeps_edge_order(self, tmp_dir, prism_edge_order):
        text = "# pentagonal prism\n"
        text += "\n".join(f"{u} {v}" for u, v in prism_edge_order) + "\n"
        graph = edgelist.file_reader(write(tmp_dir, text))
        assert graph.number_of_nodes() == 10
        assert graph.number_of_edges() == 15
        assert graph.graph["edge_order"] == prism_edge_order
        assert all(d == 3 for _, d in graph.degree)

    def test_comments_and_blank_lines(self, tmp_dir):
        graph = edgelist.file_reader(write(tmp_dir, "a b  # first\n\nb c\n"))
        assert graph.graph["edge_order"] == [("a", "b"), ("b", "c")]
        assert list(graph.nodes) == ["a", "b", "c"]

    def test_nodetype(self, tmp_dir):
        graph = edgelist.file_reader(write(tmp_dir, "1 2\n"), nodetype=str)
        assert list(graph.nodes) == ["1", "2"]

    def test_write_read(self, tmp_dir):
        graph = nx.petersen_graph()
        file_path = os.path.join(tmp_dir, "petersen.edges")
        edgelist.file_writer(file_path, graph)
        loaded = edgelist.file_reader(file_path)
        assert nx.is_isomorphic(loaded, graph)
        assert sorted(map(sorted, loaded.edges)) == sorted(map(sorted, graph.edges))

    def test_malformed_raises(self, tmp_dir):
        with pytest.raises(ValueError, match="Could not read"):
            edgelist.file_reader(write(tmp_dir, "1\n"))
