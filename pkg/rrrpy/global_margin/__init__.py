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

"""Robustly-reliable learner for the global margin with two labels, and
the edge-space embedding of k-regular graphs.
"""

from rrrpy.global_margin.embedding import check_coloring, embed_k_regular, k_coloring
from rrrpy.global_margin.ladder import (
    ClassificationGraph,
    GraphLadder,
    certify,
    train,
)
from rrrpy.global_margin.matching import BipartiteGraph, Matching, maximum_matching

__all__ = [
    "BipartiteGraph",
    "ClassificationGraph",
    "GraphLadder",
    "Matching",
    "certify",
    "check_coloring",
    "embed_k_regular",
    "k_coloring",
    "maximum_matching",
    "train",
]
