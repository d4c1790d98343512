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

import gc
import os
import tempfile

import networkx as nx
import numpy as np
import pytest

from rrrpy.core import Certificate, LabeledDataset


@pytest.fixture
def toy_dataset():
    """[+, -, +] at 1, 2, 3. Several tests compare certificates for this
    dataset to hard-coded values.
    """
    return LabeledDataset([(1, "+"), (2, "-"), (3, "+")])


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def random_1d_dataset():
    """Factory of random binary 1-D datasets on a small integer grid, so
    that duplicate coordinates occur.
    """

    def make(rng, n, n_positions=None, p_positive=0.5):
        n_positions = n_positions or 2 * n
        xs = rng.integers(0, n_positions, size=n)
        labels = np.where(rng.random(n) < p_positive, "+", "-")
        return LabeledDataset(
            [((int(x),), str(y)) for x, y in zip(xs, labels)],
            alphabet=("+", "-"),
            dimension=1,
        )

    return make


@pytest.fixture
def random_dataset():
    """Factory of random labeled datasets with half-integer coordinates."""

    def make(rng, n, dimension=2, alphabet=("+", "-"), spread=6):
        xs = rng.integers(0, 2 * spread, size=(n, dimension)) / 2
        labels = rng.choice(len(alphabet), size=n)
        return LabeledDataset(
            [
                (tuple(float(c) for c in x), alphabet[y])
                for x, y in zip(xs, labels)
            ],
            alphabet=alphabet,
            dimension=dimension,
        )

    return make


def gap_probes_1d(dataset):
    """One probe per gap and one per coordinate of a 1-D dataset."""
    xs = sorted({p.x for p in dataset})
    if not xs:
        return [0]
    probes = [xs[0] - 1, xs[-1] + 1] + list(xs)
    probes += [(a + b) / 2 for a, b in zip(xs[:-1], xs[1:])]
    return probes


@pytest.fixture
def probes():
    return gap_probes_1d


@pytest.fixture
def prism_edge_order():
    """Edges e1, ..., e15 of the pentagonal prism with outer cycle 1-5,
    spokes i - (i + 5) and inner cycle 6-10.
    """
    # fmt: off
    return [
        (1, 5), (1, 2), (2, 3), (3, 4), (4, 5), (3, 8), (4, 9), (5, 10),
        (1, 6), (2, 7), (6, 7), (6, 10), (9, 10), (8, 9), (7, 8),
    ]
    # fmt: on


@pytest.fixture
def prism_graph(prism_edge_order):
    graph = nx.Graph()
    graph.add_nodes_from(range(1, 11))
    graph.add_edges_from(prism_edge_order)
    return graph


@pytest.fixture(params=["json"])
def save_path(request):
    """Temporary file in a temporary directory for use when tests need
    to write, and sometimes read again, an object to, and from, a file.
    """
    ext = request.param
    with tempfile.TemporaryDirectory() as tmp:
        file_path = os.path.join(tmp, "rrrpy_temp." + ext)
        yield file_path
        gc.collect()


@pytest.fixture
def tmp_dir():
    with tempfile.TemporaryDirectory() as tmp:
        yield tmp
        gc.collect()


def swap_binary_labels(certificate):
    """Certificate for the same data with "+" and "-" swapped, for
    learners whose complexity only sees where labels change.
    """
    if certificate.abstains:
        return certificate
    other = "-" if certificate.label == "+" else "+"
    return Certificate(other, certificate.c_low, certificate.c_high)


@pytest.fixture
def swap_labels():
    return swap_binary_labels
