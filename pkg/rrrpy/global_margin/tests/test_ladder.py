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

from fractions import Fraction
from itertools import combinations
import math

import numpy as np
import pytest

from rrrpy import global_margin
from rrrpy.core import (
    AdversaryModel,
    AlphabetUnsupportedError,
    BudgetExceedsTrainError,
    Certificate,
    Complexity,
    DimensionMismatchError,
    LabeledDataset,
    LabeledPoint,
    ModelFormatError,
    as_point,
    distance,
)
from rrrpy.global_margin import GraphLadder
from rrrpy.io._io import load, save
from rrrpy.io.certificate import certificate_to_json
from rrrpy.oracles import brute_global_margin, brute_minimum_vertex_cover


class TestTrain:
    def test_single_pair(self):
        s = LabeledDataset([(0, "+"), (10, "-")])
        with pytest.warns(UserWarning, match="Ladder truncated at radius inf"):
            ladder = global_margin.train(s, b_max=0)
        assert ladder.radii == (0, 10)
        assert ladder.matching_sizes == (0, 0)
        assert ladder.truncated

    def test_nested_edges(self):
        s = LabeledDataset([(0, "+"), (1, "-"), (3, "+")])
        ladder = global_margin.train(s, b_max=1)
        assert ladder.radii == (0, 1, 2, math.inf)
        assert ladder.matching_sizes == (0, 0, 1, 1)
        assert not ladder.truncated
        graphs = ladder.graphs
        assert graphs[1].edges == ()
        assert graphs[2].edges == ((0, 1),)
        assert set(graphs[3].edges) == {(0, 1), (2, 1)}
        assert graphs[3].radius == math.inf

    def test_one_label(self):
        s = LabeledDataset([(0, "+"), (4, "+")], alphabet=("+", "-"))
        ladder = global_margin.train(s, b_max=0)
        assert ladder.radii == (0, math.inf)
        assert ladder.matching_sizes == (0, 0)
        assert ladder.certify(2, 0) == Certificate("+", 0, 1)

    def test_default_b_max(self, toy_dataset):
        ladder = global_margin.train(toy_dataset)
        assert ladder.b_max == 3
        assert repr(ladder).startswith("<GraphLadder, n: 3")

    def test_three_labels_raise(self):
        s = LabeledDataset([(0, "a"), (1, "b"), (2, "c")])
        with pytest.raises(AlphabetUnsupportedError, match="NP-hard"):
            global_margin.train(s)

    @pytest.mark.parametrize("b_max, match", [(-1, "nonnegative")])
    def test_invalid_b_max_raises(self, toy_dataset, b_max, match):
        with pytest.raises(ValueError, match=match):
            global_margin.train(toy_dataset, b_max=b_max)

    def test_empty_dataset_raises(self):
        with pytest.raises(ValueError, match="empty"):
            global_margin.train(LabeledDataset([], alphabet=("+", "-")))

    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    def test_monotone_and_koenig(self, random_dataset, rng):
        for _ in range(30):
            s = random_dataset(rng, int(rng.integers(2, 9)), dimension=2)
            ladder = global_margin.train(s, b_max=3, metric="l1")
            sizes = ladder.matching_sizes
            assert all(a <= b for a, b in zip(sizes[:-1], sizes[1:]))
            assert sizes[-1] <= 3
            previous = set()
            for graph in ladder.graphs:
                assert previous <= set(graph.edges)
                previous = set(graph.edges)
                cover = graph.minimum_vertex_cover()
                assert len(cover) == graph.matching_size
                assert all(u in cover or v in cover for u, v in graph.edges)
                assert brute_minimum_vertex_cover(graph.edges) == len(cover)


class TestCertify:
    def test_single_pair(self):
        s = LabeledDataset([(0, "+"), (10, "-")])
        ladder = global_margin.train(s, b_max=1)
        assert global_margin.certify(ladder, 4, 0) == Certificate(
            "+", Fraction(1, 3), Fraction(1, 2)
        )
        # Equidistant from both points
        cert = ladder.certify(5, 0)
        assert cert.abstains
        assert cert.c_low == cert.c_high == Fraction(2, 5)

    def test_deletion_changes_binding_pair(self):
        s = LabeledDataset([(0, "+"), (1, "-"), (10, "+")])
        ladder = global_margin.train(s, b_max=1)
        cert = ladder.certify(0.4, 1)
        assert cert == Certificate("+", 0, Fraction(2, 9))
        assert cert == brute_global_margin(s, 0.4, 1)

    def test_max_radius(self):
        s = LabeledDataset([(0, "+"), (10, "-")])
        ladder = global_margin.train(s, b_max=1)
        assert ladder.max_radius(4, "+", 0) == 6
        assert ladder.max_radius(4, "-", 0) == 4
        assert ladder.max_radius(4, "+", 1) == math.inf

    def test_test_point_on_conflicting_point(self):
        s = LabeledDataset([(0, "+"), (10, "-")])
        ladder = global_margin.train(s, b_max=1)
        cert = ladder.certify(10, 0)
        assert cert.label == "-"
        assert cert.c_high.is_infinite

    def test_budget_exceeds_train_raises(self, toy_dataset):
        ladder = global_margin.train(toy_dataset, b_max=1)
        with pytest.raises(BudgetExceedsTrainError, match="exceeds the budget 1"):
            ladder.certify(1.5, 2)

    def test_negative_budget_raises(self, toy_dataset):
        ladder = global_margin.train(toy_dataset, b_max=1)
        with pytest.raises(ValueError, match="nonnegative"):
            ladder.certify(1.5, -1)

    def test_dimension_mismatch_raises(self, toy_dataset):
        ladder = global_margin.train(toy_dataset)
        with pytest.raises(DimensionMismatchError):
            ladder.certify((1, 2), 0)

    def test_query_does_not_change_ladder(self, random_dataset, rng):
        s = random_dataset(rng, 8, dimension=2)
        ladder = global_margin.train(s, b_max=8)
        fingerprint = ladder.fingerprint()
        sizes = ladder.matching_sizes
        for _ in range(20):
            x = tuple(rng.integers(0, 12, size=2) / 2)
            ladder.certify(x, int(rng.integers(0, 4)))
        assert ladder.fingerprint() == fingerprint
        assert ladder.matching_sizes == sizes

    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    def test_monotone_in_budget(self, random_dataset, rng):
        for _ in range(30):
            s = random_dataset(rng, int(rng.integers(2, 10)), dimension=2)
            ladder = global_margin.train(s, b_max=4, metric="l1")
            x = tuple(rng.integers(-2, 14, size=2) / 2)
            certs = [ladder.certify(x, b) for b in range(5)]
            for a, b in zip(certs[:-1], certs[1:]):
                assert b.c_low <= a.c_low
                assert b.c_high <= a.c_high

    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    def test_invariant_under_reordering(self, random_dataset, rng):
        for _ in range(20):
            s = random_dataset(rng, 7, dimension=2)
            shuffled = LabeledDataset(
                [s[i] for i in rng.permutation(len(s))], alphabet=s.alphabet
            )
            a = global_margin.train(s, b_max=2)
            b = global_margin.train(shuffled, b_max=2)
            x = tuple(rng.integers(0, 12, size=2) / 2)
            for budget in range(3):
                assert a.certify(x, budget) == b.certify(x, budget)


class TestAgainstOracle:
    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    @pytest.mark.parametrize("metric", ["l2", "l1"])
    @pytest.mark.parametrize("dimension", [1, 2])
    def test_random_instances(self, random_dataset, rng, metric, dimension):
        for _ in range(125):
            n = int(rng.integers(1, 9))
            s = random_dataset(rng, n, dimension=dimension, spread=4)
            ladder = global_margin.train(s, b_max=2, metric=metric)
            x = tuple(rng.integers(-1, 9, size=dimension) / 2)
            b = int(rng.integers(0, 3))
            expected = brute_global_margin(s, x, b, metric=metric)
            cert = ladder.certify(x, b)
            assert cert.label == expected.label
            assert cert.abstains == expected.abstains
            assert cert.c_low == expected.c_low
            assert cert.c_high == expected.c_high


class TestSoundness:
    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    def test_linear_target_with_added_points(self, rng):
        # Added points never make a confident prediction wrong for a
        # target whose margin on the clean data and the test point
        # exceeds 2 / c_high
        w = np.array([1.0, -0.5])
        for _ in range(200):
            clean_xs = rng.integers(-10, 11, size=(int(rng.integers(1, 9)), 2)) / 2
            clean = LabeledDataset(
                [(tuple(v), "+" if v @ w > 0.25 else "-") for v in clean_xs],
                alphabet=("+", "-"),
            )
            candidates = [
                LabeledPoint(as_point(tuple(v)), str(y))
                for v, y in zip(
                    rng.integers(-10, 11, size=(3, 2)) / 2, rng.choice(["+", "-"], 3)
                )
            ]
            x = rng.integers(-10, 11, size=2) / 2
            truth = "+" if x @ w > 0.25 else "-"
            with_test = list(clean) + [LabeledPoint(as_point(tuple(x)), truth)]
            closest = min(
                (
                    distance(p.coordinates, q.coordinates, "l1")
                    for p, q in combinations(with_test, 2)
                    if p.label != q.label
                ),
                default=math.inf,
            )
            c_target = Complexity.from_margin(closest, numerator=2)
            b = int(rng.integers(0, 3))
            adversary = AdversaryModel(GraphLadder.adversary, b)
            for poisoned in adversary.corruptions(clean, candidates):
                ladder = global_margin.train(poisoned, b_max=b, metric="l1")
                cert = ladder.certify(tuple(x), b)
                if c_target < cert.c_high:
                    assert cert.label == truth


class TestPersistence:
    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    def test_dict_round_trip(self, random_dataset, rng):
        s = random_dataset(rng, 8, dimension=2)
        ladder = global_margin.train(s, b_max=2)
        d = ladder.to_dict()
        assert d["kind"] == "global_margin"
        assert len(d["radii"]) == len(d["graphs"])
        loaded = GraphLadder.from_dict(d)
        assert loaded.fingerprint() == ladder.fingerprint()
        assert loaded.truncated == ladder.truncated
        x = (1.5, 2.5)
        for b in range(3):
            assert loaded.certify(x, b) == ladder.certify(x, b)

    @pytest.mark.filterwarnings("ignore:Ladder truncated")
    def test_file_round_trip(self, random_dataset, rng, save_path):
        s = random_dataset(rng, 9, dimension=2)
        ladder = global_margin.train(s, b_max=3)
        save(save_path, ladder)
        loaded = load(save_path)
        for _ in range(100):
            x = tuple(rng.integers(-2, 14, size=2) / 2)
            b = int(rng.integers(0, 4))
            assert certificate_to_json(loaded.certify(x, b)) == certificate_to_json(
                ladder.certify(x, b)
            )

    def test_edges_not_nested_raise(self, toy_dataset):
        d = global_margin.train(toy_dataset).to_dict()
        # The rung below must hold a prefix of the last rung's edges
        d["graphs"][-2]["edges"] = [d["graphs"][-1]["edges"][1]]
        with pytest.raises(ModelFormatError):
            GraphLadder.from_dict(d)

    def test_missing_key_raises(self, toy_dataset):
        d = global_margin.train(toy_dataset).to_dict()
        del d["keys"]
        with pytest.raises(ModelFormatError, match="Malformed"):
            GraphLadder.from_dict(d)
