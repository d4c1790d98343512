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

import math

import pytest

from rrrpy.core import (
    Certificate,
    Complexity,
    EcmOracle,
    LabeledDataset,
    certify_via_ecm,
    certify_via_ecm_classifier,
)
from rrrpy.oracles import (
    ExhaustiveAlternationsEcm,
    ExhaustivePolynomialEcm,
    brute_alternations,
)


class NeverFeasible(EcmOracle):
    def minimum_complexity(self, dataset, budget):
        return Complexity.infinity(), None


class NoClassifier(EcmOracle):
    def minimum_complexity(self, dataset, budget):
        return Complexity(0), None


class TestCertifyViaEcm:
    def test_toy(self, toy_dataset):
        cert = certify_via_ecm(ExhaustiveAlternationsEcm(), toy_dataset, 4, 0)
        assert cert == Certificate("+", 2, 3)

    def test_matches_removal_oracle(self, rng, random_1d_dataset, probes):
        oracle = ExhaustiveAlternationsEcm()
        for _ in range(20):
            s = random_1d_dataset(rng, int(rng.integers(1, 6)))
            b = int(rng.integers(0, 3))
            for x in probes(s):
                assert certify_via_ecm(oracle, s, x, b) == brute_alternations(
                    s, x, b
                )

    def test_infeasible_abstains_with_warning(self, toy_dataset):
        with pytest.warns(UserWarning, match="No classifier"):
            cert = certify_via_ecm(NeverFeasible(), toy_dataset, 0, 0)
        assert cert.abstains
        assert cert.c_low.is_infinite

    def test_negative_budget_raises(self, toy_dataset):
        with pytest.raises(ValueError, match="nonnegative"):
            certify_via_ecm(ExhaustiveAlternationsEcm(), toy_dataset, 0, -1)


class TestCertifyViaEcmClassifier:
    @pytest.mark.parametrize(
        "oracle", [ExhaustiveAlternationsEcm(), ExhaustivePolynomialEcm()]
    )
    def test_toy(self, toy_dataset, oracle):
        cert = certify_via_ecm_classifier(oracle, toy_dataset, 4, 0)
        assert cert == Certificate("+", 2, 3)

    def test_agrees_with_pinned_calls(self, rng, random_1d_dataset, probes):
        oracle = ExhaustiveAlternationsEcm()
        for _ in range(20):
            s = random_1d_dataset(rng, int(rng.integers(1, 6)))
            b = int(rng.integers(0, 2))
            for x in probes(s):
                a = certify_via_ecm_classifier(oracle, s, x, b)
                c = certify_via_ecm(oracle, s, x, b)
                assert a.c_low == c.c_low
                if not c.abstains:
                    assert a == c

    def test_needs_classifier(self, toy_dataset):
        with pytest.raises(ValueError, match="does not return classifiers"):
            certify_via_ecm_classifier(NoClassifier(), toy_dataset, 0, 0)

    def test_infeasible(self, toy_dataset):
        with pytest.warns(UserWarning):
            cert = certify_via_ecm_classifier(NeverFeasible(), toy_dataset, 0, 0)
        assert cert.c_high == math.inf
