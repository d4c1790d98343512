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

import pytest

from rrrpy.core import StepClassifier, labeling_to_step_classifier


class TestStepClassifier:
    def test_threshold_goes_right(self):
        h = StepClassifier([2], ["+", "-"])
        assert [h(1), h(2), h(3)] == ["+", "-", "-"]
        assert h((2.5,)) == "-"

    def test_alternations(self):
        assert StepClassifier([1, 2, 3], ["+", "-", "-", "+"]).alternations == 2
        assert StepClassifier([], ["+"]).alternations == 0

    def test_validation(self):
        with pytest.raises(ValueError, match="Need 2 labels"):
            StepClassifier([1], ["+"])
        with pytest.raises(ValueError, match="strictly increasing"):
            StepClassifier([2, 1], ["+", "-", "+"])

    def test_from_labeling(self):
        h = labeling_to_step_classifier([0, 1, 2, 4], ["+", "+", "-", "+"])
        assert h.thresholds == (Fraction(3, 2), Fraction(3))
        assert h.labels == ("+", "-", "+")
        assert [h(x) for x in (0, 1, 2, 4)] == ["+", "+", "-", "+"]
        with pytest.raises(ValueError):
            labeling_to_step_classifier([], [])
