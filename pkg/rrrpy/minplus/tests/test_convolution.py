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

import numpy as np
import pytest

from rrrpy.core import LengthMismatchError, NotMonotoneError
from rrrpy.minplus import (
    NON_DECREASING,
    NON_INCREASING,
    CostSequence,
    minplus_monotone_decreasing,
    minplus_naive,
)


def random_non_increasing(rng, n, high=20, p_inf=0.1):
    values = np.sort(rng.integers(0, high, size=n))[::-1].astype(float)
    n_inf = int(rng.binomial(n, p_inf))
    values[:n_inf] = np.inf
    return values


class TestCostSequence:
    def test_tolist(self):
        a = CostSequence([np.inf, 3, 0])
        assert a.tolist() == [math.inf, 3, 0]
        assert a.monotone is None

    @pytest.mark.parametrize("values", [[-1, 0], [0.5], [np.nan]])
    def test_invalid_values_raise(self, values):
        with pytest.raises(ValueError):
            CostSequence(values)

    def test_declared_monotonicity_is_validated(self):
        CostSequence([np.inf, np.inf, 2, 2, 0], monotone=NON_INCREASING)
        CostSequence([0, 1, np.inf, np.inf], monotone=NON_DECREASING)
        with pytest.raises(NotMonotoneError, match="is not non-increasing"):
            CostSequence([1, 2], monotone=NON_INCREASING)
        with pytest.raises(NotMonotoneError, match="is not non-decreasing"):
            CostSequence([2, 1], monotone=NON_DECREASING)

    def test_unknown_monotonicity_raises(self):
        with pytest.raises(ValueError, match="must be None"):
            CostSequence([1], monotone="increasing")

    def test_slices_keep_monotonicity(self):
        a = CostSequence([3, 2, 1], monotone=NON_INCREASING)
        assert a[1:].monotone == NON_INCREASING


class TestMinplusNaive:
    @pytest.mark.parametrize(
        "a, b, expected",
        [
            ([3, 1, 0], [2, 1, 0], [5, 3, 2]),
            ([0], [0], [0]),
            ([np.inf, 1], [0, 0], [math.inf, 1]),
            ([1, 4, 9], [0, 2, 2], [1, 3, 3]),
        ],
    )
    def test_small(self, a, b, expected):
        assert minplus_naive(a, b).tolist() == expected

    def test_length_mismatch_raises(self):
        with pytest.raises(LengthMismatchError, match="equal length"):
            minplus_naive([1, 2], [1])
        with pytest.raises(LengthMismatchError, match="nonempty"):
            minplus_naive([], [])


class TestMinplusMonotoneDecreasing:
    def test_small(self):
        c = minplus_monotone_decreasing([3, 1, 0], [2, 1, 0])
        assert c.tolist() == [5, 3, 2]
        assert c.monotone == NON_INCREASING

    def test_single_term(self):
        assert minplus_monotone_decreasing([4], [np.inf]).tolist() == [math.inf]

    def test_rejects_increasing_input(self):
        with pytest.raises(NotMonotoneError):
            minplus_monotone_decreasing([0, 1], [1, 0])

    def test_equals_naive_on_random_sequences(self, rng):
        for _ in range(500):
            n = int(rng.integers(1, 65))
            a = random_non_increasing(rng, n)
            b = random_non_increasing(rng, n)
            fast = minplus_monotone_decreasing(a, b)
            assert fast.tolist() == minplus_naive(a, b).tolist()

    def test_custom_convolver_sees_non_decreasing_input(self):
        seen = []

        def convolver(a, b):
            seen.append((a.monotone, b.monotone, a.size))
            return minplus_naive(a, b)

        minplus_monotone_decreasing([5, 2, 2, 0], [3, 3, 1, 0], convolver)
        assert seen == [(NON_DECREASING, NON_DECREASING, 7)]
