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

"""(min,+)-convolution with a quadratic baseline and the reduction of
non-increasing sequences to non-decreasing ones.
"""

from rrrpy.minplus.convolution import (
    NON_DECREASING,
    NON_INCREASING,
    CostSequence,
    minplus_monotone_decreasing,
    minplus_naive,
)

__all__ = [
    "CostSequence",
    "NON_DECREASING",
    "NON_INCREASING",
    "minplus_monotone_decreasing",
    "minplus_naive",
]
