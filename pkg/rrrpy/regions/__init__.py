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

"""Reliable regions of one-dimensional learners and the
sample-complexity experiment.
"""

from rrrpy.regions.experiment import (
    NascReport,
    check_target,
    equally_spaced_thresholds,
    nasc_experiment,
    sample_size,
)
from rrrpy.regions.region import (
    PiecewiseTarget,
    Region,
    SampleDistribution,
    Uniform,
    empirical_region,
    gap_probes,
    montecarlo_region_mass,
)

__all__ = [
    "NascReport",
    "PiecewiseTarget",
    "Region",
    "SampleDistribution",
    "Uniform",
    "check_target",
    "empirical_region",
    "equally_spaced_thresholds",
    "gap_probes",
    "montecarlo_region_mass",
    "nasc_experiment",
    "sample_size",
]
