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

"""Exhaustive reference implementations used to check the fast
learners on small instances.
"""

from rrrpy.oracles.brute import (
    brute_agreement_region,
    brute_alternations,
    brute_global_margin,
    brute_interval_mass,
    brute_local_margin,
    brute_minimum_vertex_cover,
)
from rrrpy.oracles.budget import DEFAULT_BUDGET, OracleBudget
from rrrpy.oracles.ecm_oracles import (
    ExhaustiveAlternationsEcm,
    ExhaustivePolynomialEcm,
    PolynomialClassifier,
)

__all__ = [
    "DEFAULT_BUDGET",
    "ExhaustiveAlternationsEcm",
    "ExhaustivePolynomialEcm",
    "OracleBudget",
    "PolynomialClassifier",
    "brute_agreement_region",
    "brute_alternations",
    "brute_global_margin",
    "brute_interval_mass",
    "brute_local_margin",
    "brute_minimum_vertex_cover",
]
