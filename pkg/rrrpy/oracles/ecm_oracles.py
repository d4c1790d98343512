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

"""Exhaustive empirical complexity minimization in one dimension."""

from itertools import product
from typing import Hashable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from rrrpy.core import (
    Complexity,
    EcmOracle,
    LabeledDataset,
    StepClassifier,
    as_exact,
    group_by_coordinate,
    labeling_to_step_classifier,
)
from rrrpy.oracles.budget import DEFAULT_BUDGET, OracleBudget


def _best_labeling(
    dataset: LabeledDataset, b: int, budget: OracleBudget
) -> Tuple[Optional[Tuple[int, ...]], float, List]:
    """Labeling of the distinct coordinates with fewest alternations and
    at most `b` mistakes, by enumerating all labelings.
    """
    dataset.require_1d()
    dataset.require_binary()
    positions, counts = group_by_coordinate(dataset)
    budget.check_patterns(2 ** len(positions) * max(len(positions), 1))
    totals = counts.sum(axis=1)
    best, best_alternations = None, np.inf
    for cells in product((0, 1), repeat=len(positions)):
        mistakes = sum(int(totals[g] - counts[g, y]) for g, y in enumerate(cells))
        if mistakes > b:
            continue
        alternations = sum(u != v for u, v in zip(cells[:-1], cells[1:]))
        if alternations < best_alternations:
            best, best_alternations = cells, alternations
    return best, best_alternations, positions


class ExhaustiveAlternationsEcm(EcmOracle):
    """Minimum alternations with at most b mistakes, by enumeration.

    Returns a :class:`~rrrpy.core.StepClassifier` switching halfway
    between coordinates.
    """

    def __init__(self, budget: OracleBudget = DEFAULT_BUDGET):
        self.budget = budget

    def minimum_complexity(self, dataset: LabeledDataset, budget: int):
        if len(dataset) == 0:
            return Complexity(0), StepClassifier([], [dataset.alphabet[0]])
        cells, alternations, positions = _best_labeling(dataset, budget, self.budget)
        if cells is None:
            return Complexity.infinity(), None
        labels = [dataset.alphabet[y] for y in cells]
        return Complexity(alternations), labeling_to_step_classifier(positions, labels)


class PolynomialClassifier:
    """Sign classifier of a polynomial: the first label where the
    polynomial is positive, the second elsewhere.
    """

    def __init__(self, polynomial: Polynomial, alphabet: Sequence[Hashable]):
        self.polynomial = polynomial
        self.alphabet = tuple(alphabet)

    @property
    def degree(self) -> int:
        return self.polynomial.degree()

    def __call__(self, x) -> Hashable:
        if isinstance(x, (tuple, list)):
            (x,) = x
        value = self.polynomial(float(as_exact(x)))
        return self.alphabet[0] if value > 0 else self.alphabet[1]


class ExhaustivePolynomialEcm(EcmOracle):
    """Minimum polynomial degree with at most b mistakes.

    In one dimension the smallest degree of a polynomial whose sign
    realizes a labeling equals the number of alternations of that
    labeling. The returned polynomial has its roots halfway between
    coordinates whose labels differ.
    """

    def __init__(self, budget: OracleBudget = DEFAULT_BUDGET):
        self.budget = budget

    def minimum_complexity(self, dataset: LabeledDataset, budget: int):
        alphabet = dataset.alphabet
        if len(dataset) == 0:
            return Complexity(0), PolynomialClassifier(Polynomial([1.0]), alphabet)
        cells, degree, positions = _best_labeling(dataset, budget, self.budget)
        if cells is None:
            return Complexity.infinity(), None
        roots = [
            float((positions[i - 1] + positions[i]) / 2)
            for i in range(1, len(cells))
            if cells[i] != cells[i - 1]
        ]
        # Sign far to the left is (-1)^degree times the leading coefficient
        sign = 1.0 if cells[0] == 0 else -1.0
        leading = sign * (-1.0) ** len(roots)
        polynomial = leading * Polynomial.fromroots(roots) if roots else Polynomial([sign])
        return Complexity(degree), PolynomialClassifier(polynomial, alphabet)
