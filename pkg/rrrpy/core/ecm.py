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

"""Generic robustly-reliable learner built on an empirical complexity
minimization (ECM) oracle.
"""

from abc import ABC, abstractmethod
from typing import Callable, Hashable, Optional, Tuple
import warnings

from rrrpy.core.complexity import (
    Certificate,
    Complexity,
    certificate_from_complexities,
)
from rrrpy.core.dataset import LabeledDataset, LabeledPoint, as_point

Classifier = Callable[..., Hashable]


class EcmOracle(ABC):
    """Minimum complexity of a classifier making at most b mistakes.

    Subclasses implement :meth:`minimum_complexity`. Measures whose
    complexity depends on the test point override
    :meth:`minimum_complexity_pinned`.
    """

    @abstractmethod
    def minimum_complexity(
        self, dataset: LabeledDataset, budget: int
    ) -> Tuple[Complexity, Optional[Classifier]]:
        """Return the minimum complexity over classifiers disagreeing
        with at most `budget` points of `dataset`, and such a classifier
        if the oracle can produce one. The complexity is +∞ and the
        classifier None if no such classifier exists.
        """
        raise NotImplementedError

    def minimum_complexity_pinned(
        self, dataset: LabeledDataset, budget: int, x_test, y_test: Hashable
    ) -> Complexity:
        """Minimum complexity over classifiers with at most `budget`
        mistakes that predict `y_test` at `x_test`.

        Appending ``budget + 1`` copies of ``(x_test, y_test)`` forces
        the classifier to honor the test label without consuming budget.
        """
        copies = [LabeledPoint(as_point(x_test), y_test)] * (budget + 1)
        return self.minimum_complexity(dataset.with_points(copies), budget)[0]


def _check_budget(budget: int):
    if budget < 0:
        raise ValueError(f"Budget must be nonnegative, not {budget}.")


def _infeasible(dataset: LabeledDataset) -> Certificate:
    warnings.warn(
        "No classifier within the mistake budget for any label, returning an "
        "abstaining certificate."
    )
    inf = Complexity.infinity()
    return Certificate(dataset.alphabet[0], inf, inf)


def certify_via_ecm(
    oracle: EcmOracle, dataset: LabeledDataset, x_test, budget: int
) -> Certificate:
    """Certify a prediction at `x_test` with an ECM oracle.

    Parameters
    ----------
    oracle
        Oracle for the complexity measure.
    dataset
        Possibly poisoned training set.
    x_test
        Test point coordinates.
    budget
        Number of training points the adversary may have added.

    Returns
    -------
    Certificate
        Label of smallest pinned complexity with the two smallest
        complexities. If no label is feasible the certificate abstains
        at (+∞, +∞) and a warning is emitted.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset, certify_via_ecm
    >>> from rrrpy.oracles import ExhaustiveAlternationsEcm
    >>> s = LabeledDataset([(1, "+"), (2, "-"), (3, "+")])
    >>> certify_via_ecm(ExhaustiveAlternationsEcm(), s, 4, 0)
    Certificate('+', 2, 3)
    """
    _check_budget(budget)
    complexities = {
        y: oracle.minimum_complexity_pinned(dataset, budget, x_test, y)
        for y in dataset.alphabet
    }
    if all(c.is_infinite for c in complexities.values()):
        return _infeasible(dataset)
    return certificate_from_complexities(complexities, dataset.alphabet)


def certify_via_ecm_classifier(
    oracle: EcmOracle, dataset: LabeledDataset, x_test, budget: int
) -> Certificate:
    """Certify with one unconstrained and one pinned oracle call.

    The label is the prediction at `x_test` of a minimum complexity
    classifier, which gives `c_low`. `c_high` is the minimum complexity
    after adding ``budget + 1`` copies of `x_test` with the other label.
    Requires a binary alphabet and an oracle returning classifiers.
    """
    _check_budget(budget)
    dataset.require_binary()
    c_low, classifier = oracle.minimum_complexity(dataset, budget)
    if c_low.is_infinite:
        return _infeasible(dataset)
    if classifier is None:
        raise ValueError(f"{type(oracle).__name__} does not return classifiers.")
    label = classifier(as_point(x_test))
    c_high = oracle.minimum_complexity_pinned(
        dataset, budget, x_test, dataset.other_label(label)
    )
    return Certificate(label, c_low, c_high)
