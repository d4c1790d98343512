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

"""Optimal robustly-reliable learner for the local margin, the distance
from the test point to the nearest point of another label.
"""

import heapq
import math
from typing import Dict, Hashable, Tuple, Union

from rrrpy.core import (
    AdversaryKind,
    Certificate,
    Complexity,
    DimensionMismatchError,
    LabeledDataset,
    Metric,
    ModelFormatError,
    as_point,
    certificate_from_complexities,
    distance_key,
    get_metric,
    key_to_distance,
)


class MarginModel:
    """Points of every label's complement and the metric.

    For each label y the model keeps the coordinates of all points whose
    label differs from y. Use :func:`train` to create a model.
    """

    adversary = AdversaryKind.ADDITION
    # Certificates vary continuously with the test point
    gap_constant = False

    def __init__(self, dataset: LabeledDataset, metric: Union[str, Metric] = "l2"):
        self._dataset = dataset
        self._metric = get_metric(metric)
        self._complements = {
            y: tuple(p.coordinates for p in dataset if p.label != y)
            for y in dataset.alphabet
        }

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__}, n: {len(self._dataset)}, metric: "
            f"{self._metric.value}, alphabet: {self.alphabet}>"
        )

    @property
    def dataset(self) -> LabeledDataset:
        return self._dataset

    @property
    def metric(self) -> Metric:
        return self._metric

    @property
    def alphabet(self) -> Tuple[Hashable, ...]:
        return self._dataset.alphabet

    @property
    def complements(self) -> Dict[Hashable, Tuple]:
        """Coordinates of the points whose label is not the key."""
        return dict(self._complements)

    def radius(self, x_test, label: Hashable, budget: int):
        """Distance from `x_test` to the (budget + 1)-th closest point
        whose label is not `label`, +∞ if there are at most `budget`.
        """
        x = as_point(x_test)
        if len(x) != self._dataset.dimension:
            raise DimensionMismatchError(
                f"Test point has dimension {len(x)}, data has dimension "
                f"{self._dataset.dimension}."
            )
        others = self._complements[label]
        if len(others) <= budget:
            return math.inf
        keys = heapq.nsmallest(
            budget + 1, (distance_key(c, x, self._metric) for c in others)
        )
        return key_to_distance(keys[-1], self._metric)

    def certify(self, x_test, budget: int) -> Certificate:
        """See :func:`certify`."""
        if budget < 0:
            raise ValueError(f"Budget must be nonnegative, not {budget}.")
        complexities = {
            y: Complexity.from_margin(self.radius(x_test, y, budget))
            for y in self.alphabet
        }
        return certificate_from_complexities(complexities, self.alphabet)

    def to_dict(self) -> dict:
        return {
            "kind": "local_margin",
            "version": 1,
            "adversary": self.adversary.value,
            "metric": self._metric.value,
            "alphabet": list(self.alphabet),
            "dimension": self._dataset.dimension,
            "points": [
                {"x": [str(c) for c in p.coordinates], "label": p.label}
                for p in self._dataset
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MarginModel":
        try:
            dataset = LabeledDataset(
                [(tuple(p["x"]), p["label"]) for p in d["points"]],
                alphabet=d["alphabet"],
                dimension=d["dimension"],
            )
            return cls(dataset, metric=d["metric"])
        except (KeyError, TypeError) as e:
            raise ModelFormatError(f"Malformed local margin model: {e}")


def train(dataset: LabeledDataset, metric: Union[str, Metric] = "l2") -> MarginModel:
    """Train the local margin learner.

    No distances are computed, they depend on the test point. Any number
    of labels is supported.

    Parameters
    ----------
    dataset
        Training set of any dimension.
    metric
        "l2" (default), "l1" or "linf".

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import local_margin
    >>> s = LabeledDataset([(0, "+"), (5, "-")])
    >>> model = local_margin.train(s)
    >>> model.complements["+"]
    ((Fraction(5, 1),),)
    """
    if len(dataset) == 0:
        raise ValueError("Cannot train on an empty dataset.")
    return MarginModel(dataset, metric=metric)


def certify(model: MarginModel, x_test, budget: int) -> Certificate:
    """Certify the prediction at `x_test` against `budget` added points.

    The complexity of label y is one over the distance to the
    (budget + 1)-th closest point of another label: 0 when there are
    too few such points, +∞ when that point coincides with `x_test`.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import local_margin
    >>> s = LabeledDataset([(0, "+"), (5, "-")])
    >>> local_margin.certify(local_margin.train(s), 1, 0)
    Certificate('+', 1/4, 1)
    """
    return model.certify(x_test, budget)
