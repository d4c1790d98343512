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

"""Piecewise constant classifiers on the real line."""

from bisect import bisect_right
from fractions import Fraction
from typing import Hashable, Sequence, Tuple

from rrrpy.core.dataset import Coordinate, as_exact


class StepClassifier:
    """A classifier on the real line that is constant between
    thresholds.

    Point ``x`` gets ``labels[i]`` where ``i`` is the number of
    thresholds less than or equal to ``x``.

    Parameters
    ----------
    thresholds
        Strictly increasing thresholds.
    labels
        One label more than there are thresholds.

    Examples
    --------
    >>> h = StepClassifier([2], ["+", "-"])
    >>> h(1), h(2), h(3)
    ('+', '-', '-')
    >>> h.alternations
    1
    """

    def __init__(self, thresholds: Sequence[Coordinate], labels: Sequence[Hashable]):
        thresholds = tuple(as_exact(t) for t in thresholds)
        if len(labels) != len(thresholds) + 1:
            raise ValueError(
                f"Need {len(thresholds) + 1} labels for {len(thresholds)} "
                f"thresholds, got {len(labels)}."
            )
        if any(a >= b for a, b in zip(thresholds[:-1], thresholds[1:])):
            raise ValueError("Thresholds must be strictly increasing.")
        self._thresholds = thresholds
        self._labels = tuple(labels)

    @property
    def thresholds(self) -> Tuple[Fraction, ...]:
        return self._thresholds

    @property
    def labels(self) -> Tuple[Hashable, ...]:
        return self._labels

    @property
    def alternations(self) -> int:
        """Number of times the output changes along the line."""
        return sum(a != b for a, b in zip(self._labels[:-1], self._labels[1:]))

    def __call__(self, x) -> Hashable:
        if isinstance(x, Sequence) and not isinstance(x, str):
            (x,) = x
        return self._labels[bisect_right(self._thresholds, as_exact(x))]

    def __repr__(self) -> str:
        thresholds = [str(t) for t in self._thresholds]
        return f"{self.__class__.__name__}({thresholds}, {list(self._labels)})"


def labeling_to_step_classifier(
    positions: Sequence[Fraction], labels: Sequence[Hashable]
) -> StepClassifier:
    """Classifier labeling each sorted position as given, switching
    halfway between positions whose labels differ.
    """
    if len(positions) == 0:
        raise ValueError("Need at least one position.")
    thresholds, out = [], [labels[0]]
    for i in range(1, len(positions)):
        if labels[i] != labels[i - 1]:
            thresholds.append((positions[i - 1] + positions[i]) / 2)
            out.append(labels[i])
    return StepClassifier(thresholds, out)
