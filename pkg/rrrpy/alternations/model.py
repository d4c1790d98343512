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

"""Optimal robustly-reliable learner for the number of alternations of
a classifier on the real line.
"""

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Dict, Hashable, Iterator, List, Optional, Tuple

import numpy as np

from rrrpy.alternations._dp import fill_tables, prefix_min
from rrrpy.core import (
    AdversaryKind,
    BudgetExceedsTrainError,
    Certificate,
    Complexity,
    EcmOracle,
    LabeledDataset,
    ModelFormatError,
    as_scalar,
    certificate_from_complexities,
    group_by_coordinate,
)
from rrrpy.minplus import minplus_monotone_decreasing

TABLE_NAMES = ("dp_left_pos", "dp_left_neg", "dp_right_pos", "dp_right_neg")


@dataclass(frozen=True)
class BoundaryFormation:
    """Labels of the nearest surviving training coordinates to the left
    and right of a test point. A side is None when it holds no data.
    """

    left_label: Optional[Hashable]
    right_label: Optional[Hashable]

    def junction_cost(self, test_label: Hashable) -> int:
        """Alternations created at the test point.

        Same-label sides cost 0 when the test label matches and 2
        otherwise. Differing sides cost 1 whatever the test label.
        """
        return sum(
            side is not None and side != test_label
            for side in (self.left_label, self.right_label)
        )

    @classmethod
    def enumerate(
        cls, alphabet, has_left: bool, has_right: bool
    ) -> Iterator["BoundaryFormation"]:
        lefts = alphabet if has_left else (None,)
        rights = alphabet if has_right else (None,)
        for left in lefts:
            for right in rights:
                yield cls(left, right)


class AlternationModel:
    """Prefix and suffix tables of minimum alternations by mistakes.

    Tables are indexed by distinct coordinate. Entry [i, j] of a left
    table is the minimum number of alternations of a labeling of the
    i + 1 leftmost coordinates with exactly j mistakes, the boundary-most
    coordinate (here the rightmost) labeled positive or negative. Right
    tables hold the same for the i + 1 rightmost coordinates.

    Use :func:`train` to create a model.
    """

    adversary = AdversaryKind.ADDITION
    gap_constant = True

    def __init__(
        self,
        dataset: LabeledDataset,
        tables: Dict[str, np.ndarray],
        b_max: Optional[int] = None,
    ):
        dataset.require_1d()
        dataset.require_binary()
        self._dataset = dataset.sorted()
        self._positions, self._counts = group_by_coordinate(self._dataset)
        self._b_max = b_max

        n_groups = len(self._positions)
        n_cols = self.n_columns
        self._tables = {}
        for name in TABLE_NAMES:
            table = np.asarray(tables[name], dtype=np.float64)
            if table.shape != (n_groups, n_cols):
                raise ModelFormatError(
                    f"Table '{name}' has shape {table.shape}, expected "
                    f"{(n_groups, n_cols)}."
                )
            table.setflags(write=False)
            self._tables[name] = table

        pos, neg = self.alphabet
        self._side = {
            ("left", pos): prefix_min(self._tables["dp_left_pos"]),
            ("left", neg): prefix_min(self._tables["dp_left_neg"]),
            ("right", pos): prefix_min(self._tables["dp_right_pos"]),
            ("right", neg): prefix_min(self._tables["dp_right_neg"]),
        }

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__}, n: {self.n}, coordinates: "
            f"{len(self._positions)}, b_max: {self._b_max}>"
        )

    @property
    def n(self) -> int:
        return len(self._dataset)

    @property
    def dataset(self) -> LabeledDataset:
        return self._dataset

    @property
    def alphabet(self) -> Tuple[Hashable, ...]:
        return self._dataset.alphabet

    @property
    def positions(self) -> Tuple[Fraction, ...]:
        """Sorted distinct training coordinates."""
        return tuple(self._positions)

    @property
    def b_max(self) -> Optional[int]:
        return self._b_max

    @property
    def n_columns(self) -> int:
        b = self.n if self._b_max is None else min(self._b_max, self.n)
        return b + 1

    @property
    def dp_left_pos(self) -> np.ndarray:
        return self._tables["dp_left_pos"]

    @property
    def dp_left_neg(self) -> np.ndarray:
        return self._tables["dp_left_neg"]

    @property
    def dp_right_pos(self) -> np.ndarray:
        return self._tables["dp_right_pos"]

    @property
    def dp_right_neg(self) -> np.ndarray:
        return self._tables["dp_right_neg"]

    def _locate(self, x_test) -> Tuple[Optional[int], Optional[int], Optional[int]]:
        """Left table row, right table row and coincident coordinate."""
        x = as_scalar(x_test)
        n_groups = len(self._positions)
        g = bisect_left(self._positions, x)
        coincident = g if g < n_groups and self._positions[g] == x else None
        left = g - 1 if g > 0 else None
        start = g + 1 if coincident is not None else g
        right = n_groups - 1 - start if start < n_groups else None
        return left, right, coincident

    def _side_costs(self, side: str, row: Optional[int], label) -> np.ndarray:
        if row is None:
            return np.zeros(self.n_columns)
        return self._side[(side, label)][row]

    def _pinned_mistakes(self, coincident: Optional[int], label) -> int:
        if coincident is None:
            return 0
        counts = self._counts[coincident]
        return int(counts.sum() - counts[self.alphabet.index(label)])

    def _check_budget(self, budget: int) -> int:
        if budget < 0:
            raise ValueError(f"Budget must be nonnegative, not {budget}.")
        budget = min(budget, self.n)
        if budget > self.n_columns - 1:
            raise BudgetExceedsTrainError(
                f"Budget {budget} exceeds the budget {self._b_max} the model "
                "was trained for."
            )
        return budget

    def _label_complexity(self, x_test, label, budget: int) -> Complexity:
        left, right, coincident = self._locate(x_test)
        remaining = budget - self._pinned_mistakes(coincident, label)
        if remaining < 0:
            return Complexity.infinity()
        best = np.inf
        formations = BoundaryFormation.enumerate(
            self.alphabet, left is not None, right is not None
        )
        for formation in formations:
            a = self._side_costs("left", left, formation.left_label)
            b = self._side_costs("right", right, formation.right_label)
            split = np.min(a[: remaining + 1] + b[remaining::-1])
            best = min(best, split + formation.junction_cost(label))
        return Complexity(int(best) if np.isfinite(best) else math.inf)

    def minimum_complexity(self, budget: int) -> Complexity:
        """Minimum alternations over all labelings with at most `budget`
        mistakes.
        """
        budget = self._check_budget(budget)
        last = len(self._positions) - 1
        best = min(self._side[("left", y)][last, budget] for y in self.alphabet)
        return Complexity(int(best) if np.isfinite(best) else math.inf)

    def certify(self, x_test, budget: int) -> Certificate:
        """See :func:`certify`."""
        budget = self._check_budget(budget)
        complexities = {
            y: self._label_complexity(x_test, y, budget) for y in self.alphabet
        }
        return certificate_from_complexities(complexities, self.alphabet)

    def certify_all_budgets(self, x_test, b_max: int) -> List[Certificate]:
        """See :func:`certify_all_budgets`."""
        top = self._check_budget(b_max)
        left, right, coincident = self._locate(x_test)
        n_terms = top + 1
        per_label = {}
        for label in self.alphabet:
            best = np.full(n_terms, np.inf)
            formations = BoundaryFormation.enumerate(
                self.alphabet, left is not None, right is not None
            )
            for formation in formations:
                a = self._side_costs("left", left, formation.left_label)
                b = self._side_costs("right", right, formation.right_label)
                conv = minplus_monotone_decreasing(a[:n_terms], b[:n_terms])
                best = np.minimum(
                    best, np.asarray(conv) + formation.junction_cost(label)
                )
            shift = self._pinned_mistakes(coincident, label)
            per_label[label] = [
                Complexity(int(best[b - shift]))
                if b >= shift and np.isfinite(best[b - shift])
                else Complexity.infinity()
                for b in range(n_terms)
            ]
        certificates = [
            certificate_from_complexities(
                {y: per_label[y][b] for y in self.alphabet}, self.alphabet
            )
            for b in range(n_terms)
        ]
        # Budgets above n behave as n
        return certificates + [certificates[-1]] * (b_max + 1 - n_terms)

    def to_dict(self) -> dict:
        return {
            "kind": "alternations",
            "version": 1,
            "adversary": self.adversary.value,
            "alphabet": list(self.alphabet),
            "positions": [str(p.x) for p in self._dataset],
            "labels": list(self._dataset.labels),
            "b_max": self._b_max,
            "tables": {
                name: [
                    [int(v) if np.isfinite(v) else "inf" for v in row]
                    for row in self._tables[name]
                ]
                for name in TABLE_NAMES
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AlternationModel":
        try:
            dataset = LabeledDataset(
                [((x,), y) for x, y in zip(d["positions"], d["labels"])],
                alphabet=d["alphabet"],
                dimension=1,
            )
            tables = {
                name: [
                    [np.inf if v == "inf" else float(v) for v in row]
                    for row in d["tables"][name]
                ]
                for name in TABLE_NAMES
            }
            b_max = d.get("b_max")
        except (KeyError, TypeError) as e:
            raise ModelFormatError(f"Malformed alternations model: {e}")
        return cls(dataset, tables, b_max=b_max)


def train(dataset: LabeledDataset, b_max: Optional[int] = None) -> AlternationModel:
    """Train the alternations learner.

    Parameters
    ----------
    dataset
        1-D training set with a binary alphabet.
    b_max
        Largest budget queries will use. Tables are truncated to b_max
        mistakes, which makes training O(n b_max). If not given, all n
        mistake counts are kept.

    Returns
    -------
    AlternationModel

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import alternations
    >>> s = LabeledDataset([(1, "+"), (2, "-"), (3, "+")])
    >>> model = alternations.train(s)
    >>> int(model.dp_left_pos[2, 0]), int(model.dp_left_pos[2, 1])
    (2, 0)
    """
    dataset.require_1d()
    dataset.require_binary()
    if len(dataset) == 0:
        raise ValueError("Cannot train on an empty dataset.")
    if b_max is not None and b_max < 0:
        raise ValueError(f"b_max must be nonnegative, not {b_max}.")

    _, counts = group_by_coordinate(dataset)
    # Mistakes when labeling a coordinate positive are its negatives
    pos_mistakes = np.ascontiguousarray(counts[:, 1])
    neg_mistakes = np.ascontiguousarray(counts[:, 0])
    n = len(dataset)
    n_cols = (n if b_max is None else min(b_max, n)) + 1

    left_pos, left_neg = fill_tables(pos_mistakes, neg_mistakes, n_cols)
    right_pos, right_neg = fill_tables(
        pos_mistakes[::-1].copy(), neg_mistakes[::-1].copy(), n_cols
    )
    tables = {
        "dp_left_pos": left_pos,
        "dp_left_neg": left_neg,
        "dp_right_pos": right_pos,
        "dp_right_neg": right_neg,
    }
    return AlternationModel(dataset, tables, b_max=b_max)


def certify(model: AlternationModel, x_test, budget: int) -> Certificate:
    """Certify the prediction at `x_test` against `budget` added points.

    Splits the budget between the two sides of the test point and
    minimizes over the labels of the nearest surviving coordinates on
    each side, with O(budget) table lookups. Budgets above n behave as
    n.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import alternations
    >>> s = LabeledDataset([(1, "+"), (2, "-"), (3, "+")])
    >>> alternations.certify(alternations.train(s), 4, 0)
    Certificate('+', 2, 3)
    """
    return model.certify(x_test, budget)


def certify_all_budgets(
    model: AlternationModel, x_test, b_max: int
) -> List[Certificate]:
    """Certificates for every budget 0 to `b_max`.

    The per-side cost sequences are non-increasing in the number of
    mistakes, so all budgets follow from one (min,+)-convolution per
    boundary formation.
    """
    return model.certify_all_budgets(x_test, b_max)


class AlternationsEcm(EcmOracle):
    """Minimum alternations with at most b mistakes, from the tables."""

    def minimum_complexity(self, dataset: LabeledDataset, budget: int):
        if len(dataset) == 0:
            return Complexity(0), None
        return train(dataset, b_max=budget).minimum_complexity(budget), None
