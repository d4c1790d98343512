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

"""Optimal robustly-reliable learner for the interval probability mass
under label flips.

A labeling of the sorted points splits them into maximal runs of equal
labels. A run of c points scores n / (1 + c), where n is the number of
training points, and the complexity of a labeling is the sum of its run
scores. Few long runs are simple, many short runs are complex.
"""

from bisect import bisect_right
from fractions import Fraction
import math
from typing import Dict, Hashable, List, Optional, Tuple

import numpy as np

from rrrpy.core import (
    AdversaryKind,
    Certificate,
    Complexity,
    LabeledDataset,
    ModelFormatError,
    as_scalar,
    certificate_from_complexities,
)

TABLE_NAMES = ("dp_left_pos", "dp_left_neg", "dp_right_pos", "dp_right_neg")


def _fill_tables(labels: List[int], n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Prefix tables of minimum total score.

    Entry [i, j, k] of table y is the minimum score of a labeling of the
    first i + 1 points with exactly j flips whose last run has label y
    and starts at point k. Infeasible entries are ``math.inf``.
    """
    m = len(labels)
    tables = [np.full((m, m + 1, m), math.inf, dtype=object) for _ in range(2)]
    half = Fraction(n, 2)
    for i in range(m):
        # Extending a run of i - k + 1 points by one
        growth = np.array(
            [Fraction(n, i - k + 2) - Fraction(n, i - k + 1) for k in range(i)],
            dtype=object,
        )
        for y in (0, 1):
            flip = int(labels[i] != y)
            table, other = tables[y], tables[1 - y]
            if i == 0:
                table[0, flip, 0] = half
                continue
            for j in range(flip, i + 2):
                previous = j - flip
                opened = min(other[i - 1, previous, :i])
                if opened != math.inf:
                    table[i, j, i] = opened + half
                table[i, j, :i] = table[i - 1, previous, :i] + growth
    return tables[0], tables[1]


def _prefix_min(table: np.ndarray) -> np.ndarray:
    """Running minimum over the flip axis, per run start."""
    return np.minimum.accumulate(table, axis=1)


class _Side:
    """Best scores on one side of the test point for a given number of
    flips, split by the label of the run next to the test point.
    """

    def __init__(self, row: Optional[np.ndarray], n: int):
        # row has shape (n_flips, n_starts), at-most-j semantics
        self.row = row
        self.n = n
        if row is not None:
            length = row.shape[1]
            self.counts = [length - k for k in range(length)]

    def best(self, j: int):
        """Minimum score, run not joined by the test point."""
        if self.row is None:
            return Fraction(0)
        return min(self.row[j])

    def opened(self, j: int) -> np.ndarray:
        """Scores without the boundary run's own term, per run start."""
        return self.row[j] - np.array(
            [Fraction(self.n, 1 + c) for c in self.counts], dtype=object
        )

    def extended(self, j: int):
        """Minimum score when the test point joins the boundary run."""
        gained = np.array([Fraction(self.n, 2 + c) for c in self.counts], dtype=object)
        return min(self.opened(j) + gained)


class IntervalMassModel:
    """Prefix and suffix score tables of a 1-D binary dataset.

    Entry [i, j, k] of a left table is the minimum total score of a
    labeling of the i + 1 leftmost points with exactly j flips, whose
    last run has the table's label and starts at point k. Right tables
    hold the same for the i + 1 rightmost points, counted from the right.
    Use :func:`train` to create a model.
    """

    adversary = AdversaryKind.LABEL_FLIP
    gap_constant = True

    def __init__(self, dataset: LabeledDataset, tables: Dict[str, np.ndarray]):
        dataset.require_1d()
        dataset.require_binary()
        self._dataset = dataset.sorted()
        n = len(self._dataset)
        self._tables = {}
        for name in TABLE_NAMES:
            table = np.asarray(tables[name], dtype=object)
            if table.shape != (n, n + 1, n):
                raise ModelFormatError(
                    f"Table '{name}' has shape {table.shape}, expected "
                    f"{(n, n + 1, n)}."
                )
            table.setflags(write=False)
            self._tables[name] = table
        pos, neg = self.alphabet
        self._prefix = {
            ("left", pos): _prefix_min(self._tables["dp_left_pos"]),
            ("left", neg): _prefix_min(self._tables["dp_left_neg"]),
            ("right", pos): _prefix_min(self._tables["dp_right_pos"]),
            ("right", neg): _prefix_min(self._tables["dp_right_neg"]),
        }
        self._xs = [p.x for p in self._dataset]

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}, n: {self.n}>"

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

    def _sides(self, x_test) -> Tuple[int, int, Dict]:
        """Per side and boundary label, the table row next to the test
        point. The test point goes after all points at or left of it.
        """
        insert = bisect_right(self._xs, as_scalar(x_test))
        n_right = self.n - insert
        sides = {}
        for label in self.alphabet:
            left = self._prefix[("left", label)][insert - 1, :, :insert] if insert else None
            right = (
                self._prefix[("right", label)][n_right - 1, :, :n_right]
                if n_right
                else None
            )
            sides[("left", label)] = _Side(left, self.n)
            sides[("right", label)] = _Side(right, self.n)
        return insert, n_right, sides

    def _label_complexity(self, x_test, label, budget: int) -> Complexity:
        insert, n_right, sides = self._sides(x_test)
        lefts = self.alphabet if insert else (None,)
        rights = self.alphabet if n_right else (None,)
        empty = _Side(None, self.n)
        half = Fraction(self.n, 2)
        best = math.inf
        for j in range(budget + 1):
            jr = budget - j
            for s_left in lefts:
                left = sides[("left", s_left)] if s_left is not None else empty
                for s_right in rights:
                    right = sides[("right", s_right)] if s_right is not None else empty
                    join_left, join_right = s_left == label, s_right == label
                    if join_left and join_right:
                        # Both boundary runs merge through the test point
                        a, b = left.opened(j), right.opened(jr)
                        merged = min(
                            a[kl] + b[kr] + Fraction(self.n, 2 + cl + cr)
                            for kl, cl in enumerate(left.counts)
                            for kr, cr in enumerate(right.counts)
                        )
                        value = merged
                    elif join_left:
                        value = left.extended(j) + right.best(jr)
                    elif join_right:
                        value = left.best(j) + right.extended(jr)
                    else:
                        value = left.best(j) + right.best(jr) + half
                    best = min(best, value)
        return Complexity(best)

    def certify(self, x_test, budget: int) -> Certificate:
        """See :func:`certify`."""
        if budget < 0:
            raise ValueError(f"Budget must be nonnegative, not {budget}.")
        budget = min(budget, self.n)
        complexities = {
            y: self._label_complexity(x_test, y, budget) for y in self.alphabet
        }
        return certificate_from_complexities(complexities, self.alphabet)

    def to_dict(self) -> dict:
        def entry(v):
            if v == math.inf:
                return "inf"
            return {"num": v.numerator, "den": v.denominator}

        return {
            "kind": "interval_mass",
            "version": 1,
            "adversary": self.adversary.value,
            "alphabet": list(self.alphabet),
            "positions": [str(x) for x in self._xs],
            "labels": list(self._dataset.labels),
            "tables": {
                name: [[[entry(v) for v in row] for row in plane] for plane in table]
                for name, table in self._tables.items()
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IntervalMassModel":
        def entry(v):
            if v == "inf":
                return math.inf
            return Fraction(v["num"], v["den"])

        try:
            dataset = LabeledDataset(
                [((x,), y) for x, y in zip(d["positions"], d["labels"])],
                alphabet=d["alphabet"],
                dimension=1,
            )
            n = len(dataset)
            tables = {}
            for name in TABLE_NAMES:
                table = np.full((n, n + 1, n), math.inf, dtype=object)
                for i, plane in enumerate(d["tables"][name]):
                    for j, row in enumerate(plane):
                        for k, v in enumerate(row):
                            table[i, j, k] = entry(v)
                tables[name] = table
        except (KeyError, TypeError, IndexError) as e:
            raise ModelFormatError(f"Malformed interval mass model: {e}")
        return cls(dataset, tables)


def train(dataset: LabeledDataset) -> IntervalMassModel:
    """Train the interval mass learner.

    Fills four tables of size n x (n + 1) x n with exact rational
    scores: for each side of a future test point and each label of the
    run next to it.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import interval_mass
    >>> model = interval_mass.train(LabeledDataset([(1, "+")]))
    >>> model.dp_left_pos[0, 0, 0]
    Fraction(1, 2)
    """
    dataset.require_1d()
    dataset.require_binary()
    if len(dataset) == 0:
        raise ValueError("Cannot train on an empty dataset.")
    ordered = dataset.sorted()
    labels = [ordered.alphabet.index(y) for y in ordered.labels]
    n = len(labels)
    left_pos, left_neg = _fill_tables(labels, n)
    right_pos, right_neg = _fill_tables(labels[::-1], n)
    tables = {
        "dp_left_pos": left_pos,
        "dp_left_neg": left_neg,
        "dp_right_pos": right_pos,
        "dp_right_neg": right_neg,
    }
    return IntervalMassModel(ordered, tables)


def certify(model: IntervalMassModel, x_test, budget: int) -> Certificate:
    """Certify the prediction at `x_test` against `budget` label flips.

    The test point either opens a run of its own, extends the run next
    to it on one side, or merges the runs on both sides when both have
    its label. Budgets above n behave as n.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import interval_mass
    >>> s = LabeledDataset([(1, "+"), (2, "+"), (3, "-")])
    >>> interval_mass.certify(interval_mass.train(s), 2.5, 0)
    Certificate('-', 2, 9/4)
    """
    return model.certify(x_test, budget)
