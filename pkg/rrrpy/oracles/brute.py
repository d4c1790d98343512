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

"""Exhaustive reference certificates for every complexity measure.

These functions enumerate corruptions directly from the definitions and
share nothing with the fast learners except the core data model.
"""

from bisect import bisect_right
from fractions import Fraction
from itertools import combinations, product
import math
from typing import Hashable, List, Optional, Sequence, Tuple, Union

from rrrpy.core import (
    Certificate,
    Complexity,
    LabeledDataset,
    LabeledPoint,
    Metric,
    as_scalar,
    as_point,
    certificate_from_complexities,
    distance_key,
    group_by_coordinate,
    key_to_distance,
)
from rrrpy.oracles.budget import DEFAULT_BUDGET, OracleBudget


def _subsets(n: int, b: int):
    for k in range(b + 1):
        yield from combinations(range(n), k)


def _alternations(points: Sequence[LabeledPoint]) -> float:
    """Alternations of the sorted labels, inf if a coordinate carries
    two labels.
    """
    by_x = {}
    for p in points:
        by_x.setdefault(p.x, set()).add(p.label)
    if any(len(labels) > 1 for labels in by_x.values()):
        return math.inf
    labels = [next(iter(by_x[x])) for x in sorted(by_x)]
    return sum(a != b for a, b in zip(labels[:-1], labels[1:]))


def brute_alternations(
    dataset: LabeledDataset,
    x_test,
    b: int,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> Certificate:
    """Alternations certificate by removing every subset of at most b
    training points.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> s = LabeledDataset([(1, "+"), (2, "-"), (3, "+")])
    >>> brute_alternations(s, 4, 0)
    Certificate('+', 2, 3)
    """
    dataset.require_1d()
    dataset.require_binary()
    b = budget.check(len(dataset), b, per_subset=len(dataset) + 1)
    x = as_point(x_test)
    best = {y: math.inf for y in dataset.alphabet}
    for removed in _subsets(len(dataset), b):
        survivors = list(dataset.without(removed))
        for y in dataset.alphabet:
            c = _alternations(survivors + [LabeledPoint(x, y)])
            best[y] = min(best[y], c)
    return certificate_from_complexities(
        {y: Complexity(c if math.isinf(c) else int(c)) for y, c in best.items()},
        dataset.alphabet,
    )


def brute_local_margin(
    dataset: LabeledDataset,
    x_test,
    b: int,
    metric: Union[str, Metric] = "l2",
) -> Certificate:
    """Local margin certificate from a full sort of the distances to
    the points of every other label.
    """
    x = as_point(x_test)
    complexities = {}
    for y in dataset.alphabet:
        keys = sorted(
            distance_key(p.coordinates, x, metric) for p in dataset if p.label != y
        )
        radius = key_to_distance(keys[b], metric) if len(keys) > b else math.inf
        complexities[y] = Complexity.from_margin(radius)
    return certificate_from_complexities(complexities, dataset.alphabet)


def _closest_conflict(points: Sequence[LabeledPoint], metric) -> Union[Fraction, float]:
    best = math.inf
    for p, q in combinations(points, 2):
        if p.label != q.label:
            best = min(best, distance_key(p.coordinates, q.coordinates, metric))
    return best


def brute_global_margin(
    dataset: LabeledDataset,
    x_test,
    b: int,
    metric: Union[str, Metric] = "l2",
    budget: OracleBudget = DEFAULT_BUDGET,
) -> Certificate:
    """Global margin certificate by removing every subset of at most b
    training points.

    The margin of a labeled set is half the smallest distance between
    points of different labels, so its complexity is 2 over that
    distance. Any alphabet size is supported.
    """
    n = len(dataset)
    b = budget.check(n, b, per_subset=(n + 1) ** 2)
    x = as_point(x_test)
    best = {y: Fraction(-1) for y in dataset.alphabet}
    for removed in _subsets(n, b):
        survivors = list(dataset.without(removed))
        for y in dataset.alphabet:
            key = _closest_conflict(survivors + [LabeledPoint(x, y)], metric)
            best[y] = max(best[y], key)
    complexities = {
        y: Complexity.from_margin(key_to_distance(key, metric), numerator=2)
        for y, key in best.items()
    }
    return certificate_from_complexities(complexities, dataset.alphabet)


def _interval_score(labels: Sequence[Hashable], n: int) -> Fraction:
    """Sum of n / (1 + count) over maximal runs of equal labels."""
    total, count = Fraction(0), 0
    for i, y in enumerate(labels):
        count += 1
        if i == len(labels) - 1 or labels[i + 1] != y:
            total += Fraction(n, 1 + count)
            count = 0
    return total


def brute_interval_mass(
    dataset: LabeledDataset,
    x_test,
    b: int,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> Certificate:
    """Interval mass certificate by flipping every subset of at most b
    training labels.

    The test point is placed after all training points with coordinate
    at most `x_test`. It joins the count of its run, while n stays the
    number of training points.
    """
    dataset.require_1d()
    dataset.require_binary()
    n = len(dataset)
    if n == 0:
        return certificate_from_complexities(
            {y: Complexity(0) for y in dataset.alphabet}, dataset.alphabet
        )
    b = budget.check(n, b, per_subset=n + 1)
    ordered = dataset.sorted()
    insert = bisect_right([p.x for p in ordered], as_scalar(x_test))
    labels = list(ordered.labels)
    best = {y: math.inf for y in dataset.alphabet}
    for flipped in _subsets(n, b):
        current = list(labels)
        for i in flipped:
            current[i] = dataset.other_label(current[i])
        for y in dataset.alphabet:
            score = _interval_score(current[:insert] + [y] + current[insert:], n)
            best[y] = min(best[y], score)
    return certificate_from_complexities(
        {y: Complexity(c) for y, c in best.items()}, dataset.alphabet
    )


def brute_agreement_region(
    dataset: LabeledDataset,
    b: int,
    c: Union[int, Fraction, Complexity],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> List[Optional[Hashable]]:
    """Agreement region of all classifiers with at most `c`
    alternations and at most `b` mistakes, per gap of a 1-D dataset.

    Every labeling of the gaps and distinct coordinates is enumerated.

    Returns
    -------
    list
        For each of the gaps left of, between and right of the distinct
        training coordinates, the label all such classifiers agree on,
        or None if they disagree or none exists.
    """
    dataset.require_1d()
    dataset.require_binary()
    c = Complexity(c)
    positions, counts = group_by_coordinate(dataset)
    n_cells = 2 * len(positions) + 1
    budget.check_patterns(2 ** n_cells * n_cells)
    alphabet = dataset.alphabet
    seen = [set() for _ in range(len(positions) + 1)]
    for cells in product(range(len(alphabet)), repeat=n_cells):
        alternations = sum(u != v for u, v in zip(cells[:-1], cells[1:]))
        if Complexity(alternations) > c:
            continue
        mistakes = sum(
            int(counts[g].sum() - counts[g, cells[2 * g + 1]])
            for g in range(len(positions))
        )
        if mistakes > b:
            continue
        for g in range(len(positions) + 1):
            seen[g].add(cells[2 * g])
    return [alphabet[next(iter(s))] if len(s) == 1 else None for s in seen]


def brute_minimum_vertex_cover(edges: Sequence[Tuple[Hashable, Hashable]]) -> int:
    """Size of a minimum vertex cover by trying vertex subsets in order
    of size.
    """
    vertices = sorted({v for e in edges for v in e}, key=str)
    for k in range(len(vertices) + 1):
        for cover in combinations(vertices, k):
            chosen = set(cover)
            if all(u in chosen or v in chosen for u, v in edges):
                return k
    return len(vertices)
