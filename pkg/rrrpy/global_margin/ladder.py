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

"""Optimal robustly-reliable learner for the global margin of binary
data, the half distance between the closest pair of points with
different labels.

Removing at most b points to clear all conflicting pairs closer than r
is a vertex cover problem in the bipartite graph of such pairs, which by
König's theorem is decided by a maximum matching. Training builds these
graphs and matchings for every candidate radius, and queries reuse them.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
import hashlib
import json
import math
from typing import Dict, Hashable, List, Optional, Sequence, Set, Tuple, Union
import warnings

from rrrpy.core import (
    AdversaryKind,
    AlphabetUnsupportedError,
    BudgetExceedsTrainError,
    Certificate,
    Complexity,
    DimensionMismatchError,
    LabeledDataset,
    Metric,
    ModelFormatError,
    as_exact,
    as_point,
    certificate_from_complexities,
    distance_key,
    get_metric,
    key_to_distance,
)
from rrrpy.global_margin.matching import BipartiteGraph, Matching

Key = Union[Fraction, float]


@dataclass(frozen=True)
class ClassificationGraph:
    """Bipartite graph joining points of different labels closer than
    `radius`, with a maximum matching.

    Vertex indices are dataset indices. Every edge and matched pair is
    (positive point, negative point).
    """

    radius: Key
    positives: Tuple[int, ...]
    negatives: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    matching: Tuple[Tuple[int, int], ...]

    @property
    def matching_size(self) -> int:
        return len(self.matching)

    def to_matching(self) -> Matching:
        """The matching on a local graph: positives on the left and
        negatives on the right, in the order of :attr:`positives` and
        :attr:`negatives`.
        """
        left = {u: i for i, u in enumerate(self.positives)}
        right = {v: i for i, v in enumerate(self.negatives)}
        graph = BipartiteGraph(
            len(left), len(right), [(left[u], right[v]) for u, v in self.edges]
        )
        return Matching(graph, [(left[u], right[v]) for u, v in self.matching])

    def minimum_vertex_cover(self) -> Set[int]:
        """Dataset indices of a smallest set of points whose removal
        leaves no edge.
        """
        left, right = self.to_matching().minimum_vertex_cover()
        return {self.positives[i] for i in left} | {self.negatives[i] for i in right}


class GraphLadder:
    """Classification graphs at increasing radii.

    The radii are 0, the distinct distances between points of different
    labels and +∞. Edges require a distance strictly below the radius,
    so the graph at a radius holds every pair closer than it. The ladder
    stops before the first radius whose matching exceeds `b_max`.

    Use :func:`train` to create a ladder.
    """

    adversary = AdversaryKind.ADDITION
    # Certificates vary continuously with the test point
    gap_constant = False

    def __init__(
        self,
        dataset: LabeledDataset,
        metric: Union[str, Metric],
        b_max: int,
        keys: Sequence[Key],
        edges: Sequence[Tuple[int, int]],
        n_edges: Sequence[int],
        matchings: Sequence[Sequence[Tuple[int, int]]],
        truncated: bool,
    ):
        self._dataset = dataset
        self._metric = get_metric(metric)
        self._b_max = b_max
        self._keys = tuple(keys)
        self._edges = tuple(tuple(e) for e in edges)
        self._n_edges = tuple(n_edges)
        self._matchings = tuple(tuple(tuple(p) for p in m) for m in matchings)
        self._truncated = truncated
        pos = dataset.alphabet[0]
        self._positives = tuple(i for i, p in enumerate(dataset) if p.label == pos)
        self._negatives = tuple(i for i, p in enumerate(dataset) if p.label != pos)
        if not (len(self._keys) == len(self._n_edges) == len(self._matchings)):
            raise ModelFormatError("Ladder rungs are inconsistent.")

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__}, n: {len(self._dataset)}, rungs: "
            f"{len(self._keys)}, b_max: {self._b_max}, metric: "
            f"{self._metric.value}>"
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
    def b_max(self) -> int:
        return self._b_max

    @property
    def truncated(self) -> bool:
        """Whether rungs were dropped because their matching exceeded
        `b_max`.
        """
        return self._truncated

    @property
    def radii(self) -> Tuple[Key, ...]:
        return tuple(key_to_distance(k, self._metric) for k in self._keys)

    @property
    def matching_sizes(self) -> Tuple[int, ...]:
        return tuple(len(m) for m in self._matchings)

    def graph(self, rung: int) -> ClassificationGraph:
        return ClassificationGraph(
            radius=key_to_distance(self._keys[rung], self._metric),
            positives=self._positives,
            negatives=self._negatives,
            edges=self._edges[: self._n_edges[rung]],
            matching=self._matchings[rung],
        )

    @property
    def graphs(self) -> Tuple[ClassificationGraph, ...]:
        return tuple(self.graph(k) for k in range(len(self._keys)))

    def fingerprint(self) -> str:
        """SHA-256 of the serialized ladder."""
        text = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def _infeasible(
        self, key: Key, label: Hashable, conflicts: Sequence[Tuple[Key, int]], budget: int
    ) -> bool:
        """Whether clearing all conflicts at distance at most `key` needs
        more than `budget` removals when the test point has `label`.
        """
        rung = bisect_right(self._keys, key)
        if rung == len(self._keys):
            # Beyond the ladder, the matching already exceeds b_max
            return True
        neighbors = [i for k, i in conflicts if k <= key]
        if len(neighbors) > budget:
            return True
        matching = self.graph(rung).to_matching()
        if label == self.alphabet[0]:
            side = {v: i for i, v in enumerate(self._negatives)}
        else:
            side = {u: i for i, u in enumerate(self._positives)}
            matching = matching.transposed()
        # Each copy of the test point is a pendant vertex forcing its
        # neighbor into the cover
        for i in neighbors:
            copy = matching.graph.add_left_vertex([side[i]])
            matching.augment_from(copy)
        return matching.size > budget

    def max_radius(self, x_test, label: Hashable, budget: int) -> Key:
        """Largest radius r such that removing at most `budget` points
        leaves no pair of different labels closer than r, with `x_test`
        labeled `label`. Returned as a distance, +∞ if unbounded.
        """
        x = as_point(x_test)
        if len(x) != self._dataset.dimension:
            raise DimensionMismatchError(
                f"Test point has dimension {len(x)}, data has dimension "
                f"{self._dataset.dimension}."
            )
        conflicts = sorted(
            (distance_key(p.coordinates, x, self._metric), i)
            for i, p in enumerate(self._dataset)
            if p.label != label
        )
        candidates = sorted(
            {Fraction(0)}
            | {k for k in self._keys if not isinstance(k, float)}
            | {k for k, _ in conflicts}
        )
        lo, hi = 0, len(candidates)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._infeasible(candidates[mid], label, conflicts, budget):
                hi = mid
            else:
                lo = mid + 1
        if lo == len(candidates):
            return math.inf
        return key_to_distance(candidates[lo], self._metric)

    def certify(self, x_test, budget: int) -> Certificate:
        """See :func:`certify`."""
        if budget < 0:
            raise ValueError(f"Budget must be nonnegative, not {budget}.")
        if budget > self._b_max:
            raise BudgetExceedsTrainError(
                f"Budget {budget} exceeds the budget {self._b_max} the ladder "
                "was trained for."
            )
        complexities = {
            y: Complexity.from_margin(self.max_radius(x_test, y, budget), numerator=2)
            for y in self.alphabet
        }
        return certificate_from_complexities(complexities, self.alphabet)

    def to_dict(self) -> dict:
        def key_str(k):
            return "inf" if isinstance(k, float) else str(k)

        def radius_str(r):
            if isinstance(r, float):
                return "inf" if math.isinf(r) else repr(r)
            return str(r)

        return {
            "kind": "global_margin",
            "version": 1,
            "adversary": self.adversary.value,
            "metric": self._metric.value,
            "b_max": self._b_max,
            "truncated": self._truncated,
            "alphabet": list(self.alphabet),
            "dimension": self._dataset.dimension,
            "points": [
                {"x": [str(c) for c in p.coordinates], "label": p.label}
                for p in self._dataset
            ],
            "radii": [radius_str(r) for r in self.radii],
            "keys": [key_str(k) for k in self._keys],
            "graphs": [
                {
                    "edges": [list(e) for e in self._edges[: self._n_edges[k]]],
                    "matching": [list(p) for p in self._matchings[k]],
                }
                for k in range(len(self._keys))
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GraphLadder":
        try:
            dataset = LabeledDataset(
                [(tuple(p["x"]), p["label"]) for p in d["points"]],
                alphabet=d["alphabet"],
                dimension=d["dimension"],
            )
            keys = [math.inf if k == "inf" else as_exact(k) for k in d["keys"]]
            graphs = d["graphs"]
            edges = [tuple(e) for e in graphs[-1]["edges"]] if graphs else []
            n_edges = [len(g["edges"]) for g in graphs]
            for g in graphs:
                if [tuple(e) for e in g["edges"]] != edges[: len(g["edges"])]:
                    raise ModelFormatError("Ladder edges are not nested.")
            matchings = [[tuple(p) for p in g["matching"]] for g in graphs]
            return cls(
                dataset,
                d["metric"],
                d["b_max"],
                keys,
                edges,
                n_edges,
                matchings,
                d["truncated"],
            )
        except (KeyError, TypeError, IndexError) as e:
            raise ModelFormatError(f"Malformed global margin model: {e}")


def train(
    dataset: LabeledDataset,
    b_max: Optional[int] = None,
    metric: Union[str, Metric] = "l2",
) -> GraphLadder:
    """Build the ladder of classification graphs.

    Edges are added in order of increasing distance and the previous
    maximum matching is extended by augmenting paths, so the matching
    grows by at most one per added edge.

    Parameters
    ----------
    dataset
        Training set with a binary alphabet, any dimension.
    b_max
        Largest budget queries will use. Default is n.
    metric
        "l2" (default), "l1" or "linf".

    Returns
    -------
    GraphLadder

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import global_margin
    >>> s = LabeledDataset([(0, "+"), (1, "-"), (3, "+")])
    >>> global_margin.train(s, b_max=1).matching_sizes
    (0, 0, 1, 1)
    """
    if len(dataset.alphabet) > 2:
        raise AlphabetUnsupportedError(
            f"The global margin learner supports two labels, got "
            f"{len(dataset.alphabet)}. Optimal certification with three or "
            "more labels is NP-hard."
        )
    if len(dataset) == 0:
        raise ValueError("Cannot train on an empty dataset.")
    n = len(dataset)
    b_max = n if b_max is None else b_max
    if b_max < 0:
        raise ValueError(f"b_max must be nonnegative, not {b_max}.")
    metric = get_metric(metric)

    pos = dataset.alphabet[0]
    positives = [i for i, p in enumerate(dataset) if p.label == pos]
    negatives = [i for i, p in enumerate(dataset) if p.label != pos]
    pairs = sorted(
        (distance_key(dataset[u].coordinates, dataset[v].coordinates, metric), ui, vi)
        for ui, u in enumerate(positives)
        for vi, v in enumerate(negatives)
    )
    thresholds = [Fraction(0)] + sorted({k for k, _, _ in pairs if k > 0}) + [math.inf]

    graph = BipartiteGraph(len(positives), len(negatives))
    matching = Matching(graph)
    keys, n_edges, matchings, edges = [], [], [], []
    truncated = False
    added = 0
    for threshold in thresholds:
        while added < len(pairs) and pairs[added][0] < threshold:
            _, ui, vi = pairs[added]
            graph.add_edge(ui, vi)
            edges.append((positives[ui], negatives[vi]))
            added += 1
        matching.maximize()
        if matching.size > b_max:
            truncated = True
            warnings.warn(
                f"Ladder truncated at radius "
                f"{key_to_distance(threshold, metric)}: the matching "
                f"exceeds b_max = {b_max}."
            )
            break
        keys.append(threshold)
        n_edges.append(added)
        matchings.append(
            sorted((positives[u], negatives[v]) for u, v in matching.pairs)
        )
    return GraphLadder(
        dataset, metric, b_max, keys, edges, n_edges, matchings, truncated
    )


def certify(ladder: GraphLadder, x_test, budget: int) -> Certificate:
    """Certify the prediction at `x_test` against `budget` added points.

    For each label a binary search over candidate radii finds the
    largest radius at which the graph, extended by one copy of the test
    point per conflicting neighbor, has a matching of at most `budget`.
    The complexity is 2 over that radius.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import global_margin
    >>> s = LabeledDataset([(0, "+"), (10, "-")])
    >>> global_margin.certify(global_margin.train(s, b_max=0), 4, 0)
    Certificate('+', 1/3, 1/2)
    """
    return ladder.certify(x_test, budget)
