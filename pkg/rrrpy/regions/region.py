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

"""Regions of the real line where a learner is robustly reliable."""

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from rrrpy.core import (
    Complexity,
    LabeledDataset,
    NotGapConstantError,
    StepClassifier,
    as_exact,
)

Endpoint = Union[Fraction, float]


def _endpoint(value) -> Endpoint:
    if isinstance(value, float) and math.isinf(value):
        return value
    return as_exact(value)


class Region:
    """A finite union of disjoint half-open intervals [low, high).

    Intervals are sorted and normalized on construction: empty intervals
    are dropped and overlapping or touching intervals are merged. End
    pieces may be unbounded.

    Examples
    --------
    >>> r = Region([(0, 1), (1, 2), (5, 6)])
    >>> r.intervals
    ((Fraction(0, 1), Fraction(2, 1)), (Fraction(5, 1), Fraction(6, 1)))
    >>> 1.5 in r
    True
    """

    def __init__(self, intervals: Iterable[Tuple] = ()):
        pieces = sorted(
            (_endpoint(low), _endpoint(high))
            for low, high in intervals
            if _endpoint(low) < _endpoint(high)
        )
        merged: List[List[Endpoint]] = []
        for low, high in pieces:
            if merged and low <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], high)
            else:
                merged.append([low, high])
        self._intervals = tuple((low, high) for low, high in merged)

    @classmethod
    def everything(cls) -> "Region":
        return cls([(-math.inf, math.inf)])

    @property
    def intervals(self) -> Tuple[Tuple[Endpoint, Endpoint], ...]:
        return self._intervals

    @property
    def is_empty(self) -> bool:
        return len(self._intervals) == 0

    def __contains__(self, x) -> bool:
        x = as_exact(x)
        return any(low <= x < high for low, high in self._intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return self._intervals == other._intervals

    __hash__ = None

    def __repr__(self) -> str:
        pieces = ", ".join(f"[{low}, {high})" for low, high in self._intervals)
        return f"{self.__class__.__name__}({pieces})"

    def normalized(self) -> "Region":
        return Region(self._intervals)

    def mass(self, distribution) -> Fraction:
        """Probability of the region under `distribution`."""
        return distribution.mass(self)

    def mass_uniform(self, low, high) -> Fraction:
        """Exact probability of the region under the uniform distribution
        on [low, high).
        """
        return Uniform(low, high).mass(self)

    def to_dict(self) -> dict:
        def text(v):
            if isinstance(v, float):
                return "inf" if v > 0 else "-inf"
            return str(v)

        return {"intervals": [[text(lo), text(hi)] for lo, hi in self._intervals]}


@dataclass(frozen=True)
class Uniform:
    """Uniform distribution on [low, high)."""

    low: Fraction
    high: Fraction

    def __post_init__(self):
        object.__setattr__(self, "low", as_exact(self.low))
        object.__setattr__(self, "high", as_exact(self.high))
        if not self.low < self.high:
            raise ValueError(f"Need low < high, got {self.low} and {self.high}.")

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(float(self.low), float(self.high), size)

    def mass(self, region: Region) -> Fraction:
        total = Fraction(0)
        for low, high in region.intervals:
            overlap = min(high, self.high) - max(low, self.low)
            if overlap > 0:
                total += overlap
        return total / (self.high - self.low)


class SampleDistribution:
    """Empirical distribution of a list of points."""

    def __init__(self, samples: Sequence):
        if len(samples) == 0:
            raise ValueError("Need at least one sample.")
        self.samples = np.asarray(samples, dtype=np.float64)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.choice(self.samples, size=size, replace=True)

    def mass(self, region: Region) -> Fraction:
        inside = sum(float(x) in region for x in self.samples)
        return Fraction(inside, len(self.samples))


class PiecewiseTarget(StepClassifier):
    """Target on the real line whose label alternates at each threshold.

    Parameters
    ----------
    thresholds
        Strictly increasing thresholds.
    leftmost
        Label left of the first threshold.
    alphabet
        The two labels.
    """

    def __init__(
        self,
        thresholds: Sequence,
        leftmost: Hashable = "+",
        alphabet: Sequence[Hashable] = ("+", "-"),
    ):
        if len(alphabet) != 2 or leftmost not in alphabet:
            raise ValueError(f"Leftmost label {leftmost} not in {alphabet}.")
        other = alphabet[1] if leftmost == alphabet[0] else alphabet[0]
        labels = [leftmost if i % 2 == 0 else other for i in range(len(thresholds) + 1)]
        super().__init__(thresholds, labels)
        self.alphabet = tuple(alphabet)

    def sample(
        self, rng: np.random.Generator, size: int, distribution=None
    ) -> LabeledDataset:
        """Draw `size` i.i.d. points labeled by the target."""
        distribution = distribution or Uniform(0, 1)
        xs = distribution.sample(rng, size)
        return LabeledDataset(
            [((float(x),), self(float(x))) for x in xs],
            alphabet=self.alphabet,
            dimension=1,
        )


def gap_probes(positions: Sequence[Fraction]) -> List[Tuple[Endpoint, Endpoint, Fraction]]:
    """Gaps of sorted distinct coordinates as (low, high, probe).

    Gap i is [x_(i-1), x_i), with unbounded end pieces probed one unit
    beyond the extreme coordinates.
    """
    if len(positions) == 0:
        return [(-math.inf, math.inf, Fraction(0))]
    gaps = [(-math.inf, positions[0], positions[0] - 1)]
    for a, b in zip(positions[:-1], positions[1:]):
        gaps.append((a, b, (a + b) / 2))
    gaps.append((positions[-1], math.inf, positions[-1] + 1))
    return gaps


def empirical_region(
    learner, budget: int, complexity: Union[int, Fraction, Complexity]
) -> Region:
    """Region where a trained 1-D learner is reliable at a complexity.

    Each gap between consecutive training coordinates is probed once and
    kept when its certificate satisfies ``c_low <= c < c_high``. The
    region is exact off the training coordinates. A training coordinate
    is attributed to the gap on its right, so its membership may differ
    from the certificate at the coordinate itself. The coordinates are
    finitely many and carry no mass under :class:`Uniform`, so region
    masses are exact.

    Parameters
    ----------
    learner
        Trained model with a `certify` method whose certificates depend
        only on the gap of the test point.
    budget
        Adversary budget.
    complexity
        Complexity level c.

    Returns
    -------
    Region

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> from rrrpy import alternations
    >>> s = LabeledDataset([(1, "+"), (2, "-"), (3, "+")])
    >>> empirical_region(alternations.train(s), 0, 2)
    Region([-inf, 1), [3, inf))
    """
    if not getattr(learner, "gap_constant", False):
        raise NotGapConstantError(
            f"Certificates of {type(learner).__name__} vary within gaps between "
            "training points, so the region cannot be computed by probing gaps."
        )
    positions = sorted({p.x for p in learner.dataset})
    c = Complexity(complexity)
    return Region(
        (low, high)
        for low, high, probe in gap_probes(positions)
        if learner.certify(probe, budget).covers(c)
    )


def montecarlo_region_mass(
    learner,
    budget: int,
    complexity: Union[int, Fraction, Complexity],
    distribution: Optional[Union[Uniform, SampleDistribution]] = None,
    trials: int = 10000,
    seed: Optional[int] = None,
) -> float:
    """Estimate the probability that a random test point is in the
    reliable region.

    Parameters
    ----------
    learner
        Trained model with a `certify` method. Any dimension, though
        distributions here are one-dimensional.
    budget
        Adversary budget.
    complexity
        Complexity level c.
    distribution
        :class:`Uniform` (default on [0, 1)) or
        :class:`SampleDistribution`.
    trials
        Number of test points drawn.
    seed
        Seed of :func:`numpy.random.default_rng`.

    Returns
    -------
    float
        Fraction of test points with ``c_low <= c < c_high``.
    """
    if trials < 1:
        raise ValueError(f"Need at least one trial, got {trials}.")
    distribution = distribution or Uniform(0, 1)
    rng = np.random.default_rng(seed)
    xs = distribution.sample(rng, trials)
    if getattr(learner, "gap_constant", False):
        region = empirical_region(learner, budget, complexity)
        inside = sum(float(x) in region for x in xs)
    else:
        c = Complexity(complexity)
        inside = sum(learner.certify(float(x), budget).covers(c) for x in xs)
    return inside / trials
