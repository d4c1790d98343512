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

"""Sample-complexity experiment for the alternations learner.

With enough samples from a target of c alternations under the uniform
distribution on [0, 1], the reliable region at complexity c and budget b
covers at least 1 - epsilon of the mass with probability at least
1 - delta.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json
import math
from typing import List, Optional, Sequence

import dask
from dask.diagnostics import ProgressBar
import numpy as np
from scipy.stats import binomtest

from rrrpy import alternations
from rrrpy.core import BadTargetError, as_exact
from rrrpy.regions.region import PiecewiseTarget, Uniform, empirical_region


def sample_size(c: int, b: int, epsilon: float, delta: float) -> int:
    """Number of samples sufficient for the region to cover 1 - epsilon
    of the mass with probability 1 - delta.

    Examples
    --------
    >>> sample_size(2, 1, 0.1, 0.05)
    1563
    """
    if c < 1:
        raise ValueError(f"Need at least one alternation, got {c}.")
    if b < 0:
        raise ValueError(f"Budget must be nonnegative, not {b}.")
    if not (0 < epsilon < 1 and 0 < delta < 1):
        raise ValueError("epsilon and delta must be in (0, 1).")
    return math.ceil(2 * c * (2 * (b + 1) + 8 * math.log(2 * c / delta)) / epsilon)


def equally_spaced_thresholds(c: int) -> List[Fraction]:
    """Thresholds i / (c + 1) for i = 1, ..., c."""
    return [Fraction(i, c + 1) for i in range(1, c + 1)]


def check_target(thresholds: Sequence, epsilon: float):
    """Raise :class:`~rrrpy.core.BadTargetError` unless every threshold
    has at least epsilon / (2c) of uniform mass on [0, 1] on both sides,
    not shared with a neighboring threshold.
    """
    thresholds = [as_exact(t) for t in thresholds]
    c = len(thresholds)
    slack = as_exact(epsilon) / (2 * c)
    edges = [Fraction(0)] + thresholds + [Fraction(1)]
    for i, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        # Inner pieces are split between two thresholds
        needed = slack if i in (0, c) else 2 * slack
        if b - a < needed:
            raise BadTargetError(
                f"The piece [{a}, {b}) holds mass {b - a}, less than the "
                f"{needed} needed with {c} thresholds and epsilon {epsilon}."
            )


def _run_trial(
    target: PiecewiseTarget,
    m: int,
    b: int,
    c: int,
    seed: np.random.SeedSequence,
) -> Fraction:
    if m == 0:
        # Without data every certificate abstains
        return Fraction(0)
    rng = np.random.default_rng(seed)
    dataset = target.sample(rng, m, Uniform(0, 1))
    model = alternations.train(dataset, b_max=b)
    return empirical_region(model, b, c).mass_uniform(0, 1)


@dataclass
class NascReport:
    """Outcome of :func:`nasc_experiment`."""

    c: int
    b: int
    epsilon: float
    delta: float
    m: int
    thresholds: List[Fraction]
    masses: List[Fraction] = field(default_factory=list)
    confidence: float = 0.95

    @property
    def successes(self) -> List[bool]:
        return [mass >= 1 - as_exact(self.epsilon) for mass in self.masses]

    @property
    def success_fraction(self) -> float:
        return sum(self.successes) / len(self.masses)

    @property
    def pvalue(self) -> float:
        """One-sided binomial test of a success rate below 1 - delta."""
        result = binomtest(
            sum(self.successes),
            len(self.masses),
            p=1 - self.delta,
            alternative="less",
        )
        return float(result.pvalue)

    @property
    def accepted(self) -> bool:
        return self.pvalue >= 1 - self.confidence

    def summary(self) -> dict:
        return {
            "c": self.c,
            "b": self.b,
            "epsilon": self.epsilon,
            "delta": self.delta,
            "m": self.m,
            "thresholds": [str(t) for t in self.thresholds],
            "trials": len(self.masses),
            "success_fraction": self.success_fraction,
            "pvalue": self.pvalue,
            "accepted": self.accepted,
        }

    def to_json_lines(self) -> str:
        """One JSON object per trial followed by the summary."""
        lines = [
            json.dumps(
                {
                    "trial": i,
                    "mass": float(mass),
                    "mass_exact": str(mass),
                    "success": success,
                }
            )
            for i, (mass, success) in enumerate(zip(self.masses, self.successes))
        ]
        lines.append(json.dumps(self.summary()))
        return "\n".join(lines)

    def to_csv(self) -> str:
        rows = ["trial,mass,success"]
        for i, (mass, success) in enumerate(zip(self.masses, self.successes)):
            rows.append(f"{i},{float(mass)!r},{int(success)}")
        return "\n".join(rows) + "\n"


def nasc_experiment(
    c: int,
    b: int,
    epsilon: float,
    delta: float,
    trials: int = 200,
    seed: Optional[int] = None,
    m: Optional[int] = None,
    thresholds: Optional[Sequence] = None,
    leftmost="+",
    confidence: float = 0.95,
    show_progressbar: bool = False,
    scheduler: str = "threads",
) -> NascReport:
    """Run the sample-complexity experiment for the alternations
    learner.

    Each trial draws m points from the uniform distribution on [0, 1],
    labels them with a target of `c` alternations, trains the
    alternations learner and computes the exact mass of its reliable
    region at budget `b` and complexity `c`. A trial succeeds when the
    mass is at least 1 - `epsilon`.

    Parameters
    ----------
    c
        Number of alternations of the target.
    b
        Adversary budget.
    epsilon, delta
        Accuracy and confidence of the guarantee.
    trials
        Number of independent trials.
    seed
        Seed of the :class:`numpy.random.SeedSequence` each trial's
        stream is spawned from. Results do not depend on the schedule.
    m
        Sample size. Default is :func:`sample_size`. Override for
        debugging, e.g. with 0.
    thresholds
        Target thresholds in (0, 1). Default is equally spaced.
    leftmost
        Target label left of the first threshold.
    confidence
        Level of the one-sided binomial test in the report.
    show_progressbar
        Whether to show a :class:`dask.diagnostics.ProgressBar`.
    scheduler
        Dask scheduler running the trials.

    Returns
    -------
    NascReport
    """
    if trials < 1:
        raise ValueError(f"Need at least one trial, got {trials}.")
    if thresholds is None:
        thresholds = equally_spaced_thresholds(c)
    thresholds = [as_exact(t) for t in thresholds]
    if len(thresholds) != c:
        raise BadTargetError(f"Need {c} thresholds, got {len(thresholds)}.")
    n_samples = sample_size(c, b, epsilon, delta) if m is None else int(m)
    if n_samples < 0:
        raise ValueError(f"Sample size must be nonnegative, not {n_samples}.")
    check_target(thresholds, epsilon)
    target = PiecewiseTarget(thresholds, leftmost=leftmost)

    seeds = np.random.SeedSequence(seed).spawn(trials)
    tasks = [dask.delayed(_run_trial)(target, n_samples, b, c, s) for s in seeds]
    if show_progressbar:
        with ProgressBar():
            masses = dask.compute(*tasks, scheduler=scheduler)
    else:
        masses = dask.compute(*tasks, scheduler=scheduler)

    return NascReport(
        c=c,
        b=b,
        epsilon=epsilon,
        delta=delta,
        m=n_samples,
        thresholds=thresholds,
        masses=list(masses),
        confidence=confidence,
    )
