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

"""Distance metrics on exact coordinates."""

from enum import Enum
from fractions import Fraction
import math
from typing import Sequence, Union

Distance = Union[Fraction, float]


class Metric(Enum):
    """Supported metrics. See :func:`get_metric`."""

    L2 = "l2"
    L1 = "l1"
    LINF = "linf"


def _key_l2(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


def _key_l1(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((abs(x - y) for x, y in zip(a, b)), Fraction(0))


def _key_linf(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return max((abs(x - y) for x, y in zip(a, b)), default=Fraction(0))


# Exact, order-preserving keys. The L2 key is the squared distance.
METRICS = {
    Metric.L2: _key_l2,
    Metric.L1: _key_l1,
    Metric.LINF: _key_linf,
}


def get_metric(metric: Union[str, Metric]) -> Metric:
    """Return the metric named `metric`, one of "l2", "l1" or "linf".

    Examples
    --------
    >>> get_metric("l1")
    <Metric.L1: 'l1'>
    """
    if isinstance(metric, Metric):
        return metric
    try:
        return Metric(str(metric).lower())
    except ValueError:
        raise ValueError(
            f"'{metric}' must be one of {[m.value for m in Metric]}."
        )


def distance_key(
    a: Sequence[Fraction], b: Sequence[Fraction], metric: Union[str, Metric]
) -> Fraction:
    """Exact key which orders pairs of points as their distances do."""
    if len(a) != len(b):
        raise ValueError(
            f"Points of dimension {len(a)} and {len(b)} cannot be compared."
        )
    return METRICS[get_metric(metric)](a, b)


def key_to_distance(
    key: Union[Fraction, float], metric: Union[str, Metric]
) -> Distance:
    """Convert a key from :func:`distance_key` to the distance.

    Infinite keys are returned unchanged. L2 distances are exact when
    the squared distance is the square of a rational, otherwise a float.
    """
    if isinstance(key, float) and math.isinf(key):
        return key
    if get_metric(metric) is Metric.L2:
        return exact_sqrt(key)
    return key


def distance(
    a: Sequence[Fraction], b: Sequence[Fraction], metric: Union[str, Metric]
) -> Distance:
    return key_to_distance(distance_key(a, b, metric), metric)


def exact_sqrt(q: Fraction) -> Distance:
    """Square root of a nonnegative rational, exact when possible.

    Examples
    --------
    >>> exact_sqrt(Fraction(9, 4))
    Fraction(3, 2)
    >>> exact_sqrt(Fraction(2))
    1.4142135623730951
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"Cannot take the square root of {q}.")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return math.sqrt(float(q))
