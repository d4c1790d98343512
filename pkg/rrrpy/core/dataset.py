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

"""Labeled points and datasets with exact coordinates."""

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
import math
from numbers import Integral, Real
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from rrrpy.core._errors import AlphabetUnsupportedError, DimensionMismatchError

Coordinate = Union[int, float, str, Fraction, Decimal]

# Default label tokens of a binary dataset, positive first
BINARY_ALPHABET = ("+", "-")


def as_exact(value: Coordinate) -> Fraction:
    """Convert a coordinate to an exact rational.

    Floats are read through their shortest decimal representation, so
    ``0.1`` becomes ``1/10`` and not the nearest binary fraction.

    Examples
    --------
    >>> as_exact(0.4)
    Fraction(2, 5)
    >>> as_exact("2.5")
    Fraction(5, 2)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("A coordinate cannot be a boolean.")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"Coordinates must be finite, not {value}.")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Real):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"Coordinates must be finite, not {value}.")
        return Fraction(repr(value))
    raise TypeError(f"Cannot read a coordinate from {value!r}.")


def as_point(coordinates) -> Tuple[Fraction, ...]:
    """Convert a scalar or a sequence of coordinates to an exact tuple."""
    if isinstance(coordinates, (str, Real, Fraction, Decimal)):
        return (as_exact(coordinates),)
    return tuple(as_exact(c) for c in np.ravel(np.asarray(coordinates, object)))


def as_scalar(coordinates) -> Fraction:
    """Convert a scalar or a one-element sequence to an exact 1-D
    coordinate.

    Examples
    --------
    >>> as_scalar((Fraction(4),))
    Fraction(4, 1)
    """
    point = as_point(coordinates)
    if len(point) != 1:
        raise DimensionMismatchError(
            f"Test point has dimension {len(point)}, data has dimension 1."
        )
    return point[0]


@dataclass(frozen=True)
class LabeledPoint:
    """A point with exact coordinates and a label."""

    coordinates: Tuple[Fraction, ...]
    label: Hashable

    def __post_init__(self):
        object.__setattr__(self, "coordinates", as_point(self.coordinates))
        if len(self.coordinates) == 0:
            raise DimensionMismatchError("A point needs at least one coordinate.")

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    @property
    def x(self) -> Fraction:
        """The coordinate of a 1-D point."""
        return self.coordinates[0]


class LabeledDataset:
    """An immutable, ordered collection of labeled points.

    Parameters
    ----------
    points
        :class:`LabeledPoint` instances or ``(coordinates, label)``
        pairs.
    alphabet
        Ordered label alphabet. The order breaks ties between labels of
        equal complexity. If not given, the alphabet is ``("+", "-")``
        when the labels are a subset of these, else the sorted distinct
        labels.
    dimension
        Dimension of all points. Required for an empty dataset, else
        taken from the first point.

    Examples
    --------
    >>> from rrrpy.core import LabeledDataset
    >>> s = LabeledDataset([(1, "+"), (2, "-"), (3, "+")])
    >>> s.alphabet
    ('+', '-')
    >>> len(s)
    3
    """

    def __init__(
        self,
        points: Iterable[Union[LabeledPoint, Tuple]] = (),
        alphabet: Optional[Sequence[Hashable]] = None,
        dimension: Optional[int] = None,
    ):
        pts = []
        for p in points:
            if not isinstance(p, LabeledPoint):
                p = LabeledPoint(*p)
            pts.append(p)
        self._points = tuple(pts)

        if dimension is None:
            dimension = self._points[0].dimension if self._points else 1
        for p in self._points:
            if p.dimension != dimension:
                raise DimensionMismatchError(
                    f"All points must have dimension {dimension}, a point has "
                    f"dimension {p.dimension}."
                )
        self._dimension = int(dimension)

        labels = [p.label for p in self._points]
        if alphabet is None:
            distinct = set(labels)
            if distinct <= set(BINARY_ALPHABET):
                alphabet = BINARY_ALPHABET
            else:
                alphabet = sorted(distinct, key=str)
        alphabet = tuple(alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"Alphabet {alphabet} has repeated labels.")
        if len(alphabet) < 2:
            raise AlphabetUnsupportedError(
                f"An alphabet needs at least two labels, got {alphabet}. Pass "
                "the alphabet explicitly for datasets with one label."
            )
        unknown = set(labels) - set(alphabet)
        if unknown:
            raise ValueError(f"Labels {sorted(unknown, key=str)} not in alphabet.")
        self._alphabet = alphabet

    @classmethod
    def from_arrays(
        cls,
        coordinates,
        labels: Sequence[Hashable],
        alphabet: Optional[Sequence[Hashable]] = None,
    ) -> "LabeledDataset":
        """Create a dataset from an (n,) or (n, d) coordinate array and
        a sequence of n labels.
        """
        coordinates = np.asarray(coordinates, dtype=object)
        if coordinates.ndim == 1:
            coordinates = coordinates[:, np.newaxis]
        if len(coordinates) != len(labels):
            raise ValueError(
                f"Got {len(coordinates)} coordinates but {len(labels)} labels."
            )
        dimension = coordinates.shape[1] if coordinates.size else 1
        return cls(
            [LabeledPoint(tuple(c), y) for c, y in zip(coordinates, labels)],
            alphabet=alphabet,
            dimension=dimension,
        )

    @property
    def points(self) -> Tuple[LabeledPoint, ...]:
        return self._points

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def alphabet(self) -> Tuple[Hashable, ...]:
        return self._alphabet

    @property
    def labels(self) -> Tuple[Hashable, ...]:
        return tuple(p.label for p in self._points)

    @property
    def coordinates(self) -> np.ndarray:
        """Coordinates as an (n, d) float array."""
        return np.array(
            [[float(c) for c in p.coordinates] for p in self._points],
            dtype=np.float64,
        ).reshape((len(self), self.dimension))

    @property
    def is_binary(self) -> bool:
        return len(self._alphabet) == 2

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __getitem__(self, index: int) -> LabeledPoint:
        return self._points[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledDataset):
            return NotImplemented
        return (
            self._points == other._points
            and self._alphabet == other._alphabet
            and self._dimension == other._dimension
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__}, size: {len(self)}, dimension: "
            f"{self.dimension}, alphabet: {self.alphabet}>"
        )

    def other_label(self, label: Hashable) -> Hashable:
        """The label of a binary alphabet that is not `label`."""
        self.require_binary()
        return self._alphabet[1] if label == self._alphabet[0] else self._alphabet[0]

    def with_points(self, points: Iterable[Union[LabeledPoint, Tuple]]) -> "LabeledDataset":
        """Return a new dataset with `points` appended."""
        return LabeledDataset(
            self._points + tuple(points),
            alphabet=self._alphabet,
            dimension=self._dimension,
        )

    def without(self, indices: Iterable[int]) -> "LabeledDataset":
        """Return a new dataset with the points at `indices` removed."""
        drop = set(indices)
        return LabeledDataset(
            [p for i, p in enumerate(self._points) if i not in drop],
            alphabet=self._alphabet,
            dimension=self._dimension,
        )

    def relabeled(self, labels: Sequence[Hashable]) -> "LabeledDataset":
        """Return a new dataset with the same coordinates and new labels."""
        if len(labels) != len(self):
            raise ValueError(f"Need {len(self)} labels, got {len(labels)}.")
        return LabeledDataset(
            [LabeledPoint(p.coordinates, y) for p, y in zip(self._points, labels)],
            alphabet=self._alphabet,
            dimension=self._dimension,
        )

    def sorted(self) -> "LabeledDataset":
        """Return the 1-D dataset sorted by coordinate.

        The sort is stable, so points with equal coordinates keep their
        relative order.
        """
        self.require_1d()
        return LabeledDataset(
            sorted(self._points, key=lambda p: p.x),
            alphabet=self._alphabet,
            dimension=1,
        )

    def negated(self) -> "LabeledDataset":
        """Return the dataset with every coordinate multiplied by -1."""
        return LabeledDataset(
            [
                LabeledPoint(tuple(-c for c in p.coordinates), p.label)
                for p in self._points
            ],
            alphabet=self._alphabet,
            dimension=self._dimension,
        )

    def require_1d(self):
        if self._dimension != 1:
            raise DimensionMismatchError(
                f"Method requires 1-D data, but data has dimension "
                f"{self._dimension}."
            )

    def require_binary(self):
        if not self.is_binary:
            raise AlphabetUnsupportedError(
                f"Method requires a binary alphabet, but the alphabet has "
                f"{len(self._alphabet)} labels: {self._alphabet}."
            )


def group_by_coordinate(
    dataset: LabeledDataset,
) -> Tuple[List[Fraction], np.ndarray]:
    """Group a 1-D dataset by distinct coordinate.

    Returns
    -------
    positions
        Sorted distinct coordinates.
    counts
        Integer array of shape (n_positions, n_labels) with the number
        of points of each label at each coordinate, labels in alphabet
        order.
    """
    dataset.require_1d()
    positions = sorted({p.x for p in dataset})
    index = {x: i for i, x in enumerate(positions)}
    label_index = {y: i for i, y in enumerate(dataset.alphabet)}
    counts = np.zeros((len(positions), len(dataset.alphabet)), dtype=np.int64)
    for p in dataset:
        counts[index[p.x], label_index[p.label]] += 1
    return positions, counts
