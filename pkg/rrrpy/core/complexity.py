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

"""Extended nonnegative complexity values and certificates."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
import math
from typing import Hashable, Mapping, Optional, Sequence, Union

# Relative tolerance used when at least one operand is inexact
REL_TOL = 1e-9


@total_ordering
class Complexity:
    """An extended nonnegative complexity value.

    Finite values are stored as :class:`fractions.Fraction` whenever
    they are known exactly, otherwise as a float. The distinguished
    value +∞ is stored as :data:`math.inf`.

    Two exact values are compared exactly. If either operand is an
    inexact float, values within a relative tolerance of 1e-9 compare
    equal.

    Parameters
    ----------
    value
        Nonnegative integer, fraction, float or another complexity.
        Integers are stored exactly.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from rrrpy.core import Complexity
    >>> Complexity(Fraction(1, 4)) < Complexity(1)
    True
    >>> Complexity.infinity().is_infinite
    True
    """

    __slots__ = ("_value",)

    def __init__(self, value: Union[int, float, Fraction, "Complexity"] = 0):
        if isinstance(value, Complexity):
            value = value._value
        elif isinstance(value, bool):
            raise TypeError("A complexity cannot be a boolean.")
        elif isinstance(value, int):
            value = Fraction(value)
        elif isinstance(value, Fraction):
            pass
        else:
            value = float(value)
            if math.isnan(value):
                raise ValueError("A complexity cannot be NaN.")
            if math.isinf(value):
                value = math.inf
        if value < 0:
            raise ValueError(f"A complexity must be nonnegative, not {value}.")
        self._value = value

    @classmethod
    def infinity(cls) -> "Complexity":
        return cls(math.inf)

    @classmethod
    def from_margin(
        cls, radius: Union[int, float, Fraction], numerator: int = 1
    ) -> "Complexity":
        """Return ``numerator / radius``, with 0 for an infinite radius
        and +∞ for a zero radius.
        """
        if isinstance(radius, float) and math.isinf(radius):
            return cls(0)
        if radius == 0:
            return cls.infinity()
        if isinstance(radius, float):
            return cls(numerator / radius)
        return cls(Fraction(numerator) / Fraction(radius))

    @property
    def value(self) -> Union[Fraction, float]:
        return self._value

    @property
    def is_infinite(self) -> bool:
        return isinstance(self._value, float) and math.isinf(self._value)

    @property
    def is_exact(self) -> bool:
        """Whether the value is a finite rational known exactly."""
        return isinstance(self._value, Fraction)

    def __float__(self) -> float:
        return float(self._value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complexity):
            try:
                other = Complexity(other)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._value, other._value
        if self.is_exact and other.is_exact:
            return a == b
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return math.isclose(float(a), float(b), rel_tol=REL_TOL)

    def __lt__(self, other) -> bool:
        if not isinstance(other, Complexity):
            other = Complexity(other)
        if self == other:
            return False
        if self.is_exact and other.is_exact:
            return self._value < other._value
        return float(self._value) < float(other._value)

    # Equality is tolerant for inexact values
    __hash__ = None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self})"

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return str(self._value)


@dataclass(frozen=True)
class Certificate:
    """A prediction with the complexity interval it is guaranteed for.

    The learner predicts `label` for every target of complexity ``c``
    with ``c_low <= c < c_high``. The certificate abstains when
    ``c_high <= c_low``.
    """

    label: Hashable
    c_low: Complexity
    c_high: Complexity

    def __post_init__(self):
        object.__setattr__(self, "c_low", Complexity(self.c_low))
        object.__setattr__(self, "c_high", Complexity(self.c_high))

    @property
    def abstains(self) -> bool:
        return is_abstention(self)

    def covers(self, c: Union[int, float, Fraction, Complexity]) -> bool:
        """Whether ``c_low <= c < c_high``."""
        c = Complexity(c)
        return self.c_low <= c < self.c_high

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.label!r}, {self.c_low}, "
            f"{self.c_high})"
        )


def is_abstention(certificate: Certificate) -> bool:
    """Return whether a certificate abstains, i.e. ``c_high <= c_low``."""
    return certificate.c_high <= certificate.c_low


def certificate_from_complexities(
    complexities: Mapping[Hashable, Complexity],
    alphabet: Optional[Sequence[Hashable]] = None,
) -> Certificate:
    """Build a certificate from per-label minimum complexities.

    Parameters
    ----------
    complexities
        Minimum complexity of a classifier predicting each label at the
        test point.
    alphabet
        Label order used to break ties. If not given, the mapping's
        order is used.

    Returns
    -------
    Certificate
        The label with the smallest complexity (first in alphabet order
        among ties), the smallest and the second smallest complexity.
    """
    if alphabet is None:
        alphabet = list(complexities.keys())
    if len(alphabet) < 2:
        raise ValueError("At least two labels are needed for a certificate.")
    # Python's sort is stable, so ties keep alphabet order
    ranked = sorted(alphabet, key=lambda y: Complexity(complexities[y]))
    return Certificate(
        label=ranked[0],
        c_low=complexities[ranked[0]],
        c_high=complexities[ranked[1]],
    )
