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

"""(min,+)-convolution of cost sequences."""

from typing import Callable, Optional, Sequence, Union

import numpy as np

from rrrpy.core._errors import LengthMismatchError, NotMonotoneError

NON_INCREASING = "non-increasing"
NON_DECREASING = "non-decreasing"


class CostSequence(np.ndarray):
    """A sequence of nonnegative integer costs or +∞.

    Stored as a 1-D float array so that +∞ is :data:`numpy.inf`.

    Parameters
    ----------
    values
        Costs.
    monotone
        Declared monotonicity, "non-increasing", "non-decreasing" or
        None. Declared monotonicity is validated.

    Examples
    --------
    >>> a = CostSequence([3, 1, 0], monotone="non-increasing")
    >>> a.tolist()
    [3, 1, 0]
    """

    def __new__(
        cls,
        values: Union[Sequence, np.ndarray],
        monotone: Optional[str] = None,
    ):
        arr = np.asarray(values, dtype=np.float64).reshape(-1)
        if np.any(np.isnan(arr)) or np.any(arr < 0):
            raise ValueError("Costs must be nonnegative integers or +inf.")
        finite = arr[np.isfinite(arr)]
        if not np.all(finite == np.round(finite)):
            raise ValueError("Finite costs must be integers.")
        if monotone not in (None, NON_INCREASING, NON_DECREASING):
            raise ValueError(
                f"'{monotone}' must be None, '{NON_INCREASING}' or "
                f"'{NON_DECREASING}'."
            )
        obj = arr.view(cls)
        obj.monotone = monotone
        obj.validate()
        return obj

    def __array_finalize__(self, obj):
        if obj is None:
            return
        self.monotone = getattr(obj, "monotone", None)

    def validate(self):
        """Raise :class:`NotMonotoneError` if the sequence violates its
        declared monotonicity.
        """
        # inf - inf is nan and compares False
        with np.errstate(invalid="ignore"):
            diff = np.diff(np.asarray(self))
            if self.monotone == NON_INCREASING:
                bad = bool(np.any(diff > 0))
            elif self.monotone == NON_DECREASING:
                bad = bool(np.any(diff < 0))
            else:
                bad = False
        if bad:
            raise NotMonotoneError(f"Sequence {self.tolist()} is not {self.monotone}.")

    def tolist(self) -> list:
        """Costs as Python integers, with +∞ as :data:`math.inf`."""
        return [int(v) if np.isfinite(v) else float(v) for v in np.asarray(self)]


Convolver = Callable[[CostSequence, CostSequence], CostSequence]


def _as_pair(a, b, monotone=None):
    if not isinstance(a, CostSequence) or monotone is not None:
        a = CostSequence(a, monotone=monotone or getattr(a, "monotone", None))
    if not isinstance(b, CostSequence) or monotone is not None:
        b = CostSequence(b, monotone=monotone or getattr(b, "monotone", None))
    if a.size != b.size:
        raise LengthMismatchError(
            f"Sequences must have equal length, got {a.size} and {b.size}."
        )
    if a.size == 0:
        raise LengthMismatchError("Sequences must be nonempty.")
    return a, b


def minplus_naive(a, b) -> CostSequence:
    """Quadratic (min,+)-convolution.

    ``c[k] = min(a[i] + b[k - i] for i in range(k + 1))``

    Examples
    --------
    >>> minplus_naive([3, 1, 0], [2, 1, 0]).tolist()
    [5, 3, 2]
    """
    a, b = _as_pair(a, b)
    a, b = np.asarray(a), np.asarray(b)
    n = a.size
    c = np.empty(n, dtype=np.float64)
    for k in range(n):
        c[k] = np.min(a[: k + 1] + b[k::-1])
    return CostSequence(c)


def minplus_monotone_decreasing(
    a, b, convolver: Convolver = minplus_naive
) -> CostSequence:
    """(min,+)-convolution of two non-increasing sequences through a
    convolver for non-decreasing sequences.

    Both sequences are reversed and padded with n - 1 infinities, which
    makes them non-decreasing. Output k of the original convolution is
    output 2n - 2 - k of the padded one.

    Parameters
    ----------
    a, b
        Non-increasing sequences of equal length n.
    convolver
        Any (min,+) convolver for non-decreasing sequences. Default is
        :func:`minplus_naive`.

    Returns
    -------
    CostSequence
        Equal to ``minplus_naive(a, b)``, non-increasing.
    """
    a, b = _as_pair(a, b, monotone=NON_INCREASING)
    n = a.size
    pad = np.full(n - 1, np.inf)
    a_up = CostSequence(np.concatenate([np.asarray(a)[::-1], pad]), NON_DECREASING)
    b_up = CostSequence(np.concatenate([np.asarray(b)[::-1], pad]), NON_DECREASING)
    c_up = np.asarray(convolver(a_up, b_up))
    return CostSequence(c_up[n - 1 :][::-1], monotone=NON_INCREASING)
