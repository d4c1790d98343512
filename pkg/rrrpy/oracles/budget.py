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

"""Caps on the size of exhaustive enumerations."""

from dataclasses import dataclass
import math

from rrrpy.core import InstanceTooLargeError


@dataclass(frozen=True)
class OracleBudget:
    """Limits for exhaustive oracles.

    Parameters
    ----------
    max_n
        Largest number of training points.
    max_b
        Largest budget that is enumerated. Larger budgets are accepted
        only when they are at least n, which makes every subset
        reachable anyway.
    max_work
        Ceiling on the number of enumerated configurations, the number
        of subsets of at most b points times the work per subset.
    """

    max_n: int = 12
    max_b: int = 4
    max_work: int = 10 ** 7

    def check(self, n: int, b: int, per_subset: int = 1) -> int:
        """Return the budget to enumerate, raising
        :class:`~rrrpy.core.InstanceTooLargeError` when the enumeration
        exceeds the caps.
        """
        b = min(b, n)
        if n > self.max_n:
            raise InstanceTooLargeError(
                f"{n} points exceed the oracle limit of {self.max_n}."
            )
        if b > self.max_b and b < n:
            raise InstanceTooLargeError(
                f"Budget {b} exceeds the oracle limit of {self.max_b}."
            )
        work = sum(math.comb(n, j) for j in range(b + 1)) * max(per_subset, 1)
        if work > self.max_work:
            raise InstanceTooLargeError(
                f"Enumeration of {work} configurations exceeds the limit of "
                f"{self.max_work}."
            )
        return b

    def check_patterns(self, n_patterns: int):
        if n_patterns > self.max_work:
            raise InstanceTooLargeError(
                f"Enumeration of {n_patterns} patterns exceeds the limit of "
                f"{self.max_work}."
            )


DEFAULT_BUDGET = OracleBudget()
