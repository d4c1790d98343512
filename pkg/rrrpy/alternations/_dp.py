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

"""Dynamic programming kernels for the number of alternations."""

from numba import njit
import numpy as np


@njit
def fill_tables(
    pos_mistakes: np.ndarray, neg_mistakes: np.ndarray, n_cols: int
):
    """Fill the prefix tables of minimum alternations.

    Parameters
    ----------
    pos_mistakes
        Number of points at each sorted coordinate that are mistakes
        when the coordinate is labeled positive.
    neg_mistakes
        The same for a negative label.
    n_cols
        Number of mistake counts kept, 0 to ``n_cols - 1``.

    Returns
    -------
    dp_pos, dp_neg : numpy.ndarray
        Entry [i, j] is the minimum number of alternations of a labeling
        of the first i + 1 coordinates with exactly j mistakes whose
        last coordinate is labeled positive (negative). Infeasible
        entries are ``inf``.
    """
    n_groups = pos_mistakes.size
    dp_pos = np.full((n_groups, n_cols), np.inf)
    dp_neg = np.full((n_groups, n_cols), np.inf)
    if n_groups == 0:
        return dp_pos, dp_neg

    if pos_mistakes[0] < n_cols:
        dp_pos[0, pos_mistakes[0]] = 0
    if neg_mistakes[0] < n_cols:
        dp_neg[0, neg_mistakes[0]] = 0

    for i in range(1, n_groups):
        mp = pos_mistakes[i]
        mn = neg_mistakes[i]
        for j in range(n_cols):
            if j >= mp:
                dp_pos[i, j] = min(dp_pos[i - 1, j - mp], dp_neg[i - 1, j - mp] + 1)
            if j >= mn:
                dp_neg[i, j] = min(dp_neg[i - 1, j - mn], dp_pos[i - 1, j - mn] + 1)

    return dp_pos, dp_neg


@njit
def prefix_min(table: np.ndarray) -> np.ndarray:
    """Running minimum along the mistake axis, giving "at most j"
    semantics from "exactly j".
    """
    out = table.copy()
    for i in range(out.shape[0]):
        for j in range(1, out.shape[1]):
            if out[i, j - 1] < out[i, j]:
                out[i, j] = out[i, j - 1]
    return out
