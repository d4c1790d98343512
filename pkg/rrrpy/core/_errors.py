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

"""Exceptions raised on invalid input.

All errors derive from :class:`ValueError` so that callers which only
care about bad input can catch that.
"""


class DimensionMismatchError(ValueError):
    """Points of unexpected dimension, or a 1-D method given d > 1."""


class AlphabetUnsupportedError(ValueError):
    """More labels than a method supports."""


class LengthMismatchError(ValueError):
    pass


class NotMonotoneError(ValueError):
    pass


class BudgetExceedsTrainError(ValueError):
    """Query budget larger than the budget a model was trained for."""


class InstanceTooLargeError(ValueError):
    """Exhaustive enumeration would exceed the configured work ceiling."""


class NotGapConstantError(ValueError):
    """Certificates of the learner vary between consecutive training
    coordinates, so regions cannot be computed by probing gaps.
    """


class BadTargetError(ValueError):
    pass


class NotRegularError(ValueError):
    pass


class BadColoringError(ValueError):
    pass


class ModelFormatError(ValueError):
    """A model file is malformed or of an unknown kind or version."""
