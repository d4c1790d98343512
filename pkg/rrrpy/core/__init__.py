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

"""Data model shared by all learners: datasets, complexities,
certificates, adversaries and the generic ECM-based learner.
"""

from rrrpy.core._errors import (
    AlphabetUnsupportedError,
    BadColoringError,
    BadTargetError,
    BudgetExceedsTrainError,
    DimensionMismatchError,
    InstanceTooLargeError,
    LengthMismatchError,
    ModelFormatError,
    NotGapConstantError,
    NotMonotoneError,
    NotRegularError,
)
from rrrpy.core.adversary import AdversaryKind, AdversaryModel
from rrrpy.core.classifiers import StepClassifier, labeling_to_step_classifier
from rrrpy.core.complexity import (
    Certificate,
    Complexity,
    certificate_from_complexities,
    is_abstention,
)
from rrrpy.core.dataset import (
    BINARY_ALPHABET,
    LabeledDataset,
    LabeledPoint,
    as_exact,
    as_point,
    as_scalar,
    group_by_coordinate,
)
from rrrpy.core.ecm import EcmOracle, certify_via_ecm, certify_via_ecm_classifier
from rrrpy.core.metrics import (
    METRICS,
    Metric,
    distance,
    distance_key,
    exact_sqrt,
    get_metric,
    key_to_distance,
)

__all__ = [
    "AdversaryKind",
    "AdversaryModel",
    "AlphabetUnsupportedError",
    "BINARY_ALPHABET",
    "BadColoringError",
    "BadTargetError",
    "BudgetExceedsTrainError",
    "Certificate",
    "Complexity",
    "DimensionMismatchError",
    "EcmOracle",
    "InstanceTooLargeError",
    "LabeledDataset",
    "LabeledPoint",
    "LengthMismatchError",
    "METRICS",
    "Metric",
    "ModelFormatError",
    "NotGapConstantError",
    "NotMonotoneError",
    "NotRegularError",
    "StepClassifier",
    "as_exact",
    "as_point",
    "as_scalar",
    "certificate_from_complexities",
    "certify_via_ecm",
    "certify_via_ecm_classifier",
    "distance",
    "distance_key",
    "exact_sqrt",
    "get_metric",
    "group_by_coordinate",
    "is_abstention",
    "key_to_distance",
    "labeling_to_step_classifier",
]
