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

"""Read and write support for trained models in versioned JSON files.

A model file is a JSON object with a ``kind`` naming the learner, a
``version`` and the learner's payload. Exact values are stored as
strings or numerator/denominator pairs.
"""

import json
from typing import Optional

from rrrpy.alternations import AlternationModel
from rrrpy.core import ModelFormatError
from rrrpy.global_margin import GraphLadder
from rrrpy.interval_mass import IntervalMassModel
from rrrpy.local_margin import MarginModel


# Plugin characteristics
# ----------------------
format_name = "json_model"
description = "Read/write support for trained rrrpy models in JSON files."
full_support = True
# Recognised file extension
file_extensions = ["json"]
default_extension = 0
# Writing capabilities
writes = True
writes_type = (AlternationModel, MarginModel, GraphLadder, IntervalMassModel)

MODEL_KINDS = {
    "alternations": AlternationModel,
    "local_margin": MarginModel,
    "global_margin": GraphLadder,
    "interval_mass": IntervalMassModel,
}
SUPPORTED_VERSIONS = (1,)


def dict_to_model(d: dict):
    """Create a model from its dictionary, checking kind and version."""
    if not isinstance(d, dict):
        raise ModelFormatError("A model file must hold a JSON object.")
    kind = d.get("kind")
    if kind not in MODEL_KINDS:
        raise ModelFormatError(
            f"Unknown model kind '{kind}', options are {list(MODEL_KINDS)}."
        )
    version = d.get("version")
    if version not in SUPPORTED_VERSIONS:
        raise ModelFormatError(
            f"Model version {version} is not supported, only "
            f"{list(SUPPORTED_VERSIONS)}."
        )
    model_class = MODEL_KINDS[kind]
    # Files written before the adversary was stored have no entry
    adversary = d.get("adversary", model_class.adversary.value)
    if adversary != model_class.adversary.value:
        raise ModelFormatError(
            f"A {kind} model is certified against the "
            f"'{model_class.adversary.value}' adversary, not '{adversary}'."
        )
    return model_class.from_dict(d)


def file_reader(filename: str, **kwargs):
    """Read a trained model from a JSON file.

    Parameters
    ----------
    filename
        Full file path of the JSON file.
    kwargs :
        Keyword arguments passed to :func:`json.load`.

    Returns
    -------
    AlternationModel, MarginModel, GraphLadder or IntervalMassModel
    """
    with open(filename) as f:
        try:
            d = json.load(f, **kwargs)
        except json.JSONDecodeError as e:
            raise ModelFormatError(f"Could not read '{filename}': {e}")
    return dict_to_model(d)


def file_writer(filename: str, model, indent: Optional[int] = None):
    """Write a trained model to a JSON file.

    Parameters
    ----------
    filename
        Full file path of the JSON file.
    model
        Model with a ``to_dict`` method.
    indent
        Indentation passed to :func:`json.dump`. Default is compact.
    """
    with open(filename, "w") as f:
        json.dump(model.to_dict(), f, indent=indent)
