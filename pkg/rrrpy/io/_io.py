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

import os
from typing import Optional
import warnings

from rrrpy.io.plugins import csv_dataset, edgelist, json_model


plugins = [
    csv_dataset,
    edgelist,
    json_model,
]

default_write_ext = set()
for plugin in plugins:
    if plugin.writes:
        default_write_ext.add(plugin.file_extensions[plugin.default_extension])


def _plugin_for(filename: str):
    extension = os.path.splitext(filename)[1][1:].lower()
    for plugin in plugins:
        if extension in plugin.file_extensions:
            return plugin
    return None


def load(filename: str, **kwargs):
    """Load a dataset, a trained model or a graph from a supported file
    format.

    Parameters
    ----------
    filename
        Name of file to load. The extension selects the reader: "csv"
        for datasets, "json" for models and "edgelist"/"edges" for
        graphs.
    kwargs :
        Keyword arguments passed to the corresponding reader.
        See their individual documentation for available options.

    Returns
    -------
    LabeledDataset, model or networkx.Graph

    Examples
    --------
    >>> import rrrpy
    >>> model = rrrpy.load("model.json")
    >>> model
    <AlternationModel, n: 3, coordinates: 3, b_max: None>
    """
    if not os.path.isfile(filename):
        raise IOError(f"No filename matches '{filename}'.")
    reader = _plugin_for(filename)
    if reader is None:
        raise IOError(
            f"Could not read '{filename}'. Supported file extensions are: "
            f"{sorted(e for p in plugins for e in p.file_extensions)}"
        )
    return reader.file_reader(filename, **kwargs)


def save(filename: str, obj, overwrite: Optional[bool] = None, **kwargs):
    """Write a dataset, a trained model or a graph to a file in a
    supported format.

    Parameters
    ----------
    filename
        File path including name of new file. The extension selects the
        writer.
    obj
        Object to write.
    overwrite
        Whether to overwrite the file if it already exists. If None
        (default), an existing file is overwritten with a warning.
    **kwargs :
        Keyword arguments passed to the writer.
    """
    writer = _plugin_for(filename)
    if writer is None or not writer.writes:
        raise ValueError(
            f"'{filename}' does not correspond to any supported format. "
            f"Supported file extensions are: {sorted(default_write_ext)}"
        )
    if not isinstance(obj, writer.writes_type):
        raise ValueError(
            f"The {writer.format_name} format cannot write a "
            f"{type(obj).__name__}."
        )

    is_file = os.path.isfile(filename)
    if overwrite is None:
        if is_file:
            warnings.warn(f"Overwriting '{filename}'.")
        write = True
    elif overwrite is True or (overwrite is False and not is_file):
        write = True
    elif overwrite is False and is_file:
        write = False
    else:
        raise ValueError(
            "overwrite parameter can only be None, True or False, and "
            f"not {overwrite}"
        )

    if write:
        directory = os.path.dirname(os.path.abspath(filename))
        os.makedirs(directory, exist_ok=True)
        writer.file_writer(filename, obj, **kwargs)
