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

"""Read and write support for labeled datasets in CSV files.

The header row names the coordinates ``x1, ..., xd`` followed by
``label``. Coordinates are read as exact decimals or fractions.
"""

import csv
from typing import Hashable, Optional, Sequence

from rrrpy.core import (
    AlphabetUnsupportedError,
    DimensionMismatchError,
    LabeledDataset,
)


# Plugin characteristics
# ----------------------
format_name = "csv_dataset"
description = "Read/write support for labeled points in CSV files."
full_support = True
# Recognised file extension
file_extensions = ["csv"]
default_extension = 0
# Writing capabilities
writes = True
writes_type = LabeledDataset


def file_reader(
    filename: str, alphabet: Optional[Sequence[Hashable]] = None, **kwargs
) -> LabeledDataset:
    """Read a labeled dataset from a CSV file.

    Parameters
    ----------
    filename
        Full file path of the CSV file.
    alphabet
        Ordered label alphabet. If not given, it is inferred as in
        :class:`~rrrpy.core.LabeledDataset`.
    kwargs :
        Keyword arguments passed to :func:`csv.reader`.

    Returns
    -------
    LabeledDataset
    """
    with open(filename, newline="") as f:
        rows = [row for row in csv.reader(f, **kwargs) if row]
    if len(rows) == 0:
        raise ValueError(f"'{filename}' has no header row.")
    header = [h.strip() for h in rows[0]]
    dimension = len(header) - 1
    expected = [f"x{i + 1}" for i in range(dimension)] + ["label"]
    if dimension < 1 or header != expected:
        raise ValueError(
            f"'{filename}' has header {header}, expected 'x1, ..., xd, label'."
        )

    points = []
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != dimension + 1:
            raise DimensionMismatchError(
                f"Line {line} of '{filename}' has {len(row)} fields, expected "
                f"{dimension + 1}."
            )
        points.append((tuple(row[:-1]), row[-1].strip()))
    try:
        return LabeledDataset(points, alphabet=alphabet, dimension=dimension)
    except (AlphabetUnsupportedError, DimensionMismatchError):
        raise
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Could not read '{filename}': {e}") from e


def file_writer(filename: str, dataset: LabeledDataset):
    """Write a labeled dataset to a CSV file with exact coordinates.

    Parameters
    ----------
    filename
        Full file path of the CSV file.
    dataset
        Dataset to write.
    """
    with open(filename, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([f"x{i + 1}" for i in range(dataset.dimension)] + ["label"])
        for p in dataset:
            writer.writerow([str(c) for c in p.coordinates] + [p.label])
