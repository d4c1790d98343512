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

from fractions import Fraction
import os

import pytest

from rrrpy.core import (
    AlphabetUnsupportedError,
    DimensionMismatchError,
    LabeledDataset,
)
from rrrpy.io.plugins import csv_dataset


def write(tmp_dir, text, name="data.csv"):
    file_path = os.path.join(tmp_dir, name)
    with open(file_path, "w") as f:
        f.write(text)
    return file_path


class TestCsvDataset:
    def test_read(self, tmp_dir):
        file_path = write(tmp_dir, "x1,x2,label\n0.1,1/3,+\n2, 5 ,-\n\n")
        s = csv_dataset.file_reader(file_path)
        assert s.dimension == 2
        assert s.alphabet == ("+", "-")
        assert s[0].coordinates == (Fraction(1, 10), Fraction(1, 3))
        assert s[1].coordinates == (2, 5)

    def test_write_read(self, tmp_dir, random_dataset, rng):
        s = random_dataset(rng, 20, dimension=3, alphabet=("a", "b", "c"))
        file_path = os.path.join(tmp_dir, "data.csv")
        csv_dataset.file_writer(file_path, s)
        with open(file_path) as f:
            assert f.readline().strip() == "x1,x2,x3,label"
        assert csv_dataset.file_reader(file_path, alphabet=s.alphabet) == s

    def test_exact_coordinates_written(self, tmp_dir):
        s = LabeledDataset([(Fraction(1, 3), "+"), (0.1, "-")])
        file_path = os.path.join(tmp_dir, "data.csv")
        csv_dataset.file_writer(file_path, s)
        with open(file_path) as f:
            assert f.read().split() == ["x1,label", "1/3,+", "1/10,-"]

    @pytest.mark.parametrize(
        "text, error, match",
        [
            ("", ValueError, "no header"),
            ("x,label\n1,+\n", ValueError, "expected 'x1, ..., xd, label'"),
            ("label\n+\n", ValueError, "expected"),
            ("x1,label\n1,2,+\n", DimensionMismatchError, "Line 2 .* 3 fields"),
            ("x1,label\nabc,+\n", ValueError, "Could not read"),
            ("x1,label\n1,a\n2,a\n", AlphabetUnsupportedError, "at least two"),
        ],
    )
    def test_malformed_raises(self, tmp_dir, text, error, match):
        file_path = write(tmp_dir, text)
        with pytest.raises(error, match=match):
            csv_dataset.file_reader(file_path, alphabet=None)
