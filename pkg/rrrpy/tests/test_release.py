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

import rrrpy
from rrrpy import release


def source_files():
    package_dir = os.path.dirname(rrrpy.__file__)
    for root, _, files in os.walk(package_dir):
        for name in sorted(files):
            if name.endswith(".py"):
                yield os.path.join(root, name)


class TestRelease:
    def test_version(self):
        assert rrrpy.__version__ == release.version
        assert release.license == "GPLv3+"

    def test_license_header(self):
        missing = []
        for path in source_files():
            with open(path, encoding="utf-8") as f:
                head = f.read(1000)
            if "GNU General Public License" not in head:
                missing.append(path)
        assert missing == []
