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

# Import order must not be changed
from rrrpy import core
from rrrpy import minplus
from rrrpy import alternations
from rrrpy import local_margin
from rrrpy import global_margin
from rrrpy import interval_mass
from rrrpy import oracles
from rrrpy import regions
from rrrpy.io._io import load, save

from rrrpy import release

__version__ = release.version

__all__ = [
    "alternations",
    "core",
    "global_margin",
    "interval_mass",
    "load",
    "local_margin",
    "minplus",
    "oracles",
    "regions",
    "save",
]
