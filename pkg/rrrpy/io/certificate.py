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

"""JSON representation of complexities and certificates.

Exact complexities are written as ``{"num": p, "den": q}``, infinite
ones as ``"inf"`` and inexact finite ones as floats.
"""

from fractions import Fraction
import json
from typing import Union

from rrrpy.core import Certificate, Complexity, ModelFormatError


def complexity_to_json(c: Complexity) -> Union[dict, str, float]:
    if c.is_infinite:
        return "inf"
    if c.is_exact:
        return {"num": c.value.numerator, "den": c.value.denominator}
    return float(c.value)


def complexity_from_json(value) -> Complexity:
    if value == "inf":
        return Complexity.infinity()
    if isinstance(value, dict):
        try:
            return Complexity(Fraction(value["num"], value["den"]))
        except (KeyError, TypeError, ZeroDivisionError) as e:
            raise ModelFormatError(f"Malformed complexity {value}: {e}")
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return Complexity(float(value))
    raise ModelFormatError(f"Malformed complexity {value}.")


def certificate_to_dict(certificate: Certificate) -> dict:
    """Dictionary with the label and both complexity bounds.

    Examples
    --------
    >>> from rrrpy.core import Certificate
    >>> certificate_to_dict(Certificate("+", 2, 3))
    {'label': '+', 'c_low': {'num': 2, 'den': 1}, 'c_high': {'num': 3, 'den': 1}}
    """
    return {
        "label": certificate.label,
        "c_low": complexity_to_json(certificate.c_low),
        "c_high": complexity_to_json(certificate.c_high),
    }


def certificate_from_dict(d: dict) -> Certificate:
    try:
        return Certificate(
            d["label"], complexity_from_json(d["c_low"]), complexity_from_json(d["c_high"])
        )
    except (KeyError, TypeError) as e:
        raise ModelFormatError(f"Malformed certificate: {e}")


def certificate_to_json(certificate: Certificate) -> str:
    """Compact JSON text of a certificate."""
    return json.dumps(certificate_to_dict(certificate), separators=(",", ":"))
