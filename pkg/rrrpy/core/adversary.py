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

"""Poisoning adversaries and enumeration of the datasets they reach."""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence

from rrrpy.core.dataset import LabeledDataset, LabeledPoint


class AdversaryKind(Enum):
    """How an adversary may corrupt a clean training set."""

    ADDITION = "addition"
    LABEL_FLIP = "label_flip"


@dataclass(frozen=True)
class AdversaryModel:
    """An adversary of a given kind with a budget of b corruptions.

    With :attr:`AdversaryKind.ADDITION` the adversary adds at most b
    points to the clean set. With :attr:`AdversaryKind.LABEL_FLIP` it
    changes the labels of at most b points.
    """

    kind: AdversaryKind
    budget: int

    def __post_init__(self):
        object.__setattr__(self, "kind", AdversaryKind(self.kind))
        if self.budget < 0:
            raise ValueError(f"Budget must be nonnegative, not {self.budget}.")

    def corruptions(
        self,
        clean: LabeledDataset,
        candidates: Sequence[LabeledPoint] = (),
    ) -> Iterator[LabeledDataset]:
        """Enumerate every corrupted dataset the adversary can produce.

        Parameters
        ----------
        clean
            The clean training set.
        candidates
            Points the adversary may add. Only used by addition
            adversaries, which may add a candidate more than once.

        Yields
        ------
        LabeledDataset
            Each reachable dataset once per way of reaching it, starting
            with the clean set itself.
        """
        if self.kind is AdversaryKind.ADDITION:
            for k in range(self.budget + 1):
                for added in combinations_with_replacement(candidates, k):
                    yield clean.with_points(added)
        else:
            labels = clean.labels
            alphabet = clean.alphabet
            for k in range(min(self.budget, len(clean)) + 1):
                for idx in combinations(range(len(clean)), k):
                    choices = [
                        [y for y in alphabet if y != labels[i]] for i in idx
                    ]
                    for new in product(*choices):
                        flipped = list(labels)
                        for i, y in zip(idx, new):
                            flipped[i] = y
                        yield clean.relabeled(flipped)
