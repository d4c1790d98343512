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

"""Subcommands of the ``rrrpy`` program.

Exit codes: 0 on success, 2 on unreadable input, 3 on an unsupported
measure, dimension or alphabet, 4 on a budget above the one a model was
trained for and 5 on an internal error.
"""

import argparse
from fractions import Fraction
import json
import sys
from typing import Optional, Sequence

from rrrpy import alternations, global_margin, interval_mass, local_margin
from rrrpy import oracles
from rrrpy.core import (
    AlphabetUnsupportedError,
    BudgetExceedsTrainError,
    DimensionMismatchError,
    InstanceTooLargeError,
    NotGapConstantError,
    as_point,
)
from rrrpy.global_margin import embed_k_regular
from rrrpy.io._io import load, save
from rrrpy.io.certificate import certificate_to_dict, certificate_to_json
from rrrpy.regions import empirical_region, nasc_experiment

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 5

MEASURES = ("alternations", "local_margin", "global_margin", "interval_mass")

# First match wins, so subclasses go before ValueError
_EXIT_CODES = (
    (BudgetExceedsTrainError, EXIT_BUDGET),
    (AlphabetUnsupportedError, EXIT_UNSUPPORTED),
    (DimensionMismatchError, EXIT_UNSUPPORTED),
    (NotGapConstantError, EXIT_UNSUPPORTED),
    (InstanceTooLargeError, EXIT_UNSUPPORTED),
    (ValueError, EXIT_PARSE),
    (OSError, EXIT_PARSE),
)


def _parse_point(text: str):
    try:
        return as_point([t.strip() for t in text.split(",")])
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Could not read point '{text}': {e}")


def _parse_complexity(text: str):
    if text.strip().lower() == "inf":
        return float("inf")
    return Fraction(text.strip())


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def _kind(model) -> str:
    return model.to_dict()["kind"]


def _certify_with_oracle(model, x, budget: int):
    kind = _kind(model)
    dataset = model.dataset
    if kind == "alternations":
        return oracles.brute_alternations(dataset, x, budget)
    elif kind == "local_margin":
        return oracles.brute_local_margin(dataset, x, budget, metric=model.metric)
    elif kind == "global_margin":
        return oracles.brute_global_margin(dataset, x, budget, metric=model.metric)
    else:
        return oracles.brute_interval_mass(dataset, x, budget)


def cmd_train(args) -> int:
    dataset = load(args.input)
    if args.measure == "alternations":
        model = alternations.train(dataset, b_max=args.b_max)
    elif args.measure == "local_margin":
        model = local_margin.train(dataset, metric=args.metric)
    elif args.measure == "global_margin":
        model = global_margin.train(dataset, b_max=args.b_max, metric=args.metric)
    else:
        model = interval_mass.train(dataset)
    save(args.output, model, overwrite=True)
    return EXIT_OK


def cmd_certify(args) -> int:
    model = load(args.model)
    x = _parse_point(args.point)
    certificate = model.certify(x, args.budget)
    if not args.oracle:
        print(certificate_to_json(certificate))
        return EXIT_OK
    reference = _certify_with_oracle(model, x, args.budget)
    _emit(
        {
            "certificate": certificate_to_dict(certificate),
            "oracle": certificate_to_dict(reference),
            "match": certificate == reference,
        }
    )
    return EXIT_OK


def _table_rows(model, x, budget_max: int):
    if _kind(model) == "alternations":
        return alternations.certify_all_budgets(model, x, budget_max)
    return [model.certify(x, b) for b in range(budget_max + 1)]


def cmd_table(args) -> int:
    model = load(args.model)
    x = _parse_point(args.point)
    if args.budget_max < 0:
        raise ValueError(f"Budget must be nonnegative, not {args.budget_max}.")
    rows = _table_rows(model, x, args.budget_max)
    if args.format == "json":
        _emit(
            [
                dict(b=b, abstains=c.abstains, **certificate_to_dict(c))
                for b, c in enumerate(rows)
            ]
        )
        return EXIT_OK
    print(f"{'b':>4}  {'label':<6} (c_low, c_high)")
    for b, c in enumerate(rows):
        if c.abstains:
            print(f"{b:>4}  {'Any':<6}")
        else:
            print(f"{b:>4}  {str(c.label):<6} [{c.c_low}, {c.c_high})")
    return EXIT_OK


def cmd_region(args) -> int:
    model = load(args.model)
    region = empirical_region(model, args.budget, _parse_complexity(args.complexity))
    _emit(region.to_dict())
    return EXIT_OK


def cmd_experiment_nasc(args) -> int:
    report = nasc_experiment(
        c=args.c,
        b=args.b,
        epsilon=args.epsilon,
        delta=args.delta,
        trials=args.trials,
        seed=args.seed,
        m=args.m,
        show_progressbar=args.progressbar,
    )
    print(report.to_json_lines())
    if args.csv is not None:
        with open(args.csv, "w") as f:
            f.write(report.to_csv())
    return EXIT_OK


def cmd_reduce(args) -> int:
    graph = load(args.graph)
    dataset = embed_k_regular(graph, args.k, edge_order=graph.graph.get("edge_order"))
    save(args.output, dataset, overwrite=True)
    _emit(
        {"points": len(dataset), "dimension": dataset.dimension, "output": args.output}
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrrpy",
        description="Robustly-reliable certificates under data poisoning.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a learner on a CSV dataset")
    p.add_argument("--measure", choices=MEASURES, required=True)
    p.add_argument("--input", required=True, help="CSV with x1..xd,label")
    p.add_argument("--output", required=True, help="model JSON file")
    p.add_argument("--b-max", type=int, default=None, dest="b_max")
    p.add_argument("--metric", choices=("l2", "l1", "linf"), default="l2")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("certify", help="certify the prediction at a point")
    p.add_argument("--model", required=True)
    p.add_argument("--point", required=True, help="comma separated coordinates")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also compute the certificate by exhaustive search",
    )
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("table", help="certificates for budgets 0 to B")
    p.add_argument("--model", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--budget-max", type=int, required=True, dest="budget_max")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("region", help="reliable region of a 1-D model")
    p.add_argument("--model", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--complexity", required=True)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser(
        "experiment-nasc", help="sample-complexity experiment for alternations"
    )
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--m", type=int, default=None, help="override the sample size")
    p.add_argument("--csv", default=None, help="also write per-trial masses")
    p.add_argument("--progressbar", action="store_true")
    p.set_defaults(func=cmd_experiment_nasc)

    p = sub.add_parser("reduce", help="embed a k-regular graph as a dataset")
    p.add_argument("--graph", required=True, help="edge list file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", required=True, help="CSV file")
    p.set_defaults(func=cmd_reduce)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the ``rrrpy`` program and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as e:
        for error, code in _EXIT_CODES:
            if isinstance(e, error):
                print(f"rrrpy {args.command}: {e}", file=sys.stderr)
                return code
        print(f"rrrpy {args.command}: internal error: {e!r}", file=sys.stderr)
        return EXIT_INTERNAL
