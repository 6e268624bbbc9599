# -*- coding: utf-8 -*-
"""
Convergence of the TVD estimate toward 1/4 for iid standard-normal data at f ≡ 0.

> tvdepth consistency --ns 50,200,1000 --seeds 100
"""
from __future__ import annotations

import csv
import sys

import click

from tvdepth.io import format_number
from tvdepth.simulation.bench import consistency_study


@click.command(name="consistency", short_help="empirical consistency of the TVD estimate")
@click.option("--ns", default="50,200,1000", show_default=True, help="comma separated sample sizes")
@click.option("--seeds", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--m", type=click.IntRange(min=2), default=50, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="base seed")
@click.option("--tolerance", type=click.FloatRange(min=0), default=0.01, show_default=True)
def click_consistency(ns: str, seeds: int, m: int, seed: int, tolerance: float) -> None:
    try:
        sizes = [int(part) for part in ns.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"`{ns}` is not a list of integers.", param_hint="--ns") from None
    if not sizes or min(sizes) < 2:
        raise click.BadParameter("Sample sizes must be at least 2.", param_hint="--ns")

    rows = consistency_study(sizes, seeds=seeds, m=m, base_seed=seed, tolerance=tolerance)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "seeds", "median_abs_error", "within_tolerance"])
    for row in rows:
        writer.writerow([row.n, row.seeds, format_number(row.median_abs_error), format_number(row.within_tolerance)])
