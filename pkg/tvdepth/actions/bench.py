# -*- coding: utf-8 -*-
"""
Monte-Carlo TPR / FPR table over the simulation models.

> tvdepth bench --models 1-7 --reps 200 --seed 7 --out table.csv
> tvdepth bench --models 4,6 --methods mbd_fbplot --out table.json --cache-dir ./.bench
"""
from __future__ import annotations

from typing import Optional

import click

from tvdepth import types as pt
from tvdepth.config import config
from tvdepth.config import get_detection_config
from tvdepth.io import write_bench_csv
from tvdepth.io import write_bench_json
from tvdepth.logging import create_logger
from tvdepth.simulation.bench import bench
from tvdepth.simulation.bench import METHODS
from tvdepth.structs import BenchTable


def parse_models(text: str) -> list[int]:
    """
    "1-7", "4" or "1,3,5-7" → sorted model ids.
    """
    models: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        low, _, high = part.partition("-")
        try:
            start, stop = int(low), int(high or low)
        except ValueError:
            raise click.BadParameter(f"`{part}` is not a model number or range.") from None
        if not (1 <= start <= stop <= 7):
            raise click.BadParameter(f"`{part}` is outside models 1-7.")
        models.update(range(start, stop + 1))

    if not models:
        raise click.BadParameter("No models given.")
    return sorted(models)


def parse_methods(text: str) -> list[pt.Method]:
    methods = [part.strip() for part in text.split(",") if part.strip()]
    for method in methods:
        if method not in METHODS:
            raise click.BadParameter(f"Unknown method `{method}`. Use one of {', '.join(METHODS)}.")
    if not methods:
        raise click.BadParameter("No methods given.")
    return methods  # type: ignore


def write_table(table: BenchTable, out: Optional[str]) -> None:
    if out is not None and out.endswith(".json"):
        write_bench_json(table, out)
    else:
        write_bench_csv(table, out)


@click.command(name="bench", short_help="TPR / FPR of the detectors over simulated models")
@click.option("--models", default="1-7", show_default=True, help="model ids, ex: 1-7 or 2,4,6")
@click.option("--reps", type=click.IntRange(min=1), help="repetitions per model  [default: from config]")
@click.option("--seed", type=click.IntRange(min=0), help="base seed  [default: from config]")
@click.option("--methods", default=",".join(METHODS), show_default=True, help="comma separated methods")
@click.option("--n", type=click.IntRange(min=2), help="curves per dataset  [default: from config]")
@click.option("--m", type=click.IntRange(min=2), help="grid points  [default: from config]")
@click.option("--contamination", type=click.FloatRange(0, 1), help="[default: from config]")
@click.option("--cache-dir", type=click.Path(file_okay=False), help="resume from / store outcomes in this directory")
@click.option("--out", type=click.Path(dir_okay=False), help="CSV, or JSON if the name ends in .json; stdout if omitted")
def click_bench(
    models: str,
    reps: Optional[int],
    seed: Optional[int],
    methods: str,
    n: Optional[int],
    m: Optional[int],
    contamination: Optional[float],
    cache_dir: Optional[str],
    out: Optional[str],
) -> None:
    logger = create_logger("bench", source="cli")

    table = bench(
        models=parse_models(models),
        reps=reps if reps is not None else config.getint("bench", "reps"),
        base_seed=seed if seed is not None else config.getint("bench", "seed"),
        cfg=get_detection_config(),
        methods=parse_methods(methods),
        n=n if n is not None else config.getint("bench", "n"),
        m=m if m is not None else config.getint("bench", "m"),
        contamination=contamination if contamination is not None else config.getfloat("bench", "contamination"),
        cache_dir=cache_dir,
    )
    write_table(table, out)
    logger.info(f"Wrote {len(table.rows)} rows.")
