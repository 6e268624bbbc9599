# -*- coding: utf-8 -*-
"""
Draw one dataset from a simulation model as a wide CSV, with a truth-label sidecar.

> tvdepth simulate --model 6 --seed 3 --out model6.csv    # also writes model6.truth.csv
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from tvdepth.io import write_truth_csv
from tvdepth.io import write_wide_csv
from tvdepth.logging import create_logger
from tvdepth.simulation.models import simulate
from tvdepth.structs import ModelSpec
from tvdepth.structs import SimulatedDataset


def truth_path_for(out: str) -> str:
    path = Path(out)
    return str(path.with_name(f"{path.stem}.truth.csv"))


def simulate_to_files(spec: ModelSpec, out: Optional[str] = None, truth: Optional[str] = None) -> SimulatedDataset:
    logger = create_logger("simulate", source="cli")

    simulated = simulate(spec)
    write_wide_csv(simulated.dataset, out)

    if truth is None and out not in (None, "-"):
        truth = truth_path_for(out)  # type: ignore
    if truth is not None:
        write_truth_csv(simulated.truth, truth)

    logger.debug(f"Model {spec.model_id}, seed {spec.seed}: outliers {simulated.outlier_indices}.")
    return simulated


@click.command(name="simulate", short_help="draw curves from a simulation model")
@click.option("--model", "model_id", type=click.IntRange(1, 7), required=True, help="model 1 to 7")
@click.option("--n", type=click.IntRange(min=1), default=100, show_default=True, help="number of curves")
@click.option("--m", type=click.IntRange(min=2), default=50, show_default=True, help="grid points on [0, 1]")
@click.option("--contamination", type=click.FloatRange(0, 1), default=0.1, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="CSV destination; stdout if omitted")
@click.option("--truth", type=click.Path(dir_okay=False), help="truth sidecar; defaults to <out>.truth.csv")
def click_simulate(
    model_id: int, n: int, m: int, contamination: float, seed: int, out: Optional[str], truth: Optional[str]
) -> None:
    simulate_to_files(
        ModelSpec(model_id=model_id, n=n, m=m, contamination=contamination, seed=seed),
        out=out,
        truth=truth,
    )
