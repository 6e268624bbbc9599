# -*- coding: utf-8 -*-
"""
Per-curve TVD, SV and MSV table.

> tvdepth depth curves.csv --weight uniform --out depths.csv
"""
from __future__ import annotations

from typing import Optional

import click

from tvdepth import types as pt
from tvdepth.config import config
from tvdepth.io import read_dataset
from tvdepth.io import write_depth_csv
from tvdepth.logging import create_logger
from tvdepth.outlier_detection import compute_depths
from tvdepth.structs import DepthProfile
from tvdepth.structs import InputDescriptor


def depth(
    descriptor: InputDescriptor,
    weight_choice: Optional[pt.WeightChoice] = None,
    out: Optional[str] = None,
) -> DepthProfile:
    logger = create_logger("depth", source="cli")
    weight_choice = weight_choice or config.get("detection", "weight")  # type: ignore

    ds = read_dataset(descriptor)
    logger.debug(f"Read {ds.n} curves on {ds.m} grid points from {descriptor.path}.")

    profile, used_choice = compute_depths(ds, weight_choice, fallback_to_uniform=True)  # type: ignore
    if used_choice != weight_choice:
        logger.warning(f"Used {used_choice} weights instead of {weight_choice}.")

    write_depth_csv(profile, out)
    return profile


@click.command(name="depth", short_help="per-curve TVD, SV and MSV")
@click.argument("input_path", metavar="INPUT")
@click.option("--weight", type=click.Choice(["sd", "uniform"]), help="weight function for TVD")
@click.option(
    "--format",
    "input_format",
    type=click.Choice(["wide_csv", "long_csv", "pgm_dir"]),
    default="wide_csv",
    show_default=True,
)
@click.option("--stride", type=click.IntRange(min=1), default=1, show_default=True, help="keep every K-th grid point")
@click.option("--out", type=click.Path(dir_okay=False), help="CSV destination; stdout if omitted")
def click_depth(
    input_path: str, weight: Optional[str], input_format: str, stride: int, out: Optional[str]
) -> None:
    """
    Compute depth and shape variation of every curve in INPUT (`-` for stdin).
    """
    depth(
        InputDescriptor(format=input_format, path=input_path, subsample_stride=stride),  # type: ignore
        weight_choice=weight,  # type: ignore
        out=out,
    )
