# -*- coding: utf-8 -*-
"""
Two-stage outlier detection on a file of curves, written as a JSON report.

> tvdepth detect curves.csv --geometry boxplot.json --out report.json
> tvdepth simulate --model 4 --seed 1 | tvdepth detect -
"""
from __future__ import annotations

from typing import Optional

import click

from tvdepth import types as pt
from tvdepth.config import get_detection_config
from tvdepth.io import build_report_document
from tvdepth.io import read_dataset
from tvdepth.io import write_geometry
from tvdepth.io import write_report
from tvdepth.logging import create_logger
from tvdepth.outlier_detection import boxplot_geometry
from tvdepth.outlier_detection import detect
from tvdepth.outlier_detection import detect_mbd
from tvdepth.structs import DetectionConfig
from tvdepth.structs import InputDescriptor
from tvdepth.structs import ReportDocument

METHOD_ALIASES: dict[str, pt.Method] = {"tvd_msv": "tvd_msv", "mbd": "mbd_fbplot", "mbd_fbplot": "mbd_fbplot"}


def detect_outliers(
    descriptor: InputDescriptor,
    cfg: DetectionConfig,
    method: pt.Method = "tvd_msv",
    out: Optional[str] = None,
    geometry_path: Optional[str] = None,
) -> ReportDocument:
    logger = create_logger("detect", source="cli")

    ds = read_dataset(descriptor)
    if method == "tvd_msv":
        report = detect(ds, cfg, fallback_to_uniform=True)
        if report.weight_choice != cfg.weight_choice:
            logger.warning(f"Used {report.weight_choice} weights instead of {cfg.weight_choice}.")
    else:
        report = detect_mbd(ds, cfg)

    logger.info(
        f"{len(report.shape_outliers)} shape and {len(report.magnitude_outliers)} magnitude outliers among {ds.n} curves."
    )

    document = build_report_document(report, cfg, method=method, input=descriptor)
    write_report(document, out)
    if geometry_path is not None:
        write_geometry(boxplot_geometry(ds, report), geometry_path)
    return document


@click.command(name="detect", short_help="find shape and magnitude outliers")
@click.argument("input_path", metavar="INPUT")
@click.option("--shape-factor", type=click.FloatRange(min=0, min_open=True), help="IQR factor of the MSV boxplot")
@click.option("--mag-factor", type=click.FloatRange(min=0, min_open=True), help="inflation factor of the fences")
@click.option("--central", type=click.FloatRange(0, 1, min_open=True), help="proportion of curves in the central region")
@click.option("--weight", type=click.Choice(["sd", "uniform"]), help="weight function for TVD")
@click.option(
    "--method",
    type=click.Choice(sorted(METHOD_ALIASES)),
    default="tvd_msv",
    show_default=True,
    help="tvd_msv, or mbd for the classical functional boxplot",
)
@click.option(
    "--format",
    "input_format",
    type=click.Choice(["wide_csv", "long_csv", "pgm_dir"]),
    default="wide_csv",
    show_default=True,
)
@click.option("--stride", type=click.IntRange(min=1), default=1, show_default=True, help="keep every K-th grid point")
@click.option("--geometry", "geometry_path", type=click.Path(dir_okay=False), help="write boxplot geometry JSON here")
@click.option("--out", type=click.Path(dir_okay=False), help="report destination; stdout if omitted")
def click_detect(
    input_path: str,
    shape_factor: Optional[float],
    mag_factor: Optional[float],
    central: Optional[float],
    weight: Optional[str],
    method: str,
    input_format: str,
    stride: int,
    geometry_path: Optional[str],
    out: Optional[str],
) -> None:
    """
    Detect outliers among the curves in INPUT (`-` for stdin). Curve indices in the report are 0-based.
    """
    cfg = get_detection_config(
        shape_factor=shape_factor,
        magnitude_factor=mag_factor,
        central_proportion=central,
        weight_choice=weight,
    )
    detect_outliers(
        InputDescriptor(format=input_format, path=input_path, subsample_stride=stride),  # type: ignore
        cfg,
        method=METHOD_ALIASES[method],
        out=out,
        geometry_path=geometry_path,
    )
