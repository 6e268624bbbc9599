# -*- coding: utf-8 -*-
"""
Two-stage outlier detection:

1. compute TVD and MSV for every curve,
2. shape outliers: MSV values below Q1 - shape_factor·IQR of the MSV boxplot,
3. magnitude outliers: functional boxplot over the remaining curves. The central region is
   the envelope of the ⌈central_proportion·n⌉ deepest curves (n counted BEFORE removing shape
   outliers), and any curve leaving the region inflated by magnitude_factor is flagged.

All curve indices are 0-based.
"""
from __future__ import annotations

from typing import Iterable
from typing import Optional
from typing import Sequence

import numpy as np

from tvdepth import types as pt
from tvdepth.depth import depth_order
from tvdepth.depth import pointwise_depth_from_counts
from tvdepth.depth import pointwise_rank_counts_all
from tvdepth.depth import resolve_weights
from tvdepth.depth import tvd_all
from tvdepth.exc import EmptySelectionError
from tvdepth.exc import InsufficientDataError
from tvdepth.logging import create_logger
from tvdepth.shape_variation import msv_all
from tvdepth.shape_variation import shape_ratios_all
from tvdepth.shape_variation import sv_all
from tvdepth.structs import DepthProfile
from tvdepth.structs import DetectionConfig
from tvdepth.structs import Envelope
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import MSVBoxplot
from tvdepth.structs import MSVPoint
from tvdepth.structs import OutlierReport
from tvdepth.structs import PlotGeometry
from tvdepth.utils.math_helpers import count_from_proportion
from tvdepth.utils.math_helpers import quartiles
from tvdepth.utils.timing import catchtime


def shape_outliers(msv_values: Sequence[float] | np.ndarray, factor: float) -> tuple[list[int], MSVBoxplot]:
    """
    Only the lower fence flags: a small MSV means an unusual shape.
    """
    msv_values = np.asarray(msv_values, dtype=float)
    if msv_values.size < 2:
        raise InsufficientDataError("The MSV boxplot needs at least 2 curves.")

    q1, q3 = quartiles(msv_values)
    iqr = q3 - q1
    lower_fence = q1 - factor * iqr
    flagged = np.flatnonzero(msv_values < lower_fence).tolist()
    return flagged, MSVBoxplot(q1=q1, q3=q3, iqr=iqr, lower_fence=lower_fence)


def central_region(
    ds: FunctionalDataset,
    depths: Sequence[float] | np.ndarray,
    keep_count: int,
    excluded: Iterable[int] = (),
) -> tuple[Envelope, list[int]]:
    if keep_count < 1:
        raise EmptySelectionError(f"keep_count must be at least 1, got {keep_count}.")

    order = depth_order(depths, excluded)
    if order.size == 0:
        raise EmptySelectionError("Every curve is excluded; there is no central region.")

    members = np.sort(order[:keep_count])
    member_values = ds.values[members]
    envelope = Envelope(lower=member_values.min(axis=0).tolist(), upper=member_values.max(axis=0).tolist())
    return envelope, members.tolist()


def fences_of(region: Envelope, factor: float) -> Envelope:
    lower, upper = np.asarray(region.lower), np.asarray(region.upper)
    spread = upper - lower
    return Envelope(lower=(lower - factor * spread).tolist(), upper=(upper + factor * spread).tolist())


def magnitude_outliers(
    ds: FunctionalDataset,
    region: Envelope,
    factor: float,
    excluded: Iterable[int] = (),
) -> tuple[list[int], Envelope]:
    """
    A single grid point outside the fences flags the whole curve.
    """
    fences = fences_of(region, factor)
    outside = (ds.values > np.asarray(fences.upper)) | (ds.values < np.asarray(fences.lower))
    flagged = outside.any(axis=1)
    flagged[list(excluded)] = False
    return np.flatnonzero(flagged).tolist(), fences


def _median_index(depths: np.ndarray, excluded: Iterable[int]) -> int:
    return int(depth_order(depths, excluded)[0])


def compute_depths(
    ds: FunctionalDataset,
    weight_choice: pt.WeightChoice = "sd",
    fallback_to_uniform: bool = False,
    pointwise: bool = False,
) -> tuple[DepthProfile, pt.WeightChoice]:
    """
    TVD, SV and MSV of every curve. With `pointwise`, the n×m p̂ and D̂ and the n×(m-1) shifted Ŝ are kept too.
    """
    weights, used_choice = resolve_weights(ds, weight_choice, fallback_to_uniform=fallback_to_uniform)
    counts = pointwise_rank_counts_all(ds)

    profile = DepthProfile(
        tvd=tvd_all(ds, weights, counts=counts).tolist(),
        sv=sv_all(ds).tolist(),
        msv=msv_all(ds).tolist(),
    )
    if pointwise:
        profile.p_hat = (counts / ds.n).tolist()
        profile.d_hat = pointwise_depth_from_counts(counts, ds.n).tolist()
        profile.s_hat = shape_ratios_all(ds, shifted=True).tolist()
    return profile, used_choice


def detect(
    ds: FunctionalDataset,
    cfg: Optional[DetectionConfig] = None,
    fallback_to_uniform: bool = False,
    depths: Optional[DepthProfile] = None,
) -> OutlierReport:
    cfg = cfg or DetectionConfig()
    logger = create_logger("outlier_detection")

    if ds.n < 2:
        raise InsufficientDataError("Outlier detection needs at least 2 curves.")

    with catchtime() as elapsed:
        if depths is None:
            depths, used_choice = compute_depths(ds, cfg.weight_choice, fallback_to_uniform=fallback_to_uniform)
        else:
            used_choice = cfg.weight_choice

        tvd_values = np.asarray(depths.tvd)
        shape, msv_boxplot = shape_outliers(depths.msv, cfg.shape_factor)

        keep_count = count_from_proportion(cfg.central_proportion, ds.n)
        region, members = central_region(ds, tvd_values, keep_count, excluded=shape)
        magnitude, fences = magnitude_outliers(ds, region, cfg.magnitude_factor, excluded=shape)

    logger.debug(
        f"Detected {len(shape)} shape and {len(magnitude)} magnitude outliers among {ds.n} curves in {elapsed():.3f}s."
    )

    return OutlierReport(
        shape_outliers=shape,
        magnitude_outliers=magnitude,
        median_index=_median_index(tvd_values, shape),
        central_region=region,
        central_members=members,
        fences=fences,
        depths=depths,
        msv_boxplot=msv_boxplot,
        weight_choice=used_choice,
    )


def detect_mbd(ds: FunctionalDataset, cfg: Optional[DetectionConfig] = None) -> OutlierReport:
    """
    The classical functional boxplot on modified band depth, with no shape stage.
    """
    from tvdepth.simulation.mbd import mbd

    cfg = cfg or DetectionConfig()
    if ds.n < 2:
        raise InsufficientDataError("Outlier detection needs at least 2 curves.")

    depth_values = mbd(ds)
    keep_count = count_from_proportion(cfg.central_proportion, ds.n)
    region, members = central_region(ds, depth_values, keep_count)
    magnitude, fences = magnitude_outliers(ds, region, cfg.magnitude_factor)

    return OutlierReport(
        shape_outliers=[],
        magnitude_outliers=magnitude,
        median_index=_median_index(depth_values, ()),
        central_region=region,
        central_members=members,
        fences=fences,
        depths=DepthProfile(tvd=[], sv=[], msv=[], mbd=depth_values.tolist()),
        msv_boxplot=None,
        weight_choice="uniform",
    )


def boxplot_geometry(ds: FunctionalDataset, report: OutlierReport) -> PlotGeometry:
    """
    Median curve, central region, fences, the envelope of non-outlying curves and the
    points of the shape outlyingness plot.
    """
    outlying = set(report.outliers)
    keep = [j for j in range(ds.n) if j not in outlying]
    if not keep:
        keep = [report.median_index]

    kept_values = ds.values[keep]
    shape = set(report.shape_outliers)

    return PlotGeometry(
        grid=ds.grid.points.tolist(),
        median_index=report.median_index,
        median_curve=ds.values[report.median_index].tolist(),
        central_region=report.central_region,
        fences=report.fences,
        envelope=Envelope(lower=kept_values.min(axis=0).tolist(), upper=kept_values.max(axis=0).tolist()),
        shape_outliers=report.shape_outliers,
        magnitude_outliers=report.magnitude_outliers,
        msv_boxplot=report.msv_boxplot,
        msv_points=[
            MSVPoint(index=j, msv=value, is_shape_outlier=j in shape) for j, value in enumerate(report.depths.msv)
        ],
    )
