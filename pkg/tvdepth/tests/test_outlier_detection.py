# -*- coding: utf-8 -*-
# test_outlier_detection
from __future__ import annotations

import numpy as np
import pytest

from tvdepth.exc import EmptySelectionError
from tvdepth.exc import InsufficientDataError
from tvdepth.outlier_detection import boxplot_geometry
from tvdepth.outlier_detection import central_region
from tvdepth.outlier_detection import compute_depths
from tvdepth.outlier_detection import detect
from tvdepth.outlier_detection import detect_mbd
from tvdepth.outlier_detection import magnitude_outliers
from tvdepth.outlier_detection import shape_outliers
from tvdepth.simulation.models import simulate
from tvdepth.structs import DetectionConfig
from tvdepth.structs import Envelope
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import ModelSpec


def test_shape_outliers_lower_fence() -> None:
    flagged, box = shape_outliers([0.1, 0.85, 0.9, 0.95, 1.0], factor=3.0)
    assert flagged == [0]
    assert box.q1 == pytest.approx(0.85)
    assert box.q3 == pytest.approx(0.95)
    assert box.iqr == pytest.approx(0.1)
    assert box.lower_fence == pytest.approx(0.55)


def test_shape_outliers_needs_a_spread() -> None:
    flagged, box = shape_outliers([0.7] * 6, factor=3.0)
    assert flagged == []
    assert box.iqr == 0.0

    flagged, _ = shape_outliers([0.9, 0.95, 1.0, 0.97], factor=3.0)
    assert flagged == []


def test_shape_outliers_needs_two_curves() -> None:
    with pytest.raises(InsufficientDataError):
        shape_outliers([0.5], factor=3.0)


def test_central_region_of_fix_a(fix_a) -> None:
    region, members = central_region(fix_a, [2 / 9, 2 / 9, 0.0], keep_count=2)
    assert members == [0, 1]
    assert region == Envelope(lower=[0.0, 0.0], upper=[1.0, 1.0])

    region, members = central_region(fix_a, [2 / 9, 2 / 9, 0.0], keep_count=3)
    assert members == [0, 1, 2]
    assert region == Envelope(lower=[0.0, 0.0], upper=[2.0, 2.0])


def test_central_region_clamps_to_the_remaining_curves(fix_a) -> None:
    region, members = central_region(fix_a, [2 / 9, 2 / 9, 0.0], keep_count=2, excluded=[0, 1])
    assert members == [2]
    assert region.lower == region.upper == [2.0, 2.0]

    with pytest.raises(EmptySelectionError):
        central_region(fix_a, [2 / 9, 2 / 9, 0.0], keep_count=2, excluded=[0, 1, 2])


def test_magnitude_outliers_of_a_spike(fix_a_spike) -> None:
    region = Envelope(lower=[0.0, 0.0], upper=[1.0, 1.0])
    flagged, fences = magnitude_outliers(fix_a_spike, region, factor=1.5)
    assert flagged == [2]
    assert fences == Envelope(lower=[-1.5, -1.5], upper=[2.5, 2.5])

    flagged, _ = magnitude_outliers(fix_a_spike, region, factor=1e6)
    assert flagged == []

    flagged, _ = magnitude_outliers(fix_a_spike, region, factor=1.5, excluded=[2])
    assert flagged == []


def test_detect_spike(fix_a_spike) -> None:
    report = detect(fix_a_spike)
    assert report.shape_outliers == []
    assert report.magnitude_outliers == [2]
    assert report.median_index == 0
    assert report.central_members == [0, 1]
    assert report.depths.tvd == pytest.approx([2 / 9, 2 / 9, 0.0], abs=1e-12)
    assert report.depths.msv == pytest.approx([1.0, 1.0, 1.0], abs=1e-12)


def test_detect_needs_two_curves() -> None:
    with pytest.raises(InsufficientDataError):
        detect(FunctionalDataset.from_values([[1.0, 2.0]]))


def test_detect_with_constant_data_falls_back_to_uniform_weights() -> None:
    ds = FunctionalDataset.from_values([[1.0, 2.0, 3.0]] * 5)
    report = detect(ds, fallback_to_uniform=True)
    assert report.weight_choice == "uniform"
    assert report.outliers == []


def test_report_invariants_on_model_data() -> None:
    for model_id in (2, 4, 6, 7):
        ds = simulate(ModelSpec(model_id=model_id, seed=model_id)).dataset
        report = detect(ds)

        assert not set(report.shape_outliers) & set(report.magnitude_outliers)
        assert report.median_index not in report.shape_outliers
        assert len(report.central_members) == 50

        # central members sit inside the fences
        members = ds.values[report.central_members]
        assert np.all(members >= np.asarray(report.fences.lower))
        assert np.all(members <= np.asarray(report.fences.upper))


def test_detect_is_deterministic(model_1) -> None:
    assert detect(model_1) == detect(model_1)


def test_larger_factors_never_add_outliers() -> None:
    ds = simulate(ModelSpec(model_id=3, seed=5)).dataset
    depths, _ = compute_depths(ds)

    previous = None
    for magnitude_factor in (0.5, 1.0, 1.5, 3.0):
        outliers = set(detect(ds, DetectionConfig(magnitude_factor=magnitude_factor), depths=depths).outliers)
        if previous is not None:
            assert outliers <= previous
        previous = outliers

    previous = None
    for shape_factor in (0.5, 1.5, 3.0, 6.0):
        shape = set(detect(ds, DetectionConfig(shape_factor=shape_factor), depths=depths).shape_outliers)
        if previous is not None:
            assert shape <= previous
        previous = shape


def test_model_4_peaks_are_found() -> None:
    for seed in range(5):
        simulated = simulate(ModelSpec(model_id=4, seed=seed))
        report = detect(simulated.dataset)
        assert set(simulated.outlier_indices) <= set(report.outliers)


def test_central_curves_stay_put_after_removing_outliers() -> None:
    stable = 0
    for seed in range(20):
        ds = simulate(ModelSpec(model_id=1, seed=100 + seed)).dataset
        report = detect(ds)

        kept = [j for j in range(ds.n) if j not in set(report.outliers)]
        second = detect(ds.subset(kept))
        central_after_removal = {kept.index(j) for j in report.central_members}
        stable += not (central_after_removal & set(second.shape_outliers))

    assert stable >= 19


def test_detect_mbd_has_no_shape_stage(fix_a_spike) -> None:
    report = detect_mbd(fix_a_spike)
    assert report.shape_outliers == []
    assert report.magnitude_outliers == [2]
    assert report.msv_boxplot is None
    assert report.depths.mbd == pytest.approx([2 / 3, 1.0, 2 / 3], abs=1e-12)
    assert report.median_index == 1


def test_geometry_of_spike(fix_a_spike) -> None:
    report = detect(fix_a_spike)
    geometry = boxplot_geometry(fix_a_spike, report)

    assert geometry.median_index == 0
    assert geometry.median_curve == [0.0, 0.0]
    assert geometry.envelope == Envelope(lower=[0.0, 0.0], upper=[1.0, 1.0])
    assert geometry.magnitude_outliers == [2]
    assert [p.index for p in geometry.msv_points] == [0, 1, 2]
    assert not any(p.is_shape_outlier for p in geometry.msv_points)


def test_geometry_without_outliers(fix_a) -> None:
    report = detect(fix_a)
    assert report.outliers == []

    geometry = boxplot_geometry(fix_a, report)
    assert geometry.envelope == Envelope(lower=[0.0, 0.0], upper=[2.0, 2.0])
    assert geometry.grid == [0.0, 1.0]
