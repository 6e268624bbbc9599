# -*- coding: utf-8 -*-
"""
These define structs for the data flowing through the package: datasets, depth profiles,
detection reports and benchmark tables. The serializable ones round-trip through msgspec.json.

"""
from __future__ import annotations

import typing as t

import numpy as np
from msgspec import Struct

from tvdepth import types as pt
from tvdepth.exc import DataError
from tvdepth.exc import DomainError
from tvdepth.exc import InsufficientDataError


class Grid(Struct, eq=False):
    """
    Shared observation points t_1 < … < t_m.
    """

    points: np.ndarray

    def __post_init__(self) -> None:
        self.points = np.asarray(self.points, dtype=float)
        if self.points.ndim != 1:
            raise DataError("Grid points must be one dimensional.")
        if self.points.size < 2:
            raise InsufficientDataError(f"A grid needs at least 2 points, got {self.points.size}.")
        if not np.all(np.isfinite(self.points)):
            raise DomainError("Grid points must be finite.")
        if np.any(np.diff(self.points) <= 0):
            raise DataError("Grid points must be strictly increasing.")

    @classmethod
    def indices(cls, m: int) -> Grid:
        return cls(np.arange(m, dtype=float))

    @classmethod
    def unit_interval(cls, m: int) -> Grid:
        return cls(np.linspace(0.0, 1.0, m))

    @property
    def m(self) -> int:
        return int(self.points.size)

    def __len__(self) -> int:
        return self.m


class FunctionalDataset(Struct, eq=False):
    """
    n curves observed on a shared grid. Row j of `values` is curve j.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 2:
            raise DataError("Curve values must be an n×m matrix.")
        if self.values.shape[0] < 1:
            raise InsufficientDataError("A dataset needs at least one curve.")
        if self.values.shape[1] != self.grid.m:
            raise DataError(f"Rows have {self.values.shape[1]} values but the grid has {self.grid.m} points.")
        if not np.all(np.isfinite(self.values)):
            bad_row, bad_column = np.argwhere(~np.isfinite(self.values))[0]
            raise DomainError(f"Non-finite value at curve {bad_row}, grid index {bad_column}.")

    @classmethod
    def from_values(cls, values: t.Any, grid: t.Optional[t.Sequence[float] | np.ndarray] = None) -> FunctionalDataset:
        values = np.atleast_2d(np.asarray(values, dtype=float))
        if grid is None:
            return cls(Grid.indices(values.shape[1]), values)
        return cls(Grid(np.asarray(grid, dtype=float)), values)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def m(self) -> int:
        return self.grid.m

    def subset(self, indices: t.Sequence[int]) -> FunctionalDataset:
        return FunctionalDataset(self.grid, self.values[np.asarray(indices, dtype=int)])

    def subsample(self, stride: int) -> FunctionalDataset:
        """
        keep every stride-th grid point, starting at the first.
        """
        if stride < 1:
            raise DomainError(f"Stride must be a positive integer, got {stride}.")
        return FunctionalDataset(Grid(self.grid.points[::stride]), self.values[:, ::stride])


class DepthProfile(Struct):
    """
    Per-curve depth values. The pointwise arrays are only filled on request since they are n×m.
    """

    tvd: list[float]
    sv: list[float]
    msv: list[float]
    p_hat: t.Optional[list[list[float]]] = None
    d_hat: t.Optional[list[list[float]]] = None
    s_hat: t.Optional[list[list[float]]] = None
    mbd: t.Optional[list[float]] = None


class PairProportions(Struct, frozen=True):
    """
    Counting proportions for one adjacent pair (t_{i-1}, t_i) of a query curve.
    """

    p_prev: float
    p_cur: float
    p_joint_below: float
    p_joint_above: float


class ShapeProfile(Struct):
    s_pointwise: list[float]
    v_weights: list[float]
    sv: float
    msv: float


class DetectionConfig(Struct, forbid_unknown_fields=True):
    shape_factor: pt.PositiveFactor = 3.0
    magnitude_factor: pt.PositiveFactor = 1.5
    central_proportion: pt.CentralProportion = 0.5
    weight_choice: pt.WeightChoice = "sd"

    def __post_init__(self) -> None:
        if not (self.shape_factor > 0 and self.magnitude_factor > 0):
            raise DomainError("Boxplot factors must be positive.")
        if not (0 < self.central_proportion <= 1):
            raise DomainError("central_proportion must be in (0, 1].")
        if self.weight_choice not in ("sd", "uniform"):
            raise DomainError(f"Unknown weight choice {self.weight_choice}.")


class Envelope(Struct):
    lower: list[float]
    upper: list[float]


class MSVBoxplot(Struct):
    q1: float
    q3: float
    iqr: float
    lower_fence: float


class OutlierReport(Struct):
    shape_outliers: list[pt.CurveIndex]
    magnitude_outliers: list[pt.CurveIndex]
    median_index: pt.CurveIndex
    central_region: Envelope
    central_members: list[pt.CurveIndex]
    fences: Envelope
    depths: DepthProfile
    msv_boxplot: t.Optional[MSVBoxplot]
    weight_choice: pt.WeightChoice = "sd"

    @property
    def outliers(self) -> list[int]:
        return sorted(set(self.shape_outliers) | set(self.magnitude_outliers))


class MSVPoint(Struct):
    index: pt.CurveIndex
    msv: float
    is_shape_outlier: bool


class PlotGeometry(Struct):
    """
    Everything needed to draw the functional boxplot and the shape outlyingness plot.
    """

    grid: list[float]
    median_index: pt.CurveIndex
    median_curve: list[float]
    central_region: Envelope
    fences: Envelope
    envelope: Envelope
    shape_outliers: list[pt.CurveIndex]
    magnitude_outliers: list[pt.CurveIndex]
    msv_boxplot: t.Optional[MSVBoxplot]
    msv_points: list[MSVPoint]


class InputDescriptor(Struct):
    format: pt.InputFormat
    path: str
    subsample_stride: pt.Stride = 1


class ReportMeta(Struct):
    tool_version: str
    method: pt.Method
    config: DetectionConfig
    weight_choice: pt.WeightChoice
    input: t.Optional[InputDescriptor] = None
    seed: t.Optional[int] = None


class ReportDocument(Struct):
    """
    The on-disk JSON report. Curve indices are 0-based.
    """

    shape_outliers: list[pt.CurveIndex]
    magnitude_outliers: list[pt.CurveIndex]
    median_index: pt.CurveIndex
    tvd: list[float]
    sv: list[float]
    msv: list[float]
    central_region: Envelope
    central_members: list[pt.CurveIndex]
    fences: Envelope
    msv_boxplot: t.Optional[MSVBoxplot]
    meta: ReportMeta
    mbd: t.Optional[list[float]] = None


class ModelSpec(Struct, forbid_unknown_fields=True):
    model_id: pt.ModelId
    n: int = 100
    m: int = 50
    contamination: pt.Proportion = 0.1
    seed: pt.Seed = 0

    def __post_init__(self) -> None:
        if self.model_id not in range(1, 8):
            raise DomainError(f"model_id must be in 1..7, got {self.model_id}.")
        if self.seed < 0:
            raise DomainError(f"seed must be non-negative, got {self.seed}.")
        if self.n < 1:
            raise DomainError(f"n must be at least 1, got {self.n}.")
        if self.m < 2:
            raise DomainError(f"m must be at least 2, got {self.m}.")
        if not (0 <= self.contamination <= 1):
            raise DomainError(f"contamination must be in [0, 1], got {self.contamination}.")


class SimulatedDataset(Struct, eq=False):
    dataset: FunctionalDataset
    truth: np.ndarray
    spec: ModelSpec

    @property
    def outlier_indices(self) -> list[int]:
        return np.flatnonzero(self.truth).tolist()


class BenchRow(Struct):
    model_id: pt.ModelId
    method: pt.Method
    reps: int
    tpr_mean: t.Optional[pt.Percent]
    tpr_sd: t.Optional[float]
    fpr_mean: pt.Percent
    fpr_sd: float


class BenchMeta(Struct):
    tool_version: str
    base_seed: pt.Seed
    reps: int
    n: int
    m: int
    contamination: float
    config: DetectionConfig


class BenchTable(Struct):
    rows: list[BenchRow]
    meta: BenchMeta

    def row(self, model_id: int, method: str) -> BenchRow:
        for row in self.rows:
            if row.model_id == model_id and row.method == method:
                return row
        raise KeyError((model_id, method))
