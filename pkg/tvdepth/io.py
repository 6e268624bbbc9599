# -*- coding: utf-8 -*-
"""
Reading curves from disk and writing results back.

Inputs:
  - wide CSV: header row is the grid, every later row is one curve. `-` reads stdin.
  - long CSV: columns curve_id,t,value, pivoted to wide.
  - a directory of PGM images (P2 or P5), each flattened row-major into one curve.

Outputs are CSV tables and JSON documents (report, geometry, bench table). Curve indices are 0-based.
"""
from __future__ import annotations

import csv
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator
from typing import Optional
from typing import Sequence
from typing import TextIO

import numpy as np
from msgspec.json import decode
from msgspec.json import encode
from msgspec.json import format as format_json

from tvdepth import types as pt
from tvdepth.exc import DataError
from tvdepth.exc import DuplicateCellError
from tvdepth.exc import IncompleteGridError
from tvdepth.exc import NoInputError
from tvdepth.exc import ParseError
from tvdepth.structs import BenchTable
from tvdepth.structs import DepthProfile
from tvdepth.structs import DetectionConfig
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import Grid
from tvdepth.structs import InputDescriptor
from tvdepth.structs import OutlierReport
from tvdepth.structs import PlotGeometry
from tvdepth.structs import ReportDocument
from tvdepth.structs import ReportMeta
from tvdepth.version import __version__

STDIO = "-"


def format_number(x: float) -> str:
    # shortest repr that round-trips a float64
    return repr(float(x))


def _parse_float(cell: str, row: int, column: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(f"Non-numeric cell `{cell}`", row=row, column=column) from None
    if not np.isfinite(value):
        raise ParseError(f"Non-finite cell `{cell}`", row=row, column=column)
    return value


def _is_number(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False


@contextmanager
def _open_text(path: str | Path) -> Iterator[TextIO]:
    if str(path) == STDIO:
        yield sys.stdin
        return

    with open(path, newline="") as f:
        yield f


@contextmanager
def _open_for_writing(path: Optional[str | Path]) -> Iterator[TextIO]:
    if path is None or str(path) == STDIO:
        yield sys.stdout
        return

    with open(path, "w", newline="") as f:
        yield f


def _rows(handle: TextIO) -> list[tuple[int, list[str]]]:
    """
    Non-blank CSV rows with their 1-based line numbers, cells stripped.
    """
    return [
        (line_number, [cell.strip() for cell in row])
        for line_number, row in enumerate(csv.reader(handle), start=1)
        if any(cell.strip() for cell in row)
    ]


def read_wide_csv(path: str | Path, stride: pt.Stride = 1) -> FunctionalDataset:
    """
    A numeric header is the grid and must be strictly increasing. A header of labels
    (no numeric cell) maps to grid indices 0..m-1.
    """
    with _open_text(path) as handle:
        rows = _rows(handle)

    if not rows:
        raise NoInputError(f"No data in {path}.")

    header_row, header = rows[0]
    numeric = [_is_number(cell) for cell in header]
    if all(numeric):
        grid_points = np.array([_parse_float(cell, header_row, c) for c, cell in enumerate(header, start=1)])
        for c in range(1, grid_points.size):
            if grid_points[c] <= grid_points[c - 1]:
                raise ParseError("Header grid is not strictly increasing", row=header_row, column=c + 1)
    elif not any(numeric):
        grid_points = np.arange(len(header), dtype=float)
    else:
        c = numeric.index(False) + 1
        raise ParseError(f"Header mixes numbers and labels at `{header[c - 1]}`", row=header_row, column=c)

    if len(rows) < 2:
        raise NoInputError(f"{path} has a header but no curves.")

    m = len(header)
    values = np.empty((len(rows) - 1, m))
    for j, (line_number, row) in enumerate(rows[1:]):
        if len(row) != m:
            raise ParseError(f"Expected {m} cells, found {len(row)}", row=line_number)
        values[j] = [_parse_float(cell, line_number, c) for c, cell in enumerate(row, start=1)]

    return FunctionalDataset(Grid(grid_points), values).subsample(stride)


def read_long_csv(path: str | Path) -> FunctionalDataset:
    """
    Curves are ordered by first appearance of their curve_id; the grid is the sorted set of distinct t.
    """
    with _open_text(path) as handle:
        rows = _rows(handle)

    # header: a non-numeric t cell on the first row
    if rows and len(rows[0][1]) == 3 and not _is_number(rows[0][1][1]):
        rows = rows[1:]
    if not rows:
        raise NoInputError(f"No data in {path}.")

    cells: dict[str, dict[float, float]] = {}
    for line_number, row in rows:
        if len(row) != 3:
            raise ParseError(f"Expected 3 cells (curve_id,t,value), found {len(row)}", row=line_number)
        curve_id = row[0]
        t = _parse_float(row[1], line_number, 2)
        value = _parse_float(row[2], line_number, 3)

        curve = cells.setdefault(curve_id, {})
        if t in curve:
            raise DuplicateCellError(f"Duplicate cell for curve `{curve_id}` at t={row[1]}", row=line_number)
        curve[t] = value

    grid_points = sorted(set().union(*(curve.keys() for curve in cells.values())))
    values = np.empty((len(cells), len(grid_points)))
    for j, (curve_id, curve) in enumerate(cells.items()):
        for i, t in enumerate(grid_points):
            if t not in curve:
                raise IncompleteGridError(f"Curve `{curve_id}` has no value at t={format_number(t)}")
            values[j, i] = curve[t]

    return FunctionalDataset(Grid(np.array(grid_points)), values)


def _pgm_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """
    First `count` whitespace-separated header tokens, skipping `#` comments. Returns the
    tokens and the offset just past the single whitespace that ends the last one.
    """
    tokens: list[bytes] = []
    position = 0
    while len(tokens) < count:
        while position < len(data) and data[position : position + 1].isspace():
            position += 1
        if position >= len(data):
            raise ParseError("Truncated PGM header")
        if data[position : position + 1] == b"#":
            while position < len(data) and data[position : position + 1] not in (b"\n", b"\r"):
                position += 1
            continue
        start = position
        while position < len(data) and not data[position : position + 1].isspace():
            position += 1
        tokens.append(data[start:position])
    return tokens, position + 1


def read_pgm(path: str | Path) -> np.ndarray:
    """
    A single PGM image as a (height, width) float array.
    """
    data = Path(path).read_bytes()
    if len(data) < 2:
        raise ParseError(f"{path} is not a PGM image")

    tokens, offset = _pgm_tokens(data, 4)
    magic = tokens[0]
    try:
        width, height, maxval = (int(token) for token in tokens[1:])
    except ValueError:
        raise ParseError(f"Bad PGM header in {path}") from None
    if width < 1 or height < 1 or not (0 < maxval < 65536):
        raise ParseError(f"Bad PGM header in {path}")

    if magic == b"P5":
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        if len(data) - offset < width * height * dtype.itemsize:
            raise ParseError(f"{path} has fewer pixels than its header declares")
        pixels = np.frombuffer(data, dtype=dtype, count=width * height, offset=offset)
    elif magic == b"P2":
        body = b" ".join(
            line.split(b"#", 1)[0] for line in data[offset - 1 :].splitlines()
        ).split()
        if len(body) < width * height:
            raise ParseError(f"{path} has fewer pixels than its header declares")
        try:
            pixels = np.array([int(token) for token in body[: width * height]])
        except ValueError:
            raise ParseError(f"Non-integer pixel in {path}") from None
    else:
        raise ParseError(f"{path} is not a PGM image (magic number {magic!r})")

    return pixels.astype(float).reshape(height, width)


def read_pgm_dir(path: str | Path, stride: pt.Stride = 1) -> FunctionalDataset:
    """
    Images are taken in lexicographic filename order. The grid is the row-major pixel index,
    so adjacent grid points are horizontal neighbours except at row ends.
    """
    directory = Path(path)
    if not directory.is_dir():
        raise DataError(f"{path} is not a directory.")

    files = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix.lower() == ".pgm")
    if not files:
        raise NoInputError(f"No .pgm images in {path}.")

    images = [read_pgm(f) for f in files]
    shape = images[0].shape
    for f, image in zip(files, images):
        if image.shape != shape:
            raise DataError(f"{f.name} is {image.shape[1]}×{image.shape[0]}, expected {shape[1]}×{shape[0]}.")

    values = np.stack([image.ravel() for image in images])
    return FunctionalDataset(Grid.indices(values.shape[1]), values).subsample(stride)


def read_dataset(descriptor: InputDescriptor) -> FunctionalDataset:
    if descriptor.format == "wide_csv":
        return read_wide_csv(descriptor.path, descriptor.subsample_stride)
    elif descriptor.format == "long_csv":
        return read_long_csv(descriptor.path).subsample(descriptor.subsample_stride)
    elif descriptor.format == "pgm_dir":
        return read_pgm_dir(descriptor.path, descriptor.subsample_stride)
    else:
        raise DataError(f"Unknown input format `{descriptor.format}`.")


def write_wide_csv(ds: FunctionalDataset, path: Optional[str | Path] = None) -> None:
    with _open_for_writing(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(format_number(t) for t in ds.grid.points)
        for row in ds.values:
            writer.writerow(format_number(x) for x in row)


def write_truth_csv(truth: Sequence[bool] | np.ndarray, path: Optional[str | Path] = None) -> None:
    with _open_for_writing(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["curve_id", "is_outlier"])
        for j, label in enumerate(truth):
            writer.writerow([j, int(bool(label))])


def read_truth_csv(path: str | Path) -> np.ndarray:
    with _open_text(path) as handle:
        rows = _rows(handle)
    return np.array([row[1] in ("1", "true", "True") for _, row in rows[1:]], dtype=bool)


def write_depth_csv(depths: DepthProfile, path: Optional[str | Path] = None) -> None:
    with _open_for_writing(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["curve", "tvd", "sv", "msv"])
        for j, (tvd_, sv_, msv_) in enumerate(zip(depths.tvd, depths.sv, depths.msv)):
            writer.writerow([j, format_number(tvd_), format_number(sv_), format_number(msv_)])


def build_report_document(
    report: OutlierReport,
    cfg: DetectionConfig,
    method: pt.Method = "tvd_msv",
    input: Optional[InputDescriptor] = None,
    seed: Optional[int] = None,
) -> ReportDocument:
    return ReportDocument(
        shape_outliers=report.shape_outliers,
        magnitude_outliers=report.magnitude_outliers,
        median_index=report.median_index,
        tvd=report.depths.tvd,
        sv=report.depths.sv,
        msv=report.depths.msv,
        central_region=report.central_region,
        central_members=report.central_members,
        fences=report.fences,
        msv_boxplot=report.msv_boxplot,
        mbd=report.depths.mbd,
        meta=ReportMeta(
            tool_version=__version__,
            method=method,
            config=cfg,
            weight_choice=report.weight_choice,
            input=input,
            seed=seed,
        ),
    )


def _write_json(payload: bytes, path: Optional[str | Path]) -> None:
    text = format_json(payload, indent=2).decode() + "\n"
    with _open_for_writing(path) as handle:
        handle.write(text)


def write_report(document: ReportDocument, path: Optional[str | Path] = None) -> None:
    _write_json(encode(document), path)


def read_report(path: str | Path) -> ReportDocument:
    with _open_text(path) as handle:
        return decode(handle.read(), type=ReportDocument)


def write_geometry(geometry: PlotGeometry, path: Optional[str | Path] = None) -> None:
    _write_json(encode(geometry), path)


def write_bench_json(table: BenchTable, path: Optional[str | Path] = None) -> None:
    _write_json(encode(table), path)


def write_bench_csv(table: BenchTable, path: Optional[str | Path] = None) -> None:
    def cell(x: Optional[float]) -> str:
        return "" if x is None else format_number(x)

    with _open_for_writing(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["model", "method", "reps", "tpr_mean", "tpr_sd", "fpr_mean", "fpr_sd"])
        for row in table.rows:
            writer.writerow(
                [
                    row.model_id,
                    row.method,
                    row.reps,
                    cell(row.tpr_mean),
                    cell(row.tpr_sd),
                    cell(row.fpr_mean),
                    cell(row.fpr_sd),
                ]
            )

