# -*- coding: utf-8 -*-
from __future__ import annotations

from typing import Optional


class TVDepthError(Exception):
    """
    Base class for everything this package raises on purpose.
    """


class DataError(TVDepthError):
    """
    The input data can't be used as given: bad shape, bad values, bad file.
    """


class AlignmentError(DataError):
    """
    A query curve or weight vector doesn't line up with the dataset grid.
    """


class DomainError(DataError):
    """
    A value is outside the range an operation is defined on (ex: a proportion outside [0, 1]).
    """


class InsufficientDataError(DataError):
    """
    Not enough curves (or grid points) for the requested statistic.
    """


class EmptySelectionError(DataError):
    """
    Every curve was excluded, so there is nothing to build a region from.
    """


class ParseError(DataError):
    """
    An input file is malformed. `row` and `column` are 1-based positions in the file, when known.
    """

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None) -> None:
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.row = row
        self.column = column


class IncompleteGridError(ParseError):
    """
    A long-format file is missing a (curve, t) cell.
    """


class DuplicateCellError(ParseError):
    """
    A long-format file lists the same (curve, t) cell twice.
    """


class NoInputError(DataError):
    """
    Nothing to read: empty file or empty directory.
    """


class NumericalError(TVDepthError):
    """
    A numerical procedure broke down.
    """


class DegenerateWeightsError(NumericalError):
    """
    Weights can't be normalized because their total is zero (ex: every column is constant).
    """


class FactorizationError(NumericalError):
    """
    A covariance matrix could not be factorized, even after jitter.
    """
