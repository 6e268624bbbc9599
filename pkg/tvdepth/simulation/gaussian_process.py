# -*- coding: utf-8 -*-
"""
Zero-mean Gaussian process draws on a grid, by a lower-triangular (Cholesky) factor of the
covariance matrix:

    K = [c(t_i, t_k)] + jitter·I = L Lᵀ,    X = Z Lᵀ,   Z ~ N(0, I)
"""
from __future__ import annotations

from functools import cache
from typing import Callable

import numpy as np
from scipy.linalg import cholesky
from scipy.linalg import LinAlgError

from tvdepth.exc import FactorizationError
from tvdepth.structs import Grid

Kernel = Callable[[np.ndarray, np.ndarray], np.ndarray]

JITTER = 1e-10


def exponential_kernel(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """c(s,t) = exp(-|s-t|)"""
    return np.exp(-np.abs(s - t))


def heavy_exponential_kernel(s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """c(s,t) = 6·exp(-|s-t|^0.1), rougher and with a larger variance."""
    return 6.0 * np.exp(-(np.abs(s - t) ** 0.1))


def covariance_matrix(kernel: Kernel, grid: Grid) -> np.ndarray:
    points = grid.points
    return kernel(points[:, None], points[None, :])


def cholesky_factor(covariance: np.ndarray, jitter: float = JITTER) -> np.ndarray:
    covariance = np.asarray(covariance, dtype=float)
    if not np.allclose(covariance, covariance.T):
        raise FactorizationError("Covariance matrix is not symmetric.")
    try:
        return cholesky(covariance + jitter * np.eye(covariance.shape[0]), lower=True)
    except LinAlgError as e:
        raise FactorizationError(f"Covariance matrix is not positive definite, even with jitter {jitter}.") from e


@cache
def _cached_factor(kernel: Kernel, points: tuple[float, ...]) -> np.ndarray:
    factor = cholesky_factor(covariance_matrix(kernel, Grid(np.asarray(points))))
    factor.setflags(write=False)
    return factor


def kernel_factor(kernel: Kernel, grid: Grid) -> np.ndarray:
    """
    Cholesky factor of a kernel on a grid, memoized since simulations reuse the same few grids.
    """
    return _cached_factor(kernel, tuple(grid.points.tolist()))


def gp_sample(kernel: Kernel, grid: Grid, n: int, rng: np.random.Generator) -> np.ndarray:
    """
    n independent draws as an n×m matrix.
    """
    factor = kernel_factor(kernel, grid)
    return rng.standard_normal((n, grid.m)) @ factor.T
