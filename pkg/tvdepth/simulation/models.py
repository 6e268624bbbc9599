# -*- coding: utf-8 -*-
"""
Simulation models on the equally spaced grid of [0, 1]. e(t) is a zero-mean Gaussian process
with covariance exp(-|s-t|); c ~ Bernoulli(ε) marks an outlier and σ = ±1 with equal odds.

    1: 4t + e(t)                                  no outliers
    2: 4t + e(t) + 6cσ                            shifted curves
    3: 4t + e(t) + 6cσ·1{t ≥ T},  T ~ U[0, 1]     shift from a random time on
    4: 4t + e(t) + 6cσ·1{T ≤ t ≤ T+l},  l = 0.08, T ~ U[0, 1-l]   short peaks
    5: 4t + (1-c)e(t) + c·ẽ(t),  ẽ with covariance 6·exp(-|s-t|^0.1)
    6: 4t + e(t) + c·0.5·sin(40πt)                small oscillations
    7: 2·sin(15πt + 2c) + e(t)                    phase shift

Each curve j draws from its own stream (seed, j): its noise, its label and its contamination
never depend on n or on other curves.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from tvdepth.simulation.gaussian_process import exponential_kernel
from tvdepth.simulation.gaussian_process import gp_sample
from tvdepth.simulation.gaussian_process import heavy_exponential_kernel
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import Grid
from tvdepth.structs import ModelSpec
from tvdepth.structs import SimulatedDataset
from tvdepth.utils.rng import stream

SHIFT = 6.0
PEAK_LENGTH = 0.08

CurveBuilder = Callable[[np.ndarray, np.ndarray, bool, np.random.Generator, Grid], np.ndarray]


def _sign(rng: np.random.Generator) -> float:
    return 1.0 if rng.random() < 0.5 else -1.0


def _model_1(t, noise, contaminated, rng, grid):
    return 4 * t + noise


def _model_2(t, noise, contaminated, rng, grid):
    if not contaminated:
        return 4 * t + noise
    return 4 * t + noise + SHIFT * _sign(rng)


def _model_3(t, noise, contaminated, rng, grid):
    if not contaminated:
        return 4 * t + noise
    sigma = _sign(rng)
    start = rng.uniform(0.0, 1.0)
    return 4 * t + noise + SHIFT * sigma * (t >= start)


def _model_4(t, noise, contaminated, rng, grid):
    if not contaminated:
        return 4 * t + noise
    sigma = _sign(rng)
    start = rng.uniform(0.0, 1.0 - PEAK_LENGTH)
    return 4 * t + noise + SHIFT * sigma * ((t >= start) & (t <= start + PEAK_LENGTH))


def _model_5(t, noise, contaminated, rng, grid):
    if not contaminated:
        return 4 * t + noise
    other_noise = gp_sample(heavy_exponential_kernel, grid, 1, rng)[0]
    return 4 * t + other_noise


def _model_6(t, noise, contaminated, rng, grid):
    if not contaminated:
        return 4 * t + noise
    return 4 * t + noise + 0.5 * np.sin(40 * np.pi * t)


def _model_7(t, noise, contaminated, rng, grid):
    phase = 2.0 if contaminated else 0.0
    return 2 * np.sin(15 * np.pi * t + phase) + noise


CURVE_BUILDERS: dict[int, CurveBuilder] = {
    1: _model_1,
    2: _model_2,
    3: _model_3,
    4: _model_4,
    5: _model_5,
    6: _model_6,
    7: _model_7,
}


def simulate_curve(spec: ModelSpec, j: int, grid: Grid) -> tuple[np.ndarray, bool]:
    rng = stream(spec.seed, j)
    noise = gp_sample(exponential_kernel, grid, 1, rng)[0]
    # draw the label even for Model 1 so curve j's stream is laid out identically in every model
    contaminated = bool(rng.random() < spec.contamination) and spec.model_id != 1
    return CURVE_BUILDERS[spec.model_id](grid.points, noise, contaminated, rng, grid), contaminated


def simulate(spec: ModelSpec) -> SimulatedDataset:
    grid = Grid.unit_interval(spec.m)
    values = np.empty((spec.n, spec.m))
    truth = np.zeros(spec.n, dtype=bool)

    for j in range(spec.n):
        values[j], truth[j] = simulate_curve(spec, j, grid)

    return SimulatedDataset(dataset=FunctionalDataset(grid, values), truth=truth, spec=spec)
