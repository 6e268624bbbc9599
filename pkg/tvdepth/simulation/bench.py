# -*- coding: utf-8 -*-
"""
Monte-Carlo benchmark of outlier detection: simulate, detect, and score TPR / FPR per model
and method. Rates are percentages; each (model, repetition) gets its own derived seed, so the
table is identical whatever the number of workers.
"""
from __future__ import annotations

from typing import Iterable
from typing import Optional
from typing import Sequence

import numpy as np
from msgspec import Struct
from msgspec import structs as msgspec_structs

from tvdepth import types as pt
from tvdepth.depth import tvd
from tvdepth.depth import weight_sd
from tvdepth.depth import weight_uniform
from tvdepth.exc import DomainError
from tvdepth.logging import create_logger
from tvdepth.outlier_detection import detect
from tvdepth.outlier_detection import detect_mbd
from tvdepth.simulation.models import simulate
from tvdepth.structs import BenchMeta
from tvdepth.structs import BenchRow
from tvdepth.structs import BenchTable
from tvdepth.structs import DetectionConfig
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import ModelSpec
from tvdepth.utils import local_bench_cache
from tvdepth.utils import parallel_map
from tvdepth.utils.math_helpers import mean_and_sd
from tvdepth.utils.rng import derived_seed
from tvdepth.utils.rng import stream
from tvdepth.utils.timing import catchtime
from tvdepth.version import __version__

METHODS: tuple[pt.Method, ...] = ("tvd_msv", "mbd_fbplot")


class ConsistencyRow(Struct):
    n: int
    seeds: int
    median_abs_error: float
    within_tolerance: float  # fraction of seeds with |TVD - 1/4| ≤ tolerance


def evaluate(detected: Iterable[int], truth: Sequence[bool] | np.ndarray) -> tuple[Optional[float], float]:
    """
    (TPR, FPR) in percent. TPR is None when there are no true outliers; FPR is 0 when every curve is an outlier.
    """
    truth = np.asarray(truth, dtype=bool)
    detected = set(detected)
    if any((j < 0) or (j >= truth.size) for j in detected):
        raise DomainError(f"Detected indices must be in 0..{truth.size - 1}.")

    flagged = np.zeros(truth.size, dtype=bool)
    flagged[list(detected)] = True

    n_true = int(truth.sum())
    n_false = truth.size - n_true
    tpr = 100.0 * int((flagged & truth).sum()) / n_true if n_true else None
    fpr = 100.0 * int((flagged & ~truth).sum()) / n_false if n_false else 0.0
    return tpr, fpr


def run_method(ds: FunctionalDataset, method: pt.Method, cfg: DetectionConfig) -> list[int]:
    if method == "tvd_msv":
        return detect(ds, cfg, fallback_to_uniform=True).outliers
    elif method == "mbd_fbplot":
        return detect_mbd(ds, cfg).magnitude_outliers
    else:
        raise DomainError(f"Unknown method `{method}`. Use one of {', '.join(METHODS)}.")


def _cache_key(spec: ModelSpec, method: str, cfg: DetectionConfig) -> str:
    return "|".join(
        [
            f"model={spec.model_id}",
            f"seed={spec.seed}",
            f"n={spec.n}",
            f"m={spec.m}",
            f"eps={spec.contamination!r}",
            f"method={method}",
            *(f"{k}={v!r}" for k, v in msgspec_structs.asdict(cfg).items()),
        ]
    )


def bench(
    models: Sequence[int] = (1, 2, 3, 4, 5, 6, 7),
    reps: int = 200,
    base_seed: int = 0,
    cfg: Optional[DetectionConfig] = None,
    methods: Sequence[pt.Method] = METHODS,
    n: int = 100,
    m: int = 50,
    contamination: float = 0.1,
    cache_dir: Optional[str] = None,
    max_workers: Optional[int] = None,
) -> BenchTable:
    if reps < 1:
        raise DomainError(f"reps must be at least 1, got {reps}.")
    if base_seed < 0:
        raise DomainError(f"base_seed must be non-negative, got {base_seed}.")
    for method in methods:
        if method not in METHODS:
            raise DomainError(f"Unknown method `{method}`. Use one of {', '.join(METHODS)}.")

    cfg = cfg or DetectionConfig()
    logger = create_logger("bench")
    tasks = [(model_id, rep) for model_id in models for rep in range(reps)]

    with local_bench_cache(cache_dir) as cache, catchtime() as elapsed:

        def run_repetition(task: tuple[int, int]) -> dict[str, tuple[Optional[float], float]]:
            model_id, rep = task
            spec = ModelSpec(
                model_id=model_id, n=n, m=m, contamination=contamination, seed=derived_seed(base_seed, model_id, rep)
            )
            keys = {method: _cache_key(spec, method, cfg) for method in methods}
            if all(key in cache for key in keys.values()):
                return {method: cache[key] for method, key in keys.items()}

            simulated = simulate(spec)
            outcome = {}
            for method, key in keys.items():
                outcome[method] = evaluate(run_method(simulated.dataset, method, cfg), simulated.truth)
                cache[key] = outcome[method]
            return outcome

        outcomes = parallel_map(run_repetition, tasks, max_workers=max_workers)

    logger.info(f"Ran {len(tasks)} repetitions over models {list(models)} in {elapsed():.1f}s.")

    rows = []
    for model_id in models:
        model_outcomes = [outcome for (task_model, _), outcome in zip(tasks, outcomes) if task_model == model_id]
        for method in methods:
            tprs = [o[method][0] for o in model_outcomes if o[method][0] is not None]
            fprs = [o[method][1] for o in model_outcomes]
            tpr_mean, tpr_sd = mean_and_sd(tprs) if tprs else (None, None)
            fpr_mean, fpr_sd = mean_and_sd(fprs)
            rows.append(
                BenchRow(
                    model_id=model_id,
                    method=method,
                    reps=reps,
                    tpr_mean=tpr_mean,
                    tpr_sd=tpr_sd,
                    fpr_mean=fpr_mean,
                    fpr_sd=fpr_sd,
                )
            )
            logger.debug(f"Model {model_id} {method}: TPR {tpr_mean} ({tpr_sd}), FPR {fpr_mean:.3f} ({fpr_sd:.3f}).")

    return BenchTable(
        rows=rows,
        meta=BenchMeta(
            tool_version=__version__,
            base_seed=base_seed,
            reps=reps,
            n=n,
            m=m,
            contamination=contamination,
            config=cfg,
        ),
    )


def consistency_study(
    ns: Sequence[int] = (50, 200, 1000),
    seeds: int = 100,
    m: int = 50,
    base_seed: int = 0,
    tolerance: float = 0.01,
    weight_choice: pt.WeightChoice = "sd",
) -> list[ConsistencyRow]:
    """
    Empirical convergence of TVD-hat: iid standard-normal columns, query f ≡ 0, whose depth is 1/4.
    The plug-in bias is (1/4)/n, so the error shrinks as n grows.
    """
    rows = []
    for n in ns:
        errors = []
        for seed in range(seeds):
            values = stream(base_seed, n, seed).standard_normal((n, m))
            ds = FunctionalDataset.from_values(values)
            w = weight_sd(ds) if weight_choice == "sd" else weight_uniform(ds.grid)
            errors.append(abs(tvd(ds, np.zeros(m), w) - 0.25))

        errors_ = np.asarray(errors)
        rows.append(
            ConsistencyRow(
                n=n,
                seeds=seeds,
                median_abs_error=float(np.median(errors_)),
                within_tolerance=float((errors_ <= tolerance).mean()),
            )
        )
    return rows
