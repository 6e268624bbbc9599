# -*- coding: utf-8 -*-
# test_utils
from __future__ import annotations

import time

from tvdepth.utils import is_testing_env
from tvdepth.utils import local_bench_cache
from tvdepth.utils import parallel_map
from tvdepth.utils.rng import derived_seed
from tvdepth.utils.rng import stream
from tvdepth.utils.timing import catchtime


def test_is_testing_env() -> None:
    assert is_testing_env()


def test_parallel_map_keeps_input_order() -> None:
    def slow_square(x: int) -> int:
        time.sleep(0.01 * (5 - x))
        return x * x

    assert parallel_map(slow_square, range(5), max_workers=5) == [0, 1, 4, 9, 16]
    assert parallel_map(slow_square, range(5), max_workers=1) == [0, 1, 4, 9, 16]
    assert parallel_map(slow_square, []) == []


def test_local_bench_cache_without_directory_is_throwaway() -> None:
    with local_bench_cache(None) as cache:
        cache["a"] = 1
        assert cache["a"] == 1

    with local_bench_cache(None) as cache:
        assert "a" not in cache


def test_local_bench_cache_persists(tmp_path) -> None:
    with local_bench_cache(str(tmp_path)) as cache:
        cache["key"] = (50.0, 1.5)

    with local_bench_cache(str(tmp_path)) as cache:
        assert cache["key"] == (50.0, 1.5)


def test_streams_are_addressed_by_key() -> None:
    assert stream(1, 2, 3).random() == stream(1, 2, 3).random()
    assert stream(1, 2, 3).random() != stream(1, 3, 2).random()


def test_derived_seeds() -> None:
    seeds = {derived_seed(0, model, rep) for model in range(1, 8) for rep in range(200)}
    assert len(seeds) == 7 * 200
    assert all(0 <= s < 2**63 for s in seeds)
    assert derived_seed(7, 4, 0) == derived_seed(7, 4, 0)


def test_catchtime() -> None:
    with catchtime() as elapsed:
        time.sleep(0.05)
    assert elapsed() >= 0.05
