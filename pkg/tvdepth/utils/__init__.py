# -*- coding: utf-8 -*-
from __future__ import annotations

import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from functools import cache
from typing import Callable
from typing import Generator
from typing import Iterable
from typing import TypeVar

from diskcache import Cache  # type: ignore

T = TypeVar("T")
R = TypeVar("R")


@cache
def is_testing_env() -> bool:
    return ("pytest" in sys.modules) or (os.environ.get("TESTING") is not None)


def get_worker_count() -> int:
    """
    TVDEPTH_THREADS (or `[workers] threads`) caps parallelism. 0 means auto: the
    number of physical cores, falling back to logical cores.
    """
    from tvdepth.config import get_worker_threads_setting

    threads = get_worker_threads_setting()
    if threads > 0:
        return threads

    import psutil

    return psutil.cpu_count(logical=False) or os.cpu_count() or 1


def parallel_map(function: Callable[[T], R], items: Iterable[T], max_workers: int | None = None) -> list[R]:
    """
    Like `map`, but fanned out over a thread pool. Results come back in input order,
    so callers get deterministic output regardless of scheduling.
    """
    items = list(items)
    max_workers = max_workers or get_worker_count()

    if max_workers == 1 or len(items) <= 1:
        return [function(item) for item in items]

    with ThreadPoolExecutor(max_workers=min(max_workers, len(items))) as executor:
        return list(executor.map(function, items))


@contextmanager
def local_bench_cache(directory: str | None) -> Generator[Cache | dict, None, None]:
    """
    Persistent storage for Monte-Carlo outcomes, so an interrupted `bench` can resume.
    With no directory, a throwaway dict is yielded so callers don't need to branch.

    > with local_bench_cache("./.bench_cache") as c:
    >    c[key] = outcome
    """
    if directory is None:
        yield {}
        return

    with Cache(directory) as cache:
        yield cache
