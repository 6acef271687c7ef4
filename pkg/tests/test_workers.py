from __future__ import annotations

import operator

from mmwidth._workers import WorkerPool


def test_inline_pool() -> None:
    with WorkerPool() as pool:
        assert pool.name == "1 worker(s)"
        assert pool.map_ordered(operator.neg, [1, 2, 3]) == [-1, -2, -3]
        assert pool.map_ordered(operator.neg, []) == []


def test_process_pool_keeps_order() -> None:
    items = list(range(50))
    with WorkerPool(2) as pool:
        assert pool.name == "2 worker(s)"
        assert pool.map_ordered(operator.neg, items) == [-i for i in items]
    assert pool._executor is None


def test_thread_count_is_clamped() -> None:
    assert WorkerPool(0).threads == 1
