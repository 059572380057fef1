"""
Performance test specific fixtures.
The sweeps here run the whole pipeline over many groups and report timings.
"""

import time
from contextlib import contextmanager
from typing import Callable, ContextManager, Dict

import pytest


@pytest.fixture
def stopwatch() -> Callable[[str], ContextManager[Dict[str, float]]]:
    """
    Fixture that times a block and prints the elapsed wall-clock time.

    The yielded dict receives an `elapsed` entry when the block exits.
    """

    @contextmanager
    def _measure(label: str):
        timing: Dict[str, float] = {}
        start = time.perf_counter()
        try:
            yield timing
        finally:
            timing["elapsed"] = time.perf_counter() - start
            print(f"\n⏱️  {label}: {timing['elapsed']:.2f}s")

    return _measure
