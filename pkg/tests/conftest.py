"""
Common fixtures for all test modules.
This file contains fixtures and brute-force oracles shared across test types.
"""

import os
import random
from itertools import combinations
from math import gcd
from typing import Callable, List, Sequence, Set

import pytest

from abelian_decomp.config.run_config import RunConfig
from abelian_decomp.config.settings import get_settings
from abelian_decomp.groups.class_group import ClassGroup
from abelian_decomp.groups.cyclic_product import CyclicProductGroup
from abelian_decomp.groups.protocol import AbelianGroup, GroupElement
from abelian_decomp.groups.zn_star import ZnStarGroup
from abelian_decomp.intlinalg.matrix import IntMatrix, mat_det

# =============================================================================
# Environment Isolation
# =============================================================================


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """
    Keeps `ABELIAN_DECOMP_*` variables from the developer's shell out of tests
    and resets the cached Settings around every test.
    """
    for name in list(os.environ):
        if name.startswith("ABELIAN_DECOMP_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# =============================================================================
# Common Group Fixtures
# =============================================================================


@pytest.fixture
def rng() -> random.Random:
    """A seeded random stream so every test run draws the same values."""
    return random.Random(20240601)


@pytest.fixture
def run_config() -> RunConfig:
    """Default pipeline configuration, independent of the environment."""
    return RunConfig()


@pytest.fixture
def z15() -> ZnStarGroup:
    return ZnStarGroup(15)


@pytest.fixture
def z8() -> ZnStarGroup:
    return ZnStarGroup(8)


@pytest.fixture
def cg23() -> ClassGroup:
    return ClassGroup(-23)


@pytest.fixture
def small_groups() -> List[AbelianGroup]:
    """A mix of backends with known structure and |G| <= 10^4."""
    return [
        ZnStarGroup(2),
        ZnStarGroup(15),
        ZnStarGroup(16),
        ZnStarGroup(105),
        ZnStarGroup(4096),
        ClassGroup(-4),
        ClassGroup(-23),
        ClassGroup(-84),
        ClassGroup(-231),
        CyclicProductGroup([1]),
        CyclicProductGroup([2, 4, 3]),
        CyclicProductGroup([4, 8, 9]),
        CyclicProductGroup([6, 10, 15]),
    ]


# =============================================================================
# Brute-Force Oracles
# =============================================================================


def brute_minor_gcds(a: IntMatrix) -> List[int]:
    """g_i = gcd of all i x i minors of `a`, for i = 1 .. min(rows, cols)."""
    rows = a.to_rows()
    out = []
    for size in range(1, min(a.rows, a.cols) + 1):
        g = 0
        for row_set in combinations(range(a.rows), size):
            for col_set in combinations(range(a.cols), size):
                minor = IntMatrix.from_rows([[rows[i][j] for j in col_set] for i in row_set])
                g = gcd(g, mat_det(minor))
        out.append(g)
    return out


def span_of(g: AbelianGroup, gens: Sequence[GroupElement]) -> Set[bytes]:
    """The subgroup generated by `gens`, by closure."""
    span = {g.identity()}
    frontier = list(span)
    while frontier:
        new = []
        for h in frontier:
            for a in gens:
                x = g.op(h, a)
                if x not in span:
                    span.add(x)
                    new.append(x)
        frontier = new
    return span


@pytest.fixture
def minor_gcds() -> Callable[[IntMatrix], List[int]]:
    return brute_minor_gcds


@pytest.fixture
def span() -> Callable[[AbelianGroup, Sequence[GroupElement]], Set[bytes]]:
    return span_of
