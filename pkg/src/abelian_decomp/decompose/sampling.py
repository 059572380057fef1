import logging
import random
from math import isqrt
from typing import List

from ..errors import ContractViolationError
from ..groups.protocol import AbelianGroup, GroupElement

logger = logging.getLogger(__name__)


def sample_count(k: int, c: int) -> int:
    """ceil(2k + c*sqrt(k)), computed exactly in integers."""
    if k < 0 or c < 0:
        raise ContractViolationError(f"k and c must be non-negative, got k={k}, c={c}")
    radicand = c * c * k
    return 2 * k + (isqrt(radicand - 1) + 1 if radicand else 0)


def sample_generating_set(g: AbelianGroup, k: int, c: int, seed: int) -> List[GroupElement]:
    """
    ceil(2k + c*sqrt(k)) uniform samples from `g`.

    When |G| <= 2^k the samples generate G except with probability
    exponentially small in c.
    """
    rng = random.Random(seed)
    count = sample_count(k, c)
    logger.info(f"sampling {count} elements of {g.descriptor} (k={k}, c={c}, seed={seed})")
    return [g.sample(rng) for _ in range(count)]
