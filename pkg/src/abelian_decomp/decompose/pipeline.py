import logging
from concurrent.futures import ThreadPoolExecutor
from math import prod
from typing import Dict, List, Optional, Tuple

from ..config.run_config import RunConfig
from ..errors import GenerationFailedError
from ..groups.protocol import AbelianGroup, GroupElement
from ..hsp.classical_oracle import ClassicalRelationOracle
from ..hsp.protocol import HiddenSubgroupOracle
from ..numtheory.order import order
from ..numtheory.primes import factor
from .algorithm import decompose_group
from .sampling import sample_generating_set
from .schemas import Decomposition, Summand
from .splitting import PrimePowerPart, SylowBucket, split_prime_power, sylow_bucket

logger = logging.getLogger(__name__)

Fragment = List[Tuple[GroupElement, int]]


def _prime_power_parts(
    g: AbelianGroup, samples: List[GroupElement], bound: int
) -> List[PrimePowerPart]:
    """Split every sample into prime-power parts, dropping repeated elements."""
    seen = set()
    parts = []
    for a in samples:
        for part in split_prime_power(g, a, order(g, a, bound)):
            if part.element not in seen:
                seen.add(part.element)
                parts.append(part)
    return parts


def _decompose_buckets(
    g: AbelianGroup,
    buckets: Dict[int, SylowBucket],
    oracle: HiddenSubgroupOracle,
    concurrency: int,
) -> Dict[int, Fragment]:
    for p, bucket in buckets.items():
        logger.info(f"Sylow {p}-bucket: {len(bucket.generators)} generators, q={bucket.q}")
    if concurrency == 1 or len(buckets) < 2:
        return {
            p: decompose_group(g, bucket.generators, bucket.q, oracle)
            for p, bucket in buckets.items()
        }
    with ThreadPoolExecutor(max_workers=concurrency) as pool:
        futures = {
            p: pool.submit(decompose_group, g, bucket.generators, bucket.q, oracle)
            for p, bucket in buckets.items()
        }
        return {p: future.result() for p, future in futures.items()}


def _summands(g: AbelianGroup, fragments: Dict[int, Fragment]) -> List[Summand]:
    summands = []
    for p, fragment in fragments.items():
        for element, d in fragment:
            # d is a power of p inside a Sylow bucket
            _, exponent = factor(d).factors[0]
            summands.append(Summand(generator=g.display(element), prime=p, exponent=exponent))
    summands.sort(key=lambda s: (s.prime, s.exponent))
    return summands


def decompose(
    g: AbelianGroup,
    config: Optional[RunConfig] = None,
    oracle: Optional[HiddenSubgroupOracle] = None,
) -> Decomposition:
    """
    Decompose `g` into cyclic summands of prime-power order.

    Samples a generating set, splits each sample into prime-power parts,
    buckets them by prime and decomposes each Sylow subgroup separately.
    When |G| is known a sampled set that fails to generate is detected and
    the run is retried with the next seed and a doubled k.
    """
    config = config or RunConfig.from_settings()
    oracle = oracle or ClassicalRelationOracle(capacity=config.capacity)
    bound = g.exponent_bound()
    cardinality = g.cardinality()
    k = config.k or bound.bit_length()

    best_order = 0
    for attempt in range(config.retries + 1):
        seed = config.seed + attempt
        samples = sample_generating_set(g, k, config.margin_c, seed)
        buckets = sylow_bucket(_prime_power_parts(g, samples, bound))
        fragments = _decompose_buckets(g, buckets, oracle, config.concurrency)
        summands = _summands(g, fragments)
        group_order = prod(s.order for s in summands)

        if cardinality is None or group_order == cardinality:
            return Decomposition(
                group=g.descriptor,
                seed=config.seed,
                margin_c=config.margin_c,
                k=k,
                attempts=attempt + 1,
                group_order=group_order,
                summands=summands,
            )
        best_order = max(best_order, group_order)
        logger.info(
            f"attempt {attempt + 1}: sampled set spans {group_order} of {cardinality} "
            f"elements; retrying with k={2 * k}"
        )
        k *= 2

    raise GenerationFailedError(config.retries + 1, best_order, cardinality)
