"""
Classical factoring: trial division, Miller-Rabin and Pollard rho (Brent).

This is the desk-scale stand-in for quantum factoring; it is exact and
reproducible because every randomized step is driven by an explicit seed.
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Dict, List, Tuple

from ..errors import ContractViolationError

logger = logging.getLogger(__name__)

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_SEED = 0

# Miller-Rabin with these bases is exact below this bound.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_PROBABILISTIC_ROUNDS = 32


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs with ascending primes."""

    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ContractViolationError(f"primes must be distinct and ascending: {primes}")
        if any(e < 1 for _, e in self.factors):
            raise ContractViolationError("exponents must be positive")

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)


def _miller_rabin_round(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, seed: int = DEFAULT_SEED) -> bool:
    """Miller-Rabin; deterministic below ~3.3e24, seeded random bases above."""
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        rng = random.Random(seed)
        bases = [rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS)]
    return all(_miller_rabin_round(n, base, d, s) for base in bases)


def pollard_brent(n: int, seed: int = DEFAULT_SEED) -> int:
    """A nontrivial factor of the odd composite n (Brent's cycle detection)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    batch = 128
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            # the batched product overshot; walk the last batch one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        logger.debug(f"pollard_brent: retrying {n} with a fresh polynomial")


def _split_large(n: int, seed: int, out: List[int]):
    if n == 1:
        return
    if is_probable_prime(n, seed):
        out.append(n)
        return
    divisor = pollard_brent(n, seed)
    _split_large(divisor, seed, out)
    _split_large(n // divisor, seed, out)


@lru_cache(maxsize=4096)
def factor(n: int, seed: int = DEFAULT_SEED) -> Factorization:
    """Prime factorization of n >= 1; factor(1) is the empty factorization."""
    if n < 1:
        raise ContractViolationError(f"can only factor positive integers, got {n}")
    counts: Dict[int, int] = {}
    remaining = n
    while remaining % 2 == 0:
        counts[2] = counts.get(2, 0) + 1
        remaining //= 2
    limit = min(TRIAL_DIVISION_LIMIT, isqrt(remaining))
    p = 3
    while p <= limit:
        if remaining % p == 0:
            while remaining % p == 0:
                counts[p] = counts.get(p, 0) + 1
                remaining //= p
            limit = min(TRIAL_DIVISION_LIMIT, isqrt(remaining))
        p += 2
    if remaining > 1:
        if remaining < p * p:
            counts[remaining] = counts.get(remaining, 0) + 1
        else:
            large: List[int] = []
            _split_large(remaining, seed, large)
            for q in large:
                counts[q] = counts.get(q, 0) + 1
    return Factorization(tuple(sorted(counts.items())))


def euler_phi(factorization: Factorization) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorization.factors)
