from collections import defaultdict
from typing import Dict, List, NamedTuple, Sequence

from ..errors import ContractViolationError
from ..groups.power import group_pow
from ..groups.protocol import AbelianGroup, GroupElement
from ..numtheory.arith import crt_coefficients
from ..numtheory.primes import factor


class PrimePowerPart(NamedTuple):
    element: GroupElement
    prime: int
    exponent: int

    @property
    def order(self) -> int:
        return self.prime**self.exponent


class SylowBucket(NamedTuple):
    generators: List[GroupElement]
    q: int


def split_prime_power(g: AbelianGroup, a: GroupElement, ord: int) -> List[PrimePowerPart]:
    """
    Split `a` of order ord = prod p_i^t_i into a^(ord / p_i^t_i), of order p_i^t_i.

    The parts generate <a>: with Bezout coefficients the product of suitable
    powers of them is `a` again (see `recombine_prime_powers`).
    """
    identity = g.identity()
    if ord < 1 or group_pow(g, a, ord) != identity:
        raise ContractViolationError(f"{ord} is not a multiple of the order of {g.display(a)}")
    parts = []
    for p, t in factor(ord).factors:
        part = group_pow(g, a, ord // p**t)
        if group_pow(g, part, p ** (t - 1)) == identity:
            raise ContractViolationError(f"{ord} is not the order of {g.display(a)}")
        parts.append(PrimePowerPart(part, p, t))
    return parts


def recombine_prime_powers(g: AbelianGroup, parts: Sequence[PrimePowerPart]) -> GroupElement:
    """Inverse of `split_prime_power`: rebuild a from its prime-power parts."""
    coefficients = crt_coefficients([part.order for part in parts])
    result = g.identity()
    for part, coefficient in zip(parts, coefficients):
        result = g.op(result, group_pow(g, part.element, coefficient))
    return result


def sylow_bucket(parts: Sequence[PrimePowerPart]) -> Dict[int, SylowBucket]:
    """Group parts by prime; q is the prime to the largest exponent seen."""
    generators: Dict[int, List[GroupElement]] = defaultdict(list)
    exponents: Dict[int, int] = defaultdict(int)
    for part in parts:
        generators[part.prime].append(part.element)
        exponents[part.prime] = max(exponents[part.prime], part.exponent)
    return {
        p: SylowBucket(generators[p], p ** exponents[p]) for p in sorted(generators)
    }
