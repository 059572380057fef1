from collections import defaultdict
from math import prod
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..groups.protocol import AbelianGroup, GroupElement


class Summand(BaseModel):
    """One cyclic summand <generator> of order prime**exponent."""

    model_config = ConfigDict(frozen=True)

    generator: str
    prime: int = Field(ge=2)
    exponent: int = Field(ge=1)

    @property
    def order(self) -> int:
        return self.prime**self.exponent


class Decomposition(BaseModel):
    """
    G = <g_1> (+) ... (+) <g_l> with prime-power orders.

    Generators are stored in the backend's display format so the record can be
    written out and verified later against a freshly constructed group.
    """

    group: str
    seed: int
    margin_c: int
    k: int
    attempts: int = 1
    group_order: int
    summands: List[Summand] = Field(default_factory=list)

    def elements(self, g: AbelianGroup) -> List[GroupElement]:
        return [g.parse_element(summand.generator) for summand in self.summands]

    def prime_powers(self) -> List[Tuple[int, int]]:
        return sorted((s.prime, s.exponent) for s in self.summands)

    def invariant_factors(self) -> List[int]:
        """The canonical n_1 | n_2 | ... | n_r with G = Z_{n_1} x ... x Z_{n_r}."""
        by_prime = defaultdict(list)
        for summand in self.summands:
            by_prime[summand.prime].append(summand.exponent)
        if not by_prime:
            return []
        length = max(len(exponents) for exponents in by_prime.values())
        factors = [1] * length
        for p, exponents in by_prime.items():
            # the largest powers go to the last (largest) factors
            for i, e in enumerate(sorted(exponents, reverse=True)):
                factors[length - 1 - i] *= p**e
        return factors

    def computed_order(self) -> int:
        return prod(summand.order for summand in self.summands)

    def to_structured(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    @classmethod
    def from_structured(cls, text: str) -> "Decomposition":
        return cls.model_validate_json(text)


class VerificationReport(BaseModel):
    ok: bool
    reason: str = ""
    checked_enumeration: bool = False

    def __bool__(self) -> bool:
        return self.ok
