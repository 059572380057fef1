from dataclasses import dataclass
from typing import Sequence, Tuple

from ..errors import ContractViolationError
from ..groups.power import group_pow, group_product
from ..groups.protocol import AbelianGroup, GroupElement
from ..intlinalg.matrix import IntMatrix


@dataclass(frozen=True)
class HspInstance:
    """
    The exponent map g: Z_q^k -> G, x -> a_1^x_1 ... a_k^x_k.

    `q` must annihilate every generator, so g is well defined on Z_q^k.
    """

    group: AbelianGroup
    generators: Tuple[GroupElement, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.q < 1:
            raise ContractViolationError(f"modulus q must be positive, got {self.q}")
        identity = self.group.identity()
        for i, a in enumerate(self.generators):
            if group_pow(self.group, a, self.q) != identity:
                raise ContractViolationError(
                    f"generator {i} ({self.group.display(a)}) is not annihilated by q={self.q}"
                )

    @property
    def k(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class RelationLattice:
    """Columns of `m` generate {x : a_1^x_1 ... a_k^x_k = e}."""

    m: IntMatrix

    @property
    def k(self) -> int:
        return self.m.rows


def evaluate(inst: HspInstance, x: Sequence[int]) -> GroupElement:
    """g(x) = a_1^x_1 ... a_k^x_k."""
    if len(x) != inst.k:
        raise ContractViolationError(
            f"exponent vector of length {len(x)} for {inst.k} generators"
        )
    g, q = inst.group, inst.q
    return group_product(g, *(group_pow(g, a, xi % q) for a, xi in zip(inst.generators, x) if xi % q))
