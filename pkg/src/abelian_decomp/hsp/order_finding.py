from typing import Optional

from ..groups.protocol import AbelianGroup, GroupElement
from ..intlinalg.snf import snf
from .classical_oracle import ClassicalRelationOracle
from .instance import HspInstance
from .protocol import HiddenSubgroupOracle


def order_by_hidden_subgroup(
    g: AbelianGroup,
    a: GroupElement,
    exponent_bound: int,
    oracle: Optional[HiddenSubgroupOracle] = None,
) -> int:
    """
    Order of `a` read off the hidden subgroup rZ of x -> a^x.

    With a single generator the relation lattice is generated by r alone, so
    its one invariant factor is the order.
    """
    oracle = oracle or ClassicalRelationOracle()
    lattice = oracle.hidden_subgroup(HspInstance(g, (a,), exponent_bound))
    return snf(lattice.m).d[0]
