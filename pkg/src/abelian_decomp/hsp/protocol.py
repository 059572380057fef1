from typing import Protocol, runtime_checkable

from .instance import HspInstance, RelationLattice


@runtime_checkable
class HiddenSubgroupOracle(Protocol):
    """
    Finds the hidden subgroup K = {x : g(x) = e} of Z_q^k for an exponent map.

    The decomposition pipeline depends only on this contract, so a sampling or
    simulated-quantum oracle can replace the classical one.
    """

    def hidden_subgroup(self, inst: HspInstance) -> RelationLattice:
        """
        Returns a lattice whose integer column span is exactly K (lifted to Z^k).
        """
        ...
